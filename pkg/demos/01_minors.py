"""Essential variables, simple minors and the arity gap of a few small functions."""

from collections import Counter

import numpy as np

from gapkit import FnTable, arity_gap, essential_variables, essl, identify, is_essential, simple_minor

print("== 1. FUNCTIONS AS VALUE TABLES =========================")
xor = FnTable.from_callable(2, 2, 2, lambda a, b: a ^ b)
print("   xor values (row-major, x1 most significant):", xor.values.tolist())
print("   xor(1, 0) =", xor(1, 0))

print("== 2. ESSENTIAL VARIABLES ===============================")
f = FnTable.from_callable(3, 3, 3, lambda a, b, c: (a + 2 * c) % 3)
for i in (1, 2, 3):
    ok, witness = is_essential(f, i)
    print(f"   x{i} essential: {ok}  witness: {witness}")
print("   essential set:", essential_variables(f))

print("== 3. SIMPLE MINORS =====================================")
maj = FnTable.from_callable(2, 2, 3, lambda a, b, c: int(a + b + c >= 2))
print("   maj(x1, x1, x2) =", simple_minor(maj, (1, 1, 2), 2).values.tolist())
print("   identify x1 = x2 in maj:", identify(maj, 1, 2).values.tolist())

print("== 4. GAP ===============================================")
for name, g in [("xor", xor), ("maj", maj), ("and", FnTable(2, 2, 2, [0, 0, 0, 1]))]:
    print(f"   {name:>3}: ess_down = {essl(g)}  gap = {arity_gap(g)}")

rng = np.random.default_rng(0)
gaps = [arity_gap(FnTable(3, 2, 3, rng.integers(0, 2, 27))) for _ in range(200)]
print("   random f: {0,1,2}^3 -> {0,1}, gap tally:", dict(Counter(gaps)))
