"""Splitting f = h + g over an abelian group, with h vanishing on tuples that
repeat a coordinate."""

from gapkit import (
    FnTable,
    classify,
    decompose,
    fn_add,
    formal_sum_support,
    make_boolean,
    make_cyclic,
)
from gapkit.census import synth_gap_instance

print("== 1. A GAP-3 INSTANCE OVER Z3 ==========================")
z3 = make_cyclic(3)
f, h, g = synth_gap_instance(4, 3, 4, 3, z3, seed=11)
print("   classify:", classify(f).case, "p =", classify(f).p)
d = decompose(f, z3)
print("   case:", d.tag, " recovered h:", d.h == h, " recovered g:", d.g == g)
print("   h + g == f:", fn_add(d.h, d.g, z3) == f)

print("== 2. BOOLEAN GROUP, GAP 2 ==============================")
b1 = make_boolean(1)
parity = FnTable.from_callable(2, 2, 4, lambda *x: sum(x) % 2)
d = decompose(parity, b1)
print("   case:", d.tag, " h is zero:", not d.h.values.any())
print("   phi(x1, x2) = f(x1, x2, 0, 0):", d.phi.values.tolist())

print("== 3. THE SUPPORT AS A SUM OF BINARY PIECES =============")
print(formal_sum_support(parity, b1).simplified().dumps())
