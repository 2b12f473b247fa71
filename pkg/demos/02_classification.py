"""The classification route: quasi-arity, oddsupp and the ternary identities,
compared against the minors route."""

from collections import Counter

import numpy as np

from gapkit import FnTable, arity_gap, classify, oddsupp, quasi_arity, restrict_diag
from gapkit.gap import batch_arity_gap, batch_classify_gap
from gapkit.fncore import batch_essential_mask

print("== 1. THE DIAGONAL AND QUASI-ARITY ======================")
# indicator of "all three coordinates differ": zero on every tuple with a repeat
perm = FnTable.from_callable(3, 2, 3, lambda a, b, c: int(len({a, b, c}) == 3))
print("   diagonal points:", len(restrict_diag(perm)), "of", 27)
print("   qa =", quasi_arity(perm), " report:", classify(perm).as_record())

print("== 2. ODDSUPP ===========================================")
for pt in [(0, 0, 1, 2), (1, 1, 1, 0), (2, 2, 0, 0)]:
    print(f"   oddsupp{pt} = {sorted(oddsupp(pt))}")
parity = FnTable.from_callable(2, 2, 4, lambda *x: sum(x) % 2)
rep = classify(parity)
print("   x1+x2+x3+x4:", rep.case, " oddsupp table:",
      {tuple(sorted(s)): v for s, v in rep.oddsupp_table.items()})

print("== 3. TERNARY CASE ======================================")
sum3 = FnTable.from_callable(2, 2, 3, lambda a, b, c: (a + b + c) % 2)
h, *i = classify(sum3).ternary
print("   x1+x2+x3: h =", h.values.tolist(), " i =", i)

print("== 4. TWO ROUTES, ONE ANSWER ============================")
rng = np.random.default_rng(1)
V = rng.integers(0, 2, (20000, 27))
V = V[batch_essential_mask(V, 3, 3).all(axis=1)]
agree = np.array_equal(batch_classify_gap(V, 3, 3), batch_arity_gap(V, 3, 3))
print(f"   {len(V)} random fully essential f: {{0,1,2}}^3 -> {{0,1}}; routes agree: {agree}")
cases = Counter(classify(FnTable(3, 2, 3, v)).case for v in V[:2000])
print("   cases among the first 2000:", dict(cases))
perm_gap = arity_gap(perm)
print("   minors route on the permutation indicator: gap", perm_gap)
