"""Exact counts of functions by essential arity, quasi-arity and gap."""

from gapkit import count_G, count_Q, count_table, count_U
from gapkit.counting import to_sci

print("== 1. ONE NUMBER AT A TIME ==============================")
print("   U(k=2, l=2, n=3, r=3) =", count_U(2, 2, 3, 3))
print("   G(k=3, l=3, n=3, p=2) =", count_G(3, 3, 3, 2))
print("   Q(k=3, l=3, n=3, m=0) =", count_Q(3, 3, 3, 0))

print("== 2. THE SMALL TABLE ===================================")
for k in (2, 3, 4):
    print(f"   k = l = {k}")
    for n, U, *G in count_table(k, k, 5):
        cells = [str(v) if v < 10**15 else to_sci(v) for v in (U, *G)]
        print(f"     n = {n}  U = {cells[0]}  G = {' '.join(cells[1:])}")

print("== 3. SANITY: GAPS PARTITION THE FULLY ESSENTIAL =========")
k, ell, n = 3, 2, 6
total = sum(count_G(k, ell, n, p) for p in range(1, n + 1))
print(f"   sum_p G = {to_sci(total)}  U = {to_sci(count_U(k, ell, n, n))}  equal: {total == count_U(k, ell, n, n)}")
