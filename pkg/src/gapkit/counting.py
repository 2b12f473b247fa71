"""Exact counts of finite functions by essential arity, quasi-arity and gap.

All arithmetic is on Python integers; nothing is ever rounded except in
``to_sci``, which only formats.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from math import comb
from typing import Optional

__all__ = [
    "CountResult",
    "UnsupportedParameters",
    "falling",
    "count_U",
    "count_V",
    "count_Q",
    "count_S",
    "count_O",
    "count_G",
    "count_table",
    "to_sci",
]


class UnsupportedParameters(ValueError):
    pass


@dataclass(frozen=True)
class CountResult:
    quantity: str
    k: int
    ell: int
    n: int
    index: Optional[int]
    value: int


def _check_kl(k: int, ell: int):
    if k < 2 or ell < 2:
        raise UnsupportedParameters(f"need k >= 2 and ell >= 2, got k={k}, ell={ell}")


def falling(m: int, i: int) -> int:
    """(m)_i = m (m-1) ... (m-i+1); (m)_0 = 1 and (m)_i = 0 for i > m."""
    if m < 0 or i < 0:
        raise ValueError("falling factorial needs m, i >= 0")
    out = 1
    for t in range(i):
        out *= m - t
    return out


def count_U(k: int, ell: int, n: int, r: int) -> int:
    """Functions A^n -> B depending on exactly r variables."""
    _check_kl(k, ell)
    if not 0 <= r <= n:
        raise UnsupportedParameters(f"need 0 <= r <= n, got r={r}, n={n}")
    return comb(n, r) * sum((-1) ** i * comb(r, i) * ell ** (k ** (r - i)) for i in range(r + 1))


def count_V(k: int, ell: int, n: int) -> int:
    """Nonzero functions vanishing on A^n_=."""
    _check_kl(k, ell)
    return ell ** falling(k, n) - 1


def count_Q(k: int, ell: int, n: int, m: int) -> int:
    """Essentially n-ary functions of quasi-arity m (n >= 3)."""
    _check_kl(k, ell)
    if n < 3 or not 0 <= m <= n:
        raise UnsupportedParameters(f"count_Q needs n >= 3 and 0 <= m <= n, got n={n}, m={m}")
    V = count_V(k, ell, n)
    if m < n:
        return count_U(k, ell, n, m) * V
    return count_U(k, ell, n, n) * ell ** falling(k, n) - V * ell ** (k**n)


def count_S(k: int, n: int) -> int:
    """Size of the range of oddsupp on A^n_=."""
    if k < 2 or n < 2:
        raise UnsupportedParameters(f"count_S needs k >= 2 and n >= 2, got k={k}, n={n}")
    if n % 2 == 0:
        return sum(comb(k, 2 * i) for i in range(n // 2))
    return sum(comb(k, 2 * i + 1) for i in range((n - 1) // 2))


def count_O(k: int, ell: int, n: int) -> int:
    """Essentially n-ary, quasi-n-ary functions whose diagonal restriction
    is determined by oddsupp."""
    _check_kl(k, ell)
    if n < 2:
        raise UnsupportedParameters("count_O needs n >= 2")
    if n > k:
        return ell ** (2 ** (k - 1)) - ell
    return ell ** falling(k, n) * (ell ** count_S(k, n) - ell)


def count_G(k: int, ell: int, n: int, p: int) -> int:
    """Essentially n-ary functions with arity gap p."""
    _check_kl(k, ell)
    if n < 2 or not 1 <= p <= n:
        raise UnsupportedParameters(f"count_G needs n >= 2 and 1 <= p <= n, got n={n}, p={p}")
    U = lambda r: count_U(k, ell, n, r)  # noqa: E731
    if n == 2:
        g2 = ell ** (falling(k, 2) + 1) - ell
        return g2 if p == 2 else U(2) - g2
    if p >= 3:
        return 0 if n > k else U(n - p) * count_V(k, ell, n)
    if n == 3:
        g2 = (8 * ell ** falling(k, 3) - 3) * (ell**k - ell)
        return g2 if p == 2 else U(3) - count_G(k, ell, 3, 3) - g2
    O = count_O(k, ell, n)
    if n > k:
        return O if p == 2 else U(n) - O
    V = count_V(k, ell, n)
    if p == 2:
        return U(n - 2) * V + O
    return U(n - 1) * V + U(n) * ell ** falling(k, n) - V * ell ** (k**n) - O


def count_table(k: int, ell: int, n_max: int) -> list:
    """Rows (n, U_nn, G_n1, ..., G_nn) for 2 <= n <= n_max."""
    rows = []
    for n in range(2, n_max + 1):
        rows.append((n, count_U(k, ell, n, n), *(count_G(k, ell, n, p) for p in range(1, n + 1))))
    return rows


def to_sci(value: int, digits: int = 2) -> str:
    """Round an exact integer to ``digits`` significant digits, e.g. '4.4e38'."""
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = max(len(str(abs(value))), digits) + 2
        s = format(Decimal(value), f".{digits - 1}e")
    mant, exp = s.split("e")
    return f"{mant}e{int(exp)}"
