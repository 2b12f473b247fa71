"""Quasi-arity, ess-down, arity gap and the gap classification.

Two independent routes to the gap are kept side by side:

* ``arity_gap`` computes ``ess f - max ess g`` over the one-pair
  identification minors ``g`` of ``f``;
* ``classify`` never looks at minors.  It reads the gap off the diagonal
  restriction (quasi-arity, oddsupp factoring, the ternary identities).

The census cross-checks one against the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .fncore import (
    FnTable,
    _layout,
    batch_essential_mask,
    batch_oddsupp_determined,
    batch_partial_essential_mask,
    essential_arity,
    essential_variables,
    identify,
    is_determined_by_oddsupp,
    restrict_diag,
)

__all__ = [
    "GapReport",
    "InessentialVariableError",
    "GAP_P",
    "GAP2_QUASI",
    "GAP2_ODDSUPP",
    "GAP2_TERNARY",
    "GAP2_BINARY",
    "GAP1",
    "quasi_arity",
    "essl",
    "arity_gap",
    "classify",
    "check_ternary",
    "unique_support",
    "batch_arity_gap",
    "batch_classify_gap",
]

GAP_P = "GapP"
GAP2_QUASI = "Gap2QuasiNminus2"
GAP2_ODDSUPP = "Gap2OddSupp"
GAP2_TERNARY = "Gap2Ternary"
GAP2_BINARY = "Gap2Binary"
GAP1 = "Gap1"


class InessentialVariableError(ValueError):
    """Raised when an operation requires every variable to be essential."""


@dataclass(frozen=True)
class GapReport:
    ess: int
    qa: int
    essl: int
    gap: int
    case: str
    essential: tuple = ()
    p: Optional[int] = None
    ternary: Optional[tuple] = None  # (h, i1, i2, i3)
    oddsupp_table: Optional[dict] = field(default=None, compare=False)

    def as_record(self) -> dict:
        rec = {
            "ess": self.ess,
            "essential": list(self.essential),
            "qa": self.qa,
            "essl": self.essl,
            "gap": self.gap,
            "case": self.case,
        }
        if self.p is not None:
            rec["p"] = self.p
        if self.ternary is not None:
            h, i1, i2, i3 = self.ternary
            rec["h"] = h.values.tolist()
            rec["i"] = [i1, i2, i3]
        if self.oddsupp_table is not None:
            rec["oddsupp_table"] = {
                ",".join(map(str, sorted(s))): v
                for s, v in sorted(self.oddsupp_table.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
            }
        return rec


# -- quasi-arity -------------------------------------------------------------


def _batch_quasi_arity(V: np.ndarray, k: int, n: int) -> np.ndarray:
    if n == 1:
        return batch_essential_mask(V, k, n).sum(axis=1)
    if n == 2:
        d = V[:, _layout(k, 2).diag_index]
        return (d != d[:, :1]).any(axis=1).astype(np.int64)
    return batch_partial_essential_mask(V, k, n).sum(axis=1)


def quasi_arity(f: FnTable) -> int:
    """Minimum essential arity over all supports of ``f``.

    For n = 2 every f has the support f(x1, x1), so qa is 0 or 1 depending
    on whether the diagonal is constant.
    """
    return int(_batch_quasi_arity(f.values[None, :], f.k, f.n)[0])


# -- ess-down and the gap via minors ----------------------------------------


def essl(f: FnTable) -> int:
    """Largest essential arity among proper minors of ``f``.

    Any minor merging two essential variables factors through a single
    identification, so scanning pairs of essential variables suffices.
    """
    ess = essential_variables(f)
    if len(ess) < 2:
        raise InessentialVariableError("ess-down needs at least two essential variables")
    return max(essential_arity(identify(f, i, j)) for i, j in itertools.combinations(ess, 2))


def arity_gap(f: FnTable) -> int:
    ess = essential_arity(f)
    return ess - essl(f)


def batch_arity_gap(V: np.ndarray, k: int, n: int) -> np.ndarray:
    """Gap via identification minors for rows of V with all n variables
    essential; other rows get -1."""
    lay = _layout(k, n)
    full = batch_essential_mask(V, k, n).all(axis=1)
    best = np.zeros(V.shape[0], dtype=np.int64)
    for i, j in itertools.combinations(range(n), 2):
        W = V[:, lay.identify_map(i, j)]
        best = np.maximum(best, batch_essential_mask(W, k, n).sum(axis=1))
    return np.where(full, n - best, -1)


# -- the classification route -----------------------------------------------


def _ternary_maps(k: int):
    """Index arrays for f(a,b,b), f(b,a,b), f(b,b,a) over (a, b) in A^2 and
    for the diagonal h(x) = f(x,x,x)."""
    lay = _layout(k, 3)
    a = np.repeat(np.arange(k), k)
    b = np.tile(np.arange(k), k)
    maps = [
        lay.encode(np.stack([a, b, b], axis=1)),
        lay.encode(np.stack([b, a, b], axis=1)),
        lay.encode(np.stack([b, b, a], axis=1)),
    ]
    diag = lay.encode(np.stack([np.arange(k)] * 3, axis=1))
    return a, b, maps, diag


def _batch_ternary(V: np.ndarray, k: int):
    """(ok, codes) where codes[:, r] is i_{r+1} when ok."""
    a, b, maps, diag = _ternary_maps(k)
    H = V[:, diag]
    nonconst = (H != H[:, :1]).any(axis=1)
    ok = nonconst.copy()
    codes = np.zeros((V.shape[0], 3), dtype=np.int64)
    for r, m in enumerate(maps):
        F = V[:, m]
        one = (F == H[:, a]).all(axis=1)
        zero = (F == H[:, b]).all(axis=1)
        codes[:, r] = np.where(one, 1, 0)
        ok &= one | zero
    return ok, codes


def check_ternary(f: FnTable) -> Optional[tuple]:
    """Return (h, i1, i2, i3) with h nonconstant unary and
    f(x1,x0,x0) = h(x_i1), f(x0,x1,x0) = h(x_i2), f(x0,x0,x1) = h(x_i3),
    or None.  Here i = 1 selects x1 and i = 0 selects x0."""
    if f.n != 3:
        raise ValueError("check_ternary needs a ternary function")
    ok, codes = _batch_ternary(f.values[None, :], f.k)
    if not ok[0]:
        return None
    _, _, _, diag = _ternary_maps(f.k)
    h = FnTable(f.k, f.ell, 1, f.values[diag])
    return (h, *map(int, codes[0]))


def batch_classify_gap(V: np.ndarray, k: int, n: int) -> np.ndarray:
    """Gap read off the structural classification, for rows assumed to have
    every variable essential."""
    qa = _batch_quasi_arity(V, k, n)
    if n == 2:
        return np.where(qa == 0, 2, 1)
    if n == 3:
        ok, _ = _batch_ternary(V, k)
        return np.where(qa == 0, 3, np.where(ok, 2, 1))
    p = n - qa
    gap2 = (p == 2) | ((qa == n) & batch_oddsupp_determined(V, k, n))
    return np.where(p >= 3, p, np.where(gap2, 2, 1))


def classify(f: FnTable) -> GapReport:
    ess_vars = essential_variables(f)
    n = f.n
    if len(ess_vars) != n or n < 2:
        raise InessentialVariableError(
            f"classify needs all variables essential (n={n}, essential={list(ess_vars)})"
        )
    qa = quasi_arity(f)
    ternary = None
    table = None
    p = None
    if n == 2:
        case, gap = (GAP2_BINARY, 2) if qa == 0 else (GAP1, 1)
    elif n == 3 and qa == 0:
        case, gap, p = GAP_P, 3, 3
    elif n == 3:
        ternary = check_ternary(f)
        case, gap = (GAP2_TERNARY, 2) if ternary else (GAP1, 1)
    elif n - qa >= 3:
        p = n - qa
        case, gap = GAP_P, p
    elif n - qa == 2:
        case, gap = GAP2_QUASI, 2
    else:
        chk = is_determined_by_oddsupp(restrict_diag(f)) if qa == n else None
        if chk:
            case, gap, table = GAP2_ODDSUPP, 2, chk.table
        else:
            case, gap = GAP1, 1
    return GapReport(
        ess=n,
        qa=qa,
        essl=n - gap,
        gap=gap,
        case=case,
        essential=ess_vars,
        p=p,
        ternary=ternary,
        oddsupp_table=table,
    )


# -- the unique low-arity support -------------------------------------------


def unique_support(f: FnTable) -> FnTable:
    """The unique essentially qa-ary support of ``f`` (n >= 3, qa < n).

    With E the essential variables of f restricted to A^n_= and e = min E,
    the support is g(x) = f(y) where y agrees with x on E and carries x_e
    everywhere else.
    """
    if f.n < 3:
        raise ValueError("unique_support needs n >= 3")
    mask = batch_partial_essential_mask(f.values[None, :], f.k, f.n)[0]
    E = np.flatnonzero(mask)
    if E.size == f.n:
        raise ValueError("quasi-arity equals n: no lower-arity support")
    if E.size == 0:
        return FnTable.constant(f.k, f.ell, f.n, int(f.values[0]))
    lay = _layout(f.k, f.n)
    pts = lay.points.copy()
    rest = np.setdiff1d(np.arange(f.n), E)
    pts[:, rest] = pts[:, [E[0]]]
    return FnTable(f.k, f.ell, f.n, f.values[lay.encode(pts)])
