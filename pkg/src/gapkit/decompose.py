"""Unique decompositions f = h + g with h vanishing on A^n_=.

Two constructions:

* ``decompose_quasi`` (any abelian group): g is the unique essentially
  qa-ary support of f.  Requires qa f < n = ess f.
* ``decompose_gap2`` (Boolean groups, n >= 4, gap 2): either the above with
  qa = n - 2, or g = phi_tilde(phi) for phi(x_1..x_{n-2}) = f(x_1..x_{n-2}, y, y).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .fncore import (
    FnTable,
    _layout,
    essential_arity,
    index_of,
    is_determined_by_oddsupp,
    oddsupp,
    restrict_diag,
)
from .gap import GAP2_ODDSUPP, GAP2_QUASI, InessentialVariableError, classify, quasi_arity, unique_support
from .groups import AbelianGroup, fn_add, fn_sub

__all__ = [
    "Decomposition",
    "DecompositionError",
    "FormalSum",
    "QUASI_SUPPORT",
    "ODDSUPP_TILDE",
    "decompose",
    "decompose_quasi",
    "decompose_gap2",
    "phi_tilde",
    "phi_tilde_components",
    "formal_sum_support",
    "eval_formal_sum",
]

QUASI_SUPPORT = "QuasiSupport"
ODDSUPP_TILDE = "OddSuppTilde"


class DecompositionError(ValueError):
    """Preconditions of a decomposition are not met."""


@dataclass(frozen=True)
class Decomposition:
    h: FnTable
    g: FnTable
    case: str
    p: int
    phi: Optional[FnTable] = field(default=None, compare=False)

    @property
    def tag(self) -> str:
        return f"{self.case}({self.p})" if self.case == QUASI_SUPPORT else self.case


# -- formal sums of low-arity functions --------------------------------------


@dataclass(frozen=True, eq=False)
class FormalSum:
    """Sum over components (I, table) of table(x_I) in an abelian group.

    ``I`` is a tuple of 1-based variable indices and ``table`` holds the
    k**len(I) values of the component in row-major order.
    """

    k: int
    ell: int
    n: int
    group: AbelianGroup
    components: tuple

    @property
    def max_arity(self) -> int:
        return max((len(I) for I, _ in self.components), default=0)

    def to_table(self) -> FnTable:
        pts = _layout(self.k, self.n).points
        acc = np.zeros(self.k**self.n, dtype=np.int64)
        for I, vals in self.components:
            acc = self.group.add[acc, np.asarray(vals)[_subindex(pts, I, self.k)]]
        return FnTable(self.k, self.ell, self.n, acc)

    def simplified(self) -> "FormalSum":
        """Merge components sharing an index set and fold constants into a
        single component on the empty index set."""
        add = self.group.add
        const = 0
        merged = {}
        for I, vals in self.components:
            vals = np.asarray(vals)
            if (vals == vals[0]).all():
                const = int(add[const, vals[0]])
            elif I in merged:
                merged[I] = add[merged[I], vals]
            else:
                merged[I] = vals
        comps = [((), np.array([const]))]
        comps += [(I, v) for I, v in sorted(merged.items())]
        return FormalSum(self.k, self.ell, self.n, self.group, tuple(comps))

    def dumps(self) -> str:
        lines = [f"# {self.k} {self.ell} {self.n}"]
        for I, vals in self.components:
            lines.append(f"I: {' '.join(map(str, I))} ; table: {' '.join(map(str, np.asarray(vals).tolist()))}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, group: AbelianGroup) -> "FormalSum":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        k, ell, n = (int(t) for t in lines[0].lstrip("#").split())
        comps = []
        for ln in lines[1:]:
            left, right = ln.split(";")
            I = tuple(int(t) for t in left.split(":", 1)[1].split())
            vals = np.array([int(t) for t in right.split(":", 1)[1].split()])
            comps.append((I, vals))
        return cls(k, ell, n, group, tuple(comps))


def _subindex(pts: np.ndarray, I: Sequence[int], k: int) -> np.ndarray:
    idx = np.zeros(pts.shape[0], dtype=np.int64)
    for i in I:
        idx = idx * k + pts[:, i - 1]
    return idx


def eval_formal_sum(s: FormalSum, point: Sequence[int]) -> int:
    if len(point) != s.n:
        raise ValueError(f"point has {len(point)} coordinates, expected {s.n}")
    acc = 0
    for I, vals in s.components:
        sub = [point[i - 1] for i in I]
        acc = int(s.group.add[acc, np.asarray(vals)[index_of(sub, s.k, len(sub)) if sub else 0]])
    return acc


# -- phi tilde ---------------------------------------------------------------


def _require_boolean(grp: AbelianGroup):
    if not grp.boolean:
        raise DecompositionError(f"{grp!r} is not a Boolean group (x + x = 0 fails)")


def _check_oddsupp_total(phi: FnTable):
    seen = {}
    for p, v in zip(_layout(phi.k, phi.n).points.tolist(), phi.values.tolist()):
        key = oddsupp(p)
        if seen.setdefault(key, v) != v:
            raise DecompositionError("phi is not determined by oddsupp")


def phi_tilde_components(phi: FnTable, n: int) -> list:
    """The summands of phi_tilde as (I, table) pairs.

    Each summand is the identification minor phi(x_I, y, ..., y) with an
    even number of y's; its independence of y is checked.
    """
    if phi.n != n - 2:
        raise ValueError(f"phi must have arity n - 2 = {n - 2}, got {phi.n}")
    _check_oddsupp_total(phi)
    k = phi.k
    lay = _layout(k, phi.n)
    comps = []
    for r in range(n % 2, n - 1, 2):
        sub = np.array(list(itertools.product(range(k), repeat=r)), dtype=np.int64).reshape(k**r, r)
        tables = []
        for y in range(k):
            pts = np.concatenate([sub, np.full((k**r, n - 2 - r), y)], axis=1)
            tables.append(phi.values[lay.encode(pts)])
        if any(not np.array_equal(tables[0], t) for t in tables[1:]):
            raise DecompositionError("phi(x_I, y, ..., y) depends on y")
        for I in itertools.combinations(range(1, n + 1), r):
            comps.append((I, tables[0]))
    return comps


def phi_tilde(phi: FnTable, grp: AbelianGroup, n: int) -> FnTable:
    _require_boolean(grp)
    if phi.ell != grp.order:
        raise ValueError(f"codomain size {phi.ell} differs from group order {grp.order}")
    s = FormalSum(phi.k, phi.ell, n, grp, tuple(phi_tilde_components(phi, n)))
    return s.to_table()


def _phi_from_diag(f: FnTable) -> FnTable:
    # phi(x_1..x_{n-2}) = f(x_1..x_{n-2}, 0, 0), a diagonal point
    lay = _layout(f.k, f.n)
    sub = _layout(f.k, f.n - 2).points
    pts = np.concatenate([sub, np.zeros((sub.shape[0], 2), dtype=np.int64)], axis=1)
    return FnTable(f.k, f.ell, f.n - 2, f.values[lay.encode(pts)])


def formal_sum_support(f: FnTable, grp: AbelianGroup) -> FormalSum:
    """A support of f written as a sum of functions of arity <= n - 2."""
    _require_boolean(grp)
    if f.n < 3:
        raise DecompositionError("formal_sum_support needs n >= 3")
    if f.ell != grp.order:
        raise ValueError(f"codomain size {f.ell} differs from group order {grp.order}")
    if not is_determined_by_oddsupp(restrict_diag(f)):
        raise DecompositionError("f restricted to A^n_= is not determined by oddsupp")
    phi = _phi_from_diag(f)
    return FormalSum(f.k, f.ell, f.n, grp, tuple(phi_tilde_components(phi, f.n)))


# -- decompositions ----------------------------------------------------------


def decompose_quasi(f: FnTable, grp: AbelianGroup) -> Decomposition:
    if f.n < 3:
        raise DecompositionError("decompose_quasi needs n >= 3")
    if essential_arity(f) != f.n:
        raise InessentialVariableError("decompose_quasi needs all variables essential")
    qa = quasi_arity(f)
    if qa == f.n:
        raise DecompositionError("quasi-arity equals n: no quasi-arity drop to decompose")
    g = unique_support(f)
    h = fn_sub(f, g, grp)
    return Decomposition(h, g, QUASI_SUPPORT, f.n - qa)


def decompose_gap2(f: FnTable, grp: AbelianGroup) -> Decomposition:
    if f.n < 4:
        raise DecompositionError("decompose_gap2 needs arity at least 4")
    _require_boolean(grp)
    if f.ell != grp.order:
        raise ValueError(f"codomain size {f.ell} differs from group order {grp.order}")
    report = classify(f)
    if report.gap != 2:
        raise DecompositionError(f"arity gap is {report.gap}, not 2")
    if report.case == GAP2_QUASI:
        return decompose_quasi(f, grp)
    assert report.case == GAP2_ODDSUPP
    phi = _phi_from_diag(f)
    if phi.is_constant():
        raise DecompositionError("phi is constant")
    g = phi_tilde(phi, grp, f.n)
    h = fn_add(f, g, grp)
    return Decomposition(h, g, ODDSUPP_TILDE, 2, phi)


def decompose(f: FnTable, grp: AbelianGroup) -> Decomposition:
    """Pick the applicable decomposition for ``f``."""
    if f.n < 3:
        raise DecompositionError("decompositions need n >= 3")
    if essential_arity(f) != f.n:
        raise InessentialVariableError("decompose needs all variables essential")
    if quasi_arity(f) < f.n:
        return decompose_quasi(f, grp)
    return decompose_gap2(f, grp)
