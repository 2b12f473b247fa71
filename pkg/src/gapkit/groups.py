"""Finite abelian groups on B = {0, ..., ell-1} given by Cayley tables.

Element 0 is always the neutral element.  Products use a mixed-radix
encoding with the first factor most significant, so ``make_boolean(d)``
encodes elements as d-bit patterns added by XOR.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fncore import FnTable, _layout

__all__ = [
    "AbelianGroup",
    "GroupError",
    "MAX_ORDER",
    "make_cyclic",
    "make_product",
    "make_boolean",
    "validate",
    "parse_group_spec",
    "load_cayley_table",
    "fn_add",
    "fn_sub",
    "fn_neg",
    "fn_zero_on_diag",
]

MAX_ORDER = 1 << 12


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AbelianGroup:
    add: np.ndarray
    name: str = ""

    def __post_init__(self):
        table = np.array(self.add, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise GroupError("Cayley table must be square")
        if table.shape[0] > MAX_ORDER:
            raise GroupError(f"group order {table.shape[0]} exceeds MAX_ORDER={MAX_ORDER}")
        table.flags.writeable = False
        object.__setattr__(self, "add", table)

    @classmethod
    def from_table(cls, table, name: str = "") -> "AbelianGroup":
        grp = cls(table, name)
        ok, why = validate(grp)
        if not ok:
            raise GroupError(f"not an abelian group with neutral element 0: {why}")
        return grp

    @property
    def order(self) -> int:
        return self.add.shape[0]

    @property
    def zero(self) -> int:
        return 0

    @property
    def neg(self) -> np.ndarray:
        return np.argmax(self.add == 0, axis=1)

    @property
    def boolean(self) -> bool:
        return bool((np.diagonal(self.add) == 0).all())

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return np.array_equal(self.add, other.add)

    def __hash__(self):
        return hash(self.add.tobytes())

    def __repr__(self):
        return f"AbelianGroup({self.name or 'table'}, order={self.order})"


def validate(g: AbelianGroup) -> tuple:
    """Return (True, None) or (False, name of the first violated axiom)."""
    t = g.add
    m = t.shape[0]
    if m < 1:
        return False, "empty"
    if t.min() < 0 or t.max() >= m:
        return False, "closure"
    e = np.arange(m)
    if not (np.array_equal(t[0], e) and np.array_equal(t[:, 0], e)):
        return False, "identity"
    if not np.array_equal(t, t.T):
        return False, "commutativity"
    if not (t == 0).any(axis=1).all():
        return False, "inverses"
    # (x + y) + z == x + (y + z) over all triples
    lhs = t[t[:, :, None], e[None, None, :]]
    rhs = t[e[:, None, None], t[None, :, :]]
    if not np.array_equal(lhs, rhs):
        return False, "associativity"
    return True, None


def make_cyclic(m: int) -> AbelianGroup:
    if m < 1:
        raise GroupError("cyclic group order must be >= 1")
    if m > MAX_ORDER:
        raise GroupError(f"group order {m} exceeds MAX_ORDER={MAX_ORDER}")
    e = np.arange(m)
    return AbelianGroup((e[:, None] + e[None, :]) % m, f"Z{m}")


def make_product(*groups: AbelianGroup) -> AbelianGroup:
    if not groups:
        raise GroupError("product of zero groups")
    orders = [g.order for g in groups]
    total = int(np.prod(orders))
    if total > MAX_ORDER:
        raise GroupError(f"group order {total} exceeds MAX_ORDER={MAX_ORDER}")
    digits = np.array(list(itertools.product(*(range(o) for o in orders))), dtype=np.int64)
    weights = np.array([int(np.prod(orders[i + 1:])) for i in range(len(orders))], dtype=np.int64)
    table = np.zeros((total, total), dtype=np.int64)
    for c, g in enumerate(groups):
        d = digits[:, c]
        table += g.add[d[:, None], d[None, :]] * weights[c]
    name = "x".join(g.name or f"G{g.order}" for g in groups)
    return AbelianGroup(table, name)


def make_boolean(d: int) -> AbelianGroup:
    if d < 1:
        raise GroupError("boolean group rank must be >= 1")
    grp = make_product(*[make_cyclic(2)] * d)
    return AbelianGroup(grp.add, f"Z2^{d}")


def load_cayley_table(path) -> AbelianGroup:
    with open(path) as fh:
        tokens = fh.read().split()
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GroupError(f"bad Cayley table file: {exc}") from None
    if not nums:
        raise GroupError("empty Cayley table file")
    m = nums[0]
    if len(nums) != 1 + m * m:
        raise GroupError(f"expected {m * m} table entries, got {len(nums) - 1}")
    return AbelianGroup.from_table(np.array(nums[1:]).reshape(m, m), f"table:{path}")


def parse_group_spec(spec: str) -> AbelianGroup:
    """``cyclic:m1xm2x...``, ``boolean:d`` or ``table:<path>``."""
    kind, _, arg = spec.partition(":")
    if kind == "cyclic":
        try:
            parts = [int(t) for t in arg.split("x")]
        except ValueError:
            raise GroupError(f"bad cyclic group spec {spec!r}") from None
        return make_cyclic(parts[0]) if len(parts) == 1 else make_product(*map(make_cyclic, parts))
    if kind == "boolean":
        try:
            return make_boolean(int(arg))
        except ValueError:
            raise GroupError(f"bad boolean group spec {spec!r}") from None
    if kind == "table":
        return load_cayley_table(arg)
    raise GroupError(f"unknown group spec {spec!r}")


# -- pointwise arithmetic on tables ------------------------------------------


def _check(f: FnTable, g: FnTable, grp: AbelianGroup):
    if f.shape != g.shape:
        raise ValueError(f"shape mismatch {f.shape} vs {g.shape}")
    if f.ell != grp.order:
        raise ValueError(f"codomain size {f.ell} differs from group order {grp.order}")


def fn_add(f: FnTable, g: FnTable, grp: AbelianGroup) -> FnTable:
    _check(f, g, grp)
    return FnTable(f.k, f.ell, f.n, grp.add[f.values, g.values])


def fn_neg(f: FnTable, grp: AbelianGroup) -> FnTable:
    if f.ell != grp.order:
        raise ValueError(f"codomain size {f.ell} differs from group order {grp.order}")
    return FnTable(f.k, f.ell, f.n, grp.neg[f.values])


def fn_sub(f: FnTable, g: FnTable, grp: AbelianGroup) -> FnTable:
    _check(f, g, grp)
    return FnTable(f.k, f.ell, f.n, grp.add[f.values, grp.neg[g.values]])


def fn_zero_on_diag(h: FnTable, grp: Optional[AbelianGroup] = None) -> bool:
    if grp is not None and h.ell != grp.order:
        raise ValueError(f"codomain size {h.ell} differs from group order {grp.order}")
    return bool((h.values[_layout(h.k, h.n).diag_index] == 0).all())
