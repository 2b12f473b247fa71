"""Finite functions f: A^n -> B stored as flat value tables.

Elements of A are encoded as 0..k-1 and elements of B as 0..ell-1.  A point
(x_1, ..., x_n) is stored at the row-major index with x_1 as the most
significant base-k digit.  Variable indices in the public API are 1-based
(x_1 .. x_n); element values are 0-based.

Most predicates have a batched twin operating on a 2-D array of shape
(N, k**n) so that censuses over many tables stay vectorized.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

__all__ = [
    "FnTable",
    "DiagSlice",
    "OddSuppCheck",
    "index_of",
    "point_of",
    "evaluate",
    "simple_minor",
    "identify",
    "is_essential",
    "essential_variables",
    "essential_arity",
    "drop_inessential",
    "diag_points",
    "restrict_diag",
    "partial_essential_arity",
    "oddsupp",
    "oddsupp_range",
    "is_determined_by_oddsupp",
    "parse_table",
    "format_table",
    "load_table",
    "save_table",
]


@dataclass(frozen=True, eq=False)
class FnTable:
    """A total function A^n -> B with |A| = k, |B| = ell."""

    k: int
    ell: int
    n: int
    values: np.ndarray

    def __post_init__(self):
        if self.k < 2 or self.ell < 2:
            raise ValueError(f"need k >= 2 and ell >= 2, got k={self.k}, ell={self.ell}")
        if self.n < 1:
            raise ValueError(f"arity must be >= 1, got {self.n}")
        vals = np.array(self.values, dtype=np.int64).reshape(-1)
        if vals.size != self.k**self.n:
            raise ValueError(f"expected {self.k ** self.n} values, got {vals.size}")
        if vals.size and (vals.min() < 0 or vals.max() >= self.ell):
            raise ValueError(f"table entries must lie in [0, {self.ell})")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, k: int, ell: int, n: int, fn) -> "FnTable":
        pts = _layout(k, n).points
        return cls(k, ell, n, [fn(*p) for p in pts.tolist()])

    @classmethod
    def constant(cls, k: int, ell: int, n: int, c: int) -> "FnTable":
        return cls(k, ell, n, np.full(k**n, c))

    @property
    def shape(self) -> tuple:
        return (self.k, self.ell, self.n)

    def __call__(self, *point: int) -> int:
        return evaluate(self, point)

    def __eq__(self, other):
        if not isinstance(other, FnTable):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.shape, self.values.tobytes()))

    def __repr__(self):
        vals = self.values.tolist()
        body = vals if len(vals) <= 16 else vals[:16] + ["..."]
        return f"FnTable(k={self.k}, ell={self.ell}, n={self.n}, values={body})"

    def is_constant(self) -> bool:
        return bool((self.values == self.values[0]).all())


# -- layout: index bookkeeping shared by every table of a given (k, n) -------


class _Layout:
    def __init__(self, k: int, n: int):
        self.k = k
        self.n = n
        self.size = k**n
        self.weights = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self.points = np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int64).reshape(
            self.size, n
        )
        if n == 1:
            self.diag_mask = np.ones(self.size, dtype=bool)
        else:
            srt = np.sort(self.points, axis=1)
            self.diag_mask = (srt[:, 1:] == srt[:, :-1]).any(axis=1)
        self.diag_index = np.flatnonzero(self.diag_mask)
        self._ess_pairs = None
        self._diag_pairs = None
        self._identify = {}
        self._oddsupp = None

    def encode(self, pts: np.ndarray) -> np.ndarray:
        return pts @ self.weights

    @property
    def ess_pairs(self):
        # per variable: (P, Q) with Q = P with coordinate i reset to 0
        if self._ess_pairs is None:
            out = []
            for i in range(self.n):
                p = np.flatnonzero(self.points[:, i] != 0)
                q = p - self.points[p, i] * self.weights[i]
                out.append((p, q))
            self._ess_pairs = out
        return self._ess_pairs

    @property
    def diag_pairs(self):
        # per variable: all (P, Q), P < Q, both in A^n_=, differing only at i
        if self._diag_pairs is None:
            out = []
            for i in range(self.n):
                ps, qs = [], []
                base = np.flatnonzero(self.points[:, i] == 0)
                for a, b in itertools.combinations(range(self.k), 2):
                    p = base + a * self.weights[i]
                    q = base + b * self.weights[i]
                    keep = self.diag_mask[p] & self.diag_mask[q]
                    ps.append(p[keep])
                    qs.append(q[keep])
                p = np.concatenate(ps)
                q = np.concatenate(qs)
                order = np.lexsort((q, p))
                out.append((p[order], q[order]))
            self._diag_pairs = out
        return self._diag_pairs

    def identify_map(self, i: int, j: int) -> np.ndarray:
        """Index map for x_j := x_i (0-based i, j)."""
        key = (i, j)
        if key not in self._identify:
            pts = self.points.copy()
            pts[:, j] = pts[:, i]
            self._identify[key] = self.encode(pts)
        return self._identify[key]

    @property
    def oddsupp_keys(self):
        """(keys, rep) for diagonal points: oddsupp bitmask and the first
        diagonal point carrying the same bitmask."""
        if self._oddsupp is None:
            masks = np.zeros(self.size, dtype=np.int64)
            for a in range(self.k):
                odd = (self.points == a).sum(axis=1) % 2
                masks |= odd.astype(np.int64) << a
            dmask = masks[self.diag_index]
            first = {}
            rep = np.empty_like(self.diag_index)
            for t, (m, idx) in enumerate(zip(dmask.tolist(), self.diag_index.tolist())):
                rep[t] = first.setdefault(m, idx)
            self._oddsupp = (masks, rep)
        return self._oddsupp


@lru_cache(maxsize=None)
def _layout(k: int, n: int) -> _Layout:
    return _Layout(k, n)


# -- point encoding ----------------------------------------------------------


def index_of(point: Sequence[int], k: int, n: int) -> int:
    if len(point) != n:
        raise ValueError(f"point has {len(point)} coordinates, expected {n}")
    idx = 0
    for c in point:
        if not 0 <= c < k:
            raise ValueError(f"coordinate {c} out of range [0, {k})")
        idx = idx * k + int(c)
    return idx


def point_of(index: int, k: int, n: int) -> tuple:
    if not 0 <= index < k**n:
        raise ValueError(f"index {index} out of range [0, {k ** n})")
    coords = []
    for _ in range(n):
        index, r = divmod(index, k)
        coords.append(r)
    return tuple(reversed(coords))


def evaluate(f: FnTable, point: Sequence[int]) -> int:
    return int(f.values[index_of(point, f.k, f.n)])


# -- minors ------------------------------------------------------------------


def simple_minor(g: FnTable, sigma: Sequence[int], n: int) -> FnTable:
    """f(x_1..x_n) = g(x_sigma(1), ..., x_sigma(m)); sigma is 1-based."""
    if len(sigma) != g.n:
        raise ValueError(f"sigma must have length {g.n}")
    if any(not 1 <= s <= n for s in sigma):
        raise ValueError(f"sigma images must lie in [1, {n}]")
    pts = _layout(g.k, n).points[:, [s - 1 for s in sigma]]
    idx = _layout(g.k, g.n).encode(pts)
    return FnTable(g.k, g.ell, n, g.values[idx])


def identify(f: FnTable, i: int, j: int) -> FnTable:
    """Replace x_j by x_i, keeping the arity (x_j becomes inessential)."""
    if not (1 <= i <= f.n and 1 <= j <= f.n) or i == j:
        raise ValueError(f"need distinct variable indices in [1, {f.n}], got {i}, {j}")
    i, j = min(i, j), max(i, j)
    return FnTable(f.k, f.ell, f.n, f.values[_layout(f.k, f.n).identify_map(i - 1, j - 1)])


# -- essential variables -----------------------------------------------------


def batch_essential_mask(V: np.ndarray, k: int, n: int) -> np.ndarray:
    """Boolean (N, n) mask of essential variables for each row of V."""
    lay = _layout(k, n)
    out = np.empty((V.shape[0], n), dtype=bool)
    for i, (p, q) in enumerate(lay.ess_pairs):
        out[:, i] = (V[:, p] != V[:, q]).any(axis=1)
    return out


def batch_partial_essential_mask(V: np.ndarray, k: int, n: int) -> np.ndarray:
    """Like batch_essential_mask, with witnesses restricted to A^n_=."""
    lay = _layout(k, n)
    if n == 1:
        return batch_essential_mask(V, k, n)
    out = np.empty((V.shape[0], n), dtype=bool)
    for i, (p, q) in enumerate(lay.diag_pairs):
        out[:, i] = (V[:, p] != V[:, q]).any(axis=1) if p.size else False
    return out


def is_essential(f: FnTable, i: int) -> tuple:
    """Return (essential, witness) where witness is a pair of points differing
    only in x_i with different values, or None.  Lexicographically first."""
    if not 1 <= i <= f.n:
        raise ValueError(f"variable index {i} out of range [1, {f.n}]")
    pts = _layout(f.k, f.n).points
    w = f.k ** (f.n - i)
    for p in range(f.k**f.n):
        a = pts[p, i - 1]
        for b in range(a + 1, f.k):
            q = p + (b - a) * w
            if f.values[p] != f.values[q]:
                return True, (tuple(pts[p].tolist()), tuple(pts[q].tolist()))
    return False, None


def essential_variables(f: FnTable) -> tuple:
    mask = batch_essential_mask(f.values[None, :], f.k, f.n)[0]
    return tuple(int(i) + 1 for i in np.flatnonzero(mask))


def essential_arity(f: FnTable) -> int:
    return len(essential_variables(f))


def drop_inessential(f: FnTable) -> FnTable:
    """Remove inessential variables.  Constant functions keep one dummy
    variable since tables have arity >= 1."""
    ess = essential_variables(f)
    if len(ess) == f.n:
        return f
    if not ess:
        return FnTable.constant(f.k, f.ell, 1, int(f.values[0]))
    m = len(ess)
    pts = np.zeros((f.k**m, f.n), dtype=np.int64)
    pts[:, [i - 1 for i in ess]] = _layout(f.k, m).points
    return FnTable(f.k, f.ell, m, f.values[_layout(f.k, f.n).encode(pts)])


# -- the diagonal domain A^n_= -----------------------------------------------


def diag_points(k: int, n: int) -> Iterator[tuple]:
    lay = _layout(k, n)
    for idx in lay.diag_index:
        yield tuple(lay.points[idx].tolist())


@dataclass(frozen=True, eq=False)
class DiagSlice:
    """The restriction f|A^n_= of a table to tuples with a repeated entry."""

    base: FnTable

    @property
    def k(self):
        return self.base.k

    @property
    def n(self):
        return self.base.n

    @property
    def indices(self) -> np.ndarray:
        return _layout(self.base.k, self.base.n).diag_index

    @property
    def values(self) -> np.ndarray:
        return self.base.values[self.indices]

    def items(self) -> Iterator[tuple]:
        pts = _layout(self.base.k, self.base.n).points
        for idx in self.indices:
            yield tuple(pts[idx].tolist()), int(self.base.values[idx])

    def __len__(self):
        return int(self.indices.size)

    def __eq__(self, other):
        if not isinstance(other, DiagSlice):
            return NotImplemented
        return self.base.shape == other.base.shape and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.base.shape, self.values.tobytes()))

    def is_constant(self) -> bool:
        v = self.values
        return bool((v == v[0]).all())


def restrict_diag(f: FnTable) -> DiagSlice:
    return DiagSlice(f)


def partial_essential_arity(s: DiagSlice) -> int:
    f = s.base
    return int(batch_partial_essential_mask(f.values[None, :], f.k, f.n)[0].sum())


# -- oddsupp -----------------------------------------------------------------


def oddsupp(point: Iterable[int]) -> frozenset:
    """Elements occurring an odd number of times in the tuple."""
    out = set()
    for a in point:
        out ^= {a}
    return frozenset(out)


def oddsupp_range(k: int, n: int) -> set:
    """Realizable values of oddsupp on A^n_=: same parity as n, size <= n-2."""
    if n < 2:
        raise ValueError("oddsupp_range needs n >= 2")
    return {
        frozenset(c)
        for r in range(n % 2, min(n - 2, k) + 1, 2)
        for c in itertools.combinations(range(k), r)
    }


def _mask_to_set(mask: int) -> frozenset:
    return frozenset(a for a in range(mask.bit_length()) if mask >> a & 1)


def batch_oddsupp_determined(V: np.ndarray, k: int, n: int) -> np.ndarray:
    """Rows whose restriction to A^n_= factors through oddsupp."""
    lay = _layout(k, n)
    _, rep = lay.oddsupp_keys
    return (V[:, lay.diag_index] == V[:, rep]).all(axis=1)


@dataclass(frozen=True)
class OddSuppCheck:
    """Outcome of is_determined_by_oddsupp: either ``table`` (the map f*
    on realizable oddsupp values) or ``counterexample`` is set."""

    table: Optional[dict]
    counterexample: Optional[tuple] = None

    def __bool__(self):
        return self.table is not None


def is_determined_by_oddsupp(s: DiagSlice) -> OddSuppCheck:
    f = s.base
    lay = _layout(f.k, f.n)
    masks, _ = lay.oddsupp_keys
    seen = {}
    for idx in lay.diag_index.tolist():
        m = int(masks[idx])
        v = int(f.values[idx])
        if m in seen:
            j, w = seen[m]
            if w != v:
                pair = (tuple(lay.points[j].tolist()), tuple(lay.points[idx].tolist()))
                return OddSuppCheck(None, pair)
        else:
            seen[m] = (idx, v)
    return OddSuppCheck({_mask_to_set(m): v for m, (_, v) in seen.items()})


# -- text format -------------------------------------------------------------


def format_table(f: FnTable) -> str:
    return f"{f.k} {f.ell} {f.n}\n" + " ".join(map(str, f.values.tolist())) + "\n"


def parse_table(text: str) -> FnTable:
    lines = text.strip().splitlines()
    if not lines:
        raise ValueError("empty function file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError("header must be 'k ell n'")
    try:
        k, ell, n = (int(t) for t in header)
        vals = [int(t) for t in " ".join(lines[1:]).split()]
    except ValueError as exc:
        raise ValueError(f"non-integer token in function file: {exc}") from None
    return FnTable(k, ell, n, vals)


def load_table(path) -> FnTable:
    with open(path) as fh:
        return parse_table(fh.read())


def save_table(f: FnTable, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_table(f))
