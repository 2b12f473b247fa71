"""Brute-force oracle: sweep function tables and tally ess, qa and gap.

Exhaustive sweeps walk the base-ell counter over all ell**(k**n) tables
(values[0] is the most significant digit).  Work is split into fixed-size
contiguous chunks and merged by addition, so the result does not depend on
the number of workers.  Sampled sweeps draw chunk ``j`` from a generator
seeded with ``(seed, j)`` for the same reason.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .counting import count_G, count_Q, count_U, falling
from .fncore import FnTable, _layout, batch_essential_mask, essential_arity, simple_minor
from .gap import _batch_quasi_arity, batch_arity_gap, batch_classify_gap
from .groups import AbelianGroup, fn_add

__all__ = [
    "Census",
    "Comparison",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "DEFAULT_SEED",
    "default_budget",
    "all_functions",
    "census",
    "compare",
    "random_function",
    "synth_gap_instance",
    "essl_all_minors",
]

DEFAULT_BUDGET = 10**6
DEFAULT_SEED = 20100901
CHUNK = 1 << 14


class BudgetExceeded(RuntimeError):
    pass


def default_budget() -> int:
    env = os.environ.get("GAPKIT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(k, ell, n, budget):
    budget = default_budget() if budget is None else budget
    total = ell ** (k**n)
    if total > budget:
        raise BudgetExceeded(f"{ell}^{k ** n} tables for (k={k}, ell={ell}, n={n}) exceed budget {budget}")
    return total


def _tables_in_range(k: int, ell: int, n: int, start: int, stop: int) -> np.ndarray:
    size = k**n
    t = np.arange(start, stop, dtype=np.int64)[:, None]
    place = ell ** np.arange(size - 1, -1, -1, dtype=np.int64)
    return (t // place) % ell


def all_functions(k: int, ell: int, n: int, budget: Optional[int] = None) -> Iterator[FnTable]:
    total = _check_budget(k, ell, n, budget)
    for start in range(0, total, CHUNK):
        for row in _tables_in_range(k, ell, n, start, min(total, start + CHUNK)):
            yield FnTable(k, ell, n, row)


def random_function(k: int, ell: int, n: int, seed: int) -> FnTable:
    rng = np.random.default_rng(seed)
    return FnTable(k, ell, n, rng.integers(0, ell, k**n))


# -- tallies -----------------------------------------------------------------


@dataclass
class Census:
    k: int
    ell: int
    n: int
    mode: str
    total: int = 0
    samples: Optional[int] = None
    seed: Optional[int] = None
    ess: Counter = field(default_factory=Counter)
    gap: Counter = field(default_factory=Counter)
    gap_classified: Counter = field(default_factory=Counter)
    qa: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)

    def merge(self, other: "Census") -> None:
        self.total += other.total
        for name in ("ess", "gap", "gap_classified", "qa", "violations"):
            getattr(self, name).update(getattr(other, name))

    def as_record(self) -> dict:
        def d(c):
            return {str(key): c[key] for key in sorted(c)}

        return {
            "k": self.k,
            "ell": self.ell,
            "n": self.n,
            "mode": self.mode,
            "samples": self.samples,
            "seed": self.seed,
            "total": self.total,
            "ess": d(self.ess),
            "gap": d(self.gap),
            "gap_classified": d(self.gap_classified),
            "qa": d(self.qa),
            "violations": {key: self.violations.get(key, 0) for key in _VIOLATIONS},
        }


_VIOLATIONS = ("classifier_mismatch", "willard_bound", "qa_ne_ess_when_n_gt_k")


def _tally(V: np.ndarray, k: int, ell: int, n: int, mode: str) -> Census:
    c = Census(k, ell, n, mode, total=V.shape[0])
    ess = batch_essential_mask(V, k, n).sum(axis=1)
    c.ess.update(ess.tolist())
    qa = _batch_quasi_arity(V, k, n)
    for key in _VIOLATIONS:
        c.violations[key] += 0
    if n > k:
        c.violations["qa_ne_ess_when_n_gt_k"] += int((qa != ess).sum())
    full = V[ess == n]
    if n >= 2 and full.shape[0]:
        gap = batch_arity_gap(full, k, n)
        cls = batch_classify_gap(full, k, n)
        c.gap.update(gap.tolist())
        c.gap_classified.update(cls.tolist())
        c.qa.update(qa[ess == n].tolist())
        c.violations["classifier_mismatch"] += int((gap != cls).sum())
        if n > k:
            c.violations["willard_bound"] += int((gap > 2).sum())
    return c


def _exhaustive_chunk(args):
    k, ell, n, start, stop = args
    return _tally(_tables_in_range(k, ell, n, start, stop), k, ell, n, "exhaustive")


def _sampled_chunk(args):
    k, ell, n, seed, j, size = args
    rng = np.random.default_rng([seed, j])
    return _tally(rng.integers(0, ell, (size, k**n)), k, ell, n, "sampled")


def census(
    k: int,
    ell: int,
    n: int,
    samples: Optional[int] = None,
    seed: int = DEFAULT_SEED,
    budget: Optional[int] = None,
    workers: int = 1,
) -> Census:
    """Tally every table (``samples=None``) or ``samples`` random tables."""
    if samples is None:
        total = _check_budget(k, ell, n, budget)
        jobs = [(k, ell, n, s, min(total, s + CHUNK)) for s in range(0, total, CHUNK)]
        fn, out = _exhaustive_chunk, Census(k, ell, n, "exhaustive")
    else:
        sizes = [min(CHUNK, samples - s) for s in range(0, samples, CHUNK)]
        jobs = [(k, ell, n, seed, j, size) for j, size in enumerate(sizes)]
        fn, out = _sampled_chunk, Census(k, ell, n, "sampled", samples=samples, seed=seed)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(fn, jobs))
    else:
        parts = map(fn, jobs)
    for part in parts:
        out.merge(part)
    return out


# -- comparison with the formulas -------------------------------------------


@dataclass
class Comparison:
    census: Census
    mismatches: list

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_record(self) -> dict:
        return {
            "ok": self.ok,
            "census": self.census.as_record(),
            "mismatches": [dict(zip(("quantity", "index", "observed", "expected"), m)) for m in self.mismatches],
        }


def compare(c: Census) -> Comparison:
    """Check tallies against U, G and Q.  Sampled censuses are only checked
    for zero invariant violations."""
    bad = [(f"violation:{key}", None, v, 0) for key, v in sorted(c.violations.items()) if v]
    if c.mode == "exhaustive":
        k, ell, n = c.k, c.ell, c.n
        if c.total != ell ** (k**n):
            bad.append(("total", None, c.total, ell ** (k**n)))
        for r in range(n + 1):
            if c.ess[r] != count_U(k, ell, n, r):
                bad.append(("U", r, c.ess[r], count_U(k, ell, n, r)))
        if n >= 2:
            for p in range(1, n + 1):
                exp = count_G(k, ell, n, p)
                if c.gap[p] != exp:
                    bad.append(("G", p, c.gap[p], exp))
                if c.gap_classified[p] != exp:
                    bad.append(("G_classified", p, c.gap_classified[p], exp))
        if n >= 3:
            for m in range(n + 1):
                if c.qa[m] != count_Q(k, ell, n, m):
                    bad.append(("Q", m, c.qa[m], count_Q(k, ell, n, m)))
    return Comparison(c, bad)


# -- synthesized instances ---------------------------------------------------


def synth_gap_instance(k: int, ell: int, n: int, p: int, grp: AbelianGroup, seed: int) -> tuple:
    """(f, h, g) with f = h + g, h nonzero and vanishing on A^n_=, and g
    essentially (n - p)-ary on a random set of variables."""
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got p={p}, n={n}")
    if falling(k, n) == 0:
        raise ValueError(f"no off-diagonal points for k={k}, n={n}")
    if grp.order != ell:
        raise ValueError(f"group order {grp.order} differs from ell={ell}")
    rng = np.random.default_rng(seed)
    m = n - p
    keep = np.sort(rng.choice(n, size=m, replace=False))
    while True:
        core = rng.integers(0, ell, k**m)
        if m == 0 or batch_essential_mask(core[None, :], k, m).all():
            break
    lay = _layout(k, n)
    sub = np.zeros(k**n, dtype=np.int64)
    for i in keep:
        sub = sub * k + lay.points[:, i]
    g = FnTable(k, ell, n, core[sub])
    off = np.flatnonzero(~lay.diag_mask)
    hv = np.zeros(k**n, dtype=np.int64)
    while not hv.any():
        hv[off] = rng.integers(0, ell, off.size)
    h = FnTable(k, ell, n, hv)
    return fn_add(h, g, grp), h, g


def essl_all_minors(f: FnTable) -> int:
    """ess-down by sweeping every sigma: {1..n} -> {1..n}."""
    ess = essential_arity(f)
    best = None
    for sigma in itertools.product(range(1, f.n + 1), repeat=f.n):
        e = essential_arity(simple_minor(f, sigma, f.n))
        if e < ess and (best is None or e > best):
            best = e
    if best is None:
        raise ValueError("no proper minor")
    return best
