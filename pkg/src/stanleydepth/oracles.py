"""Exact oracles: Stanley depth by interval-partition search, depth by Koszul homology.

Stanley depth is computed on the characteristic poset: exponent vectors
``a <= g`` in I (or outside I for S/I), where ``g`` caps every generator.  A
partition of the poset into intervals ``[a, b]`` gives a Stanley
decomposition whose depth is the least number of capped coordinates
``b_j = g_j`` over its intervals.  Splitting an interval along its uncapped
coordinates never lowers that number, so the search only needs intervals
with ``b_j = a_j`` off the capped set: the slab ``x^a K[Z]`` cut to the box.
Deciding "depth >= t" is then an exact-cover problem over those slabs with
``|Z| >= t``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Literal, Sequence

from . import kernels
from .decomposition import Slab, StanleyDecomposition
from .linalg import rank
from .monomial import Monomial, MonomialIdeal, saturate

Target = Literal["ideal", "quotient"]

POSET_BUDGET = int(os.environ.get("STANLEYDEPTH_POSET_BUDGET", 20_000))
BETTI_BUDGET = int(os.environ.get("STANLEYDEPTH_BETTI_BUDGET", 12))
MAX_BETTI_VARS = 6


class BudgetExceeded(RuntimeError):
    """Instance too large for an exact oracle; ``knob`` names the setting to raise."""

    def __init__(self, message: str, knob: str):
        self.knob = knob
        super().__init__(f"{message} (raise {knob})")


@dataclass(frozen=True)
class CharPoset:
    target: Target
    ideal: MonomialIdeal
    cap: tuple[int, ...]
    points: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class IntervalPartition:
    cap: tuple[int, ...]
    intervals: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def value(self) -> int:
        if not self.intervals:
            return len(self.cap)
        return min(sum(b == g for b, g in zip(top, self.cap)) for _, top in self.intervals)


@dataclass(frozen=True)
class SdepthResult:
    value: int
    witness: IntervalPartition

    def __iter__(self):
        return iter((self.value, self.witness))


def char_poset(target: Target, ideal: MonomialIdeal, cap: Sequence[int] | None = None,
               budget: int | None = None) -> CharPoset:
    if target not in ("ideal", "quotient"):
        raise ValueError(f"unknown target {target!r}")
    degs = ideal.degs()
    cap = tuple(degs) if cap is None else tuple(int(c) for c in cap)
    if len(cap) != ideal.n:
        raise ValueError(f"cap has length {len(cap)}, expected {ideal.n}")
    if any(c < d for c, d in zip(cap, degs)):
        raise ValueError(f"cap {cap} is below the generator degrees {degs}")
    budget = POSET_BUDGET if budget is None else budget
    size = 1
    for c in cap:
        size *= c + 1
    if size > budget:
        raise BudgetExceeded(f"characteristic poset box has {size} points, budget is {budget}", "poset_budget")
    want = target == "ideal"
    pts = tuple(p for p in product(*(range(c + 1) for c in cap)) if ideal.contains(p) == want)
    return CharPoset(target, ideal, cap, pts)


def _options(poset: CharPoset):
    """Every in-poset slab cut to the box, keyed by (origin index, free set)."""
    cap = poset.cap
    n = len(cap)
    index = {p: i for i, p in enumerate(poset.points)}
    ideal_target = poset.target == "ideal"
    opts = []
    for i, a in enumerate(poset.points):
        forced = frozenset(j for j in range(n) if a[j] == cap[j])
        optional = [j for j in range(n) if a[j] < cap[j]]
        for r in range(len(optional), -1, -1):
            for extra in combinations(optional, r):
                z = forced | frozenset(extra)
                # the slab box lies in the poset iff its bottom (ideal) or top (quotient) does
                top = tuple(cap[j] if j in z else a[j] for j in range(n))
                if not ideal_target and top not in index:
                    continue
                zs = sorted(z)
                items = []
                for vals in product(*(range(a[j], cap[j] + 1) for j in zs)):
                    c = list(a)
                    for j, x in zip(zs, vals):
                        c[j] = x
                    items.append(index[tuple(c)])
                opts.append((len(z), i, z, items))
    return opts


def _feasible(poset: CharPoset, opts, t: int):
    chosen = [o for o in opts if o[0] >= t]
    ptr = [0]
    flat: list[int] = []
    for o in chosen:
        flat.extend(o[3])
        ptr.append(len(flat))
    sol = kernels.exact_cover(len(poset.points), ptr, flat)
    if sol is None:
        return None
    return [chosen[k] for k in sol]


def _witness(poset: CharPoset, selection) -> IntervalPartition:
    cap = poset.cap
    intervals = []
    for _, i, z, _ in sorted(selection, key=lambda o: poset.points[o[1]]):
        a = poset.points[i]
        b = tuple(cap[j] if j in z else a[j] for j in range(len(cap)))
        intervals.append((a, b))
    return IntervalPartition(cap, tuple(intervals))


def sdepth_exact(target: Target, ideal: MonomialIdeal, cap: Sequence[int] | None = None,
                 budget: int | None = None) -> SdepthResult:
    """Exact Stanley depth of I or S/I with an optimal interval partition.

    Thresholds are tried from n downwards; the first feasible one is the
    answer.  The zero module (I = 0, or S/I with I = S) gets value n and an
    empty partition.
    """
    poset = char_poset(target, ideal, cap, budget)
    n = ideal.n
    if not poset.points:
        return SdepthResult(n, IntervalPartition(poset.cap, ()))
    opts = _options(poset)
    for t in range(n, -1, -1):
        sel = _feasible(poset, opts, t)
        if sel is not None:
            return SdepthResult(t, _witness(poset, sel))
    raise AssertionError("singleton intervals always partition the poset")


def sdepth_at_least(target: Target, ideal: MonomialIdeal, t: int, cap: Sequence[int] | None = None,
                    budget: int | None = None) -> bool:
    """Decide sdepth >= t with a single exact-cover search."""
    poset = char_poset(target, ideal, cap, budget)
    if not poset.points or t <= 0:
        return True
    return _feasible(poset, _options(poset), t) is not None


def partition_to_decomposition(target: Target, ideal: MonomialIdeal,
                               partition: IntervalPartition) -> StanleyDecomposition:
    """Stanley decomposition induced by an interval partition of the poset.

    An interval [a, b] with capped set Z contributes x^c K[Z] for every c in
    [a, b] that agrees with a on Z.
    """
    cap = partition.cap
    n = len(cap)
    slabs = []
    for a, b in partition.intervals:
        z = frozenset(j for j in range(n) if b[j] == cap[j])
        ranges = [range(a[j], a[j] + 1) if j in z else range(a[j], b[j] + 1) for j in range(n)]
        for c in product(*ranges):
            slabs.append(Slab(Monomial._raw(c), z))
    return StanleyDecomposition(target, ideal, tuple(slabs))


def depth_zero(ideal: MonomialIdeal) -> bool:
    """depth(S/I) = 0, i.e. I is not saturated."""
    return not saturate(ideal).already_saturated


# --- depth through multigraded Betti numbers ---------------------------------

def _lcm_lattice(gens) -> set[tuple[int, ...]]:
    seen: set[tuple[int, ...]] = set()
    for g in gens:
        g = tuple(g)
        new = {g}
        for m in seen:
            new.add(tuple(map(max, m, g)))
        seen |= new
    return seen


def upper_koszul_complex(ideal: MonomialIdeal, b: Sequence[int]) -> list[tuple[int, ...]]:
    """Faces F (sorted tuples of variables) with x^(b - F) in I."""
    supp = [j for j in range(len(b)) if b[j] > 0]
    faces = []
    for r in range(len(supp) + 1):
        for f in combinations(supp, r):
            c = list(b)
            for j in f:
                c[j] -= 1
            if ideal.contains(c):
                faces.append(f)
    return faces


def reduced_homology_ranks(faces: Sequence[tuple[int, ...]]) -> dict[int, int]:
    """dim H~_k over Q for a simplicial complex given by all its faces (empty face included)."""
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    if not by_dim:
        return {}
    top = max(by_dim)
    ranks = {}
    for k in range(0, top + 1):
        rows = by_dim.get(k - 1, [])
        cols = by_dim.get(k, [])
        pos = {f: i for i, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for ci, f in enumerate(cols):
            for s in range(len(f)):
                mat[pos[f[:s] + f[s + 1 :]]][ci] = -1 if s % 2 else 1
        ranks[k] = rank(mat) if rows and cols else 0
    out = {}
    for k in range(-1, top + 1):
        dim_k = len(by_dim.get(k, []))
        h = dim_k - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def betti_numbers(ideal: MonomialIdeal, budget: int | None = None) -> dict[tuple[int, tuple[int, ...]], int]:
    """Nonzero multigraded Betti numbers beta_{i,b}(I), keyed by (i, b)."""
    budget = BETTI_BUDGET if budget is None else budget
    if ideal.g > budget:
        raise BudgetExceeded(f"{ideal.g} generators, budget is {budget}", "betti_budget")
    if ideal.n > MAX_BETTI_VARS:
        raise BudgetExceeded(f"{ideal.n} variables, at most {MAX_BETTI_VARS} supported", "betti_budget")
    out = {}
    for b in sorted(_lcm_lattice(ideal.gens)):
        for k, h in reduced_homology_ranks(upper_koszul_complex(ideal, b)).items():
            out[(k + 1, b)] = h
    return out


def projective_dimension(ideal: MonomialIdeal, budget: int | None = None) -> int:
    """pd(S/I) = 1 + pd(I); zero for I = 0."""
    if ideal.is_zero():
        return 0
    return 1 + max(i for i, _ in betti_numbers(ideal, budget))


def depth_exact(ideal: MonomialIdeal, budget: int | None = None) -> int:
    """depth(S/I) = n - pd(S/I) (Auslander-Buchsbaum), Betti numbers over Q."""
    if ideal.is_unit():
        raise ValueError("S/I is zero for the unit ideal; its depth is undefined")
    return ideal.n - projective_dimension(ideal, budget)
