"""Decomposition-producing algorithms for ideals with few generators.

Every function here returns slabs that :func:`stanleydepth.decomposition.verify`
accepts; the recursive ones also return a :class:`ConstructionTrace` recording
which splitting rule produced which slabs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .decomposition import Slab, StanleyDecomposition, format_slab, verify
from .monomial import (
    Monomial,
    MonomialIdeal,
    colon,
    embed,
    format_monomial,
    gcd_part,
    is_saturated,
    minimalize,
    restrict,
    stats,
)

MAX_STEPS = 10**6


class ConstructionError(ValueError):
    """Input outside a construction's precondition."""


class Rule(str, enum.Enum):
    GCD_REDUCE = "gcd_reduce"
    JANET_SPLIT = "janet_split"
    LEMMA13_SPLIT = "lemma13_split"
    CI_BASE = "ci_base"
    SMALL_CASE = "small_case"
    TRANSFER = "transfer"


@dataclass(frozen=True)
class Step:
    rule: Rule
    ideal: MonomialIdeal
    prefix: Monomial
    detail: str
    emitted: tuple[Slab, ...] = ()


@dataclass
class ConstructionTrace:
    target: str
    ideal: MonomialIdeal
    steps: list[Step] = field(default_factory=list)

    def emit(self, rule: Rule, ideal: MonomialIdeal, prefix: Monomial, detail: str, slabs=()) -> None:
        if len(self.steps) >= MAX_STEPS:
            raise RuntimeError(f"construction exceeded {MAX_STEPS} steps")
        self.steps.append(Step(rule, ideal, prefix, detail, tuple(slabs)))

    def replay(self) -> StanleyDecomposition:
        slabs = [s for step in self.steps for s in step.emitted]
        return StanleyDecomposition(self.target, self.ideal, tuple(slabs))

    @property
    def result(self) -> StanleyDecomposition:
        return self.replay()

    def to_text(self) -> str:
        lines = [f"# {self.target} of n={self.ideal.n}; {self.ideal}"]
        for step in self.steps:
            prefix = format_monomial(step.prefix)
            lines.append(f"{step.rule.value}: ideal ({step.ideal}) prefix {prefix} | {step.detail}")
            lines.extend(f"  + {format_slab(s)}" for s in step.emitted)
        return "\n".join(lines) + "\n"


def _all_vars(n: int) -> frozenset[int]:
    return frozenset(range(n))


def _shift(slabs, w: Monomial):
    if w.is_one():
        return list(slabs)
    return [Slab(s.origin * w, s.free_vars) for s in slabs]


def _require_valid(d: StanleyDecomposition, what: str) -> None:
    report = verify(d)
    if not report.valid:
        raise ConstructionError(f"{what} is not a valid Stanley decomposition ({report.reason}: {report.violation})")


# --- building blocks -------------------------------------------------------

def _principal_complement_slabs(v: Monomial) -> list[Slab]:
    n = len(v)
    slabs = []
    prefix = [0] * n
    for j, a in enumerate(v):
        if a == 0:
            continue
        free = _all_vars(n) - {j}
        for b in range(a):
            e = list(prefix)
            e[j] = b
            slabs.append(Slab(Monomial._raw(tuple(e)), free))
        prefix[j] = a
    return slabs


def principal_complement(v: Monomial, n: int | None = None) -> StanleyDecomposition:
    """Decomposition of S/(v): monomials not divisible by v, all slabs of dimension n-1.

    The slab for "first failing variable x_j at degree b" is
    x_{j1}^{a1}...x_j^b K[all but x_j].
    """
    n = len(v) if n is None else n
    if len(v) != n:
        raise ValueError(f"dimension mismatch: {len(v)} vs {n}")
    if v.is_one():
        raise ConstructionError("S/(1) is zero; the complement of the unit ideal is empty")
    return StanleyDecomposition("quotient", MonomialIdeal(n, (v,)), tuple(_principal_complement_slabs(v)))


def _janet_slabs(ideal: MonomialIdeal, order: Sequence[int]) -> list[Slab]:
    n = ideal.n
    out: list[Slab] = []

    # Work over the full n coordinates; ``remaining`` lists the variables not yet split.
    def rec(gens: tuple, remaining: tuple, prefix: tuple):
        if any(not any(g[j] for j in remaining) for g in gens):
            return  # unit ideal in the remaining ring
        if not gens:
            out.append(Slab(Monomial._raw(prefix), frozenset(remaining)))
            return
        var = next(j for j in order if j in remaining and any(g[j] for g in gens))
        q = max(g[var] for g in gens)
        rest = tuple(j for j in remaining if j != var)
        for j in range(q + 1):
            layer = [g for g in gens if g[var] <= j]
            sliced = minimalize(
                (tuple(0 if i == var else g[i] for i in range(n)) for g in layer), n
            ).gens
            p = list(prefix)
            p[var] = j
            if j < q:
                rec(sliced, rest, tuple(p))
            else:
                start = len(out)
                rec(sliced, rest, tuple(p))
                for k in range(start, len(out)):
                    out[k] = Slab(out[k].origin, out[k].free_vars | {var})

    rec(tuple(tuple(g) for g in ideal.gens), tuple(range(n)), (0,) * n)
    return out


def janet_quotient(ideal: MonomialIdeal, var_order: Sequence[int] | None = None) -> StanleyDecomposition:
    """Decomposition of S/I by splitting on powers of one variable at a time.

    ``var_order`` is a priority list of 0-based variables; at each level the
    first one that still occurs in the ideal is split.  The default prefers
    the highest index.  The result has Stanley depth at least n - g(I).
    The unit ideal gives the empty decomposition of the zero module.
    """
    if ideal.is_unit():
        return StanleyDecomposition("quotient", ideal, ())
    order = list(var_order) if var_order is not None else list(range(ideal.n - 1, -1, -1))
    if sorted(order) != list(range(ideal.n)):
        order += [j for j in range(ideal.n - 1, -1, -1) if j not in order]
    return StanleyDecomposition("quotient", ideal, tuple(_janet_slabs(ideal, order)))


def transfer_quotient_up(v: Monomial, d: StanleyDecomposition) -> StanleyDecomposition:
    """From a decomposition of S/I' build one of S/(v I')."""
    if d.target != "quotient":
        raise ConstructionError("transfer_quotient_up needs a quotient decomposition")
    if len(v) != d.n:
        raise ConstructionError(f"multiplier has dimension {len(v)}, decomposition has {d.n}")
    if v.is_one():
        raise ConstructionError("multiplier must not be 1")
    _require_valid(d, "input decomposition")
    slabs = _principal_complement_slabs(v) + _shift(d.slabs, v)
    return StanleyDecomposition("quotient", d.ideal.times(v), tuple(slabs))


def _down_slabs(v: Monomial, slabs) -> list[Slab]:
    out = []
    for s in slabs:
        # s meets (v) iff deg_j(v) <= deg_j(origin) off the free variables
        if all(v[j] <= s.origin[j] for j in range(len(v)) if j not in s.free_vars):
            g = s.origin.gcd(v)
            out.append(Slab(s.origin / g, s.free_vars))
    return out


def transfer_quotient_down(v: Monomial, d: StanleyDecomposition) -> StanleyDecomposition:
    """From a decomposition of S/(v I') build one of S/I'.

    Keeps the slabs u K[Z] that meet (v) and replaces u by u / gcd(u, v).
    """
    if d.target != "quotient":
        raise ConstructionError("transfer_quotient_down needs a quotient decomposition")
    if len(v) != d.n:
        raise ConstructionError(f"multiplier has dimension {len(v)}, decomposition has {d.n}")
    _require_valid(d, "input decomposition")
    return StanleyDecomposition("quotient", colon(d.ideal, v), tuple(_down_slabs(v, d.slabs)))


def extend_variables(d: StanleyDecomposition, variables: Sequence[int], n: int) -> StanleyDecomposition:
    """Re-embed a decomposition over K[variables] into n variables.

    Every variable outside ``variables`` becomes free in every slab, so the
    Stanley depth grows by exactly n - len(variables).
    """
    vs = sorted(set(variables))
    if len(vs) != d.n:
        raise ValueError(f"{len(vs)} target variables for a decomposition in {d.n} variables")
    if vs and (vs[0] < 0 or vs[-1] >= n):
        raise ValueError(f"variables {vs} out of range for n={n}")
    extra = frozenset(range(n)) - frozenset(vs)
    slabs = [
        Slab(embed(s.origin, vs, n), frozenset(vs[j] for j in s.free_vars) | extra) for s in d.slabs
    ]
    ideal = MonomialIdeal(n, tuple(sorted((embed(g, vs, n) for g in d.ideal.gens), reverse=True)))
    return StanleyDecomposition(d.target, ideal, tuple(slabs))


def _two_var_ideal_slabs(gens: Sequence[tuple[int, int]]) -> list[Slab]:
    """Ideal of K[x, y] sliced by powers of y; every slab keeps x free."""
    pts = sorted(gens)  # x-degree ascending, hence y-degree descending
    a1, b1 = pts[0]
    slabs = [Slab(Monomial._raw((a1, b1)), frozenset({0, 1}))]
    for (_, b_hi), (a, b) in zip(pts, pts[1:]):
        for beta in range(b, b_hi):
            slabs.append(Slab(Monomial._raw((a, beta)), frozenset({0})))
    return slabs


def _small_reduced_slabs(ideal: MonomialIdeal, quotient: bool) -> tuple[list[Slab], str]:
    """Slabs for a gcd-free non-principal ideal with g = 2 or c = 2."""
    n = ideal.n
    st = stats(ideal)
    if st.g == 2 and not quotient:
        u1, u2 = ideal.gens
        slabs = [Slab(u1, _all_vars(n))] + _shift(_principal_complement_slabs(u1), u2)
        return slabs, f"g=2: {format_monomial(u1)} S + {format_monomial(u2)} (S/({format_monomial(u1)}))"
    if st.c == 2:
        zs = sorted(st.supp)
        sub = restrict(ideal, zs)
        if quotient:
            inner = janet_quotient(sub)
        else:
            inner = StanleyDecomposition("ideal", sub, tuple(_two_var_ideal_slabs([tuple(g) for g in sub.gens])))
        ext = extend_variables(inner, zs, n)
        vars_text = ",".join(f"x{j + 1}" for j in zs)
        return list(ext.slabs), f"c=2: decomposed in K[{vars_text}] and extended"
    if st.g == 2:
        return list(janet_quotient(ideal).slabs), "g=2: Janet splitting of a complete intersection"
    raise ConstructionError("small_ideal needs c(I) = 2 or g(I) = 2")


def small_ideal(ideal: MonomialIdeal, quotient: bool = False) -> StanleyDecomposition:
    """Decomposition of I (Stanley depth n-1) or, with ``quotient``, of S/I (n-2).

    Requires I non-principal with c(I) = 2 or g(I) = 2.
    """
    if ideal.is_zero() or ideal.is_principal():
        raise ConstructionError("small_ideal needs a non-principal ideal")
    v, reduced = gcd_part(ideal)
    st = stats(ideal)
    if not (st.c == 2 or st.g == 2):
        raise ConstructionError(f"small_ideal needs c(I) = 2 or g(I) = 2 (got c={st.c}, g={st.g})")
    slabs, _ = _small_reduced_slabs(reduced, quotient)
    if quotient:
        if not v.is_one():
            slabs = _principal_complement_slabs(v) + _shift(slabs, v)
        return StanleyDecomposition("quotient", ideal, tuple(slabs))
    return StanleyDecomposition("ideal", ideal, tuple(_shift(slabs, v)))


def _pairwise_coprime(gens) -> bool:
    sups = [g.support() for g in gens]
    return all(not (a & b) for i, a in enumerate(sups) for b in sups[i + 1 :])


def _ci3_slabs(ideal: MonomialIdeal) -> list[Slab]:
    u1, u2, u3 = ideal.gens
    n = ideal.n
    # boolean intervals [{1},{1,2}], [{2},{2,3}], [{3},{1,3}], [{1,2,3},{1,2,3}]
    return (
        _shift(_principal_complement_slabs(u3), u1)
        + _shift(_principal_complement_slabs(u1), u2)
        + _shift(_principal_complement_slabs(u2), u3)
        + [Slab(u1 * u2 * u3, _all_vars(n))]
    )


def ci3(ideal: MonomialIdeal) -> StanleyDecomposition:
    """Decomposition of a three-generator complete intersection with Stanley depth n-1."""
    if ideal.g != 3:
        raise ConstructionError(f"ci3 needs exactly three generators (got {ideal.g})")
    if not _pairwise_coprime(ideal.gens):
        raise ConstructionError("ci3 needs pairwise coprime generators")
    return StanleyDecomposition("ideal", ideal, tuple(_ci3_slabs(ideal)))


def _split_variable(ideal: MonomialIdeal) -> tuple[int, int, Monomial]:
    """Smallest variable dividing exactly two generators, the smaller degree, the third generator."""
    for j in range(ideal.n):
        hits = [g for g in ideal.gens if g[j] > 0]
        if len(hits) == 2:
            other = next(g for g in ideal.gens if g[j] == 0)
            return j, min(h[j] for h in hits), other
    raise ConstructionError("no variable divides exactly two generators")


# --- recursive constructions ------------------------------------------------

def three_gen_ideal(ideal: MonomialIdeal) -> ConstructionTrace:
    """Decomposition of I with g(I) = 3 and Stanley depth n - 1.

    Splits off the layers below x^a of a variable shared by two generators
    and recurses on (I : x^a) until the ideal is a complete intersection or
    has at most two generators.
    """
    if ideal.g != 3:
        raise ConstructionError(f"three_gen_ideal needs g(I) = 3 (got {ideal.g})")
    trace = ConstructionTrace("ideal", ideal)
    n = ideal.n
    current, prefix = ideal, Monomial.one(n)
    while True:
        if current.is_principal():
            u = current.gens[0]
            trace.emit(Rule.SMALL_CASE, current, prefix, "principal", [Slab(u * prefix, _all_vars(n))])
            break
        v, reduced = gcd_part(current)
        if not v.is_one():
            trace.emit(Rule.GCD_REDUCE, current, prefix, f"I = {format_monomial(v)} * ({reduced})")
            current, prefix = reduced, prefix * v
        if current.g == 2:
            slabs, detail = _small_reduced_slabs(current, quotient=False)
            trace.emit(Rule.SMALL_CASE, current, prefix, detail, _shift(slabs, prefix))
            break
        if _pairwise_coprime(current.gens):
            trace.emit(Rule.CI_BASE, current, prefix, "complete intersection", _shift(_ci3_slabs(current), prefix))
            break
        j, a, third = _split_variable(current)
        xa = Monomial.var(j, n, a)
        free = _all_vars(n) - {j}
        layers = [Slab(third * Monomial.var(j, n, b) * prefix, free) for b in range(a)]
        trace.emit(
            Rule.LEMMA13_SPLIT, current, prefix,
            f"split on x{j + 1}^{a}: layers x{j + 1}^b * {format_monomial(third)} for b < {a}", layers,
        )
        current, prefix = colon(current, xa), prefix * xa
    return trace


def three_gen_quotient(ideal: MonomialIdeal) -> ConstructionTrace:
    """Decomposition of S/I for g(I) <= 3.

    Stanley depth is at least n - 2 when the recursion never meets a
    complete intersection, and at least n - 3 always.
    """
    if ideal.g > 3:
        raise ConstructionError(f"three_gen_quotient needs g(I) <= 3 (got {ideal.g})")
    if ideal.is_unit():
        raise ConstructionError("S/I is zero for the unit ideal")
    trace = ConstructionTrace("quotient", ideal)
    n = ideal.n
    current, prefix = ideal, Monomial.one(n)
    while True:
        if current.is_unit():
            trace.emit(Rule.SMALL_CASE, current, prefix, "unit ideal: nothing left")
            break
        if current.g <= 1:
            if current.is_zero():
                slabs = [Slab(prefix, _all_vars(n))]
            else:
                slabs = _shift(_principal_complement_slabs(current.gens[0]), prefix)
            trace.emit(Rule.SMALL_CASE, current, prefix, "principal complement", slabs)
            break
        v, reduced = gcd_part(current)
        if not v.is_one():
            trace.emit(
                Rule.TRANSFER, current, prefix,
                f"S/I = (S/({format_monomial(v)})) + {format_monomial(v)} * S/({reduced})",
                _shift(_principal_complement_slabs(v), prefix),
            )
            current, prefix = reduced, prefix * v
        if current.g == 2 or _pairwise_coprime(current.gens):
            slabs = _janet_slabs(current, list(range(n - 1, -1, -1)))
            trace.emit(Rule.JANET_SPLIT, current, prefix, f"Janet splitting (g={current.g})", _shift(slabs, prefix))
            break
        j, a, third = _split_variable(current)
        xa = Monomial.var(j, n, a)
        inner = [Slab(s.origin, s.free_vars - {j}) for s in _principal_complement_slabs(third)]
        layers = []
        for b in range(a):
            layers += _shift(inner, Monomial.var(j, n, b) * prefix)
        trace.emit(
            Rule.LEMMA13_SPLIT, current, prefix,
            f"split on x{j + 1}^{a}: layers x{j + 1}^b * S'/({format_monomial(third)}) for b < {a}", layers,
        )
        current, prefix = colon(current, xa), prefix * xa
    return trace


def saturated_3var(ideal: MonomialIdeal) -> ConstructionTrace:
    """Decomposition of a saturated non-principal ideal of K[x1,x2,x3], Stanley depth 2.

    Peels off the x_j = 0 layer for a j whose restriction I ∩ K[Z_j] is
    saturated (hence principal), then recurses on (I : x_j).
    """
    if ideal.n != 3:
        raise ConstructionError(f"saturated_3var needs n = 3 (got {ideal.n})")
    if ideal.is_zero() or ideal.is_principal():
        raise ConstructionError("saturated_3var needs a non-principal ideal")
    if not is_saturated(ideal):
        raise ConstructionError("saturated_3var needs a saturated ideal")
    trace = ConstructionTrace("ideal", ideal)
    n = 3
    current, prefix = ideal, Monomial.one(n)
    while True:
        if current.is_principal():
            u = current.gens[0]
            trace.emit(Rule.SMALL_CASE, current, prefix, "principal", [Slab(u * prefix, _all_vars(n))])
            break
        v, reduced = gcd_part(current)
        if not v.is_one():
            trace.emit(Rule.GCD_REDUCE, current, prefix, f"I = {format_monomial(v)} * ({reduced})")
            current, prefix = reduced, prefix * v
        st = stats(current)
        if st.c <= 2 or st.g <= 2:
            slabs, detail = _small_reduced_slabs(current, quotient=False)
            trace.emit(Rule.SMALL_CASE, current, prefix, detail, _shift(slabs, prefix))
            break
        for j in range(n):
            zs = [k for k in range(n) if k != j]
            layer = restrict(current, zs)
            if is_saturated(layer):
                break
        else:
            raise ConstructionError(f"no saturated coordinate restriction for ({current})")
        if not layer.is_principal():
            raise ConstructionError(f"saturated restriction ({layer}) is not principal")
        u = embed(layer.gens[0], zs, n)
        trace.emit(
            Rule.LEMMA13_SPLIT, current, prefix,
            f"I ∩ K[{','.join(f'x{k + 1}' for k in zs)}] = ({format_monomial(u)}) is saturated; recurse on (I : x{j + 1})",
            [Slab(u * prefix, frozenset(zs))],
        )
        xj = Monomial.var(j, n)
        current, prefix = colon(current, xj), prefix * xj
    return trace


def decompose(ideal: MonomialIdeal, target: str = "ideal", strategy: str = "auto") -> ConstructionTrace:
    """Dispatch to a construction by name.

    ``auto`` tries, in order: principal, small (c <= 2 or g <= 2), three-gen
    (g = 3), saturated3 (n = 3 and saturated), and falls back to Janet
    splitting (quotient) or its ideal-side complement.
    """
    if target not in ("ideal", "quotient"):
        raise ValueError(f"unknown target {target!r}")
    if strategy == "auto":
        strategy = _auto_strategy(ideal, target)
    if strategy == "janet":
        if target == "quotient":
            d = janet_quotient(ideal)
            trace = ConstructionTrace("quotient", ideal)
            trace.emit(Rule.JANET_SPLIT, ideal, Monomial.one(ideal.n), "Janet splitting", d.slabs)
            return trace
        return _janet_ideal(ideal)
    if strategy == "principal":
        return _principal(ideal, target)
    if strategy == "small":
        d = small_ideal(ideal, quotient=(target == "quotient"))
        trace = ConstructionTrace(target, ideal)
        trace.emit(Rule.SMALL_CASE, ideal, Monomial.one(ideal.n), f"c={stats(ideal).c}, g={ideal.g}", d.slabs)
        return trace
    if strategy == "three-gen":
        return three_gen_ideal(ideal) if target == "ideal" else three_gen_quotient(ideal)
    if strategy == "saturated3":
        if target != "ideal":
            raise ConstructionError("saturated3 decomposes the ideal, not the quotient")
        return saturated_3var(ideal)
    raise ValueError(f"unknown strategy {strategy!r}")


STRATEGIES = ("auto", "janet", "three-gen", "saturated3", "small")


def _auto_strategy(ideal: MonomialIdeal, target: str) -> str:
    if ideal.is_zero() or ideal.is_unit():
        return "janet"
    if ideal.is_principal():
        return "principal"
    st = stats(ideal)
    if st.c <= 2 or st.g <= 2:
        return "small"
    if st.g == 3:
        return "three-gen"
    if target == "ideal" and ideal.n == 3 and is_saturated(ideal):
        return "saturated3"
    return "janet"


def _principal(ideal: MonomialIdeal, target: str) -> ConstructionTrace:
    if not ideal.is_principal():
        raise ConstructionError("principal strategy needs a principal ideal")
    trace = ConstructionTrace(target, ideal)
    u = ideal.gens[0]
    one = Monomial.one(ideal.n)
    if target == "ideal":
        trace.emit(Rule.SMALL_CASE, ideal, one, "principal", [Slab(u, _all_vars(ideal.n))])
    elif u.is_one():
        trace.emit(Rule.SMALL_CASE, ideal, one, "unit ideal: S/I = 0")
    else:
        trace.emit(Rule.SMALL_CASE, ideal, one, "principal complement", _principal_complement_slabs(u))
    return trace


def _janet_ideal(ideal: MonomialIdeal) -> ConstructionTrace:
    """Ideal-side Janet splitting: I = (I ∩ S'[x]) layers by powers of the split variable.

    Layers j < q are ideals of one variable fewer; the top layer keeps the
    split variable free.  Gives Stanley depth at least 1 for nonzero I.
    """
    n = ideal.n
    trace = ConstructionTrace("ideal", ideal)
    out: list[Slab] = []

    def rec(gens: tuple, remaining: tuple, prefix: tuple, extra: frozenset):
        if not gens:
            return
        if any(not any(g[j] for j in remaining) for g in gens):
            out.append(Slab(Monomial._raw(prefix), frozenset(remaining) | extra))
            return
        var = next(j for j in reversed(remaining) if any(g[j] for g in gens))
        q = max(g[var] for g in gens)
        rest = tuple(j for j in remaining if j != var)
        for j in range(q + 1):
            sliced = minimalize(
                (tuple(0 if i == var else g[i] for i in range(n)) for g in gens if g[var] <= j), n
            ).gens
            p = list(prefix)
            p[var] = j
            rec(sliced, rest, tuple(p), extra | {var} if j == q else extra)

    rec(tuple(tuple(g) for g in ideal.gens), tuple(range(n)), (0,) * n, frozenset())
    trace.emit(Rule.JANET_SPLIT, ideal, Monomial.one(n), "Janet splitting of the ideal", out)
    return trace
