"""Seeded random ideals and property campaigns.

Each campaign draws ``samples`` instances from a seed and checks one claim
with constructions and oracles.  Sample ``i`` is generated from its own
RNG seeded with ``f"{seed}:{i}"``, so any sample can be regenerated alone and
parallel runs produce the same report.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .constructions import (
    janet_quotient,
    saturated_3var,
    small_ideal,
    three_gen_ideal,
    three_gen_quotient,
    transfer_quotient_down,
    transfer_quotient_up,
)
from .decomposition import Slab, StanleyDecomposition, verify
from .monomial import (
    Monomial,
    MonomialIdeal,
    embed,
    gcd_part,
    intersect,
    is_saturated,
    minimalize,
    parse_ideal,
    parse_monomial,
    power,
    restrict,
    stats,
)
from .oracles import BudgetExceeded, depth_exact, depth_zero, sdepth_at_least, sdepth_exact

PROPERTIES = (
    "prop11", "prop12", "prop15", "prop16", "thm14", "thm21", "cor22",
    "cor23", "thm24", "thm26", "lemma31", "prop32", "cor33", "obs34",
)
RETRY_CAP = 1000


class SamplingError(RuntimeError):
    pass


class Skip(Exception):
    """Sample outside the property's scope or budget; never counted as a pass."""


def random_monomial(rng: random.Random, n: int, max_degree: int, allow_one: bool = False) -> Monomial:
    while True:
        e = tuple(rng.randint(0, max_degree) for _ in range(n))
        if allow_one or any(e):
            return Monomial(e)


def random_ideal(seed, n: int, max_degree: int, g_target: int) -> MonomialIdeal:
    """Uniform draws from the degree box (identity excluded), retried until g(I) = g_target."""
    if not 1 <= n <= 6 or not 1 <= max_degree <= 6:
        raise ValueError("random_ideal needs 1 <= n <= 6 and 1 <= max_degree <= 6")
    rng = random.Random(seed)
    for _ in range(RETRY_CAP):
        ideal = minimalize((random_monomial(rng, n, max_degree) for _ in range(g_target)), n)
        if ideal.g == g_target:
            return ideal
    raise SamplingError(f"no ideal with {g_target} generators in {RETRY_CAP} draws (n={n}, max_degree={max_degree})")


def random_saturated_3var(rng: random.Random, max_degree: int = 3, non_principal: bool = True) -> MonomialIdeal:
    """Saturated ideal of K[x1,x2,x3]: an intersection of non-maximal primary components."""
    n = 3
    for _ in range(RETRY_CAP):
        comps = []
        for j in range(n):
            if rng.random() < 0.7:
                a, b = [k for k in range(n) if k != j]
                p, q = rng.randint(1, max_degree), rng.randint(1, max_degree)
                gens = [Monomial.var(a, n, p), Monomial.var(b, n, q)]
                if p > 1 and q > 1 and rng.random() < 0.5:
                    e = [0] * n
                    e[a], e[b] = rng.randint(1, p - 1), rng.randint(1, q - 1)
                    gens.append(Monomial(e))
                comps.append(minimalize(gens, n))
            if rng.random() < 0.25:
                comps.append(minimalize([Monomial.var(j, n, rng.randint(1, max_degree))], n))
        if not comps:
            continue
        ideal = comps[0]
        for c in comps[1:]:
            ideal = intersect(ideal, c)
        if rng.random() < 0.2:
            ideal = ideal.times(random_monomial(rng, n, 1))
        if non_principal and ideal.is_principal():
            continue
        return ideal
    raise SamplingError("could not draw a saturated ideal")


# --- campaign plumbing -------------------------------------------------------

@dataclass(frozen=True)
class CampaignSpec:
    property_id: str
    samples: int = 100
    seed: int = 0
    ranges: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.property_id not in PROPERTIES:
            raise ValueError(f"unknown property {self.property_id!r}; choose from {', '.join(PROPERTIES)}")
        merged = dict(DEFAULT_RANGES[self.property_id])
        merged.update(self.ranges or {})
        object.__setattr__(self, "ranges", merged)


@dataclass
class CampaignReport:
    property: str
    seed: int
    ranges: dict
    samples: int
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "property": self.property,
            "seed": self.seed,
            "n": list(self.ranges["n"]),
            "ranges": {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(self.ranges.items())},
            "samples": self.samples,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
            "elapsed_ms": self.elapsed_ms if include_timing else 0,
        }
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=False) + "\n"


DEFAULT_RANGES: dict[str, dict] = {
    "prop11": {"n": (1, 3), "max_degree": 3, "g": (1, 4)},
    "prop12": {"n": (1, 4), "max_degree": 3, "g": (1, 4)},
    "prop15": {"n": (1, 3), "max_degree": 3, "g": (1, 4)},
    "prop16": {"n": (2, 4), "max_degree": 3, "g": (2, 4)},
    "thm14": {"n": (1, 3), "max_degree": 2, "g": (1, 3)},
    "thm21": {"n": (1, 3), "max_degree": 3, "g": (1, 4)},
    "cor22": {"n": (1, 3), "max_degree": 3, "g": (1, 4)},
    "cor23": {"n": (2, 3), "max_degree": 3, "g": (1, 2)},
    "thm24": {"n": (2, 4), "max_degree": 3, "g": (3, 3)},
    "thm26": {"n": (1, 3), "max_degree": 3, "g": (1, 3)},
    "lemma31": {"n": (3, 3), "max_degree": 3, "g": (1, 6)},
    "prop32": {"n": (3, 3), "max_degree": 3, "g": (1, 6)},
    "cor33": {"n": (3, 3), "max_degree": 3, "g": (1, 4)},
    "obs34": {"n": (4, 4), "max_degree": 3, "g": (1, 6)},
}

ORACLE_MAX_N = 3


def _violation(expected, actual):
    return {"expected": expected, "actual": actual}


def _draw_standard(rng: random.Random, ranges: dict) -> MonomialIdeal:
    lo, hi = ranges["n"]
    glo, ghi = ranges["g"]
    for _ in range(RETRY_CAP):
        n = rng.randint(lo, hi)
        g = rng.randint(glo, ghi)
        try:
            return random_ideal(rng.getrandbits(64), n, ranges["max_degree"], g)
        except SamplingError:
            continue
    raise SamplingError("no admissible (n, g) pair in the ranges")


# Each checker takes the drawn instance and returns None (holds) or a violation dict.

def _check_prop11(ideal):
    n, g = ideal.n, ideal.g
    bound = max(1, n - g + 1)
    value = sdepth_exact("ideal", ideal).value
    return None if value >= bound else _violation(f"sdepth(I) >= {bound}", value)


def _check_prop12(ideal):
    d = janet_quotient(ideal)
    rep = verify(d)
    bound = ideal.n - ideal.g
    if not rep.valid:
        return _violation("valid decomposition", f"invalid: {rep.reason} at {rep.violation}")
    return None if rep.sdepth >= bound else _violation(f"sdepth(S/I) >= {bound}", rep.sdepth)


def _check_prop15(ideal):
    if ideal.is_principal():
        raise Skip("principal: the gcd reduction leaves S itself")
    c = stats(ideal).c
    q = sdepth_exact("quotient", ideal).value
    i = sdepth_exact("ideal", ideal).value
    if q < ideal.n - c or i < ideal.n - c + 1:
        return _violation(f"sdepth(S/I) >= {ideal.n - c}, sdepth(I) >= {ideal.n - c + 1}", [q, i])
    return None


def _draw_prop16(rng, ranges):
    lo, hi = ranges["n"]
    n = rng.randint(lo, hi)
    if rng.random() < 0.5:
        return random_ideal(rng.getrandbits(64), n, ranges["max_degree"], 2)
    # c(I) = 2: a gcd-free ideal of two variables, embedded and scaled
    zs = sorted(rng.sample(range(n), 2))
    for _ in range(RETRY_CAP):
        sub = random_ideal(rng.getrandbits(64), 2, ranges["max_degree"], rng.randint(2, min(3, ranges["g"][1])))
        if gcd_part(sub).v.is_one():
            break
    else:
        raise SamplingError("no gcd-free two-variable ideal")
    ideal = MonomialIdeal(n, tuple(sorted((embed(g, zs, n) for g in sub.gens), reverse=True)))
    if rng.random() < 0.3:
        ideal = ideal.times(random_monomial(rng, n, 1))
    return ideal


def _check_prop16(ideal):
    n = ideal.n
    st = stats(ideal)
    if ideal.is_principal() or not (st.c == 2 or st.g == 2):
        raise Skip("outside c = 2 / g = 2")
    di, dq = small_ideal(ideal), small_ideal(ideal, quotient=True)
    ri, rq = verify(di), verify(dq)
    if not (ri.valid and rq.valid):
        return _violation("valid decompositions", [ri.reason, rq.reason])
    if ri.sdepth != n - 1 or rq.sdepth != n - 2:
        return _violation([n - 1, n - 2], [ri.sdepth, rq.sdepth])
    if n <= ORACLE_MAX_N:
        oi = sdepth_exact("ideal", ideal).value
        oq = sdepth_exact("quotient", ideal).value
        if (oi, oq) != (n - 1, n - 2):
            return _violation([n - 1, n - 2], [oi, oq])
    return None


def _draw_thm14(rng, ranges):
    ideal = _draw_standard(rng, ranges)
    v = random_monomial(rng, ideal.n, ranges["max_degree"])
    return (v, ideal)


def _check_thm14(pair):
    v, base = pair
    big = base.times(v)
    q_small, q_big = sdepth_exact("quotient", base).value, sdepth_exact("quotient", big).value
    i_small, i_big = sdepth_exact("ideal", base).value, sdepth_exact("ideal", big).value
    if q_small != q_big or i_small != i_big:
        return _violation([q_small, i_small], [q_big, i_big])
    d = janet_quotient(base)
    up = transfer_quotient_up(v, d)
    down = transfer_quotient_down(v, up)
    ru, rd = verify(up), verify(down)
    if not (ru.valid and rd.valid) or rd.sdepth != d.sdepth() or down.ideal != base:
        return _violation(f"round trip keeps sdepth {d.sdepth()}", [ru.valid, rd.valid, rd.sdepth])
    return None


def _check_thm21(ideal):
    zero = not sdepth_at_least("quotient", ideal, 1)
    nonsat = depth_zero(ideal)
    depth0 = depth_exact(ideal) == 0
    if not (zero == nonsat == depth0):
        return _violation("sdepth(S/I)=0 <=> I != I^sat <=> depth(S/I)=0",
                          {"sdepth_zero": zero, "not_saturated": nonsat, "depth_zero": depth0})
    return None


def _check_cor22(ideal):
    # per power: sdepth(S/I^k) = 0 <=> I^k not saturated; across powers: same answer as k = 1
    seen = {}
    for k in (1, 2, 3):
        pk = power(ideal, k)
        seen[str(k)] = {"sdepth_zero": not sdepth_at_least("quotient", pk, 1), "not_saturated": depth_zero(pk)}
    per_power = all(v["sdepth_zero"] == v["not_saturated"] for v in seen.values())
    across = len({v["sdepth_zero"] for v in seen.values()}) == 1
    if per_power and across:
        return None
    return _violation("sdepth(S/I^k)=0 <=> I^k not saturated, and the same for k = 1, 2, 3", seen)


def _draw_cor23(rng, ranges):
    lo, hi = ranges["n"]
    n = rng.randint(lo, hi)
    deg = ranges["max_degree"]
    gens = [Monomial.var(j, n, rng.randint(1, deg)) for j in range(n - 1)]
    for _ in range(rng.randint(*ranges["g"])):
        e = [rng.randint(0, deg) for _ in range(n)]
        e[n - 1] = rng.randint(1, deg)
        gens.append(Monomial(e))
    return minimalize(gens, n)


def _check_cor23(ideal):
    st = stats(ideal)
    if st.c != ideal.n or not set(range(ideal.n - 1)) <= st.pure_power_vars:
        raise Skip("precondition c(I) = n and (x1..x_{n-1}) in rad(I) fails")
    if sdepth_at_least("quotient", ideal, 1):
        return _violation("sdepth(S/I) = 0", ">= 1")
    return None


def _check_thm24(ideal):
    n = ideal.n
    d = three_gen_ideal(ideal).result
    rep = verify(d)
    if not rep.valid:
        return _violation("valid decomposition", f"invalid: {rep.reason} at {rep.violation}")
    if rep.sdepth != n - 1:
        return _violation(n - 1, rep.sdepth)
    if n <= ORACLE_MAX_N:
        value = sdepth_exact("ideal", ideal).value
        if value != n - 1:
            return _violation(n - 1, value)
    return None


def constructive_ideal(ideal: MonomialIdeal) -> StanleyDecomposition:
    """Best construction for I with g(I) <= 3."""
    if ideal.is_principal():
        return StanleyDecomposition("ideal", ideal, (Slab(ideal.gens[0], frozenset(range(ideal.n))),))
    if ideal.g == 2:
        return small_ideal(ideal)
    return three_gen_ideal(ideal).result


def _check_thm26(ideal):
    depth = depth_exact(ideal)
    dq = three_gen_quotient(ideal).result
    di = constructive_ideal(ideal)
    rq, ri = verify(dq), verify(di)
    if not (rq.valid and ri.valid):
        return _violation("valid decompositions", [rq.reason, ri.reason])
    if rq.sdepth < depth or ri.sdepth < depth + 1:
        return _violation({"sdepth(S/I) >=": depth, "sdepth(I) >=": depth + 1},
                          {"constructive_quotient": rq.sdepth, "constructive_ideal": ri.sdepth})
    if ideal.n <= ORACLE_MAX_N:
        oq = sdepth_exact("quotient", ideal).value
        oi = sdepth_exact("ideal", ideal).value
        if oq < depth or oi < depth + 1:
            return _violation({"sdepth(S/I) >=": depth, "sdepth(I) >=": depth + 1},
                              {"oracle_quotient": oq, "oracle_ideal": oi})
    return None


def _draw_saturated(rng, ranges):
    return random_saturated_3var(rng, ranges["max_degree"])


def _check_lemma31(ideal):
    reduced = gcd_part(ideal).I_prime
    if reduced.is_principal():
        raise Skip("gcd-free part is principal")
    if not is_saturated(reduced):
        return _violation("I' saturated", False)
    hits = [j + 1 for j in range(3) if is_saturated(restrict(reduced, [k for k in range(3) if k != j]))]
    return None if hits else _violation("some I_j saturated", "none")


def _check_prop32(ideal):
    if not is_saturated(ideal) or ideal.is_principal():
        raise Skip("not a saturated non-principal ideal")
    d = saturated_3var(ideal).result
    rep = verify(d)
    if not rep.valid:
        return _violation("valid decomposition", f"invalid: {rep.reason} at {rep.violation}")
    value = sdepth_exact("ideal", ideal).value
    if rep.sdepth != 2 or value != 2:
        return _violation(2, {"construction": rep.sdepth, "oracle": value})
    return None


def _draw_cor33(rng, ranges):
    return _draw_standard(rng, ranges)


def _check_cor33(ideal):
    i = sdepth_exact("ideal", ideal).value
    q = sdepth_exact("quotient", ideal).value
    return None if i >= q + 1 else _violation(f"sdepth(I) >= {q + 1}", i)


def obs34_ideal() -> MonomialIdeal:
    comps = [
        parse_ideal("n=4; x2^3, x3^2, x4"),
        parse_ideal("n=4; x1^3, x3, x4^2"),
        parse_ideal("n=4; x1^2, x2, x4^3"),
        parse_ideal("n=4; x1, x2^2, x3^3"),
    ]
    ideal = comps[0]
    for c in comps[1:]:
        ideal = intersect(ideal, c)
    return ideal


def _draw_obs34(rng, ranges):
    return obs34_ideal()


def _check_obs34(ideal):
    sat = is_saturated(ideal)
    restricted = [is_saturated(restrict(ideal, [j for j in range(4) if j != k])) for k in range(4)]
    if sat and not any(restricted):
        return None
    return _violation({"I saturated": True, "I_k saturated": [False] * 4},
                      {"I saturated": sat, "I_k saturated": restricted})


@dataclass(frozen=True)
class _Property:
    draw: Callable
    check: Callable
    fixed: bool = False


_PROPS: dict[str, _Property] = {
    "prop11": _Property(_draw_standard, _check_prop11),
    "prop12": _Property(_draw_standard, _check_prop12),
    "prop15": _Property(_draw_standard, _check_prop15),
    "prop16": _Property(_draw_prop16, _check_prop16),
    "thm14": _Property(_draw_thm14, _check_thm14),
    "thm21": _Property(_draw_standard, _check_thm21),
    "cor22": _Property(_draw_standard, _check_cor22),
    "cor23": _Property(_draw_cor23, _check_cor23),
    "thm24": _Property(_draw_standard, _check_thm24),
    "thm26": _Property(_draw_standard, _check_thm26),
    "lemma31": _Property(_draw_saturated, _check_lemma31),
    "prop32": _Property(_draw_saturated, _check_prop32),
    "cor33": _Property(_draw_cor33, _check_cor33),
    "obs34": _Property(_draw_obs34, _check_obs34, fixed=True),
}


def instance_text(instance) -> str:
    if isinstance(instance, tuple):
        v, ideal = instance
        return f"{ideal.to_text()} | v={v}"
    return instance.to_text()


def parse_instance(property_id: str, text: str):
    """Inverse of :func:`instance_text`, used to replay a reported violation."""
    if property_id == "thm14":
        body, _, vpart = text.partition("|")
        ideal = parse_ideal(body)
        v = vpart.strip()
        if not v.startswith("v="):
            raise ValueError("thm14 instances look like '<ideal> | v=<monomial>'")
        return (parse_monomial(v[2:], ideal.n), ideal)
    return parse_ideal(text)


def check_instance(property_id: str, instance) -> dict | None:
    """Evaluate one property on one instance; raises :class:`Skip` when out of scope."""
    try:
        return _PROPS[property_id].check(instance)
    except BudgetExceeded as exc:
        raise Skip(str(exc)) from exc


def draw_instance(property_id: str, seed: int, index: int, ranges: dict):
    rng = random.Random(f"{seed}:{index}")
    return _PROPS[property_id].draw(rng, ranges)


def _run_one(args):
    property_id, seed, index, ranges = args
    instance = draw_instance(property_id, seed, index, ranges)
    try:
        bad = check_instance(property_id, instance)
    except Skip as exc:
        return index, "skip", str(exc)
    if bad is None:
        return index, "ok", None
    record = {"seed_offset": index, "ideal_text": instance_text(instance)}
    record.update(bad)
    return index, "violation", record


def run_campaign(spec: CampaignSpec, jobs: int = 1) -> CampaignReport:
    start = time.perf_counter()
    prop = _PROPS[spec.property_id]
    count = 1 if prop.fixed else spec.samples
    tasks = [(spec.property_id, spec.seed, i, spec.ranges) for i in range(count)]
    if jobs > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=max(1, count // (4 * jobs))))
    else:
        results = [_run_one(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    report = CampaignReport(spec.property_id, spec.seed, spec.ranges, count)
    for _, status, payload in results:
        if status == "skip":
            report.skipped += 1
        else:
            report.checked += 1
            if status == "violation":
                report.violations.append(payload)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def replay(property_id: str, text: str) -> dict | None:
    """Re-check a reported instance from its ``ideal_text``."""
    return check_instance(property_id, parse_instance(property_id, text))
