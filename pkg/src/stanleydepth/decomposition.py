"""Stanley decompositions as lists of slabs, with exact finite verification.

A slab ``m K[Z]`` is the set of monomials agreeing with ``m`` off ``Z`` and
dominating it on ``Z``.  A decomposition targets either an ideal I or the
quotient S/I (stored against I, never as an explicit monomial set).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from . import kernels
from .monomial import (
    Monomial,
    MonomialIdeal,
    ParseError,
    format_monomial,
    parse_generators,
    parse_monomial,
)

Target = Literal["ideal", "quotient"]
TARGETS = ("ideal", "quotient")


@dataclass(frozen=True)
class Slab:
    origin: Monomial
    free_vars: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "free_vars", frozenset(self.free_vars))
        if any(j < 0 or j >= len(self.origin) for j in self.free_vars):
            raise ValueError(f"free variables {sorted(self.free_vars)} out of range")

    @property
    def n(self) -> int:
        return len(self.origin)

    @property
    def dim(self) -> int:
        return len(self.free_vars)

    def contains(self, u: Sequence[int]) -> bool:
        if len(u) != len(self.origin):
            raise ValueError(f"dimension mismatch: {len(self.origin)} vs {len(u)}")
        free = self.free_vars
        for j, (a, e) in enumerate(zip(self.origin, u)):
            if j in free:
                if e < a:
                    return False
            elif e != a:
                return False
        return True

    __contains__ = contains

    def shifted(self, w: Sequence[int]) -> "Slab":
        """The slab w * origin K[Z]."""
        return Slab(self.origin * Monomial._raw(tuple(w)), self.free_vars)

    def sort_key(self):
        return (tuple(self.origin), tuple(sorted(self.free_vars)))

    def __str__(self) -> str:
        return format_slab(self)


def slab_member(s: Slab, u: Sequence[int]) -> bool:
    return s.contains(u)


def slabs_disjoint(s1: Slab, s2: Slab) -> bool:
    """True iff no monomial lies in both slabs."""
    if s1.n != s2.n:
        raise ValueError(f"dimension mismatch: {s1.n} vs {s2.n}")
    f1, f2 = s1.free_vars, s2.free_vars
    for j, (a, b) in enumerate(zip(s1.origin, s2.origin)):
        in1, in2 = j in f1, j in f2
        if in1 and in2:
            continue
        if in1:
            if b < a:
                return True
        elif in2:
            if a < b:
                return True
        elif a != b:
            return True
    return False


@dataclass(frozen=True)
class StanleyDecomposition:
    target: Target
    ideal: MonomialIdeal
    slabs: tuple[Slab, ...]

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"target must be one of {TARGETS}, not {self.target!r}")
        object.__setattr__(self, "slabs", tuple(self.slabs))
        for s in self.slabs:
            if s.n != self.ideal.n:
                raise ValueError(f"slab {s} has dimension {s.n}, expected {self.ideal.n}")

    @property
    def n(self) -> int:
        return self.ideal.n

    def module_is_zero(self) -> bool:
        if self.target == "ideal":
            return self.ideal.is_zero()
        return self.ideal.is_unit()

    def sdepth(self) -> int:
        return sdepth_of(self)

    def to_text(self) -> str:
        return format_decomposition(self)


def sdepth_of(d: StanleyDecomposition) -> int:
    """Minimum slab dimension.

    The zero module has no slabs; by convention its decomposition has
    Stanley depth n.
    """
    if not d.slabs:
        if d.module_is_zero():
            return d.n
        raise ValueError("empty slab list for a nonzero module")
    return min(s.dim for s in d.slabs)


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    sdepth: int | None
    violation: Monomial | tuple[Slab, Slab] | None = None
    reason: str = ""
    violations: tuple = field(default=())
    zero_module: bool = False

    def __bool__(self) -> bool:
        return self.valid


def coverage_bounds(d: StanleyDecomposition) -> tuple[int, ...]:
    """Per-coordinate box size B_j + 1 for the exact coverage scan."""
    top = [0] * d.n
    for u in list(d.ideal.gens) + [s.origin for s in d.slabs]:
        for j, a in enumerate(u):
            if a > top[j]:
                top[j] = a
    return tuple(b + 1 for b in top)


def verify(d: StanleyDecomposition, all_violations: bool = False) -> VerifyReport:
    """Exact check that the slabs partition the monomials of the target.

    Disjointness is decided pairwise.  Coverage is decided on the box
    0 <= e_j <= B_j + 1 where B_j bounds every origin and generator in
    coordinate j: past B_j every slab and generator constraint is constant,
    so B_j + 1 stands in for all larger exponents.
    """
    try:
        depth = sdepth_of(d)
    except ValueError:
        depth = None
    zero_module = not d.slabs and d.module_is_zero()
    found: list = []
    slabs = d.slabs
    for i in range(len(slabs)):
        for k in range(i + 1, len(slabs)):
            if not slabs_disjoint(slabs[i], slabs[k]):
                pair = (slabs[i], slabs[k])
                if not all_violations:
                    return VerifyReport(False, depth, pair, "overlapping slabs", (pair,), zero_module)
                found.append(pair)
    n = d.n
    bad = kernels.coverage_scan(
        [list(s.origin) for s in slabs],
        [[j in s.free_vars for j in range(n)] for s in slabs],
        [list(g) for g in d.ideal.gens],
        d.target == "quotient",
        list(coverage_bounds(d)),
        -1 if all_violations else 1,
    )
    for point, count, in_target in bad:
        found.append(Monomial._raw(point))
    if not found:
        return VerifyReport(True, depth, None, "", (), zero_module)
    first = found[0]
    if isinstance(first, tuple) and len(first) == 2 and isinstance(first[0], Slab):
        reason = "overlapping slabs"
    else:
        point, count, in_target = bad[0]
        if count > 1:
            reason = "monomial covered by several slabs"
        elif in_target:
            reason = "monomial of the target not covered"
        else:
            reason = "slab contains a monomial outside the target"
    return VerifyReport(False, depth, first, reason, tuple(found), zero_module)


# --- text form -------------------------------------------------------------

def format_slab(s: Slab) -> str:
    free = ",".join(f"x{j + 1}" for j in sorted(s.free_vars))
    return f"{format_monomial(s.origin)} K[{free}]"


_SLAB = re.compile(r"^\s*(?P<origin>.*?)\s*K\[(?P<free>[^\]]*)\]\s*$")


def parse_slab(text: str, n: int, line: int = 1) -> Slab:
    m = _SLAB.match(text)
    if m is None:
        raise ParseError("expected '<monomial> K[<variables>]'", text, 0, line)
    try:
        origin = parse_monomial(m.group("origin") or "1", n)
    except ParseError as exc:
        raise ParseError(str(exc).split(": ", 1)[1], text, m.start("origin") + exc.column - 1, line) from None
    free: set[int] = set()
    body = m.group("free").strip()
    if body and body not in ("∅",):
        offset = m.start("free")
        for piece in re.finditer(r"[^,]+", m.group("free")):
            name = piece.group().strip()
            vm = re.fullmatch(r"x(\d+)", name)
            if vm is None or not 1 <= int(vm.group(1)) <= n:
                raise ParseError(f"bad variable {name!r} in K[...]", text, offset + piece.start(), line)
            free.add(int(vm.group(1)) - 1)
    return Slab(origin, frozenset(free))


def format_decomposition(d: StanleyDecomposition) -> str:
    lines = [f"target: {d.target}; ideal: {d.ideal}; n: {d.n}"]
    lines += [format_slab(s) for s in d.slabs]
    return "\n".join(lines) + "\n"


_HEADER = re.compile(
    r"^\s*target\s*:\s*(?P<target>\w+)\s*;\s*ideal\s*:\s*(?P<ideal>[^;]*?)\s*;\s*n\s*:\s*(?P<n>\d+)\s*$"
)


def parse_decomposition(text: str) -> StanleyDecomposition:
    """Parse the line format written by :func:`format_decomposition`.

    Blank lines and ``#`` comments are ignored.
    """
    header = None
    slabs: list[Slab] = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if header is None:
            m = _HEADER.match(line)
            if m is None:
                raise ParseError("expected header 'target: ideal|quotient; ideal: <gens>; n: <dim>'", line, 0, lineno)
            if m.group("target") not in TARGETS:
                raise ParseError(f"unknown target {m.group('target')!r}", line, m.start("target"), lineno)
            n = int(m.group("n"))
            if n < 1:
                raise ParseError("n must be at least 1", line, m.start("n"), lineno)
            try:
                ideal = parse_generators(m.group("ideal"), n, lineno)
            except ParseError as exc:
                raise ParseError(str(exc).split(": ", 1)[1], line, m.start("ideal") + exc.column - 1, lineno) from None
            header = (m.group("target"), ideal)
            continue
        slabs.append(parse_slab(line, n, lineno))
    if header is None:
        raise ParseError("missing header line", text, 0, 1)
    return StanleyDecomposition(header[0], header[1], tuple(slabs))


def decomposition(target: Target, ideal: MonomialIdeal, slabs: Iterable[Slab]) -> StanleyDecomposition:
    return StanleyDecomposition(target, ideal, tuple(slabs))
