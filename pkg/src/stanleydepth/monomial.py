"""Monomials and monomial ideals over K[x1, ..., xn].

Monomials are exponent tuples; ideals are stored by their minimal generators
in canonical order (descending lexicographic on exponent vectors, so ``x1``
sorts before ``x2``).  Everything here is immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, NamedTuple, Sequence

MAX_EXPONENT = 2**31 - 1


class ParseError(ValueError):
    """Malformed monomial or ideal text, with 1-based line/column."""

    def __init__(self, message: str, text: str = "", pos: int = 0, line: int = 1):
        self.line = line
        self.column = pos + 1
        self.text = text
        super().__init__(f"line {self.line}, column {self.column}: {message}")


class Monomial(tuple):
    """Exponent vector of a monomial; ``Monomial((3, 0, 1))`` is x1^3*x3."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e > MAX_EXPONENT:
                raise ValueError(f"exponent {e} exceeds 2^31 - 1")
        return tuple.__new__(cls, exps)

    @classmethod
    def _raw(cls, exps: tuple) -> "Monomial":
        return tuple.__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls._raw((0,) * n)

    @classmethod
    def var(cls, j: int, n: int, power: int = 1) -> "Monomial":
        """The monomial x_{j+1}^power (``j`` is 0-based)."""
        e = [0] * n
        e[j] = power
        return cls(e)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def support(self) -> frozenset[int]:
        return frozenset(j for j, e in enumerate(self) if e)

    def is_one(self) -> bool:
        return not any(self)

    def divides(self, other: Sequence[int]) -> bool:
        _check_dims(self, other)
        return all(a <= b for a, b in zip(self, other))

    def gcd(self, other: Sequence[int]) -> "Monomial":
        _check_dims(self, other)
        return Monomial._raw(tuple(map(min, self, other)))

    def lcm(self, other: Sequence[int]) -> "Monomial":
        _check_dims(self, other)
        return Monomial._raw(tuple(map(max, self, other)))

    def __mul__(self, other):
        _check_dims(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        _check_dims(self, other)
        if not all(b <= a for a, b in zip(self, other)):
            raise ValueError(f"{format_monomial(other)} does not divide {format_monomial(self)}")
        return Monomial._raw(tuple(a - b for a, b in zip(self, other)))

    def __add__(self, other):
        raise TypeError("monomials multiply, they do not add")

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"

    def __str__(self) -> str:
        return format_monomial(self)


def _check_dims(u: Sequence[int], w: Sequence[int]) -> None:
    if len(u) != len(w):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(w)}")


class LatticeOps(NamedTuple):
    gcd: Monomial
    lcm: Monomial
    u_divides_w: bool


def lattice_ops(u: Monomial, w: Monomial) -> LatticeOps:
    _check_dims(u, w)
    return LatticeOps(u.gcd(w), u.lcm(w), u.divides(w))


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances with :func:`minimalize` (or :func:`parse_ideal`); the
    constructor trusts that ``gens`` is already minimal and canonically sorted.
    """

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.one(n),))

    @property
    def g(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def contains(self, u: Sequence[int]) -> bool:
        _check_dims(self.gens[0] if self.gens else (0,) * self.n, u)
        for g in self.gens:
            if _divides(g, u):
                return True
        return False

    __contains__ = contains

    def times(self, v: Monomial) -> "MonomialIdeal":
        """The ideal v*I (minimality is preserved by multiplication)."""
        _check_dims(v, (0,) * self.n)
        return MonomialIdeal(self.n, tuple(sorted((g * v for g in self.gens), reverse=True)))

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.gens:
            out |= g.support()
        return frozenset(out)

    def lcm(self) -> Monomial:
        top = (0,) * self.n
        for g in self.gens:
            top = tuple(map(max, top, g))
        return Monomial._raw(top)

    def degs(self) -> tuple[int, ...]:
        return tuple(self.lcm())

    def __str__(self) -> str:
        return format_generators(self)

    def to_text(self) -> str:
        return f"n={self.n}; {format_generators(self)}"


def minimalize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``."""
    mons = {Monomial(u) for u in gens}
    for u in mons:
        if len(u) != n:
            raise ValueError(f"generator {format_monomial(u)} has dimension {len(u)}, expected {n}")
    kept: list[Monomial] = []
    for u in sorted(mons, key=lambda m: (sum(m), m)):
        if not any(_divides(k, u) for k in kept):
            kept.append(u)
    return MonomialIdeal(n, tuple(sorted(kept, reverse=True)))


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    return ideal.contains(u)


def colon(ideal: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """(I : v) = {w : v*w in I}."""
    _check_dims(v, (0,) * ideal.n)
    return minimalize(
        (tuple(a - min(a, b) for a, b in zip(u, v)) for u in ideal.gens), ideal.n
    )


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    if first.n != second.n:
        raise ValueError(f"dimension mismatch: {first.n} vs {second.n}")
    return minimalize((u.lcm(w) for u in first.gens for w in second.gens), first.n)


def colon_maximal(ideal: MonomialIdeal) -> MonomialIdeal:
    """(I : (x1, ..., xn)); zero and unit ideals come back unchanged."""
    if ideal.is_zero() or ideal.is_unit():
        return ideal
    out = colon(ideal, Monomial.var(0, ideal.n))
    for j in range(1, ideal.n):
        out = intersect(out, colon(ideal, Monomial.var(j, ideal.n)))
    return out


class Saturation(NamedTuple):
    sat: MonomialIdeal
    already_saturated: bool


def saturate(ideal: MonomialIdeal) -> Saturation:
    # Fixed point of I -> (I : m); colon by (x1*...*xn)^k would also strip
    # non-maximal components.
    current = ideal
    while True:
        nxt = colon_maximal(current)
        if nxt == current:
            return Saturation(current, current == ideal)
        current = nxt


def is_saturated(ideal: MonomialIdeal) -> bool:
    return colon_maximal(ideal) == ideal


class GcdPart(NamedTuple):
    v: Monomial
    I_prime: MonomialIdeal


def gcd_part(ideal: MonomialIdeal) -> GcdPart:
    """Factor I = v * I' with v the gcd of the minimal generators."""
    if ideal.is_zero():
        raise ValueError("the zero ideal has no gcd part")
    v = Monomial._raw(tuple(map(min, *ideal.gens)) if ideal.g > 1 else tuple(ideal.gens[0]))
    return GcdPart(v, colon(ideal, v))


@dataclass(frozen=True)
class IdealStats:
    g: int
    c: int
    supp: frozenset[int]
    degs: tuple[int, ...]
    is_principal: bool
    is_complete_intersection: bool
    pure_power_vars: frozenset[int]


def stats(ideal: MonomialIdeal) -> IdealStats:
    """Structural statistics; variable indices in the result are 0-based."""
    if ideal.is_zero():
        return IdealStats(0, 0, frozenset(), (0,) * ideal.n, False, True, frozenset())
    reduced = gcd_part(ideal).I_prime
    supports = [g.support() for g in reduced.gens]
    ci = all(not (a & b) for i, a in enumerate(supports) for b in supports[i + 1 :])
    pure = frozenset(next(iter(s)) for s in (g.support() for g in ideal.gens) if len(s) == 1)
    return IdealStats(
        g=ideal.g,
        c=len(reduced.support()),
        supp=ideal.support(),
        degs=ideal.degs(),
        is_principal=ideal.is_principal(),
        is_complete_intersection=ci,
        pure_power_vars=pure,
    )


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    return stats(ideal).is_complete_intersection


def restrict(ideal: MonomialIdeal, variables: Iterable[int]) -> MonomialIdeal:
    """I intersected with K[x_j : j in variables], re-indexed into that subring."""
    keep = sorted(set(variables))
    if not keep:
        raise ValueError("restriction to an empty variable set")
    if keep[0] < 0 or keep[-1] >= ideal.n:
        raise ValueError(f"variables {keep} out of range for n={ideal.n}")
    kset = set(keep)
    gens = [tuple(u[j] for j in keep) for u in ideal.gens if u.support() <= kset]
    return MonomialIdeal(len(keep), tuple(sorted((Monomial._raw(g) for g in gens), reverse=True)))


def embed(u: Sequence[int], variables: Sequence[int], n: int) -> Monomial:
    """Inverse of the restriction re-indexing: place ``u`` at ``variables``."""
    e = [0] * n
    for j, a in zip(sorted(variables), u):
        e[j] = a
    return Monomial._raw(tuple(e))


def slice_ideal(ideal: MonomialIdeal, var: int, j: int) -> MonomialIdeal:
    """The ideal I_j of K[other vars] with I ∩ x_var^j K[other vars] = x_var^j I_j."""
    q = ideal.degs()[var] if ideal.gens else 0
    if not 0 <= j <= q:
        raise ValueError(f"slice index {j} outside 0..{q}")
    if ideal.n == 1:
        raise ValueError("cannot slice a one-variable ideal")
    return minimalize(
        (u[:var] + u[var + 1 :] for u in ideal.gens if u[var] <= j), ideal.n - 1
    )


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power needs k >= 1")
    if k == 1 or ideal.is_zero():
        return ideal
    products = []
    for combo in combinations_with_replacement(ideal.gens, k):
        products.append(tuple(map(sum, zip(*combo))))
    return minimalize(products, ideal.n)


# --- text form -------------------------------------------------------------

def format_monomial(u: Sequence[int]) -> str:
    parts = []
    for j, e in enumerate(u):
        if e == 1:
            parts.append(f"x{j + 1}")
        elif e > 1:
            parts.append(f"x{j + 1}^{e}")
    return "*".join(parts) if parts else "1"


def format_generators(ideal: MonomialIdeal) -> str:
    if ideal.is_zero():
        return "0"
    return ", ".join(format_monomial(g) for g in ideal.gens)


_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<num>\d+)|(?P<op>[\^*,;=])|(?P<bad>\S))")


def _tokens(text: str, offset: int = 0):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastgroup) if m.lastgroup else m.start()
        if m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r}", text, offset + start)
        kind = m.lastgroup if m.lastgroup != "idx" else "var"
        yield kind, m.group(kind), offset + start
        pos = m.end()
    yield "end", "", offset + len(text)


class _Parser:
    def __init__(self, text: str, n: int | None, line: int = 1):
        self.text = text
        self.toks = list(_tokens(text))
        self.i = 0
        self.n = n
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, pos: int):
        raise ParseError(msg, self.text, pos, self.line)

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value:
            self.error(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def factor(self) -> dict[int, int] | None:
        kind, val, pos = self.take()
        if kind == "num":
            if int(val) != 1:
                self.error(f"coefficient {val} not allowed; only the monomial 1", pos)
            return None
        if kind != "var":
            self.error(f"expected a variable, found {val or 'end of input'!r}", pos)
        idx = int(val[1:])
        if idx < 1:
            self.error("variables are numbered from x1", pos)
        if self.n is not None and idx > self.n:
            self.error(f"variable {val} exceeds n={self.n}", pos)
        exp = 1
        if self.peek()[1] == "^":
            self.take()
            k, v, p = self.take()
            if k != "num":
                self.error("expected an exponent", p)
            exp = int(v)
            if exp > MAX_EXPONENT:
                self.error("exponent exceeds 2^31 - 1", p)
        return {idx - 1: exp}

    def monomial(self) -> dict[int, int]:
        exps: dict[int, int] = {}
        while True:
            f = self.factor()
            if f:
                for j, e in f.items():
                    exps[j] = exps.get(j, 0) + e
            if self.peek()[1] != "*":
                return exps
            self.take()

    def generators(self) -> list[dict[int, int]] | None:
        kind, val, pos = self.peek()
        if kind == "end":
            return None
        if kind == "num" and val == "0":
            self.take()
            return None
        gens = [self.monomial()]
        while self.peek()[1] == ",":
            self.take()
            gens.append(self.monomial())
        return gens

    def finish(self):
        kind, val, pos = self.peek()
        if kind != "end":
            self.error(f"unexpected {val!r}", pos)


def _to_monomial(exps: dict[int, int], n: int) -> Monomial:
    e = [0] * n
    for j, a in exps.items():
        e[j] = a
    return Monomial(e)


def parse_monomial(text: str, n: int) -> Monomial:
    p = _Parser(text, n)
    exps = p.monomial()
    p.finish()
    return _to_monomial(exps, n)


def parse_generators(text: str, n: int, line: int = 1) -> MonomialIdeal:
    """Parse a comma-separated generator list (``0`` or empty is the zero ideal)."""
    p = _Parser(text, n, line)
    gens = p.generators()
    p.finish()
    return minimalize((_to_monomial(g, n) for g in gens or ()), n)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``n=<int>; <gen>, <gen>, ...``.

    Without the ``n=`` header the ambient dimension is the largest variable
    index that occurs.
    """
    head, sep, body = text.partition(";")
    m = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*", head) if sep else None
    if sep and m is None:
        p = _Parser(head, None)
        p.error("expected 'n=<int>' before ';'", 0)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError("n must be at least 1", text, m.start(1))
        offset = len(head) + 1
        try:
            p = _Parser(body, n)
            gens = p.generators()
            p.finish()
        except ParseError as exc:
            raise ParseError(str(exc).split(": ", 1)[1], text, exc.column - 1 + offset) from None
        return minimalize((_to_monomial(g, n) for g in gens or ()), n)
    p = _Parser(text, None)
    gens = p.generators() or []
    p.finish()
    n = max((j + 1 for g in gens for j in g), default=0)
    if n == 0:
        raise ParseError("cannot infer n; write 'n=<int>; ...'", text, 0)
    return minimalize((_to_monomial(g, n) for g in gens), n)
