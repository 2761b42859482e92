"""Exact coefficient domains shared by the rest of the package.

Three kinds of values flow through the partition-function code:

* rationals (:class:`fractions.Fraction`, with ``int`` accepted wherever a
  rational is),
* :class:`CycQ6`, the quadratic field generated by ``zeta = exp(i*pi/3)``,
* :class:`LaurentPoly`, sparse multivariate Laurent polynomials.

Every routine downstream is written against the ordinary arithmetic operators,
so any of the three can be used as the coefficient domain.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence


class DomainError(ZeroDivisionError):
    """Raised when an element that must be invertible is not."""


class InterpolationError(ValueError):
    """Samples do not determine (or contradict) a polynomial of the declared shape."""


# --------------------------------------------------------------------------
# Q(zeta), zeta = exp(i pi / 3)


class CycQ6:
    """Element ``c0 + c1*zeta`` of Q(zeta) where ``zeta**2 == zeta - 1``."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0=0, c1=0):
        if isinstance(c0, CycQ6):
            c0, c1 = c0.c0, c0.c1
        self.c0 = Fraction(c0)
        self.c1 = Fraction(c1)

    @staticmethod
    def _coerce(other):
        if isinstance(other, CycQ6):
            return other
        if isinstance(other, (int, Rational)):
            return CycQ6(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycQ6(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return CycQ6(-self.c0, -self.c1)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycQ6(self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.c0, self.c1, o.c0, o.c1
        # (a + b z)(c + d z) with z^2 = z - 1
        return CycQ6(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conjugate(self):
        # complex conjugation sends zeta to 1 - zeta
        return CycQ6(self.c0 + self.c1, -self.c1)

    def norm(self) -> Fraction:
        a, b = self.c0, self.c1
        return a * a + a * b + b * b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise DomainError("zero has no inverse in Q(zeta)")
        c = self.conjugate()
        return CycQ6(c.c0 / n, c.c1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = CycQ6(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        if self.c1 == 0:
            return hash(self.c0)
        return hash((self.c0, self.c1))

    def __bool__(self):
        return bool(self.c0) or bool(self.c1)

    def __repr__(self):
        return f"CycQ6({self.c0}, {self.c1})"

    def __str__(self):
        return format_value(self)


ZETA = CycQ6(0, 1)


# --------------------------------------------------------------------------
# sparse Laurent polynomials


def _monomial_key(exps: tuple[int, ...]) -> tuple[int, ...]:
    return exps


class LaurentPoly:
    """Sparse Laurent polynomial over an exact coefficient domain.

    ``variables`` is an ordered tuple of names; ``terms`` maps exponent tuples
    (one entry per variable, negative allowed) to nonzero coefficients.
    Polynomials over different variable tuples are aligned to the union of
    their variables before any binary operation.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str] = (), terms: Mapping | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable in {self.variables}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError("exponent vector length does not match variables")
            if c != 0:
                clean[exps] = c
        self.terms = clean

    # construction helpers
    @classmethod
    def constant(cls, c, variables: Sequence[str] = ()):
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, power: int = 1):
        return cls((name,), {(power,): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1):
        names = tuple(exps)
        return cls(names, {tuple(exps[n] for n in names): coeff})

    # alignment
    def with_variables(self, variables: Sequence[str]) -> "LaurentPoly":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        missing = set(self.variables) - set(variables)
        if any(any(e[self.variables.index(v)] for e in self.terms) for v in missing):
            raise ValueError(f"cannot drop variables {sorted(missing)} that occur")
        idx = [self.variables.index(v) if v in self.variables else None for v in variables]
        terms = {
            tuple(e[i] if i is not None else 0 for i in idx): c for e, c in self.terms.items()
        }
        return LaurentPoly(variables, terms)

    def _align(self, other):
        if isinstance(other, LaurentPoly):
            if other.variables == self.variables:
                return self, other
            names = self.variables + tuple(v for v in other.variables if v not in self.variables)
            return self.with_variables(names), other.with_variables(names)
        if isinstance(other, (int, Rational, CycQ6)):
            return self, LaurentPoly.constant(other, self.variables)
        return None, None

    # ring operations
    def __add__(self, other):
        p, q = self._align(other)
        if p is None:
            return NotImplemented
        terms = dict(p.terms)
        for e, c in q.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return LaurentPoly(p.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        p, q = self._align(other)
        if p is None:
            return NotImplemented
        return p + (-q)

    def __rsub__(self, other):
        p, q = self._align(other)
        if p is None:
            return NotImplemented
        return q + (-p)

    def __mul__(self, other):
        p, q = self._align(other)
        if p is None:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in p.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return LaurentPoly(p.variables, terms)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self):
        if not self.is_monomial():
            raise DomainError("only monomials are invertible Laurent polynomials")
        (e, c), = self.terms.items()
        return LaurentPoly(self.variables, {tuple(-k for k in e): inverse(c)})

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            return self * other.inverse()
        if isinstance(other, (int, Rational, CycQ6)):
            return self * inverse(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational, CycQ6)):
            return other * self.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        p, q = self._align(other)
        if p is None:
            return NotImplemented
        return p.terms == q.terms

    def __hash__(self):
        return hash(frozenset(self.normalized().items()))

    def __bool__(self):
        return bool(self.terms)

    def normalized(self) -> dict:
        """Terms keyed by sorted ``(name, exponent)`` pairs, dropping zero exponents."""
        out = {}
        for e, c in self.terms.items():
            key = tuple(sorted((v, k) for v, k in zip(self.variables, e) if k))
            out[key] = c
        return out

    # queries
    def evaluate(self, point: Mapping[str, object]):
        """Exact value with every variable substituted from ``point``."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for name, k in zip(self.variables, e):
                if k:
                    term = term * power(point[name], k)
            total = total + term
        return total

    def substitute(self, point: Mapping[str, object]) -> "LaurentPoly":
        """Partial evaluation; the substituted values must be ring elements."""
        keep = [v for v in self.variables if v not in point]
        result = LaurentPoly.constant(0, keep)
        for e, c in self.terms.items():
            rest = {}
            term = c
            for name, k in zip(self.variables, e):
                if name in point:
                    if k:
                        term = term * power(point[name], k)
                elif k:
                    rest[name] = k
            result = result + LaurentPoly.monomial(rest, 1).with_variables(keep) * term
        return result

    def exponent_range(self, name: str) -> tuple[int, int]:
        i = self.variables.index(name)
        exps = [e[i] for e in self.terms]
        return min(exps), max(exps)

    def exponents(self, name: str) -> set[int]:
        if name not in self.variables:
            return {0} if self.terms else set()
        i = self.variables.index(name)
        return {e[i] for e in self.terms}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in lexicographic order of exponent vector."""
        return sorted(self.terms.items(), key=lambda t: t[0])

    def __repr__(self):
        return f"LaurentPoly({self.variables!r}, {len(self.terms)} terms)"

    def __str__(self):
        return format_value(self)


# --------------------------------------------------------------------------
# generic helpers


def inverse(u):
    """Multiplicative inverse in whichever domain ``u`` lives."""
    if isinstance(u, (CycQ6, LaurentPoly)):
        return u.inverse()
    if u == 0:
        raise DomainError("0 is not invertible")
    return Fraction(1) / u


def power(u, k: int):
    if k >= 0:
        return u**k
    return inverse(u) ** (-k)


def sigma(u):
    """``u - 1/u``."""
    return u - inverse(u)


def alpha(u, a):
    """``sigma(a*u) * sigma(a/u)``."""
    return sigma(a * u) * sigma(a * inverse(u))


def product(values: Iterable, start=1):
    result = start
    for v in values:
        result = result * v
    return result


# --------------------------------------------------------------------------
# centered Laurent polynomials in one variable


@dataclass(frozen=True)
class CenteredShape:
    """Exponent window ``{-width, -width+2, ..., width}`` of a univariate Laurent polynomial.

    A shape of width ``w`` has ``w + 1`` unknown coefficients.  The exponents
    all share the parity of ``w``: even widths describe polynomials in ``x**2``,
    odd widths polynomials in ``x**2`` times one power of ``x``.
    """

    width: int
    parity: str = ""

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        expected = "even" if self.width % 2 == 0 else "odd"
        if self.parity == "":
            object.__setattr__(self, "parity", expected)
        elif self.parity != expected:
            raise ValueError(f"width {self.width} has {expected} exponents, not {self.parity}")

    @property
    def exponents(self) -> list[int]:
        return list(range(-self.width, self.width + 1, 2))

    @property
    def size(self) -> int:
        return self.width + 1


def interpolate_centered(samples: Sequence[tuple], shape: CenteredShape, var: str = "t") -> LaurentPoly:
    """Recover the Laurent polynomial of ``shape`` through ``(point, value)`` samples.

    The first ``shape.size`` samples determine the polynomial (Newton divided
    differences in ``point**2``); any further samples are checked against it.
    """
    samples = list(samples)
    need = shape.size
    if len(samples) < need:
        raise InterpolationError(f"need {need} samples for width {shape.width}, got {len(samples)}")
    squares = []
    for p, _ in samples:
        if p == 0:
            raise InterpolationError("sample points must be nonzero")
        sq = p * p
        if any(sq == s for s in squares):
            raise InterpolationError(f"sample points with equal squares ({p})")
        squares.append(sq)

    # x**w * f(x) is an ordinary polynomial of degree <= w in t = x**2
    ts = squares[:need]
    ys = [v * power(p, shape.width) for p, v in samples[:need]]
    coef = list(ys)
    for j in range(1, need):
        for i in range(need - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (ts[i] - ts[i - j])
    # Newton form -> monomial coefficients in t
    poly = [coef[-1]]
    for i in range(need - 2, -1, -1):
        shifted = [0] + poly
        for k in range(len(poly)):
            shifted[k] = shifted[k] - ts[i] * poly[k]
        shifted[0] = shifted[0] + coef[i]
        poly = shifted
    terms = {(2 * k - shape.width,): c for k, c in enumerate(poly)}
    result = LaurentPoly((var,), terms)

    for p, v in samples[need:]:
        got = result.evaluate({var: p})
        if got != v:
            raise InterpolationError(
                f"sample at {format_value(p)} gives {format_value(v)}, "
                f"interpolant of width {shape.width} gives {format_value(got)}"
            )
    return result


# --------------------------------------------------------------------------
# sampling and text I/O


class RationalSampler:
    """Seeded source of small positive rationals ``p/q`` with ``1 <= p, q <= bound``."""

    def __init__(self, seed, bound: int = 50):
        self.rng = random.Random(seed)
        self.bound = bound

    def draw(self) -> Fraction:
        return Fraction(self.rng.randint(1, self.bound), self.rng.randint(1, self.bound))

    def draws(self, k: int) -> list[Fraction]:
        return [self.draw() for _ in range(k)]


def parse_value(text: str):
    """Parse ``"p/q"``, an integer, or ``"zeta"`` into an exact value."""
    text = text.strip()
    if text.lower() == "zeta":
        return ZETA
    if any(ch in text for ch in ".eE"):
        raise ValueError(f"{text!r}: only exact rationals p/q are accepted")
    return Fraction(text)


def _format_monomial(variables, exps) -> str:
    parts = []
    for v, k in zip(variables, exps):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts) if parts else "1"


def format_value(v) -> str:
    """Canonical text form: ``p/q``, ``c0 + c1*zeta``, or a sorted sum of monomials."""
    if isinstance(v, CycQ6):
        sign = "-" if v.c1 < 0 else "+"
        return f"{v.c0} {sign} {abs(v.c1)}*zeta"
    if isinstance(v, LaurentPoly):
        if not v.terms:
            return "0"
        parts = []
        for e, c in v.sorted_terms():
            mono = _format_monomial(v.variables, e)
            if isinstance(c, (int, Rational)) and c < 0:
                parts.append(("-", f"{format_value(-c)}*{mono}"))
            else:
                parts.append(("+", f"{format_value(c)}*{mono}"))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {sign} {body}" for sign, body in parts[1:])
    if isinstance(v, (int, Rational)):
        return str(Fraction(v))
    return str(v)
