"""Pfaffians and the Pfaffian partition functions of the quarter-turn models.

``Z^(r)(l; x)`` is the product over pairs of ``alpha(x_j/x_i)/sigma(x_j/x_i)``
times ``Pf M^(r)``, with ``M_ij = sigma((x_j/x_i)**r) / alpha(x_j/x_i)``.
The coefficients ``c_i`` of its odd expansion in the last variable and the
derived ``Z~^(2)`` are obtained by exact interpolation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Sequence

from qtasm.exact import (
    CenteredShape, DomainError, alpha, interpolate_centered,
    inverse, power, product, sigma,
)


class ContractError(ValueError):
    pass


class SingularPointError(DomainError):
    """The point lies on a pole of the formula being evaluated."""


class SkewMatrix:
    """Even-dimensional antisymmetric matrix over an exact field."""

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ContractError("matrix is not square")
        if n % 2:
            raise ContractError(f"dimension {n} is odd")
        for i in range(n):
            if rows[i][i] != 0:
                raise ContractError(f"nonzero diagonal entry at {i}")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise ContractError(f"entries ({i},{j}) and ({j},{i}) are not opposite")
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]


def _rows(a) -> list[list]:
    return [list(r) for r in (a.rows if isinstance(a, SkewMatrix) else SkewMatrix(a).rows)]


def pfaffian(a) -> object:
    """Pfaffian by skew-symmetric elimination with pivoting.

    Each step brings a nonzero entry of the current row into position
    ``(k, k+1)`` by a simultaneous row/column swap (which flips the sign),
    then clears the rest of rows/columns ``k`` and ``k+1``.
    """
    A = _rows(a)
    n = len(A)
    result = 1
    for k in range(0, n, 2):
        p = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
        if p is None:
            return 0 * result
        if p != k + 1:
            for row in A:
                row[k + 1], row[p] = row[p], row[k + 1]
            A[k + 1], A[p] = A[p], A[k + 1]
            result = -result
        piv = A[k][k + 1]
        result = result * piv
        inv = inverse(piv)
        for i in range(k + 2, n):
            aik, aik1 = A[i][k], A[i][k + 1]
            if aik == 0 and aik1 == 0:
                continue
            for j in range(k + 2, n):
                A[i][j] = A[i][j] + (aik * A[k + 1][j] - aik1 * A[k][j]) * inv
    return result


def pfaffian_matchings(a) -> object:
    """Pfaffian as the signed sum over perfect matchings (expansion along the first row)."""
    A = _rows(a)

    def rec(idx: tuple[int, ...]):
        if not idx:
            return 1
        first, rest = idx[0], idx[1:]
        total = 0
        for t, j in enumerate(rest):
            if A[first][j] == 0:
                continue
            term = A[first][j] * rec(rest[:t] + rest[t + 1:])
            total = total + term if t % 2 == 0 else total - term
        return total

    return rec(tuple(range(len(A))))


def determinant(rows: Sequence[Sequence]) -> object:
    """Fraction-free (Bareiss) determinant with row pivoting."""
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            return 0
        if p != k:
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# --------------------------------------------------------------------------
# Z^(r), c_i and Z~^(2)


def build_M(r: int, l: int, x: Sequence, a) -> SkewMatrix:
    if len(x) != 2 * l:
        raise ContractError(f"M^({r})({l}) needs {2 * l} variables, got {len(x)}")
    n = 2 * l
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            u = x[j] * inverse(x[i])
            den = alpha(u, a)
            if den == 0:
                raise SingularPointError(f"alpha(x{j + 1}/x{i + 1}) vanishes")
            v = sigma(power(u, r)) * inverse(den)
            rows[i][j] = v
            rows[j][i] = -v
    return SkewMatrix(rows)


def z_r_qt(r: int, l: int, x: Sequence, a):
    """``Z^(r)(l; x)``; raises :class:`SingularPointError` on a pole."""
    pre = 1
    for i, j in itertools.combinations(range(2 * l), 2):
        u = x[j] * inverse(x[i])
        s = sigma(u)
        if s == 0:
            raise SingularPointError(f"x{i + 1} = +-x{j + 1}")
        pre = pre * alpha(u, a) * inverse(s)
    return pre * pfaffian(build_M(r, l, x, a))


def _sample_points(avoid: Sequence, offset: int = 0):
    """Deterministic rationals ``(k+2)/(3k+7)`` with squares distinct from those of ``avoid``."""
    squares = {v * v for v in avoid if not hasattr(v, "terms")}
    k = offset
    while True:
        t = Fraction(k + 2, 3 * k + 7)
        k += 1
        if t * t in squares:
            continue
        squares.add(t * t)
        yield t


def interpolate_in(f: Callable, shape: CenteredShape, avoid: Sequence = (), extra: int = 2,
                   offset: int = 0, max_tries: int | None = None):
    """Interpolate ``t -> f(t)`` on ``shape`` from generic points, skipping poles of ``f``.

    If too many samples are singular the fixed arguments themselves are on a
    pole and :class:`SingularPointError` is raised.
    """
    need = shape.size + extra
    max_tries = 2 * need + 8 if max_tries is None else max_tries
    samples = []
    tried = 0
    for t in _sample_points(avoid, offset):
        if len(samples) == need:
            break
        tried += 1
        if tried > max_tries:
            raise SingularPointError("too many singular sample points")
        try:
            samples.append((t, f(t)))
        except ZeroDivisionError:
            continue
    return interpolate_centered(samples, shape)


def extract_c(l: int, x: Sequence, a, *, extra: int = 2, offset: int = 0) -> list:
    """Coefficients ``c_1..c_{2l}`` of ``Z^(2)(l; x, t)`` at ``t**(2i-2l-1)``.

    Uses ``2l + extra`` sample values of the last variable; the surplus
    samples check that the expansion really has that shape.
    """
    if len(x) != 2 * l - 1:
        raise ContractError(f"extract_c({l}) needs {2 * l - 1} fixed variables")
    shape = CenteredShape(2 * l - 1)
    poly = interpolate_in(lambda t: z_r_qt(2, l, list(x) + [t], a), shape, avoid=x,
                          extra=extra, offset=offset)
    return [poly.terms.get((e,), 0) for e in shape.exponents]


def z_tilde(l: int, x: Sequence, a, **kw):
    """``Z~^(2)(l; x)``: the product of the ``2l-1`` variables times ``c_{2l}``."""
    return product(x, 1) * extract_c(l, x, a, **kw)[-1]


def specialize(f: Callable[[list], object], x: Sequence, i: int, value, shape: CenteredShape,
               extra: int = 2):
    """Value of ``f`` at ``x`` with ``x[i]`` replaced by ``value``.

    ``f`` is interpolated in its ``i``-th argument over ``shape`` at generic
    points first, so this works where the direct formula has a removable
    singularity (e.g. ``x_i = a x_j`` inside the Pfaffian).
    """
    others = [v for k, v in enumerate(x) if k != i]

    def g(t):
        y = list(x)
        y[i] = t
        return f(y)

    poly = interpolate_in(g, shape, avoid=others, extra=extra)
    return poly.evaluate({"t": value})


def width_z_r(r: int, l: int) -> CenteredShape:
    """Shape of ``Z^(r)(l)`` in any single variable."""
    return CenteredShape(2 * l - 2) if r == 1 else CenteredShape(2 * l - 1)


def width_z_tilde(l: int) -> CenteredShape:
    return CenteredShape(2 * l - 2)
