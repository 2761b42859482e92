"""Alternating-sign matrices: validation, enumeration and symmetry classes.

The enumerators here are the brute-force oracles for every count used
elsewhere in the package, so each class can be produced by two unrelated
searches:

* ``"rows"``: row-by-row backtracking over column partial sums (compiled
  kernel when available), optionally filtered by a symmetry test;
* ``"triangles"``: monotone-triangle recursion (class ALL only);
* ``"domain"``: fill only the rows that carry a fundamental domain of the
  symmetry, extend by the symmetry and validate the result (HT and QT).
"""

from __future__ import annotations

import builtins
import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from qtasm import kernels


class SymmetryClass(enum.Enum):
    ALL = "all"
    HT = "ht"
    QT = "qt"


class AsmViolation(ValueError):
    """A matrix failed validation; ``condition`` and ``location`` say where."""

    def __init__(self, condition: str, location, message: str):
        super().__init__(message)
        self.condition = condition
        self.location = location


class SearchBoundError(RuntimeError):
    """The requested order exceeds the configured search bound."""


# Largest orders each strategy attempts within a few seconds.
SEARCH_BOUNDS = {
    ("rows", SymmetryClass.ALL): 7,
    ("rows", SymmetryClass.HT): 7,
    ("rows", SymmetryClass.QT): 7,
    ("triangles", SymmetryClass.ALL): 7,
    ("domain", SymmetryClass.HT): 8,
    ("domain", SymmetryClass.QT): 11,
}

_SYM_CODE = {SymmetryClass.ALL: kernels.SYM_NONE, SymmetryClass.HT: kernels.SYM_HT,
             SymmetryClass.QT: kernels.SYM_QT}

_CHARS = {1: "+", -1: "-", 0: "0"}


@dataclass(frozen=True)
class AsmMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def rotate90(self) -> "AsmMatrix":
        """Quarter turn: entry ``(i, j)`` moves to ``(j, n-1-i)`` (0-based)."""
        n = self.order
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[j][n - 1 - i] = self.rows[i][j]
        return AsmMatrix(tuple(map(tuple, out)))

    def rotate180(self) -> "AsmMatrix":
        return AsmMatrix(tuple(tuple(reversed(r)) for r in reversed(self.rows)))

    def is_qt(self) -> bool:
        return self.rotate90() == self

    def is_ht(self) -> bool:
        return self.rotate180() == self

    def compact(self) -> str:
        """Rows joined by ``/`` with entries written ``+``, ``-``, ``0``."""
        return "/".join("".join(_CHARS[v] for v in r) for r in self.rows)

    @classmethod
    def from_compact(cls, text: str) -> "AsmMatrix":
        inv = {c: v for v, c in _CHARS.items()}
        return validate([[inv[c] for c in row] for row in text.split("/")])

    def __str__(self):
        return self.compact()


def _check_line(values: Sequence[int], kind: str, index: int, pos) -> None:
    s = 0
    for k, v in builtins.enumerate(values):
        s += v
        if s < 0 or s > 1:
            raise AsmViolation(
                f"{kind}-alternation", pos(index, k),
                f"{kind} {index}: nonzero entries do not alternate starting with +1 "
                f"(partial sum {s} at position {pos(index, k)})",
            )
    if s != 1:
        raise AsmViolation(f"{kind}-sum", index, f"{kind} {index} sums to {s}, not 1")


def validate(matrix: Sequence[Sequence[int]]) -> AsmMatrix:
    """Return ``matrix`` as an :class:`AsmMatrix` or raise :class:`AsmViolation`.

    A row or column is valid exactly when its partial sums stay in {0, 1}
    and end at 1, which is the alternation rule with +1 first and last.
    Locations are 0-based.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        raise AsmViolation("shape", None, "empty matrix")
    for i, r in builtins.enumerate(rows):
        if len(r) != n:
            raise AsmViolation("shape", i, f"row {i} has length {len(r)}, expected {n}")
        for j, v in builtins.enumerate(r):
            if v not in (-1, 0, 1):
                raise AsmViolation("entry", (i, j), f"entry {v!r} at {(i, j)} is not -1, 0 or 1")
    for i in range(n):
        _check_line(rows[i], "row", i, lambda a, b: (a, b))
    for j in range(n):
        _check_line([rows[i][j] for i in range(n)], "column", j, lambda a, b: (b, a))
    return AsmMatrix(tuple(tuple(int(v) for v in r) for r in rows))


def _from_flat(flat: Sequence[int], n: int) -> AsmMatrix:
    return AsmMatrix(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def _check_bound(n: int, cls: SymmetryClass, strategy: str, limit: int | None) -> None:
    bound = SEARCH_BOUNDS.get((strategy, cls))
    if bound is None:
        raise ValueError(f"strategy {strategy!r} does not apply to class {cls.value}")
    if limit is not None:
        bound = limit
    if n > bound:
        raise SearchBoundError(
            f"order {n} exceeds the search bound {bound} for {cls.value}/{strategy}")


# ----------------------------------------------------------------- triangles


def _monotone_triangles(n: int) -> Iterator[list[list[int]]]:
    """Monotone triangles with bottom row ``1..n``, built from the bottom up."""

    def above(row: list[int]) -> Iterator[list[int]]:
        # a row of length k-1 interlacing ``row``: row[t] <= r[t] <= row[t+1], strictly increasing
        k = len(row)
        cur: list[int] = []

        def rec(t: int) -> Iterator[list[int]]:
            if t == k - 1:
                yield list(cur)
                return
            lo = row[t] if not cur else max(row[t], cur[-1] + 1)
            for v in range(lo, row[t + 1] + 1):
                cur.append(v)
                yield from rec(t + 1)
                cur.pop()

        yield from rec(0)

    def build(rows: list[list[int]]) -> Iterator[list[list[int]]]:
        if len(rows[0]) == 1:
            yield rows
            return
        for r in above(rows[0]):
            yield from build([r] + rows)

    yield from build([list(range(1, n + 1))])


def _triangle_to_asm(tri: list[list[int]], n: int) -> tuple[int, ...]:
    # row k of the triangle lists the columns whose partial sum over the first k rows is 1
    flat = [0] * (n * n)
    prev = [0] * n
    for i, row in builtins.enumerate(tri):
        cur = [0] * n
        for c in row:
            cur[c - 1] = 1
        for j in range(n):
            flat[i * n + j] = cur[j] - prev[j]
        prev = cur
    return tuple(flat)


# -------------------------------------------------------------------- domain


def _domain_search(n: int, cls: SymmetryClass) -> list[tuple[int, ...]]:
    """Fill rows ``0 .. ceil(n/2)-1`` with every entry forced by symmetry pre-set.

    For QT, row ``i`` equals column ``n-1-i`` read downwards and column ``i``
    read upwards, so after rows ``0..i`` the outer ``i+1`` rows and columns are
    known; only the entries ``i <= j <= n-1-i`` of row ``i`` are free.  For HT,
    row ``n-1-i`` is row ``i`` reversed.  The completed matrix is validated.
    """
    half = (n + 1) // 2
    mat: list[list[int | None]] = [[None] * n for _ in range(n)]
    found: list[tuple[int, ...]] = []

    def images(i: int, j: int) -> list[tuple[int, int]]:
        if cls is SymmetryClass.QT:
            pts = [(i, j)]
            for _ in range(3):
                i, j = j, n - 1 - i
                pts.append((i, j))
            return pts
        return [(i, j), (n - 1 - i, n - 1 - j)]

    colsum = [0] * n

    def set_row(i: int, row: list[int]) -> list[tuple[int, int]] | None:
        placed = []
        for j, v in builtins.enumerate(row):
            for (p, q) in images(i, j):
                cur = mat[p][q]
                if cur is None:
                    mat[p][q] = v
                    placed.append((p, q))
                elif cur != v:
                    for (pp, qq) in placed:
                        mat[pp][qq] = None
                    return None
        return placed

    def fill(i: int) -> None:
        if i == half:
            if any(v is None for r in mat for v in r):
                return
            try:
                a = validate(mat)  # type: ignore[arg-type]
            except AsmViolation:
                return
            found.append(tuple(v for r in a.rows for v in r))
            return
        row: list[int] = []

        def entry(j: int, rowsum: int) -> None:
            if j == n:
                if rowsum != 1:
                    return
                placed = set_row(i, row)
                if placed is None:
                    return
                saved = list(colsum)
                ok = True
                for jj in range(n):
                    colsum[jj] += row[jj]
                    if colsum[jj] not in (0, 1):
                        ok = False
                if ok:
                    fill(i + 1)
                colsum[:] = saved
                for (p, q) in placed:
                    mat[p][q] = None
                return
            forced = mat[i][j]
            choices = (forced,) if forced is not None else (-1, 0, 1)
            for v in choices:
                rs = rowsum + v
                cs = colsum[j] + v
                if rs < 0 or rs > 1 or cs < 0 or cs > 1:
                    continue
                row.append(v)
                entry(j + 1, rs)
                row.pop()

        entry(0, 0)

    fill(0)
    found.sort()
    return found


# ------------------------------------------------------------------ public API


def enumerate_asms(n: int, cls: SymmetryClass = SymmetryClass.ALL, *,
                   strategy: str | None = None, limit: int | None = None) -> Iterator[AsmMatrix]:
    """Yield every ASM of order ``n`` in ``cls`` exactly once, in lexicographic order.

    ``strategy`` defaults to ``"rows"`` for ALL and ``"domain"`` for HT/QT;
    ``"rows"`` on HT/QT filters the full enumeration.  ``limit`` overrides
    the search bound.
    """
    cls = SymmetryClass(cls)
    if n < 1:
        raise ValueError("order must be positive")
    if strategy is None:
        strategy = "rows" if cls is SymmetryClass.ALL else "domain"
    _check_bound(n, cls, strategy, limit)
    if strategy == "rows":
        flats = kernels.asm_enumerate(n, _SYM_CODE[cls])
    elif strategy == "triangles":
        flats = sorted(_triangle_to_asm(t, n) for t in _monotone_triangles(n))
    elif strategy == "domain":
        if cls is SymmetryClass.QT and n % 4 == 2:
            flats = []
        else:
            flats = _domain_search(n, cls)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    for flat in flats:
        yield _from_flat(flat, n)


# Public name; module code uses ``builtins.enumerate`` explicitly.
enumerate = enumerate_asms  # noqa: A001


def count(n: int, cls: SymmetryClass = SymmetryClass.ALL, **kwargs) -> int:
    """Number of ASMs of order ``n`` in ``cls`` (brute force)."""
    return sum(1 for _ in enumerate_asms(n, cls, **kwargs))


def center_entry(matrix: AsmMatrix) -> int:
    """Center entry of a QT-symmetric ASM of odd order ``2m+1``.

    The result is -1 when ``m`` is odd and +1 when ``m`` is even; a
    violation of that rule raises ``AssertionError``.
    """
    n = matrix.order
    if n % 2 == 0:
        raise ValueError("center_entry needs odd order")
    if not matrix.is_qt():
        raise ValueError("center_entry needs a quarter-turn symmetric matrix")
    m = n // 2
    c = matrix.rows[m][m]
    expected = -1 if m % 2 else 1
    if c != expected:
        raise AssertionError(f"order {n}: center {c}, parity rule says {expected}")
    return c
