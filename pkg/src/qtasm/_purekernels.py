"""Pure-Python search kernels.

Reference versions of the routines in ``_kernels.pyx``; the compiled module
must return identical results in identical order.
"""

from __future__ import annotations

SYM_NONE, SYM_HT, SYM_QT = 0, 1, 2


class SearchLimitExceeded(OverflowError):
    pass


def _symmetric(mat: list[int], n: int, sym: int) -> bool:
    if sym == SYM_HT:
        last = n * n - 1
        return all(mat[k] == mat[last - k] for k in range(n * n))
    if sym == SYM_QT:
        # A[j][n-1-i] == A[i][j]
        return all(mat[j * n + (n - 1 - i)] == mat[i * n + j] for i in range(n) for j in range(n))
    return True


def asm_enumerate(n: int, sym: int = SYM_NONE) -> list[tuple[int, ...]]:
    """All ASMs of order ``n`` as flat row-major tuples, lexicographically ordered.

    Row-by-row backtracking: each column keeps its running sum (0 or 1), each
    row its own; both must stay in {0, 1} and end at 1.  ``sym`` filters the
    completed matrices by half-turn or quarter-turn symmetry.
    """
    if n <= 0:
        return []
    col = [0] * n
    mat = [0] * (n * n)
    out = []
    last_row = n - 1

    def place(i: int, j: int, rowsum: int) -> None:
        if j == n:
            if rowsum != 1:
                return
            if i == last_row:
                if _symmetric(mat, n, sym):
                    out.append(tuple(mat))
                return
            place(i + 1, 0, 0)
            return
        c = col[j]
        for v in (-1, 0, 1):
            cs = c + v
            rs = rowsum + v
            if cs < 0 or cs > 1 or rs < 0 or rs > 1:
                continue
            if i == last_row and cs != 1:
                continue
            if j == n - 1 and rs != 1:
                continue
            mat[i * n + j] = v
            col[j] = cs
            place(i, j + 1, rs)
            col[j] = c
        mat[i * n + j] = 0

    place(0, 0, 0)
    return out


def ice_solutions(nvar: int, slot_var: list[int], slot_sign: list[int], fixed: list[int],
                  max_states: int = -1) -> list[tuple[int, ...]]:
    """All 0/1 assignments of ``nvar`` edge variables obeying the ice rule.

    Vertex ``v`` owns slots ``4v .. 4v+3``; slot ``s`` is inbound exactly when
    ``value[slot_var[s]] == slot_sign[s]``.  Every vertex needs two inbound
    and two outbound slots.  ``fixed[k]`` is -1 for a free variable.  Search
    is depth-first over variables in order of first appearance, with unit
    propagation once a vertex has its two ins or two outs.
    """
    nv = len(slot_var) // 4
    touch: list[list[int]] = [[] for _ in range(nvar)]
    for s, k in enumerate(slot_var):
        v = s // 4
        if not touch[k] or touch[k][-1] != v:
            touch[k].append(v)
    val = list(fixed)
    order = []
    seen = [False] * nvar
    for k in slot_var:
        if val[k] == -1 and not seen[k]:
            seen[k] = True
            order.append(k)
    out: list[tuple[int, ...]] = []

    def check(v: int, trail: list[int], stack: list[tuple[int, int]]) -> bool:
        ni = no = 0
        base = 4 * v
        for s in range(base, base + 4):
            x = val[slot_var[s]]
            if x == -1:
                continue
            if x == slot_sign[s]:
                ni += 1
            else:
                no += 1
        if ni > 2 or no > 2:
            return False
        if ni + no < 4 and (ni == 2 or no == 2):
            for s in range(base, base + 4):
                k = slot_var[s]
                if val[k] == -1:
                    stack.append((k, 1 - slot_sign[s] if ni == 2 else slot_sign[s]))
        return True

    def assign(k: int, b: int, trail: list[int]) -> bool:
        stack = [(k, b)]
        while stack:
            k, b = stack.pop()
            cur = val[k]
            if cur != -1:
                if cur != b:
                    return False
                continue
            val[k] = b
            trail.append(k)
            for v in touch[k]:
                if not check(v, trail, stack):
                    return False
        return True

    # fixed values may already force or contradict
    trail0: list[int] = []
    stack0: list[tuple[int, int]] = []
    for v in range(nv):
        if not check(v, trail0, stack0):
            return out
    for k, b in stack0:
        if not assign(k, b, trail0):
            return out

    def rec(p: int) -> None:
        while p < len(order) and val[order[p]] != -1:
            p += 1
        if p == len(order):
            out.append(tuple(val))
            if 0 <= max_states < len(out):
                raise SearchLimitExceeded(f"more than {max_states} states")
            return
        k = order[p]
        for b in (0, 1):
            trail: list[int] = []
            if assign(k, b, trail):
                rec(p + 1)
            for kk in trail:
                val[kk] = -1

    rec(0)
    return out
