# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels; see ``_purekernels`` for the reference semantics."""

from libc.stdlib cimport malloc, free

from qtasm._purekernels import SearchLimitExceeded

cdef enum:
    SYM_HT = 1
    SYM_QT = 2


cdef bint _symmetric(int* mat, int n, int sym):
    cdef int i, j, last = n * n - 1
    if sym == SYM_HT:
        for i in range(n * n):
            if mat[i] != mat[last - i]:
                return False
    elif sym == SYM_QT:
        for i in range(n):
            for j in range(n):
                if mat[j * n + (n - 1 - i)] != mat[i * n + j]:
                    return False
    return True


cdef class _AsmSearch:
    cdef int n, sym
    cdef int* col
    cdef int* mat
    cdef list out

    def __cinit__(self, int n, int sym):
        self.n = n
        self.sym = sym
        self.col = <int*>malloc(n * sizeof(int))
        self.mat = <int*>malloc(n * n * sizeof(int))
        for i in range(n):
            self.col[i] = 0
        for i in range(n * n):
            self.mat[i] = 0
        self.out = []

    def __dealloc__(self):
        free(self.col)
        free(self.mat)

    cdef void emit(self):
        cdef int k
        self.out.append(tuple([self.mat[k] for k in range(self.n * self.n)]))

    cdef void place(self, int i, int j, int rowsum):
        cdef int n = self.n, c, v, cs, rs
        if j == n:
            if rowsum != 1:
                return
            if i == n - 1:
                if _symmetric(self.mat, n, self.sym):
                    self.emit()
                return
            self.place(i + 1, 0, 0)
            return
        c = self.col[j]
        for v in range(-1, 2):
            cs = c + v
            rs = rowsum + v
            if cs < 0 or cs > 1 or rs < 0 or rs > 1:
                continue
            if i == n - 1 and cs != 1:
                continue
            if j == n - 1 and rs != 1:
                continue
            self.mat[i * n + j] = v
            self.col[j] = cs
            self.place(i, j + 1, rs)
            self.col[j] = c
        self.mat[i * n + j] = 0


def asm_enumerate(int n, int sym=0):
    if n <= 0:
        return []
    cdef _AsmSearch s = _AsmSearch(n, sym)
    s.place(0, 0, 0)
    return s.out


cdef class _IceSearch:
    cdef int nvar, nv, norder, cap
    cdef long max_states
    cdef int* svar
    cdef int* ssign
    cdef int* val
    cdef int* order
    cdef int* touch_start
    cdef int* touch
    cdef int* trail
    cdef int ntrail
    cdef int* stk_k
    cdef int* stk_b
    cdef list out

    def __cinit__(self, int nvar, list slot_var, list slot_sign, list fixed, long max_states):
        cdef int s, k, v, i, nslot = len(slot_var)
        self.nvar = nvar
        self.nv = nslot // 4
        self.max_states = max_states
        self.svar = <int*>malloc((nslot + 1) * sizeof(int))
        self.ssign = <int*>malloc((nslot + 1) * sizeof(int))
        self.val = <int*>malloc((nvar + 1) * sizeof(int))
        self.order = <int*>malloc((nvar + 1) * sizeof(int))
        self.touch_start = <int*>malloc((nvar + 2) * sizeof(int))
        self.touch = <int*>malloc((nslot + 1) * sizeof(int))
        self.trail = <int*>malloc((nvar + 1) * sizeof(int))
        self.cap = 8 * nvar + 16
        self.stk_k = <int*>malloc(self.cap * sizeof(int))
        self.stk_b = <int*>malloc(self.cap * sizeof(int))
        self.out = []
        for s in range(nslot):
            self.svar[s] = slot_var[s]
            self.ssign[s] = slot_sign[s]
        for k in range(nvar):
            self.val[k] = fixed[k]
        # vertex lists per variable (deduplicated, in vertex order)
        cdef list per = [[] for _ in range(nvar)]
        for s in range(nslot):
            k = slot_var[s]
            v = s // 4
            if not per[k] or per[k][len(per[k]) - 1] != v:
                per[k].append(v)
        i = 0
        for k in range(nvar):
            self.touch_start[k] = i
            for v in per[k]:
                self.touch[i] = v
                i += 1
        self.touch_start[nvar] = i
        cdef list seen = [False] * nvar
        self.norder = 0
        for s in range(nslot):
            k = slot_var[s]
            if self.val[k] == -1 and not seen[k]:
                seen[k] = True
                self.order[self.norder] = k
                self.norder += 1
        self.ntrail = 0

    def __dealloc__(self):
        free(self.svar)
        free(self.ssign)
        free(self.val)
        free(self.order)
        free(self.touch_start)
        free(self.touch)
        free(self.trail)
        free(self.stk_k)
        free(self.stk_b)

    cdef int check(self, int v, int* sp):
        cdef int ni = 0, no = 0, s, x, base = 4 * v
        for s in range(base, base + 4):
            x = self.val[self.svar[s]]
            if x == -1:
                continue
            if x == self.ssign[s]:
                ni += 1
            else:
                no += 1
        if ni > 2 or no > 2:
            return 0
        if ni + no < 4 and (ni == 2 or no == 2):
            for s in range(base, base + 4):
                if self.val[self.svar[s]] == -1:
                    self.stk_k[sp[0]] = self.svar[s]
                    self.stk_b[sp[0]] = (1 - self.ssign[s]) if ni == 2 else self.ssign[s]
                    sp[0] += 1
        return 1

    cdef int assign(self, int k, int b):
        cdef int sp = 1, t, cur, v
        self.stk_k[0] = k
        self.stk_b[0] = b
        while sp > 0:
            sp -= 1
            k = self.stk_k[sp]
            b = self.stk_b[sp]
            cur = self.val[k]
            if cur != -1:
                if cur != b:
                    return 0
                continue
            self.val[k] = b
            self.trail[self.ntrail] = k
            self.ntrail += 1
            for t in range(self.touch_start[k], self.touch_start[k + 1]):
                v = self.touch[t]
                if not self.check(v, &sp):
                    return 0
        return 1

    cdef int initial(self):
        cdef int v, sp = 0, n0, i
        for v in range(self.nv):
            if not self.check(v, &sp):
                return 0
        n0 = sp
        cdef list pending = [(self.stk_k[i], self.stk_b[i]) for i in range(n0)]
        for k, b in pending:
            if not self.assign(k, b):
                return 0
        self.ntrail = 0
        return 1

    cdef void rec(self, int p) except *:
        cdef int k, b, mark, i
        while p < self.norder and self.val[self.order[p]] != -1:
            p += 1
        if p == self.norder:
            self.out.append(tuple([self.val[i] for i in range(self.nvar)]))
            if 0 <= self.max_states < len(self.out):
                raise SearchLimitExceeded(f"more than {self.max_states} states")
            return
        k = self.order[p]
        for b in range(2):
            mark = self.ntrail
            if self.assign(k, b):
                self.rec(p + 1)
            while self.ntrail > mark:
                self.ntrail -= 1
                self.val[self.trail[self.ntrail]] = -1


def ice_solutions(int nvar, list slot_var, list slot_sign, list fixed, long max_states=-1):
    cdef _IceSearch s = _IceSearch(nvar, slot_var, slot_sign, fixed, max_states)
    if not s.initial():
        return []
    s.rec(0)
    return s.out
