# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Same contract as _fallback.type_histogram, but the class stream and the
type walks run on flat C arrays: cycle structures are placed by leader
position, labels are filled per cycle with the last label solved from
the required cycle-product class, and only the u-labels change per
leaf (the permutations, and hence the cycle layout of u, are fixed per
structure).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc


cdef int * _alloc(Py_ssize_t count) except NULL:
    cdef int *p = <int *> malloc(count * sizeof(int) if count > 0 else sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


cdef class _Kernel:
    cdef int n, go, ncls, side, K, nkinds, filled, width, ucyc_cnt
    cdef int *mul
    cdef int *inv
    cdef int *cls_of
    cdef int *members
    cdef int *mem_off
    cdef int *kind_len
    cdef int *kind_cls
    cdef int *kind_cnt
    cdef int *zlab
    cdef int *zperm
    cdef int *zpinv
    cdef int *used
    cdef int *cyc_pos
    cdef int *cyc_start
    cdef int *placed_len
    cdef int *placed_cls
    cdef int *wlab
    cdef int *wperm
    cdef int *wpinv
    cdef int *ulab
    cdef int *uperm
    cdef int *ucyc_pos
    cdef int *ucyc_len
    cdef int *visited
    cdef unsigned char *counts
    cdef dict hist

    def __cinit__(self, int n, int go, int ncls, int side,
                  mul, inv, cls_of, members, mem_off,
                  kind_len, kind_cls, kind_cnt, zlab, zperm):
        cdef int i
        self.n = n
        self.go = go
        self.ncls = ncls
        self.side = side
        self.width = n + 1
        self.nkinds = len(kind_len)
        self.filled = 0
        self.hist = {}
        self.mul = _alloc(go * go)
        self.inv = _alloc(go)
        self.cls_of = _alloc(go)
        self.members = _alloc(len(members))
        self.mem_off = _alloc(ncls + 1)
        self.kind_len = _alloc(self.nkinds)
        self.kind_cls = _alloc(self.nkinds)
        self.kind_cnt = _alloc(self.nkinds)
        self.zlab = _alloc(n)
        self.zperm = _alloc(n)
        self.zpinv = _alloc(n)
        self.used = _alloc(n)
        self.cyc_pos = _alloc(n)
        self.placed_len = _alloc(n)
        self.placed_cls = _alloc(n)
        self.cyc_start = _alloc(n + 1)
        self.wlab = _alloc(n)
        self.wperm = _alloc(n)
        self.wpinv = _alloc(n)
        self.ulab = _alloc(n)
        self.uperm = _alloc(n)
        self.ucyc_pos = _alloc(n)
        self.ucyc_len = _alloc(n)
        self.visited = _alloc(n)
        self.counts = <unsigned char *> malloc(ncls * self.width if ncls * self.width > 0 else 1)
        if self.counts == NULL:
            raise MemoryError()
        for i in range(go * go):
            self.mul[i] = mul[i]
        for i in range(go):
            self.inv[i] = inv[i]
            self.cls_of[i] = cls_of[i]
        for i in range(len(members)):
            self.members[i] = members[i]
        for i in range(ncls + 1):
            self.mem_off[i] = mem_off[i]
        self.K = 0
        for i in range(self.nkinds):
            self.kind_len[i] = kind_len[i]
            self.kind_cls[i] = kind_cls[i]
            self.kind_cnt[i] = kind_cnt[i]
            self.K += kind_cnt[i]
        for i in range(n):
            self.zlab[i] = zlab[i]
            self.zperm[i] = zperm[i]
            self.used[i] = 0
        for i in range(n):
            self.zpinv[self.zperm[i]] = i

    def __dealloc__(self):
        free(self.mul)
        free(self.inv)
        free(self.cls_of)
        free(self.members)
        free(self.mem_off)
        free(self.kind_len)
        free(self.kind_cls)
        free(self.kind_cnt)
        free(self.zlab)
        free(self.zperm)
        free(self.zpinv)
        free(self.used)
        free(self.cyc_pos)
        free(self.placed_len)
        free(self.placed_cls)
        free(self.cyc_start)
        free(self.wlab)
        free(self.wperm)
        free(self.wpinv)
        free(self.ulab)
        free(self.uperm)
        free(self.ucyc_pos)
        free(self.ucyc_len)
        free(self.visited)
        free(self.counts)

    def run(self):
        self.place(0)
        return self.hist

    cdef void place(self, int depth):
        # pick the smallest unused position as the leader of the next
        # cycle, so every cycle set is produced exactly once
        cdef int leader, kind
        if depth == self.K:
            self.finish_structure()
            return
        leader = 0
        while self.used[leader]:
            leader += 1
        self.cyc_start[depth] = self.filled
        self.used[leader] = 1
        self.cyc_pos[self.filled] = leader
        self.filled += 1
        for kind in range(self.nkinds):
            if self.kind_cnt[kind] == 0:
                continue
            self.kind_cnt[kind] -= 1
            self.placed_len[depth] = self.kind_len[kind]
            self.placed_cls[depth] = self.kind_cls[kind]
            self.choose(depth, 1)
            self.kind_cnt[kind] += 1
        self.filled -= 1
        self.used[leader] = 0

    cdef void choose(self, int depth, int t):
        # ordered tail of the current cycle: any unused position may
        # follow, the leader stays minimal
        cdef int q
        if t == self.placed_len[depth]:
            self.place(depth + 1)
            return
        for q in range(self.n):
            if not self.used[q]:
                self.used[q] = 1
                self.cyc_pos[self.filled] = q
                self.filled += 1
                self.choose(depth, t + 1)
                self.filled -= 1
                self.used[q] = 0

    cdef void finish_structure(self):
        # w's permutation, and therefore u's cycle layout, depend only
        # on the placed structure; compute them once per structure
        cdef int k, j, L, start, i, idx, side = self.side
        for k in range(self.K):
            start = self.cyc_start[k]
            L = self.placed_len[k]
            for j in range(L):
                self.wperm[self.cyc_pos[start + j]] = self.cyc_pos[start + (j + 1) % L]
        for i in range(self.n):
            self.wpinv[self.wperm[i]] = i
        if side == 0:
            for i in range(self.n):
                self.uperm[i] = self.zperm[self.wpinv[i]]
        elif side == 1:
            for i in range(self.n):
                self.uperm[i] = self.wpinv[self.zperm[i]]
        elif side == 2:
            for i in range(self.n):
                self.uperm[i] = self.wperm[self.zperm[i]]
        else:
            for i in range(self.n):
                self.uperm[i] = self.zperm[self.wperm[i]]
        for i in range(self.n):
            self.visited[i] = 0
        idx = 0
        self.ucyc_cnt = 0
        for start in range(self.n):
            if self.visited[start]:
                continue
            L = 0
            j = start
            while True:
                self.visited[j] = 1
                self.ucyc_pos[idx] = j
                idx += 1
                L += 1
                j = self.uperm[j]
                if j == start:
                    break
            self.ucyc_len[self.ucyc_cnt] = L
            self.ucyc_cnt += 1
        if self.K == 0:
            self.leaf()
        else:
            self.labels_rec(0, 0, 0)

    cdef void labels_rec(self, int k, int s, int pfx):
        # pfx is the cycle product of the labels already placed in this
        # cycle; the last slot is solved so the product lands in the
        # required class
        cdef int L = self.placed_len[k]
        cdef int pos = self.cyc_pos[self.cyc_start[k] + s]
        cdef int g, j, ip, c
        if s == L - 1:
            ip = self.inv[pfx]
            c = self.placed_cls[k]
            for j in range(self.mem_off[c], self.mem_off[c + 1]):
                self.wlab[pos] = self.mul[ip * self.go + self.members[j]]
                if k + 1 == self.K:
                    self.leaf()
                else:
                    self.labels_rec(k + 1, 0, 0)
        else:
            for g in range(self.go):
                self.wlab[pos] = g
                self.labels_rec(k, s + 1, self.mul[pfx * self.go + g])

    cdef void leaf(self):
        cdef int i, j, k2, L, acc, idx, a, b
        cdef int n = self.n, go = self.go, side = self.side
        cdef bytes key
        if side == 0:
            for i in range(n):
                a = self.inv[self.wlab[self.wperm[self.zpinv[i]]]]
                self.ulab[i] = self.mul[a * go + self.zlab[i]]
        elif side == 1:
            for i in range(n):
                b = self.wperm[i]
                self.ulab[i] = self.mul[self.zlab[b] * go + self.inv[self.wlab[b]]]
        elif side == 2:
            for i in range(n):
                self.ulab[i] = self.mul[self.zlab[self.wpinv[i]] * go + self.wlab[i]]
        else:
            for i in range(n):
                self.ulab[i] = self.mul[self.wlab[self.zpinv[i]] * go + self.zlab[i]]
        for i in range(self.ncls * self.width):
            self.counts[i] = 0
        idx = 0
        for k2 in range(self.ucyc_cnt):
            L = self.ucyc_len[k2]
            acc = self.ulab[self.ucyc_pos[idx]]
            for j in range(1, L):
                acc = self.mul[acc * go + self.ulab[self.ucyc_pos[idx + j]]]
            self.counts[self.cls_of[acc] * self.width + L] += 1
            idx += L
        key = PyBytes_FromStringAndSize(<char *> self.counts, self.ncls * self.width)
        if key in self.hist:
            self.hist[key] += 1
        else:
            self.hist[key] = 1


def type_histogram(int n, int go, int ncls, int side,
                   mul, inv, cls_of, members, mem_off,
                   kind_len, kind_cls, kind_cnt, zlab, zperm):
    """Histogram {packed type key: count} over one streamed class.

    All table arguments are flat Python lists of ints; see
    kernels.type_histogram for the driver that prepares them.
    """
    kern = _Kernel(n, go, ncls, side, mul, inv, cls_of, members, mem_off,
                   kind_len, kind_cls, kind_cnt, zlab, zperm)
    return kern.run()
