# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t, uint32_t

DEF MAXR = 64
DEF MAXC = 64


cdef inline int _popcount(uint32_t x) nogil:
    return __builtin_popcount(x)

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


def count_by_composition(int m, weak, strict):
    if m == 0:
        return [1]
    if m > 24:
        raise ValueError("at most 24 elements")
    cdef uint32_t full = (1u << m) - 1
    cdef uint32_t *w = <uint32_t *> malloc(m * sizeof(uint32_t))
    cdef uint32_t *s = <uint32_t *> malloc(m * sizeof(uint32_t))
    cdef int64_t *offset = <int64_t *> malloc((<size_t> full + 1) * sizeof(int64_t))
    cdef int64_t *dp = NULL
    cdef int x, sz, tz
    cdef uint32_t mask, ideal, avail, block, target, b, preds
    cdef int64_t total = 0, c, off, width
    cdef int64_t *row
    cdef int64_t *trow
    cdef bint ok
    try:
        for x in range(m):
            w[x] = <uint32_t> weak[x]
            s[x] = <uint32_t> strict[x]
        # index the order ideals; each gets a row of 2**(size-1) counts
        for mask in range(full + 1):
            ok = True
            b = mask
            while b:
                x = __builtin_ctz(b)
                if (w[x] | s[x]) & ~mask:
                    ok = False
                    break
                b &= b - 1
            if ok:
                offset[mask] = total
                sz = _popcount(mask)
                total += 1 if sz == 0 else (1 << (sz - 1))
            else:
                offset[mask] = -1
        dp = <int64_t *> calloc(total, sizeof(int64_t))
        dp[offset[0]] = 1
        for ideal in range(full + 1):
            if offset[ideal] < 0 or ideal == full:
                continue
            sz = _popcount(ideal)
            row = dp + offset[ideal]
            width = 1 if sz == 0 else (1 << (sz - 1))
            ok = False
            for c in range(width):
                if row[c]:
                    ok = True
                    break
            if not ok:
                continue
            avail = 0
            for x in range(m):
                if not ((ideal >> x) & 1) and (s[x] & ~ideal) == 0:
                    avail |= 1u << x
            block = avail
            while block:
                target = ideal | block
                ok = True
                b = block
                while b:
                    x = __builtin_ctz(b)
                    if w[x] & ~target:
                        ok = False
                        break
                    b &= b - 1
                if ok and offset[target] >= 0:
                    trow = dp + offset[target]
                    if sz == 0:
                        trow[0] += 1
                    else:
                        off = 1 << (sz - 1)
                        for c in range(off):
                            trow[c + off] += row[c]
                block = (block - 1) & avail
        out = [dp[offset[full] + c] for c in range(1 << (m - 1))]
    finally:
        free(w)
        free(s)
        free(offset)
        if dp != NULL:
            free(dp)
    return out


cdef class _LRFiller:
    cdef int rows
    cdef int outer[MAXR]
    cdef int inner[MAXR]
    cdef int counts[MAXR + 2]
    cdef int before[MAXR][MAXR + 2]
    cdef int T[MAXR][MAXC + 1]
    cdef dict result

    def __init__(self, outer, inner):
        cdef int i, j
        self.rows = len(outer)
        if self.rows > MAXR or (self.rows and outer[0] > MAXC):
            raise ValueError("shape too large for the compiled kernel")
        for i in range(self.rows):
            self.outer[i] = outer[i]
            self.inner[i] = inner[i] if i < len(inner) else 0
            for j in range(MAXC + 1):
                self.T[i][j] = 0
        for i in range(MAXR + 2):
            self.counts[i] = 0
        self.result = {}

    cdef int fill_row(self, int i) except -1:
        cdef int v
        if i == self.rows:
            key = tuple([self.counts[v] for v in range(1, self.rows + 1) if self.counts[v]])
            self.result[key] = self.result.get(key, 0) + 1
            return 0
        for v in range(self.rows + 2):
            self.before[i][v] = self.counts[v]
        return self.place(i, 1, self.inner[i])

    cdef int place(self, int i, int v, int col) except -1:
        cdef int hi = self.outer[i]
        cdef int room, limit, a, j
        if col == hi:
            return self.fill_row(i + 1)
        if v > i + 1:
            return 0
        room = hi - col
        if v == 1:
            limit = room
        else:
            limit = self.before[i][v - 1] - self.before[i][v]
            if limit > room:
                limit = room
        a = limit
        while a >= 0:
            # the row above increases left to right: test its rightmost cell
            if a > 0 and i > 0 and self.T[i - 1][col + a] >= v:
                a -= 1
                continue
            for j in range(col + 1, col + a + 1):
                self.T[i][j] = v
            self.counts[v] += a
            self.place(i, v + 1, col + a)
            self.counts[v] -= a
            for j in range(col + 1, col + a + 1):
                self.T[i][j] = 0
            a -= 1
        return 0


def lr_expand(outer, inner):
    filler = _LRFiller(outer, inner)
    filler.fill_row(0)
    return filler.result
