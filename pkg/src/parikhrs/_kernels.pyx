# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract and iteration order as ``_pykernels``."""

from libc.stdint cimport uint64_t, UINT64_MAX
from libc.stdlib cimport malloc, free
from libc.string cimport memcmp, memcpy, memset
from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING

cdef enum:
    MAX_DIM = 9


def count_subword(bytes w, bytes u):
    cdef Py_ssize_t n = len(w), m = len(u), i, k
    cdef const unsigned char* pw = w
    cdef const unsigned char* pu = u
    cdef uint64_t* dp
    cdef uint64_t v
    cdef unsigned char c
    if m == 0:
        return 1
    if m > n:
        return 0
    dp = <uint64_t*>malloc((m + 1) * sizeof(uint64_t))
    if dp == NULL:
        raise MemoryError()
    try:
        memset(dp, 0, (m + 1) * sizeof(uint64_t))
        dp[0] = 1
        for i in range(n):
            c = pw[i]
            for k in range(m - 1, -1, -1):
                if pu[k] == c:
                    v = dp[k]
                    if dp[k + 1] > UINT64_MAX - v:
                        raise OverflowError("subword count exceeds 64-bit range")
                    dp[k + 1] += v
        return dp[m]
    finally:
        free(dp)


def parikh_entries(bytes w, int s):
    cdef uint64_t m[MAX_DIM][MAX_DIM]
    cdef Py_ssize_t n = len(w), t
    cdef const unsigned char* pw = w
    cdef int i, j, q
    if s + 1 > MAX_DIM:
        raise ValueError("alphabet too large")
    for i in range(s + 1):
        for j in range(s + 1):
            m[i][j] = 1 if i == j else 0
    for t in range(n):
        q = pw[t]
        if q >= s:
            raise ValueError("letter index out of range")
        for i in range(q + 1):
            if m[i][q + 1] > UINT64_MAX - m[i][q]:
                raise OverflowError("Parikh matrix entry exceeds 64-bit range")
            m[i][q + 1] += m[i][q]
    out = []
    for i in range(s + 1):
        for j in range(i + 1, s + 1):
            out.append(m[i][j])
    return tuple(out)


cdef class RuleSet:
    """Directed rules ``lp x ls -> rp x rs`` held as C pointers."""

    cdef readonly tuple rules
    cdef list _keep
    cdef int nrules
    cdef const unsigned char** lp
    cdef const unsigned char** ls
    cdef const unsigned char** rp
    cdef const unsigned char** rs
    cdef Py_ssize_t* llp
    cdef Py_ssize_t* lls
    cdef Py_ssize_t* lrp
    cdef Py_ssize_t* lrs
    cdef unsigned char* gamma      # nrules * 256 membership table
    cdef unsigned char* has_gamma

    def __cinit__(self, rules):
        items = []
        for lp, ls, rp, rs, g in rules:
            items.append((bytes(lp), bytes(ls), bytes(rp), bytes(rs),
                          None if g is None else bytes(g)))
        self.rules = tuple(items)
        self.nrules = len(items)
        self._keep = []
        n = max(self.nrules, 1)
        self.lp = <const unsigned char**>malloc(n * sizeof(void*))
        self.ls = <const unsigned char**>malloc(n * sizeof(void*))
        self.rp = <const unsigned char**>malloc(n * sizeof(void*))
        self.rs = <const unsigned char**>malloc(n * sizeof(void*))
        self.llp = <Py_ssize_t*>malloc(n * sizeof(Py_ssize_t))
        self.lls = <Py_ssize_t*>malloc(n * sizeof(Py_ssize_t))
        self.lrp = <Py_ssize_t*>malloc(n * sizeof(Py_ssize_t))
        self.lrs = <Py_ssize_t*>malloc(n * sizeof(Py_ssize_t))
        self.gamma = <unsigned char*>malloc(n * 256)
        self.has_gamma = <unsigned char*>malloc(n)
        if (self.lp == NULL or self.ls == NULL or self.rp == NULL or self.rs == NULL
                or self.llp == NULL or self.lls == NULL or self.lrp == NULL
                or self.lrs == NULL or self.gamma == NULL or self.has_gamma == NULL):
            raise MemoryError()
        memset(self.gamma, 0, n * 256)
        for r, (a, b2, c, d, g) in enumerate(items):
            self._keep.extend((a, b2, c, d))
            self.lp[r] = a
            self.ls[r] = b2
            self.rp[r] = c
            self.rs[r] = d
            self.llp[r] = len(a)
            self.lls[r] = len(b2)
            self.lrp[r] = len(c)
            self.lrs[r] = len(d)
            if g is None:
                self.has_gamma[r] = 0
            else:
                self.has_gamma[r] = 1
                for x in g:
                    self.gamma[r * 256 + x] = 1

    def __dealloc__(self):
        free(self.lp)
        free(self.ls)
        free(self.rp)
        free(self.rs)
        free(self.llp)
        free(self.lls)
        free(self.lrp)
        free(self.lrs)
        free(self.gamma)
        free(self.has_gamma)

    def __len__(self):
        return self.nrules

    def __reduce__(self):
        return (RuleSet, (self.rules,))

    cdef bytes _build(self, const unsigned char* pw, Py_ssize_t n, int r,
                      Py_ssize_t i, Py_ssize_t j):
        # result = w[:i] + rp + w[i+llp:j] + rs + w[j+lls:]
        cdef Py_ssize_t x = j - i - self.llp[r]
        cdef Py_ssize_t tail = n - j - self.lls[r]
        cdef Py_ssize_t size = i + self.lrp[r] + x + self.lrs[r] + tail
        cdef bytes out = PyBytes_FromStringAndSize(NULL, size)
        cdef char* p = PyBytes_AS_STRING(out)
        memcpy(p, pw, i)
        p += i
        memcpy(p, self.rp[r], self.lrp[r])
        p += self.lrp[r]
        memcpy(p, pw + i + self.llp[r], x)
        p += x
        memcpy(p, self.rs[r], self.lrs[r])
        p += self.lrs[r]
        memcpy(p, pw + j + self.lls[r], tail)
        return out

    cdef list _scan(self, bytes w, bint detailed):
        cdef const unsigned char* pw = w
        cdef Py_ssize_t n = len(w), i, j, lo
        cdef int r
        cdef bytes out
        cdef list found = []
        cdef set seen
        if not detailed:
            seen = set()
        for r in range(self.nrules):
            lo = n - self.llp[r] - self.lls[r]
            for i in range(lo + 1):
                if memcmp(pw + i, self.lp[r], self.llp[r]) != 0:
                    continue
                j = i + self.llp[r]
                while True:
                    if j + self.lls[r] <= n and memcmp(pw + j, self.ls[r], self.lls[r]) == 0:
                        if not self._same(pw, n, r, i, j):
                            out = self._build(pw, n, r, i, j)
                            if detailed:
                                found.append((out, r, i, j - i - self.llp[r]))
                            elif out not in seen:
                                seen.add(out)
                                found.append(out)
                    if self.has_gamma[r] and j < n and self.gamma[r * 256 + pw[j]]:
                        j += 1
                    else:
                        break
        return found

    cdef bint _same(self, const unsigned char* pw, Py_ssize_t n, int r,
                    Py_ssize_t i, Py_ssize_t j):
        # True when the instantiation leaves w unchanged
        cdef Py_ssize_t x = j - i - self.llp[r]
        cdef const unsigned char* seg = pw + i
        cdef Py_ssize_t span = self.llp[r] + x + self.lls[r]
        if self.lrp[r] + x + self.lrs[r] != span:
            return False
        # compare rp + infix + rs against the matched window w[i:i+span]
        if memcmp(self.rp[r], seg, self.lrp[r]) != 0:
            return False
        if memcmp(pw + i + self.llp[r], seg + self.lrp[r], x) != 0:
            return False
        return memcmp(self.rs[r], seg + self.lrp[r] + x, self.lrs[r]) == 0

    def expand(self, bytes w):
        return self._scan(w, True)

    def successors(self, bytes w):
        return self._scan(w, False)

    def bfs(self, bytes start, Py_ssize_t radius, Py_ssize_t cap):
        cdef dict dist = {start: 0}
        cdef Py_ssize_t d, head = 0
        cdef list queue = [start]
        cdef bytes w, r
        while head < len(queue):
            w = queue[head]
            head += 1
            d = dist[w]
            if 0 <= radius <= d:
                continue
            for r in self._scan(w, False):
                if r not in dist:
                    dist[r] = d + 1
                    if len(dist) > cap:
                        return dist, False
                    queue.append(r)
        return dist, True
