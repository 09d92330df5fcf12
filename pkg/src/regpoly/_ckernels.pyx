# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_purekernels``; same contracts."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

from .errors import ClosureExceedsCap, CosetOverflow

BACKEND = "cython"


def closure_frames(gens, identity, cap):
    cdef Py_ssize_t ngens = len(gens)
    cdef Py_ssize_t width = len(identity)
    cdef Py_ssize_t k, x, i, j, npts
    cdef int *cur
    cdef int *nxt
    cdef int **gtab
    cdef long ccap = cap

    npts = max([len(g) for g in gens]) if ngens else 0
    gtab = <int **> malloc(ngens * sizeof(int *))
    for k in range(ngens):
        gtab[k] = <int *> malloc(npts * sizeof(int))
        for x in range(len(gens[k])):
            gtab[k][x] = gens[k][x]
    cdef Py_ssize_t alloc = 1024
    cdef int *store = <int *> malloc(alloc * width * sizeof(int))
    cdef bytes key
    for x in range(width):
        store[x] = identity[x]
    key = (<char *> store)[:width * sizeof(int)]
    index = {key: 0}
    cdef Py_ssize_t count = 1
    right = [[] for _ in range(ngens)]
    nxt = <int *> malloc(width * sizeof(int))
    try:
        i = 0
        while i < count:
            for k in range(ngens):
                cur = store + i * width
                for x in range(width):
                    nxt[x] = gtab[k][cur[x]]
                key = (<char *> nxt)[:width * sizeof(int)]
                found = index.get(key)
                if found is None:
                    if count >= ccap:
                        raise ClosureExceedsCap(cap)
                    if count == alloc:
                        alloc *= 2
                        store = <int *> realloc(store, alloc * width * sizeof(int))
                    memcpy(store + count * width, nxt, width * sizeof(int))
                    index[key] = count
                    j = count
                    count += 1
                else:
                    j = found
                right[k].append(j)
            i += 1
        frames = [tuple([store[i * width + x] for x in range(width)])
                  for i in range(count)]
    finally:
        for k in range(ngens):
            free(gtab[k])
        free(gtab)
        free(store)
        free(nxt)
    return frames, right


cdef class _Enumerator:
    cdef int d
    cdef int *tab
    cdef int *p
    cdef Py_ssize_t n, alloc, live, max_cosets
    cdef bint track
    cdef int *ded
    cdef Py_ssize_t nded, dalloc
    cdef int *queue
    cdef Py_ssize_t qalloc
    cdef Py_ssize_t dropped, compact_at

    def __cinit__(self, int ngens, Py_ssize_t max_cosets, compact_at=None):
        self.d = ngens
        self.compact_at = 2 * max_cosets if compact_at is None else compact_at
        self.alloc = 1024
        self.tab = <int *> malloc(self.alloc * ngens * sizeof(int))
        self.p = <int *> malloc(self.alloc * sizeof(int))
        self.n = 1
        self.live = 1
        self.p[0] = 0
        for x in range(ngens):
            self.tab[x] = -1
        self.max_cosets = max_cosets
        self.track = False
        self.dalloc = 1024
        self.ded = <int *> malloc(2 * self.dalloc * sizeof(int))
        self.nded = 0
        self.qalloc = 1024
        self.queue = <int *> malloc(self.qalloc * sizeof(int))
        self.dropped = 0

    def __dealloc__(self):
        free(self.tab)
        free(self.p)
        free(self.ded)
        free(self.queue)

    cdef inline void push(self, int c, int x):
        if self.nded == self.dalloc:
            self.dalloc *= 2
            self.ded = <int *> realloc(self.ded, 2 * self.dalloc * sizeof(int))
        self.ded[2 * self.nded] = c
        self.ded[2 * self.nded + 1] = x
        self.nded += 1

    cdef int define(self, int c, int x) except -1:
        cdef int d = self.d
        cdef int new, y
        if self.live >= self.max_cosets:
            raise CosetOverflow(self.max_cosets)
        if self.n == self.alloc:
            self.alloc *= 2
            self.tab = <int *> realloc(self.tab, self.alloc * d * sizeof(int))
            self.p = <int *> realloc(self.p, self.alloc * sizeof(int))
        new = self.n
        self.n += 1
        self.p[new] = new
        for y in range(d):
            self.tab[new * d + y] = -1
        self.live += 1
        self.tab[c * d + x] = new
        self.tab[new * d + x] = c
        if self.track:
            self.push(c, x)
        return 0

    cdef inline int rep(self, int k):
        cdef int *p = self.p
        cdef int r = k
        cdef int nx
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            nx = p[k]
            p[k] = r
            k = nx
        return r

    cdef inline void merge(self, int k, int l, Py_ssize_t *qlen):
        cdef int a = self.rep(k)
        cdef int b = self.rep(l)
        cdef int t
        if a != b:
            if a > b:
                t = a
                a = b
                b = t
            self.p[b] = a
            self.live -= 1
            if qlen[0] == self.qalloc:
                self.qalloc *= 2
                self.queue = <int *> realloc(self.queue, self.qalloc * sizeof(int))
            self.queue[qlen[0]] = b
            qlen[0] += 1

    cdef void coincidence(self, int a, int b):
        cdef int d = self.d
        cdef Py_ssize_t qlen = 0
        cdef Py_ssize_t i = 0
        cdef int g, x, e, mu, nu
        self.merge(a, b, &qlen)
        while i < qlen:
            g = self.queue[i]
            i += 1
            for x in range(d):
                e = self.tab[g * d + x]
                if e < 0:
                    continue
                self.tab[e * d + x] = -1
                mu = self.rep(g)
                nu = self.rep(e)
                if self.tab[mu * d + x] >= 0:
                    self.merge(nu, self.tab[mu * d + x], &qlen)
                elif self.tab[nu * d + x] >= 0:
                    self.merge(mu, self.tab[nu * d + x], &qlen)
                else:
                    self.tab[mu * d + x] = nu
                    self.tab[nu * d + x] = mu
                    if self.track:
                        self.push(mu, x)

    cdef int scan(self, int a, int *w, int length, bint fill) except -1:
        cdef int d = self.d
        cdef int f = a
        cdef int b = a
        cdef int i = 0
        cdef int j = length - 1
        cdef int t, x
        while True:
            while i <= j:
                t = self.tab[f * d + w[i]]
                if t < 0:
                    break
                f = t
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return 0
            while j >= i:
                t = self.tab[b * d + w[j]]
                if t < 0:
                    break
                b = t
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return 0
            if i == j:
                x = w[i]
                self.tab[f * d + x] = b
                self.tab[b * d + x] = f
                if self.track:
                    self.push(f, x)
                return 0
            if not fill:
                return 0
            self.define(f, w[i])

    cdef Py_ssize_t maybe_compact(self, Py_ssize_t a):
        cdef int d = self.d
        cdef Py_ssize_t c, k, x, nlive, newa, m
        cdef int t
        cdef int *new
        if self.n < self.compact_at:
            return a
        new = <int *> malloc(self.n * sizeof(int))
        nlive = 0
        newa = -1
        for c in range(self.n):
            if self.p[c] == c:
                if newa < 0 and c >= a:
                    newa = nlive
                new[c] = nlive
                nlive += 1
            else:
                new[c] = -1
        if newa < 0:
            newa = nlive
        for c in range(self.n):
            k = new[c]
            if k < 0:
                continue
            for x in range(d):
                t = self.tab[c * d + x]
                self.tab[k * d + x] = new[t] if t >= 0 else -1
        for k in range(nlive):
            self.p[k] = k
        m = 0
        for k in range(self.nded):
            c = new[self.ded[2 * k]]
            if c >= 0:
                self.ded[2 * m] = c
                self.ded[2 * m + 1] = self.ded[2 * k + 1]
                m += 1
        self.nded = m
        self.dropped += self.n - nlive
        self.n = nlive
        self.compact_at = max(self.compact_at, 2 * nlive)
        free(new)
        return newa

    def compact(self):
        cdef int d = self.d
        cdef Py_ssize_t c
        live = [c for c in range(self.n) if self.p[c] == c]
        new = {c: k for k, c in enumerate(live)}
        cols = [[new[self.tab[c * d + x]] for c in live] for x in range(d)]
        return cols, self.n + self.dropped


cdef class _Words:
    """Relators flattened into one C buffer with offsets."""
    cdef int *data
    cdef int *start
    cdef int *length
    cdef int count

    def __cinit__(self, words):
        words = [list(w) for w in words if len(w)]
        total = sum(len(w) for w in words)
        self.count = len(words)
        self.data = <int *> malloc((total + 1) * sizeof(int))
        self.start = <int *> malloc((self.count + 1) * sizeof(int))
        self.length = <int *> malloc((self.count + 1) * sizeof(int))
        cdef int pos = 0
        cdef int k = 0
        for w in words:
            self.start[k] = pos
            self.length[k] = len(w)
            for x in w:
                self.data[pos] = x
                pos += 1
            k += 1

    def __dealloc__(self):
        free(self.data)
        free(self.start)
        free(self.length)


def enumerate_hlt(ngens, relators, subgroup, max_cosets, compact_at=None):
    cdef _Enumerator en = _Enumerator(ngens, max_cosets, compact_at)
    cdef _Words rels = _Words(relators)
    cdef _Words sub = _Words(subgroup)
    cdef int k, x
    cdef Py_ssize_t a
    cdef int d = ngens
    for k in range(sub.count):
        en.scan(0, sub.data + sub.start[k], sub.length[k], True)
    a = 0
    while a < en.n:
        a = en.maybe_compact(a)
        if a >= en.n:
            break
        for k in range(rels.count):
            if en.p[a] != a:
                break
            en.scan(a, rels.data + rels.start[k], rels.length[k], True)
        if en.p[a] == a:
            for x in range(d):
                if en.tab[a * d + x] < 0:
                    en.define(a, x)
        a += 1
    return en.compact()


cdef int _process(_Enumerator en, list buckets) except -1:
    cdef int d = en.d
    cdef int a, b, x, k
    cdef _Words ws
    while en.nded > 0:
        en.nded -= 1
        a = en.ded[2 * en.nded]
        x = en.ded[2 * en.nded + 1]
        ws = buckets[x]
        if en.p[a] == a:
            for k in range(ws.count):
                en.scan(a, ws.data + ws.start[k], ws.length[k], False)
                if en.p[a] != a:
                    break
        b = en.tab[a * d + x] if en.p[a] == a else -1
        if b >= 0 and en.p[b] == b:
            for k in range(ws.count):
                en.scan(b, ws.data + ws.start[k], ws.length[k], False)
                if en.p[b] != b:
                    break
    return 0


def enumerate_felsch(ngens, relators, subgroup, max_cosets, compact_at=None):
    from ._purekernels import cyclic_conjugates

    cdef _Enumerator en = _Enumerator(ngens, max_cosets, compact_at)
    en.track = True
    buckets = [_Words(ws) for ws in cyclic_conjugates(ngens, relators)]
    cdef _Words sub = _Words(subgroup)
    cdef int k, x
    cdef Py_ssize_t a
    cdef int d = ngens
    for k in range(sub.count):
        en.scan(0, sub.data + sub.start[k], sub.length[k], True)
    _process(en, buckets)
    a = 0
    while a < en.n:
        a = en.maybe_compact(a)
        if a >= en.n:
            break
        for x in range(d):
            if en.p[a] != a:
                break
            if en.tab[a * d + x] < 0:
                en.define(a, x)
                _process(en, buckets)
        a += 1
    return en.compact()
