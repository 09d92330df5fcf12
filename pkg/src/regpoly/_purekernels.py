"""Pure-Python versions of the hot loops.

These are the reference kernels; ``_ckernels`` mirrors them in Cython and
must produce identical output.  Every generator handled here is an
involution, so a coset table needs one column per generator and the inverse
column is the column itself.
"""

from .errors import ClosureExceedsCap, CosetOverflow

BACKEND = "python"


def closure_frames(gens, identity, cap):
    """Breadth-first closure of a group acting on points.

    ``gens`` are image lists (``g[x]`` is the image of point ``x``) and an
    element is identified by its *frame*, the images of a fixed tuple of base
    points; ``identity`` is the base itself.  Right multiplication by ``g``
    maps frame ``f`` to ``(g[x] for x in f)``.

    Returns ``(frames, right)`` where ``right[k][i]`` is the index of
    ``frames[i] * gens[k]``.
    """
    identity = tuple(identity)
    index = {identity: 0}
    frames = [identity]
    right = [[] for _ in gens]
    pairs = list(zip(gens, right))
    i = 0
    while i < len(frames):
        f = frames[i]
        for g, col in pairs:
            h = tuple([g[x] for x in f])
            j = index.get(h)
            if j is None:
                j = len(frames)
                if j >= cap:
                    raise ClosureExceedsCap(cap)
                index[h] = j
                frames.append(h)
            col.append(j)
        i += 1
    return frames, right


class _Enumerator:
    """Coset enumeration state: a flat table plus union-find parents."""

    def __init__(self, ngens, max_cosets, compact_at=None):
        self.d = ngens
        self.compact_at = 2 * max_cosets if compact_at is None else compact_at
        self.tab = [-1] * ngens
        self.p = [0]
        self.live = 1
        self.max_cosets = max_cosets
        self.deductions = []
        self.track = False
        self.dropped = 0

    def define(self, c, x):
        if self.live >= self.max_cosets:
            raise CosetOverflow(self.max_cosets)
        d = self.d
        new = len(self.p)
        self.p.append(new)
        self.tab.extend([-1] * d)
        self.live += 1
        self.tab[c * d + x] = new
        self.tab[new * d + x] = c
        if self.track:
            self.deductions.append((c, x))

    def rep(self, k):
        p = self.p
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            k, p[k] = p[k], r
        return r

    def merge(self, k, l, queue):
        a = self.rep(k)
        b = self.rep(l)
        if a != b:
            if a > b:
                a, b = b, a
            self.p[b] = a
            self.live -= 1
            queue.append(b)

    def coincidence(self, a, b):
        d = self.d
        tab = self.tab
        queue = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(d):
                e = tab[g * d + x]
                if e < 0:
                    continue
                tab[e * d + x] = -1
                mu = self.rep(g)
                nu = self.rep(e)
                if tab[mu * d + x] >= 0:
                    self.merge(nu, tab[mu * d + x], queue)
                elif tab[nu * d + x] >= 0:
                    self.merge(mu, tab[nu * d + x], queue)
                else:
                    tab[mu * d + x] = nu
                    tab[nu * d + x] = mu
                    if self.track:
                        self.deductions.append((mu, x))

    def scan(self, a, w, fill):
        d = self.d
        tab = self.tab
        f = a
        b = a
        i = 0
        j = len(w) - 1
        while True:
            while i <= j:
                t = tab[f * d + w[i]]
                if t < 0:
                    break
                f = t
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                t = tab[b * d + w[j]]
                if t < 0:
                    break
                b = t
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                x = w[i]
                tab[f * d + x] = b
                tab[b * d + x] = f
                if self.track:
                    self.deductions.append((f, x))
                return
            if not fill:
                return
            self.define(f, w[i])

    def process_deductions(self, conjugates):
        d = self.d
        p = self.p
        stack = self.deductions
        while stack:
            a, x = stack.pop()
            if p[a] == a:
                for w in conjugates[x]:
                    self.scan(a, w, False)
                    if p[a] != a:
                        break
            b = self.tab[a * d + x] if p[a] == a else -1
            if b >= 0 and p[b] == b:
                for w in conjugates[x]:
                    self.scan(b, w, False)
                    if p[b] != b:
                        break

    def maybe_compact(self, a):
        """Drop dead cosets once they dominate storage; returns the new
        position of scan pointer ``a``.  Only call between scans."""
        if len(self.p) < self.compact_at:
            return a
        d = self.d
        old_p, old_tab = self.p, self.tab
        live = [c for c in range(len(old_p)) if old_p[c] == c]
        new = [-1] * len(old_p)
        for k, c in enumerate(live):
            new[c] = k
        tab = []
        for c in live:
            for x in range(d):
                t = old_tab[c * d + x]
                tab.append(new[t] if t >= 0 else -1)
        self.tab = tab
        self.p = list(range(len(live)))
        self.deductions = [(new[c], x) for c, x in self.deductions if new[c] >= 0]
        self.dropped += len(old_p) - len(live)
        self.compact_at = max(self.compact_at, 2 * len(live))
        return sum(1 for c in live if c < a)

    def compact(self):
        d = self.d
        live = [c for c in range(len(self.p)) if self.p[c] == c]
        new = {c: k for k, c in enumerate(live)}
        cols = [[new[self.tab[c * d + x]] for c in live] for x in range(d)]
        return cols, len(self.p) + self.dropped


def enumerate_hlt(ngens, relators, subgroup, max_cosets, compact_at=None):
    """HLT enumeration: scan-and-fill every relator at every live coset.

    Returns ``(columns, total_defined)``; ``columns[x][c]`` is ``c`` times
    generator ``x`` in the compacted table.  Dead cosets are purged whenever
    the table holds ``compact_at`` rows (default ``2 * max_cosets``).
    """
    en = _Enumerator(ngens, max_cosets, compact_at)
    rels = [list(w) for w in relators if w]
    for w in subgroup:
        if w:
            en.scan(0, list(w), True)
    a = 0
    while a < len(en.p):
        a = en.maybe_compact(a)
        p = en.p
        if a >= len(p):
            break
        for w in rels:
            if p[a] != a:
                break
            en.scan(a, w, True)
        if p[a] == a:
            for x in range(ngens):
                if en.tab[a * ngens + x] < 0:
                    en.define(a, x)
        a += 1
    return en.compact()


def enumerate_felsch(ngens, relators, subgroup, max_cosets, compact_at=None):
    """Felsch enumeration: define in order, propagate deductions eagerly."""
    en = _Enumerator(ngens, max_cosets, compact_at)
    en.track = True
    conjugates = cyclic_conjugates(ngens, relators)
    for w in subgroup:
        if w:
            en.scan(0, list(w), True)
    en.process_deductions(conjugates)
    a = 0
    while a < len(en.p):
        a = en.maybe_compact(a)
        p = en.p
        if a >= len(p):
            break
        for x in range(ngens):
            if p[a] != a:
                break
            if en.tab[a * ngens + x] < 0:
                en.define(a, x)
                en.process_deductions(conjugates)
        a += 1
    return en.compact()


def cyclic_conjugates(ngens, relators):
    """Distinct cyclic rotations of each relator, bucketed by first letter."""
    seen = set()
    out = [[] for _ in range(ngens)]
    for w in relators:
        w = tuple(w)
        for s in range(len(w)):
            c = w[s:] + w[:s]
            if c not in seen:
                seen.add(c)
                out[c[0]].append(list(c))
    return out
