"""Truncated, degreewise-finite simplicial sets.

A ``TruncSSet`` stores simplices up to a fixed dimension ``cap`` as dense
integer ids per degree, together with explicit face and degeneracy tables.
All constructions in this package (products, pushouts, exponentials, nerves,
path spaces, ...) are computed degreewise on these tables, which keeps every
operation exact below the cap.

Conventions:

* ``faces[n][i][s]`` is ``d_i(s)`` for a degree-``n`` simplex ``s``
  (``1 <= n <= cap``, ``0 <= i <= n``).
* ``degens[n][i][s]`` is ``s_i(s)`` (``0 <= n < cap``, ``0 <= i <= n``).
* Simplex identity is id equality within a fixed ``TruncSSet``; labels are
  kept only for reports and never compared.
"""

from __future__ import annotations

import itertools


class SSetError(Exception):
    pass


class TruncationError(SSetError):
    """Raised when a request exceeds what the truncation can answer exactly."""


class TruncSSet:
    def __init__(self, cap, counts, faces, degens, labels=None):
        if cap < 0:
            raise SSetError("cap must be >= 0")
        if len(counts) != cap + 1:
            raise SSetError("counts must have cap+1 entries")
        self.cap = cap
        self.counts = list(counts)
        self.faces = faces      # faces[n] for 1<=n<=cap, list of n+1 tables
        self.degens = degens    # degens[n] for 0<=n<cap, list of n+1 tables
        self.labels = labels    # optional per-degree label lists
        self._nondeg_cache = {}
        self._degflag_cache = {}

    # -- basic access ------------------------------------------------------

    def simplices(self, n):
        return range(self.counts[n])

    def face(self, n, i, s):
        return self.faces[n][i][s]

    def degeneracy(self, n, i, s):
        return self.degens[n][i][s]

    def size(self):
        return sum(self.counts)

    def label(self, n, s):
        if self.labels is not None:
            return self.labels[n][s]
        return s

    # -- degeneracy structure ----------------------------------------------

    def degenerate_flags(self, n):
        """Boolean list: flags[s] iff the degree-n simplex s is degenerate."""
        if n in self._degflag_cache:
            return self._degflag_cache[n]
        if n == 0:
            flags = [False] * self.counts[0]
        else:
            flags = []
            for s in range(self.counts[n]):
                flags.append(any(
                    self.degens[n - 1][i][self.faces[n][i][s]] == s
                    for i in range(n)))
        self._degflag_cache[n] = flags
        return flags

    def nondegenerate(self, n):
        if n not in self._nondeg_cache:
            flags = self.degenerate_flags(n)
            self._nondeg_cache[n] = [s for s in range(self.counts[n])
                                     if not flags[s]]
        return self._nondeg_cache[n]

    def nondeg_dim(self):
        """Largest degree carrying a nondegenerate simplex."""
        top = 0
        for n in range(self.cap + 1):
            if self.nondegenerate(n):
                top = n
        return top

    def ez_decompose(self, n, s):
        """Unique Eilenberg-Zilber decomposition of a simplex.

        Returns ``(word, m, y)`` with ``word`` a strictly decreasing list of
        degeneracy indices such that applying ``s_{word[0]} .. s_{word[-1]}``
        (innermost last) to the nondegenerate ``y`` in degree ``m`` gives
        back ``s``.
        """
        word = []
        cur, d = s, n
        while d > 0:
            hit = None
            for i in range(d - 1, -1, -1):
                f = self.faces[d][i][cur]
                if self.degens[d - 1][i][f] == cur:
                    hit = i
                    break
            if hit is None:
                break
            word.append(hit)
            cur = self.faces[d][hit][cur]
            d -= 1
        if any(a <= b for a, b in zip(word, word[1:])):
            raise SSetError("EZ word not strictly decreasing: structure defect")
        return word, d, cur

    def apply_word(self, m, y, word):
        """Apply a decreasing degeneracy word (as from ez_decompose)."""
        cur, d = y, m
        for j in reversed(word):
            cur = self.degens[d][j][cur]
            d += 1
        return cur

    def vertex_tuple(self, n, s):
        """The n+1 vertices of a simplex, via iterated faces."""
        verts = []
        for k in range(n + 1):
            cur, d = s, n
            for i in range(n, k, -1):
                cur = self.faces[d][i][cur]
                d -= 1
            for i in range(k, 0, -1):
                cur = self.faces[d][i - 1][cur]
                d -= 1
            verts.append(cur)
        return tuple(verts)

    def apply_vertex_map(self, n, s, u):
        """Compute ``X(u)(s)`` for a monotone map ``u: [l] -> [n]``.

        ``u`` is given as a nondecreasing tuple of length ``l+1`` with values
        in ``0..n``.  Factors ``u`` as a surjection followed by an injection
        and applies the corresponding face and degeneracy operators.
        """
        if any(u[k] > u[k + 1] for k in range(len(u) - 1)):
            raise SSetError("vertex map must be monotone")
        image = sorted(set(u))
        cur, d = s, n
        kept = list(range(n + 1))
        for v in range(n, -1, -1):
            if v not in image:
                cur = self.faces[d][kept.index(v)][cur]
                d -= 1
                kept.remove(v)
        for k in range(1, len(u)):
            if u[k] == u[k - 1]:
                cur = self.degens[d][k - 1][cur]
                d += 1
        return cur


class SimplicialMap:
    """Degreewise function between TruncSSets of equal cap."""

    def __init__(self, domain, codomain, comp):
        if domain.cap != codomain.cap:
            raise SSetError("cap mismatch between domain and codomain")
        self.domain = domain
        self.codomain = codomain
        self.comp = comp  # comp[n][s]

    def __call__(self, n, s):
        return self.comp[n][s]

    def validate(self):
        """Return the list of commutation violations (empty iff simplicial)."""
        bad = []
        X, Y = self.domain, self.codomain
        for n in range(1, X.cap + 1):
            for s in X.simplices(n):
                for i in range(n + 1):
                    if self.comp[n - 1][X.faces[n][i][s]] != \
                            Y.faces[n][i][self.comp[n][s]]:
                        bad.append(("face", n, i, s))
        for n in range(X.cap):
            for s in X.simplices(n):
                for i in range(n + 1):
                    if self.comp[n + 1][X.degens[n][i][s]] != \
                            Y.degens[n][i][self.comp[n][s]]:
                        bad.append(("degeneracy", n, i, s))
        return bad

    def is_injective(self):
        return all(len(set(c)) == len(c) for c in self.comp)

    def is_bijective(self):
        return self.is_injective() and all(
            len(c) == self.codomain.counts[n] for n, c in enumerate(self.comp))

    def equals(self, other):
        return (self.domain is other.domain
                and self.codomain is other.codomain
                and self.comp == other.comp)


def identity_map(X):
    return SimplicialMap(X, X, [list(range(X.counts[n]))
                                for n in range(X.cap + 1)])


def invert_bijection(f):
    """Inverse of a degreewise-bijective simplicial map."""
    if not f.is_bijective():
        raise SSetError("map is not a degreewise bijection")
    comp = []
    for n in range(f.domain.cap + 1):
        inv = [0] * f.codomain.counts[n]
        for s, v in enumerate(f.comp[n]):
            inv[v] = s
        comp.append(inv)
    return SimplicialMap(f.codomain, f.domain, comp)


def compose(g, f):
    """g after f."""
    if f.codomain is not g.domain and f.codomain.counts != g.domain.counts:
        raise SSetError("composition endpoint mismatch")
    comp = [[g.comp[n][f.comp[n][s]] for s in range(f.domain.counts[n])]
            for n in range(f.domain.cap + 1)]
    return SimplicialMap(f.domain, g.codomain, comp)


def constant_map(X, Y, vertex):
    """The map collapsing X to (iterated degeneracies of) a vertex of Y."""
    comp = []
    for n in range(X.cap + 1):
        cur, d = vertex, 0
        while d < n:
            cur = Y.degens[d][0][cur]
            d += 1
        comp.append([cur] * X.counts[n])
    return SimplicialMap(X, Y, comp)


def classifying_map(X, n, s, delta_n=None):
    """The map Delta[n] -> X picking out the simplex s."""
    D = delta_n if delta_n is not None else standard_simplex(n, X.cap)
    comp = [[X.apply_vertex_map(n, s, D.key_of(m, t))
             for t in D.simplices(m)] for m in range(X.cap + 1)]
    return SimplicialMap(D, X, comp)


# -- keyed construction ----------------------------------------------------

class KeyedSSet(TruncSSet):
    """TruncSSet whose simplices are canonically keyed (sorted) objects."""

    def __init__(self, cap, keys_by_degree, face_key, deg_key):
        keys = [sorted(keys_by_degree[n]) for n in range(cap + 1)]
        index = [{k: i for i, k in enumerate(ks)} for ks in keys]
        counts = [len(ks) for ks in keys]
        faces = [None]
        for n in range(1, cap + 1):
            faces.append([[index[n - 1][face_key(n, i, k)] for k in keys[n]]
                          for i in range(n + 1)])
        degens = []
        for n in range(cap):
            degens.append([[index[n + 1][deg_key(n, i, k)] for k in keys[n]]
                           for i in range(n + 1)])
        super().__init__(cap, counts, faces, degens, labels=keys)
        self.keys = keys
        self.index = index

    def key_of(self, n, s):
        return self.keys[n][s]

    def id_of(self, n, key):
        return self.index[n][key]


# -- generators ------------------------------------------------------------

def _monotone_tuples(m, n):
    """All nondecreasing (m+1)-tuples with values in 0..n."""
    return [tuple(c) for c in
            itertools.combinations_with_replacement(range(n + 1), m + 1)]


def standard_simplex(n, cap):
    """Delta[n] truncated at cap; simplices are monotone vertex tuples."""
    keys = [_monotone_tuples(m, n) for m in range(cap + 1)]
    return KeyedSSet(
        cap, keys,
        lambda m, i, k: k[:i] + k[i + 1:],
        lambda m, i, k: k[:i] + (k[i],) + k[i:])


def boundary(n, cap):
    """The boundary of Delta[n]: tuples missing at least one vertex."""
    keys = [[t for t in _monotone_tuples(m, n) if len(set(t)) <= n]
            for m in range(cap + 1)]
    return KeyedSSet(
        cap, keys,
        lambda m, i, k: k[:i] + k[i + 1:],
        lambda m, i, k: k[:i] + (k[i],) + k[i:])


def horn(n, k, cap):
    """The horn Lambda^k[n]: union of all faces of Delta[n] except the k-th."""
    if not 0 <= k <= n:
        raise SSetError("horn index out of range")
    full = set(range(n + 1)) - {k}
    keys = [[t for t in _monotone_tuples(m, n) if not full <= set(t)]
            for m in range(cap + 1)]
    return KeyedSSet(
        cap, keys,
        lambda m, i, kk: kk[:i] + kk[i + 1:],
        lambda m, i, kk: kk[:i] + (kk[i],) + kk[i:])


def discrete(points, cap):
    """The discrete simplicial set on a finite set of points."""
    keys = [[(p,) * (m + 1) for p in range(points)] for m in range(cap + 1)]
    return KeyedSSet(
        cap, keys,
        lambda m, i, k: k[:-1],
        lambda m, i, k: k + (k[0],))


def walking_iso(cap):
    """The nerve J of the groupoid generated by a single isomorphism.

    The groupoid is indiscrete on two objects, so n-simplices are arbitrary
    vertex sequences in {0,1}; the two alternating sequences are the only
    nondegenerate simplices in each positive degree.
    """
    keys = [[t for t in itertools.product((0, 1), repeat=m + 1)]
            for m in range(cap + 1)]
    return KeyedSSet(
        cap, keys,
        lambda m, i, k: k[:i] + k[i + 1:],
        lambda m, i, k: k[:i] + (k[i],) + k[i:])


def build_generated(kind, cap, n=None, k=None):
    """Named standard objects: delta, boundary, horn, J, point, discrete."""
    if kind == "delta":
        return standard_simplex(n, cap)
    if kind == "boundary":
        return boundary(n, cap)
    if kind == "horn":
        return horn(n, k, cap)
    if kind == "J":
        return walking_iso(cap)
    if kind == "point":
        return standard_simplex(0, cap)
    if kind == "discrete":
        return discrete(n, cap)
    raise SSetError("unknown generator kind %r" % (kind,))


# -- limits and colimits ---------------------------------------------------

def product(X, Y):
    """Degreewise cartesian product with its two projections."""
    if X.cap != Y.cap:
        raise SSetError("product requires equal caps")
    cap = X.cap
    counts = [X.counts[n] * Y.counts[n] for n in range(cap + 1)]

    def pid(n, x, y):
        return x * Y.counts[n] + y

    faces = [None]
    for n in range(1, cap + 1):
        faces.append([[pid(n - 1, X.faces[n][i][s // Y.counts[n]],
                           Y.faces[n][i][s % Y.counts[n]])
                       for s in range(counts[n])] for i in range(n + 1)])
    degens = []
    for n in range(cap):
        degens.append([[pid(n + 1, X.degens[n][i][s // Y.counts[n]],
                            Y.degens[n][i][s % Y.counts[n]])
                        for s in range(counts[n])] for i in range(n + 1)])
    P = TruncSSet(cap, counts, faces, degens)
    pr1 = SimplicialMap(P, X, [[s // Y.counts[n] for s in range(counts[n])]
                               for n in range(cap + 1)])
    pr2 = SimplicialMap(P, Y, [[s % Y.counts[n] for s in range(counts[n])]
                               for n in range(cap + 1)])
    return P, pr1, pr2


def product_map(u, v, P=None, Q=None):
    """The induced map u x v between products built by ``product``."""
    P = P if P is not None else product(u.domain, v.domain)[0]
    Q = Q if Q is not None else product(u.codomain, v.codomain)[0]
    ny, my = v.domain.counts, v.codomain.counts
    comp = []
    for n in range(P.cap + 1):
        comp.append([u.comp[n][s // ny[n]] * my[n] + v.comp[n][s % ny[n]]
                     for s in range(P.counts[n])])
    return SimplicialMap(P, Q, comp)


def disjoint_union(parts):
    """Coproduct with injections; ids are offset blockwise."""
    cap = parts[0].cap
    if any(p.cap != cap for p in parts):
        raise SSetError("disjoint union requires equal caps")
    counts = [sum(p.counts[n] for p in parts) for n in range(cap + 1)]
    offs = []
    run = [0] * (cap + 1)
    for p in parts:
        offs.append(list(run))
        for n in range(cap + 1):
            run[n] += p.counts[n]
    faces = [None]
    for n in range(1, cap + 1):
        faces.append([
            [offs[j][n - 1] + p.faces[n][i][s]
             for j, p in enumerate(parts) for s in range(p.counts[n])]
            for i in range(n + 1)])
    degens = []
    for n in range(cap):
        degens.append([
            [offs[j][n + 1] + p.degens[n][i][s]
             for j, p in enumerate(parts) for s in range(p.counts[n])]
            for i in range(n + 1)])
    U = TruncSSet(cap, counts, faces, degens)
    injections = [
        SimplicialMap(p, U, [[offs[j][n] + s for s in range(p.counts[n])]
                             for n in range(cap + 1)])
        for j, p in enumerate(parts)]
    return U, injections


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # least index wins, for deterministic canonical representatives
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def pushout(f, g):
    """Degreewise pushout of B <-f- A -g-> C with its two injections."""
    A, B, C = f.domain, f.codomain, g.codomain
    if g.domain is not A:
        raise SSetError("pushout legs must share their domain")
    cap = A.cap
    uf = [_UnionFind(B.counts[n] + C.counts[n]) for n in range(cap + 1)]
    for n in range(cap + 1):
        for a in A.simplices(n):
            uf[n].union(f.comp[n][a], B.counts[n] + g.comp[n][a])
    reps = []
    rep_index = []
    for n in range(cap + 1):
        seen = {}
        order = []
        for s in range(B.counts[n] + C.counts[n]):
            r = uf[n].find(s)
            if r not in seen:
                seen[r] = len(order)
                order.append(r)
        reps.append(order)
        rep_index.append(seen)

    def cls(n, s):
        return rep_index[n][uf[n].find(s)]

    def glued_face(n, i, r):
        if r < B.counts[n]:
            return cls(n - 1, B.faces[n][i][r])
        return cls(n - 1, B.counts[n - 1] + C.faces[n][i][r - B.counts[n]])

    def glued_degen(n, i, r):
        if r < B.counts[n]:
            return cls(n + 1, B.degens[n][i][r])
        return cls(n + 1, B.counts[n + 1] + C.degens[n][i][r - B.counts[n]])

    counts = [len(reps[n]) for n in range(cap + 1)]
    faces = [None]
    for n in range(1, cap + 1):
        faces.append([[glued_face(n, i, r) for r in reps[n]]
                      for i in range(n + 1)])
    degens = []
    for n in range(cap):
        degens.append([[glued_degen(n, i, r) for r in reps[n]]
                       for i in range(n + 1)])
    P = TruncSSet(cap, counts, faces, degens)
    inj_b = SimplicialMap(B, P, [[cls(n, s) for s in range(B.counts[n])]
                                 for n in range(cap + 1)])
    inj_c = SimplicialMap(C, P, [[cls(n, B.counts[n] + s)
                                  for s in range(C.counts[n])]
                                 for n in range(cap + 1)])
    return P, inj_b, inj_c


def coequalize_disjoint(parts, relations):
    """Quotient of a disjoint union by generated identifications.

    ``relations`` yields tuples ``(part_a, n, simplex_a, part_b, simplex_b)``.
    Returns the quotient with the list of induced maps from the parts.
    Used for degreewise colimits of diagrams.
    """
    U, injections = disjoint_union(parts)
    cap = U.cap
    uf = [_UnionFind(U.counts[n]) for n in range(cap + 1)]
    for (ja, n, sa, jb, sb) in relations:
        uf[n].union(injections[ja].comp[n][sa], injections[jb].comp[n][sb])
    reps, rep_index = [], []
    for n in range(cap + 1):
        seen, order = {}, []
        for s in range(U.counts[n]):
            r = uf[n].find(s)
            if r not in seen:
                seen[r] = len(order)
                order.append(r)
        reps.append(order)
        rep_index.append(seen)

    def cls(n, s):
        return rep_index[n][uf[n].find(s)]

    counts = [len(reps[n]) for n in range(cap + 1)]
    faces = [None]
    for n in range(1, cap + 1):
        faces.append([[cls(n - 1, U.faces[n][i][r]) for r in reps[n]]
                      for i in range(n + 1)])
    degens = []
    for n in range(cap):
        degens.append([[cls(n + 1, U.degens[n][i][r]) for r in reps[n]]
                       for i in range(n + 1)])
    Q = TruncSSet(cap, counts, faces, degens)
    maps = [compose(SimplicialMap(U, Q, [[cls(n, s) for s in range(U.counts[n])]
                                         for n in range(cap + 1)]), inj)
            for inj in injections]
    return Q, maps


def sub_sset(X, selected):
    """Subobject on the given per-degree id lists, with its inclusion.

    ``selected[n]`` must be closed under faces and degeneracies.
    """
    sel = [sorted(selected[n]) for n in range(X.cap + 1)]
    index = [{s: i for i, s in enumerate(sn)} for sn in sel]
    counts = [len(sn) for sn in sel]
    faces = [None]
    for n in range(1, X.cap + 1):
        faces.append([[index[n - 1][X.faces[n][i][s]] for s in sel[n]]
                      for i in range(n + 1)])
    degens = []
    for n in range(X.cap):
        degens.append([[index[n + 1][X.degens[n][i][s]] for s in sel[n]]
                       for i in range(n + 1)])
    S = TruncSSet(X.cap, counts, faces, degens)
    inc = SimplicialMap(S, X, [list(sel[n]) for n in range(X.cap + 1)])
    return S, inc


def restrict(X, cap):
    """Truncate further, to a smaller cap."""
    if cap > X.cap:
        raise TruncationError("cannot raise the cap of a truncated object")
    return TruncSSet(cap, X.counts[:cap + 1], X.faces[:cap + 1],
                     X.degens[:cap], labels=None)


def restrict_map(f, cap):
    return SimplicialMap(restrict(f.domain, cap), restrict(f.codomain, cap),
                         f.comp[:cap + 1])


# -- map enumeration and exponentials --------------------------------------

def enumerate_maps(A, B, candidate_filter=None):
    """All simplicial maps A -> B, as full per-degree value tables.

    A map is determined by its values on nondegenerate simplices; values on
    degenerate ones are forced through the EZ decomposition.  The optional
    ``candidate_filter(n, s, b)`` restricts admissible images of the
    nondegenerate simplex ``s``.
    """
    cap = A.cap
    results = []
    val = [[None] * A.counts[n] for n in range(cap + 1)]
    # branch-independent structure, computed once
    ez = [[A.ez_decompose(n, s) for s in A.simplices(n)]
          for n in range(cap + 1)]
    pending = [[s for s in A.simplices(n) if not ez[n][s][0]]
               for n in range(cap + 1)]
    profile_index = [None]
    for n in range(1, cap + 1):
        idx = {}
        for b in B.simplices(n):
            key = tuple(B.faces[n][i][b] for i in range(n + 1))
            idx.setdefault(key, []).append(b)
        profile_index.append(idx)

    def fill_degree(n):
        if n > cap:
            results.append([list(v) for v in val])
            return
        for s in A.simplices(n):
            word, m, y = ez[n][s]
            if word:
                val[n][s] = B.apply_word(m, val[m][y], word)

        def choose(idx):
            if idx == len(pending[n]):
                fill_degree(n + 1)
                return
            s = pending[n][idx]
            if n == 0:
                cands = range(B.counts[0])
            else:
                want = tuple(val[n - 1][A.faces[n][i][s]]
                             for i in range(n + 1))
                cands = profile_index[n].get(want, ())
            for b in cands:
                if candidate_filter is not None \
                        and not candidate_filter(n, s, b):
                    continue
                val[n][s] = b
                choose(idx + 1)
            val[n][s] = None

        choose(0)
        for s in A.simplices(n):
            val[n][s] = None

    fill_degree(0)
    return results


class Exponential(KeyedSSet):
    """Internal mapping object [X => Y]: degree-n simplices are simplicial
    maps Delta[n] x X -> Y, encoded by their full value tables.

    Exact only under the truncation validity bound
    ``cap_out + nondeg_dim(X) <= cap(Y)``; violating it raises
    ``TruncationError`` rather than silently truncating.
    """

    def __init__(self, Y, X, cap_out):
        if X.cap != Y.cap:
            raise SSetError("exponential requires equal caps")
        if cap_out + X.nondeg_dim() > Y.cap:
            raise TruncationError(
                "exponential(cap_out=%d) with nondeg_dim(X)=%d needs cap(Y)"
                " >= %d, have %d" % (cap_out, X.nondeg_dim(),
                                     cap_out + X.nondeg_dim(), Y.cap))
        self.base = Y
        self.arg = X
        self.deltas = [standard_simplex(n, Y.cap) for n in range(cap_out + 1)]
        self.prisms = []
        for n in range(cap_out + 1):
            P, pr1, pr2 = product(self.deltas[n], X)
            self.prisms.append((P, pr1, pr2))
        tables = []
        for n in range(cap_out + 1):
            tabs = enumerate_maps(self.prisms[n][0], Y)
            tables.append(sorted(tuple(tuple(v) for v in t) for t in tabs))
        self._tables = tables

        def op_key(n_from, n_to, vmap, key):
            # precompose the table with (Delta-map x id_X)
            u = _delta_map(self.deltas[n_to], self.deltas[n_from], vmap)
            pm = product_map(u, identity_map(X),
                             self.prisms[n_to][0], self.prisms[n_from][0])
            P = self.prisms[n_to][0]
            return tuple(tuple(key[m][pm.comp[m][s]]
                               for s in range(P.counts[m]))
                         for m in range(Y.cap + 1))

        super().__init__(
            cap_out,
            tables,
            lambda n, i, k: op_key(n, n - 1, _coface_tuple(n, i), k),
            lambda n, i, k: op_key(n, n + 1, _codegen_tuple(n, i), k))

    def table(self, n, s):
        return self.keys[n][s]


def _coface_tuple(n, i):
    """d^i: [n-1] -> [n] as a vertex tuple."""
    return tuple(v for v in range(n + 1) if v != i)


def _codegen_tuple(n, i):
    """s^i: [n+1] -> [n] as a vertex tuple."""
    return tuple(v if v <= i else v - 1 for v in range(n + 2))


def _delta_map(D_from, D_to, vmap):
    """Map of standard simplices induced by a monotone vertex map."""
    comp = [[D_to.id_of(m, tuple(vmap[v] for v in D_from.key_of(m, t)))
             for t in D_from.simplices(m)]
            for m in range(D_from.cap + 1)]
    return SimplicialMap(D_from, D_to, comp)


def exponential(Y, X, cap_out):
    """The spec-level mapping object; see ``Exponential``."""
    return Exponential(Y, X, cap_out)


def ez_decompose(X, n, s):
    word, m, y = X.ez_decompose(n, s)
    return word, (m, y)
