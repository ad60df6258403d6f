"""Marked simplicial sets: markings, equivalence witnesses, localization by
gluing walking isomorphisms, marked relative nerves, over-base mapping
spaces, and the two rectification functors between diagrams and objects over
the base nerve."""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import (FinCategory, SSetDiagram, nerve, nerve_map,
                     under_category)
from .pathspace import chain_object_of_key, lurie_grothendieck
from .sset import (SimplicialMap, SSetError, TruncationError, TruncSSet,
                   classifying_map, disjoint_union, identity_map, product,
                   product_map, standard_simplex, walking_iso)


class MarkError(Exception):
    pass


def degenerate_edges(X):
    if X.cap < 1:
        return frozenset()
    return frozenset(X.degens[0][0][v] for v in X.simplices(0))


@dataclass(frozen=True)
class MarkedSSet:
    sset: TruncSSet
    marked: frozenset

    def __post_init__(self):
        if self.sset.cap < 1:
            if self.marked:
                raise MarkError("marked set on a 0-truncated object")
            return
        if not degenerate_edges(self.sset) <= self.marked:
            raise MarkError("degenerate edges must be marked")
        if any(e >= self.sset.counts[1] for e in self.marked):
            raise MarkError("marked set contains a non-edge")

    def is_marked(self, e):
        return e in self.marked


@dataclass(frozen=True)
class EquivalenceWitness:
    edge: int
    inverse: int
    left: int        # 2-simplex: d0=inverse, d2=edge, d1=degenerate at source
    right: int       # 2-simplex: d0=edge, d2=inverse, d1=degenerate at target


def _witness_ok(X, w):
    f1, f2 = X.faces[1], X.faces[2]
    a = f1[1][w.edge]
    b = f1[0][w.edge]
    sa = X.degens[0][0][a]
    sb = X.degens[0][0][b]
    return (f1[1][w.inverse] == b and f1[0][w.inverse] == a
            and f2[0][w.left] == w.inverse and f2[2][w.left] == w.edge
            and f2[1][w.left] == sa
            and f2[0][w.right] == w.edge and f2[2][w.right] == w.inverse
            and f2[1][w.right] == sb)


def equivalences(X):
    """All edges admitting a two-triangle invertibility witness.

    Returns a dict edge -> EquivalenceWitness (first witness in id order).
    """
    if X.cap < 2:
        raise MarkError("equivalence search needs cap >= 2")
    by_d2 = {}
    for t in X.simplices(2):
        by_d2.setdefault(X.faces[2][2][t], []).append(t)
    out = {}
    for y in X.simplices(1):
        a = X.faces[1][1][y]
        b = X.faces[1][0][y]
        sa = X.degens[0][0][a]
        sb = X.degens[0][0][b]
        found = None
        for left in by_d2.get(y, ()):
            if X.faces[2][1][left] != sa:
                continue
            inv = X.faces[2][0][left]
            if X.faces[1][1][inv] != b or X.faces[1][0][inv] != a:
                continue
            for right in by_d2.get(inv, ()):
                if X.faces[2][1][right] == sb and \
                        X.faces[2][0][right] == y:
                    found = EquivalenceWitness(y, inv, left, right)
                    break
            if found:
                break
        if found:
            assert _witness_ok(X, found)
            out[y] = found
    return out


def push_witness(f, w):
    """Images of witness data under a simplicial map (always a witness)."""
    return EquivalenceWitness(f.comp[1][w.edge], f.comp[1][w.inverse],
                              f.comp[2][w.left], f.comp[2][w.right])


def mark(X, mode):
    """flat: degenerate edges only; sharp: all; natural: equivalences."""
    if mode == "flat":
        return MarkedSSet(X, degenerate_edges(X))
    if mode == "sharp":
        return MarkedSSet(X, frozenset(range(X.counts[1])))
    if mode == "natural":
        return MarkedSSet(X, frozenset(equivalences(X)) |
                          degenerate_edges(X))
    raise MarkError("unknown marking mode %r" % (mode,))


# -- localization -------------------------------------------------------------

@dataclass
class Localization:
    total: TruncSSet
    proj: SimplicialMap          # S -> S[E^{-1}], the injection leg
    marked_image: frozenset
    glued_edges: list            # the nondegenerate marked edges, in order
    j_leg: SimplicialMap         # disjoint union of J copies -> total
    j_copies: object             # the disjoint union, with injections


def localize(M, cap=None):
    """Pushout gluing one walking isomorphism along each nondegenerate
    marked edge; degenerate marked edges are already invertible and are not
    glued, so flat objects localize to themselves."""
    S = M.sset
    cap = S.cap if cap is None else cap
    if cap != S.cap:
        raise SSetError("localization cap must match the object")
    degflags = S.degenerate_flags(1)
    glued = sorted(e for e in M.marked if not degflags[e])
    if not glued:
        return Localization(S, identity_map(S), frozenset(M.marked),
                            [], None, None)
    D1 = standard_simplex(1, cap)
    J = walking_iso(cap)
    A, a_injs = disjoint_union([D1] * len(glued))
    Cj, c_injs = disjoint_union([J] * len(glued))
    edge_maps = [classifying_map(S, 1, e, D1) for e in glued]
    f_comp = [[None] * A.counts[n] for n in range(cap + 1)]
    g_comp = [[None] * A.counts[n] for n in range(cap + 1)]
    incl = SimplicialMap(D1, J, [[J.id_of(n, D1.key_of(n, t))
                                  for t in D1.simplices(n)]
                                 for n in range(cap + 1)])
    for c, inj in enumerate(a_injs):
        for n in range(cap + 1):
            for t in D1.simplices(n):
                f_comp[n][inj.comp[n][t]] = edge_maps[c].comp[n][t]
                g_comp[n][inj.comp[n][t]] = c_injs[c].comp[n][incl.comp[n][t]]
    f = SimplicialMap(A, S, f_comp)
    g = SimplicialMap(A, Cj, g_comp)
    from .sset import pushout
    P, inj_s, inj_j = pushout(f, g)
    image = frozenset(inj_s.comp[1][e] for e in M.marked)
    return Localization(P, inj_s, image, glued, inj_j, (Cj, c_injs))


def extend_along_J(S, y, cap=None, witnesses=None):
    """Bounded search for a simplicial map J -> S sending the generator edge
    to y.  Returns the map, or None when no extension exists below the cap
    (reported, not fatal: the extension claim is not constructive in general).
    """
    cap = S.cap if cap is None else cap
    J = walking_iso(cap)
    a = S.faces[1][1][y]
    b = S.faces[1][0][y]
    val = [[None] * J.counts[n] for n in range(cap + 1)]

    def fill(n):
        if n > cap:
            return True
        forced = []
        free = []
        for s in J.simplices(n):
            word, m, base = J.ez_decompose(n, s)
            if word:
                forced.append((s, word, m, base))
            else:
                free.append(s)
        for s, word, m, base in forced:
            val[n][s] = S.apply_word(m, val[m][base], word)
        if n == 0:
            val[0][J.id_of(0, (0,))] = a
            val[0][J.id_of(0, (1,))] = b
            if fill(1):
                return True
            val[0] = [None] * J.counts[0]
            return False

        def choose(idx):
            if idx == len(free):
                return fill(n + 1)
            s = free[idx]
            want = [val[n - 1][J.faces[n][i][s]] for i in range(n + 1)]
            if n == 1 and s == J.id_of(1, (0, 1)):
                cands = [y]
            else:
                cands = [x for x in S.simplices(n)
                         if all(S.faces[n][i][x] == want[i]
                                for i in range(n + 1))]
            for x in cands:
                val[n][s] = x
                if choose(idx + 1):
                    return True
            val[n][s] = None
            return False

        if choose(0):
            return True
        for s in J.simplices(n):
            val[n][s] = None
        return False

    if not fill(0):
        return None
    return SimplicialMap(J, S, val)


def localization_mediator(loc, G, extensions=None):
    """The universal map out of a localization.

    Given ``G`` from the localized object's source into some target sending
    every glued edge to an edge with a J-extension, produce the unique U
    with ``U o p = G`` and ``U o (J-leg) = the chosen extensions``.  The two
    legs jointly cover the pushout, so U is determined; it is returned as a
    simplicial map (or None when some extension is missing).
    """
    S = G.domain
    T = G.codomain
    cap = S.cap
    if loc.proj.domain is not S:
        raise SSetError("mediator source mismatch")
    if not loc.glued_edges:
        return G
    comp = [[None] * loc.total.counts[n] for n in range(cap + 1)]
    for n in range(cap + 1):
        for s in S.simplices(n):
            comp[n][loc.proj.comp[n][s]] = G.comp[n][s]
    Cj, c_injs = loc.j_copies
    for idx, e in enumerate(loc.glued_edges):
        ext = extensions[idx] if extensions is not None else \
            extend_along_J(T, G.comp[1][e])
        if ext is None:
            return None
        J = ext.domain
        for n in range(cap + 1):
            for t in J.simplices(n):
                tot = loc.j_leg.comp[n][c_injs[idx].comp[n][t]]
                if comp[n][tot] is None:
                    comp[n][tot] = ext.comp[n][t]
    if any(v is None for row in comp for v in row):
        raise SSetError("pushout legs do not cover the localization")
    return SimplicialMap(loc.total, T, comp)


# -- marked diagrams ----------------------------------------------------------

@dataclass
class MarkedDiagram:
    shape: FinCategory
    values: list
    maps: list

    @property
    def cap(self):
        return self.values[0].sset.cap

    def underlying(self):
        return SSetDiagram(self.shape, [v.sset for v in self.values],
                           self.maps)

    def validate(self):
        bad = self.underlying().validate()
        for m in range(self.shape.n_morphisms):
            tgt = self.values[self.shape.tgt[m]]
            src = self.values[self.shape.src[m]]
            for e in src.marked:
                if self.maps[m].comp[1][e] not in tgt.marked:
                    bad.append(("marking-not-preserved", m, e))
        return bad


def mark_diagram(F, mode):
    """Apply a marking objectwise; 'natural' is the equivalence marking."""
    values = [mark(V, mode) for V in F.values]
    return MarkedDiagram(F.shape, values, list(F.maps))


def colim_marked(F):
    """Degreewise colimit of a marked diagram: quotient of the disjoint
    union by the transport relations, marking the images of marked edges."""
    from .sset import coequalize_disjoint
    C = F.shape
    parts = [V.sset for V in F.values]
    relations = []
    for m in range(C.n_morphisms):
        a, b = C.src[m], C.tgt[m]
        for n in range(F.cap + 1):
            for s in parts[a].simplices(n):
                relations.append((a, n, s, b, F.maps[m].comp[n][s]))
    Q, qmaps = coequalize_disjoint(parts, relations)
    marked = set()
    for o, V in enumerate(F.values):
        for e in V.marked:
            marked.add(qmaps[o].comp[1][e])
    return MarkedSSet(Q, frozenset(marked)), qmaps


# -- objects over the base nerve ----------------------------------------------

@dataclass
class OverMarked:
    """A marked simplicial set equipped with a projection to a base nerve."""
    marked: MarkedSSet
    proj: SimplicialMap
    base_nerve: object
    shape: FinCategory

    @property
    def sset(self):
        return self.marked.sset


def marked_rel_nerve(F, cap):
    """The relative nerve of the underlying diagram, with an edge (e, h)
    marked exactly when its fiber component h is marked in the value at the
    target of e."""
    R = lurie_grothendieck(F.underlying(), cap)
    C = F.shape
    NC = R.base_nerve
    marked = set()
    for s in R.total.simplices(1):
        sid, (b0, b1) = R.total.key_of(1, s)
        arrow = NC.key_of(1, sid)[0]
        if b1 in F.values[C.tgt[arrow]].marked:
            marked.add(s)
    return OverMarked(MarkedSSet(R.total, frozenset(marked)), R.proj, NC, C), R


def under_nerve_sharp(C, d, cap, NC=None):
    """N(d/D) with every edge marked, over N(D) via the forgetful functor."""
    U, forget, objs, arrow_keys = under_category(C, d)
    NU = nerve(U, cap)
    NC = NC if NC is not None else nerve(C, cap)
    proj = nerve_map(forget, cap, NU, NC)
    return OverMarked(mark(NU, "sharp"), proj, NC, C), U, forget, objs, \
        arrow_keys


class OverMappingSpace:
    """The marked mapping object over the base: degree-n simplices are maps
    (Delta[n] flat) x X -> Y commuting with the projections and preserving
    markings; an n-simplex is stored as its full value table on the prism.

    The sharp part (simplices all of whose edges are marked) is available as
    a sub-simplicial set via ``sharp_ids``.
    """

    def __init__(self, X, Y, cap_out):
        UX, UY = X.sset, Y.sset
        if UX.cap != UY.cap:
            raise SSetError("over mapping space requires equal caps")
        if cap_out + UX.nondeg_dim() > UY.cap:
            raise TruncationError(
                "over mapping space cap_out=%d needs cap >= %d"
                % (cap_out, cap_out + UX.nondeg_dim()))
        if X.base_nerve.counts != Y.base_nerve.counts:
            raise SSetError("different base nerves")
        self.X, self.Y = X, Y
        self.cap_out = cap_out
        cap = UY.cap
        self.deltas = [standard_simplex(n, cap) for n in range(cap_out + 1)]
        self.prisms = [product(self.deltas[n], UX) for n in range(cap_out + 1)]
        NC = Y.base_nerve
        tables = []
        for n in range(cap_out + 1):
            P, pr1, pr2 = self.prisms[n]

            def filt(m, s, b, pr2=pr2, pr1=pr1, n=n):
                if Y.proj.comp[m][b] != X.proj.comp[m][pr2.comp[m][s]]:
                    return False
                if m == 1:
                    a_e = pr1.comp[1][s]
                    x_e = pr2.comp[1][s]
                    a_deg = self.deltas[n].degenerate_flags(1)[a_e]
                    if a_deg and X.marked.is_marked(x_e) \
                            and not Y.marked.is_marked(b):
                        return False
                return True

            from .sset import enumerate_maps
            found = enumerate_maps(P, UY, candidate_filter=filt)
            tables.append(sorted(tuple(tuple(v) for v in t) for t in found))
        self._tables = tables
        self.index = [{t: i for i, t in enumerate(tt)} for tt in tables]
        counts = [len(t) for t in tables]

        def op(n_from, n_to, vmap, key):
            from .sset import _delta_map
            u = _delta_map(self.deltas[n_to], self.deltas[n_from], vmap)
            pm = product_map(u, identity_map(UX),
                             self.prisms[n_to][0], self.prisms[n_from][0])
            P_to = self.prisms[n_to][0]
            return tuple(tuple(key[m][pm.comp[m][s]]
                               for s in range(P_to.counts[m]))
                         for m in range(cap + 1))

        faces = [None]
        for n in range(1, cap_out + 1):
            faces.append([[self.index[n - 1][op(n, n - 1,
                                                _coface_tuple(n, i), t)]
                           for t in tables[n]] for i in range(n + 1)])
        degens = []
        for n in range(cap_out):
            degens.append([[self.index[n + 1][op(n, n + 1,
                                                 _codegen_tuple(n, i), t)]
                            for t in tables[n]] for i in range(n + 1)])
        self.sset = TruncSSet(cap_out, counts, faces, degens)
        self.marked_set = frozenset(
            e for e in range(counts[1]) if self._edge_marked(e)) \
            if cap_out >= 1 else frozenset()

    def table(self, n, s):
        return self._tables[n][s]

    def id_of(self, n, table):
        return self.index[n][table]

    def _edge_marked(self, e):
        """An edge is marked when it underlies a map from the sharp cylinder:
        every prism edge with marked X-part lands on a marked edge."""
        table = self._tables[1][e]
        P, pr1, pr2 = self.prisms[1]
        for s in P.simplices(1):
            if self.X.marked.is_marked(pr2.comp[1][s]) and \
                    not self.Y.marked.is_marked(table[1][s]):
                return False
        return True

    def as_marked(self):
        if self.cap_out >= 1:
            return MarkedSSet(self.sset,
                              self.marked_set | degenerate_edges(self.sset))
        return MarkedSSet(self.sset, frozenset())

    def sharp_ids(self):
        """Per-degree ids of simplices all of whose edges are marked."""
        out = [list(self.sset.simplices(0))]
        for n in range(1, self.cap_out + 1):
            keep = []
            for s in self.sset.simplices(n):
                edges = _all_edges(self.sset, n, s)
                if all(e in self.marked_set or
                       self.sset.degenerate_flags(1)[e] for e in edges):
                    keep.append(s)
            out.append(keep)
        return out


def _all_edges(X, n, s):
    if n == 1:
        return [s]
    edges = set()
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            edges.add(X.apply_vertex_map(n, s, (i, j)))
    return sorted(edges)


def _coface_tuple(n, i):
    return tuple(v for v in range(n + 1) if v != i)


def _codegen_tuple(n, i):
    return tuple(v if v <= i else v - 1 for v in range(n + 2))


def over_mapping_space(X, Y, variant, cap_out):
    """Spec-level dispatcher: plus / flat / sharp over-base mapping objects."""
    space = OverMappingSpace(X, Y, cap_out)
    if variant == "plus":
        return space
    if variant == "flat":
        return space.sset
    if variant == "sharp":
        from .sset import sub_sset
        sub, inc = sub_sset(space.sset, space.sharp_ids())
        return MarkedSSet(sub, frozenset(range(sub.counts[1]))
                          if cap_out >= 1 else frozenset())
    raise SSetError("unknown variant %r" % (variant,))


# -- the two rectification functors -------------------------------------------

def unstraighten_at(X, d):
    """The left-adjoint value at d: pullback of X along N(D/d) -> N(D),
    with the induced marking."""
    C = X.shape
    NC = X.base_nerve
    cap = X.sset.cap
    keys = []
    for n in range(cap + 1):
        layer = []
        for x in X.sset.simplices(n):
            sid = X.proj.comp[n][x]
            last = chain_object_of_key(C, NC.key_of(n, sid), n, n)
            for g in C.hom(last, d):
                layer.append((x, g))
        keys.append(layer)
    from .sset import KeyedSSet

    def face_key(n, i, key):
        x, g = key
        if i < n:
            return (X.sset.faces[n][i][x], g)
        sid = X.proj.comp[n][x]
        k = NC.key_of(n, sid)
        tail = k[n - 1] if n >= 1 else C.identity[k[0]]
        return (X.sset.faces[n][n][x], C.table[(g, tail)])

    def deg_key(n, i, key):
        x, g = key
        return (X.sset.degens[n][i][x], g)

    total = KeyedSSet(cap, keys, face_key, deg_key)
    marked = frozenset(s for s in total.simplices(1)
                       if total.key_of(1, s)[0] in X.marked.marked)
    value = MarkedSSet(total, marked)
    first = SimplicialMap(total, X.sset,
                          [[total.key_of(n, s)[0] for s in total.simplices(n)]
                           for n in range(cap + 1)])
    return value, first


def unstraighten_diagram(X):
    """The full left-adjoint diagram d -> X x_{N(D)} N(D/d)."""
    C = X.shape
    values, firsts, totals = [], [], []
    for d in range(C.n_objects):
        v, first = unstraighten_at(X, d)
        values.append(v)
        firsts.append(first)
        totals.append(v.sset)
    maps = []
    for m in range(C.n_morphisms):
        a, b = C.src[m], C.tgt[m]
        comp = [[totals[b].id_of(n, (totals[a].key_of(n, s)[0],
                                     C.table[(m, totals[a].key_of(n, s)[1])]))
                 for s in totals[a].simplices(n)]
                for n in range(X.sset.cap + 1)]
        maps.append(SimplicialMap(totals[a], totals[b], comp))
    return MarkedDiagram(C, values, maps), firsts


@dataclass
class Rectified:
    diagram: MarkedDiagram
    spaces: list                 # OverMappingSpace per object
    unders: list                 # (U, forget, objs) per object


def rectify_right(X, cap_out):
    """The right-adjoint diagram d -> [N(d/D) sharp, X]^+_D, with the
    precomposition action along slice functors."""
    from .fincat import CatFunctor
    C = X.shape
    cap = X.sset.cap
    spaces, unders, overs = [], [], []
    for d in range(C.n_objects):
        over, U, forget, objs, arrow_keys = under_nerve_sharp(
            C, d, cap, NC=X.base_nerve)
        sp = OverMappingSpace(over, X, cap_out)
        spaces.append(sp)
        unders.append((U, forget, objs, arrow_keys))
        overs.append(over)
    values = [sp.as_marked() for sp in spaces]
    maps = []
    for m in range(C.n_morphisms):
        a, b = C.src[m], C.tgt[m]
        Ua, _, objs_a, keys_a = unders[a]
        Ub, _, objs_b, keys_b = unders[b]
        # slice functor b/D -> a/D: (g: b -> e) -> (g o m : a -> e)
        obj_map = [objs_a.index(C.table[(g, m)]) for g in objs_b]
        inv_b = {i: pair for pair, i in keys_b.items()}
        mor_map = []
        for mi in range(Ub.n_morphisms):
            gi, e = inv_b[mi]
            mor_map.append(keys_a[(obj_map[gi], e)])
        slice_fun = CatFunctor(Ub, Ua, obj_map, mor_map)
        nm = nerve_map(slice_fun, cap, overs[b].sset, overs[a].sset)
        comp = []
        for n in range(cap_out + 1):
            pm = product_map(identity_map(spaces[a].deltas[n]), nm,
                             spaces[b].prisms[n][0], spaces[a].prisms[n][0])
            row = []
            for s in spaces[a].sset.simplices(n):
                t = spaces[a].table(n, s)
                new = tuple(tuple(t[mm][pm.comp[mm][p]]
                                  for p in range(
                                      spaces[b].prisms[n][0].counts[mm]))
                            for mm in range(cap + 1))
                row.append(spaces[b].id_of(n, new))
            comp.append(row)
        maps.append(SimplicialMap(spaces[a].sset, spaces[b].sset, comp))
    diagram = MarkedDiagram(C, values, maps)
    return Rectified(diagram, spaces, unders)
