"""Finite categories, functors, diagrams, nerves and slice categories.

Objects and morphisms are dense integer indices; composition is an explicit
table, so validation is exhaustive and decidable.  Display names live in a
symbol table used only for reports.
"""

from __future__ import annotations

from .sset import KeyedSSet, SimplicialMap


class CatError(Exception):
    pass


class FinCategory:
    def __init__(self, n_objects, src, tgt, identity, table,
                 obj_names=None, mor_names=None):
        self.n_objects = n_objects
        self.src = list(src)
        self.tgt = list(tgt)
        self.identity = list(identity)      # object -> morphism id
        self.table = dict(table)            # (g, f) -> g o f, tgt(f)=src(g)
        self.obj_names = obj_names or [str(i) for i in range(n_objects)]
        self.mor_names = mor_names or ["m%d" % i for i in range(len(src))]

    @property
    def n_morphisms(self):
        return len(self.src)

    def compose(self, g, f):
        """g after f; defined exactly when tgt(f) = src(g)."""
        if self.tgt[f] != self.src[g]:
            raise CatError("non-composable pair (%d, %d)" % (g, f))
        return self.table[(g, f)]

    def hom(self, a, b):
        return [m for m in range(self.n_morphisms)
                if self.src[m] == a and self.tgt[m] == b]

    def is_identity(self, m):
        return self.identity[self.src[m]] == m

    def is_iso(self, m):
        """Two-sided invertibility, by table search."""
        a, b = self.src[m], self.tgt[m]
        for w in self.hom(b, a):
            if self.table[(w, m)] == self.identity[a] and \
                    self.table[(m, w)] == self.identity[b]:
                return True
        return False


def validate_category(C):
    """Report every violated unit/associativity/typing equation."""
    report = []
    for o in range(C.n_objects):
        e = C.identity[o]
        if C.src[e] != o or C.tgt[e] != o:
            report.append(("identity-typing", o))
    for (g, f), h in C.table.items():
        if C.tgt[f] != C.src[g]:
            report.append(("table-on-noncomposable", g, f))
            continue
        if C.src[h] != C.src[f] or C.tgt[h] != C.tgt[g]:
            report.append(("composite-typing", g, f))
    for f in range(C.n_morphisms):
        for g in range(C.n_morphisms):
            if C.tgt[f] == C.src[g] and (g, f) not in C.table:
                report.append(("missing-composite", g, f))
    for f in range(C.n_morphisms):
        if C.table.get((C.identity[C.tgt[f]], f)) != f:
            report.append(("left-unit", f))
        if C.table.get((f, C.identity[C.src[f]])) != f:
            report.append(("right-unit", f))
    for f in range(C.n_morphisms):
        for g in range(C.n_morphisms):
            if C.tgt[f] != C.src[g]:
                continue
            gf = C.table.get((g, f))
            if gf is None:
                continue
            for h in range(C.n_morphisms):
                if C.tgt[g] != C.src[h]:
                    continue
                hg = C.table.get((h, g))
                if hg is None:
                    continue
                if C.table.get((h, gf)) != C.table.get((hg, f)):
                    report.append(("associativity", h, g, f))
    return report


def category_from_generators(n_objects, generators, relations=None,
                             obj_names=None):
    """Free category on a DAG of generators (src, tgt) with src < tgt,
    optionally with composite identifications.

    Acyclicity keeps the morphism set finite; composition is path
    concatenation.  Morphisms are identity paths plus all generator paths.
    """
    for (a, b) in generators:
        if not a < b:
            raise CatError("generators must go strictly upward (DAG)")
    paths = {o: {o: [()]} for o in range(n_objects)}
    # enumerate all composable generator sequences
    all_paths = []
    for o in range(n_objects):
        stack = [(o, ())]
        while stack:
            at, p = stack.pop()
            all_paths.append((o, at, p))
            for gi, (a, b) in enumerate(generators):
                if a == at:
                    stack.append((b, p + (gi,)))
    all_paths.sort()
    src, tgt, keys = [], [], {}
    for (a, b, p) in all_paths:
        keys[(a, b, p)] = len(src)
        src.append(a)
        tgt.append(b)
    identity = [keys[(o, o, ())] for o in range(n_objects)]
    table = {}
    for (a, b, p) in all_paths:
        for (c, d, q) in all_paths:
            if b == c:
                table[(keys[(c, d, q)], keys[(a, b, p)])] = keys[(a, d, p + q)]
    mor_names = ["id_%d" % a if not p else "*".join("g%d" % gi
                                                    for gi in reversed(p))
                 for (a, b, p) in all_paths]
    C = FinCategory(n_objects, src, tgt, identity, table,
                    obj_names=obj_names, mor_names=mor_names)
    C.gen_paths = all_paths
    C.generators = list(generators)
    return C


def terminal_category():
    return FinCategory(1, [0], [0], [0], {(0, 0): 0}, obj_names=["*"])


def arrow_category():
    """The poset [1]: objects 0, 1 and one nonidentity arrow."""
    return category_from_generators(2, [(0, 1)])


def chain_category(n):
    """The poset 0 < 1 < ... < n with all composites identified."""
    objs = n + 1
    src, tgt, keys = [], [], {}
    for a in range(objs):
        for b in range(a, objs):
            keys[(a, b)] = len(src)
            src.append(a)
            tgt.append(b)
    identity = [keys[(o, o)] for o in range(objs)]
    table = {}
    for (a, b) in list(keys):
        for (c, d) in list(keys):
            if b == c:
                table[(keys[(c, d)], keys[(a, b)])] = keys[(a, d)]
    return FinCategory(objs, src, tgt, identity, table)


def span_category():
    """The span a <- c -> b, with apex listed last (objects a=0, b=1, c=2)."""
    src = [0, 1, 2, 2, 2]
    tgt = [0, 1, 2, 0, 1]
    identity = [0, 1, 2]
    table = {}
    for m in range(5):
        table[(m, identity[src[m]])] = m
        table[(identity[tgt[m]], m)] = m
    return FinCategory(3, src, tgt, identity, table,
                       obj_names=["a", "b", "c"],
                       mor_names=["id_a", "id_b", "id_c", "p", "q"])


def cyclic_group_category(k):
    """One-object category whose morphisms form Z/k."""
    src = [0] * k
    tgt = [0] * k
    table = {(g, f): (g + f) % k for g in range(k) for f in range(k)}
    return FinCategory(1, src, tgt, [0], table,
                       mor_names=["g%d" % i for i in range(k)])


def indiscrete_groupoid(n_objects):
    """Exactly one morphism between any ordered pair of objects."""
    src, tgt, keys = [], [], {}
    for a in range(n_objects):
        for b in range(n_objects):
            keys[(a, b)] = len(src)
            src.append(a)
            tgt.append(b)
    identity = [keys[(o, o)] for o in range(n_objects)]
    table = {}
    for (a, b) in list(keys):
        for (c, d) in list(keys):
            if b == c:
                table[(keys[(c, d)], keys[(a, b)])] = keys[(a, d)]
    return FinCategory(n_objects, src, tgt, identity, table)


class CatFunctor:
    def __init__(self, domain, codomain, obj_map, mor_map):
        self.domain = domain
        self.codomain = codomain
        self.obj_map = list(obj_map)
        self.mor_map = list(mor_map)

    def validate(self):
        bad = []
        C, D = self.domain, self.codomain
        for m in range(C.n_morphisms):
            if D.src[self.mor_map[m]] != self.obj_map[C.src[m]] or \
                    D.tgt[self.mor_map[m]] != self.obj_map[C.tgt[m]]:
                bad.append(("typing", m))
        for o in range(C.n_objects):
            if self.mor_map[C.identity[o]] != D.identity[self.obj_map[o]]:
                bad.append(("identity", o))
        for (g, f), h in C.table.items():
            if D.table[(self.mor_map[g], self.mor_map[f])] != self.mor_map[h]:
                bad.append(("composition", g, f))
        return bad


def identity_functor(C):
    return CatFunctor(C, C, range(C.n_objects), range(C.n_morphisms))


def compose_functors(G, F):
    return CatFunctor(F.domain, G.codomain,
                      [G.obj_map[o] for o in F.obj_map],
                      [G.mor_map[m] for m in F.mor_map])


# -- nerve -------------------------------------------------------------------

def nerve(C, cap):
    """N(C): degree-n simplices are length-n composable morphism strings."""
    keys = [[(o,) for o in range(C.n_objects)]]
    for n in range(1, cap + 1):
        strings = []
        for prefix in keys[n - 1]:
            if n == 1:
                starts = [m for m in range(C.n_morphisms)
                          if C.src[m] == prefix[0]]
            else:
                starts = [m for m in range(C.n_morphisms)
                          if C.src[m] == C.tgt[prefix[-1]]]
            for m in starts:
                strings.append(prefix + (m,) if n > 1 else (m,))
        keys.append(strings)

    def face_key(n, i, k):
        if n == 1:
            return (C.tgt[k[0]],) if i == 0 else (C.src[k[0]],)
        if i == 0:
            return k[1:]
        if i == n:
            return k[:-1]
        return k[:i - 1] + (C.table[(k[i], k[i - 1])],) + k[i + 1:]

    def deg_key(n, i, k):
        if n == 0:
            return (C.identity[k[0]],)
        obj = C.src[k[0]] if i == 0 else C.tgt[k[i - 1]]
        return k[:i] + (C.identity[obj],) + k[i:]

    return KeyedSSet(cap, keys, face_key, deg_key)


def nerve_map(F, cap, NC=None, ND=None):
    """N(F): the simplicial map between nerves induced by a functor."""
    NC = NC if NC is not None else nerve(F.domain, cap)
    ND = ND if ND is not None else nerve(F.codomain, cap)
    comp = [[ND.id_of(0, (F.obj_map[k[0]],)) for k in NC.keys[0]]]
    for n in range(1, cap + 1):
        comp.append([ND.id_of(n, tuple(F.mor_map[m] for m in k))
                     for k in NC.keys[n]])
    return SimplicialMap(NC, ND, comp)


def chain_object(NC, C, n, s, i):
    """The i-th vertex (object of C) of an n-simplex of the nerve."""
    k = NC.key_of(n, s)
    if n == 0:
        return k[0]
    return C.src[k[0]] if i == 0 else C.tgt[k[i - 1]]


def chain_arrow(C, key, n, i, j):
    """The composite arrow sigma(i,j) of a degree-n nerve simplex key,
    for 0 <= i <= j <= n."""
    if n == 0:
        return C.identity[key[0]]
    if i == j:
        obj = C.src[key[0]] if i == 0 else C.tgt[key[i - 1]]
        return C.identity[obj]
    m = key[i]
    for t in range(i + 1, j):
        m = C.table[(key[t], m)]
    return m


def constant_chain(NC, C, obj, n):
    """The n-simplex of the nerve constant at an object."""
    if n == 0:
        return NC.id_of(0, (obj,))
    return NC.id_of(n, (C.identity[obj],) * n)


# -- slice categories --------------------------------------------------------

def under_category(C, d):
    """d/C: arrows out of d, with commuting triangles; plus the forgetful
    functor to C."""
    objs = sorted(m for m in range(C.n_morphisms) if C.src[m] == d)
    obj_index = {m: i for i, m in enumerate(objs)}
    src, tgt, keys = [], [], {}
    for gi, g in enumerate(objs):
        for e in range(C.n_morphisms):
            if C.src[e] == C.tgt[g]:
                h = C.table[(e, g)]
                keys[(gi, e)] = len(src)
                src.append(gi)
                tgt.append(obj_index[h])
    identity = [keys[(gi, C.identity[C.tgt[g]])] for gi, g in enumerate(objs)]
    table = {}
    for (gi, e), m1 in keys.items():
        for (gj, e2), m2 in keys.items():
            if tgt[m1] == gj:
                table[(m2, m1)] = keys[(gi, C.table[(e2, e)])]
    U = FinCategory(len(objs), src, tgt, identity, table,
                    obj_names=[C.mor_names[m] for m in objs])
    pairs = sorted(keys.items(), key=lambda kv: kv[1])
    forget = CatFunctor(U, C, [C.tgt[g] for g in objs],
                        [e for ((gi, e), _) in pairs])
    return U, forget, objs, keys


def over_category(C, d):
    """C/d: arrows into d; the dual slice used by the unstraightening
    formula."""
    objs = sorted(m for m in range(C.n_morphisms) if C.tgt[m] == d)
    obj_index = {m: i for i, m in enumerate(objs)}
    src, tgt, keys = [], [], {}
    for gi, g in enumerate(objs):
        for e in range(C.n_morphisms):
            if C.tgt[e] == C.src[g]:
                h = C.table[(g, e)]
                keys[(obj_index[h], e)] = len(src)
                src.append(obj_index[h])
                tgt.append(gi)
    identity = [keys[(gi, C.identity[C.src[g]])] for gi, g in enumerate(objs)]
    table = {}
    for (gi, e), m1 in keys.items():
        for (gj, e2), m2 in keys.items():
            if src[m2] == tgt[m1]:
                table[(m2, m1)] = keys[(gi, C.table[(e2, e)])]
    O = FinCategory(len(objs), src, tgt, identity, table,
                    obj_names=[C.mor_names[m] for m in objs])
    pairs = sorted(keys.items(), key=lambda kv: kv[1])
    forget = CatFunctor(O, C, [C.src[g] for g in objs],
                        [e for ((gi, e), _) in pairs])
    return O, forget, objs, keys


# -- diagrams ----------------------------------------------------------------

class SSetDiagram:
    """A functor shape -> simplicial sets: a value per object, a simplicial
    map per morphism."""

    def __init__(self, shape, values, maps):
        self.shape = shape
        self.values = list(values)
        self.maps = list(maps)

    @property
    def cap(self):
        return self.values[0].cap

    def validate(self):
        bad = []
        C = self.shape
        for m in range(C.n_morphisms):
            f = self.maps[m]
            if f.domain is not self.values[C.src[m]] or \
                    f.codomain is not self.values[C.tgt[m]]:
                bad.append(("endpoints", m))
            if f.validate():
                bad.append(("not-simplicial", m))
        for o in range(C.n_objects):
            if self.maps[C.identity[o]].comp != \
                    [list(range(self.values[o].counts[n]))
                     for n in range(self.values[o].cap + 1)]:
                bad.append(("identity", o))
        for (g, f), h in C.table.items():
            want = self.maps[h].comp
            got = [[self.maps[g].comp[n][self.maps[f].comp[n][s]]
                    for s in range(self.values[C.src[f]].counts[n])]
                   for n in range(self.cap + 1)]
            if want != got:
                bad.append(("functoriality", g, f))
        return bad


class CatDiagram:
    """A functor shape -> Cat."""

    def __init__(self, shape, values, maps):
        self.shape = shape
        self.values = list(values)
        self.maps = list(maps)

    def validate(self):
        bad = []
        C = self.shape
        for m in range(C.n_morphisms):
            F = self.maps[m]
            if F.validate():
                bad.append(("not-functorial-value", m))
        for o in range(C.n_objects):
            F = self.maps[C.identity[o]]
            if F.obj_map != list(range(self.values[o].n_objects)) or \
                    F.mor_map != list(range(self.values[o].n_morphisms)):
                bad.append(("identity", o))
        for (g, f), h in C.table.items():
            G, F, H = self.maps[g], self.maps[f], self.maps[h]
            if [G.obj_map[o] for o in F.obj_map] != H.obj_map or \
                    [G.mor_map[m] for m in F.mor_map] != H.mor_map:
                bad.append(("functoriality", g, f))
        return bad

    def nerve_diagram(self, cap):
        """Compose with the nerve: a simplicial-set-valued diagram."""
        nerves = [nerve(V, cap) for V in self.values]
        maps = [nerve_map(self.maps[m], cap,
                          nerves[self.shape.src[m]],
                          nerves[self.shape.tgt[m]])
                for m in range(self.shape.n_morphisms)]
        return SSetDiagram(self.shape, nerves, maps)


def constant_diagram(C, X):
    from .sset import identity_map
    return SSetDiagram(C, [X] * C.n_objects,
                       [identity_map(X)] * C.n_morphisms)


def corepresentable_diagram(C, d, cap):
    """D(d,-) as a diagram of discrete simplicial sets."""
    from .sset import discrete
    values = []
    homs = []
    for o in range(C.n_objects):
        h = C.hom(d, o)
        homs.append(h)
        values.append(discrete(len(h), cap))
    maps = []
    for m in range(C.n_morphisms):
        a, b = C.src[m], C.tgt[m]
        post = [homs[b].index(C.table[(m, g)]) for g in homs[a]]
        # discrete sets: simplex id in every degree equals the point id
        comp = [[post[s] for s in range(values[a].counts[n])]
                for n in range(cap + 1)]
        maps.append(SimplicialMap(values[a], values[b], comp))
    return SSetDiagram(C, values, maps), homs
