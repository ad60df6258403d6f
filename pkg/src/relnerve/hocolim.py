"""The bar-construction homotopy colimit over a finite base, its comparison
into the relative nerve, the unit and counit of the rectification
adjunction, and the localized composites that compute (homotopy) colimits of
plain simplicial diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import chain_arrow, nerve
from .marked import (MarkedDiagram, MarkedSSet, Localization,
                     OverMappingSpace, colim_marked, degenerate_edges,
                     extend_along_J, localize, mark_diagram,
                     marked_rel_nerve, rectify_right, under_nerve_sharp)
from .pathspace import chain_object_of_key, lurie_grothendieck
from .sset import (KeyedSSet, SimplicialMap, SSetError, TruncSSet,
                   coequalize_disjoint)


@dataclass
class BarObject:
    total: TruncSSet            # keys (sigma_id, x)
    proj: SimplicialMap
    base_nerve: object
    diagram: object             # SSetDiagram or MarkedDiagram
    marked: object = None       # frozenset when the input was marked


def bar_hocolim(F, cap):
    """Diagonal bar construction: n-simplices are pairs (sigma, x) with x an
    n-simplex of the value at sigma(0); the zeroth face transports x along
    the first arrow, all other operators act diagonally."""
    marked_input = isinstance(F, MarkedDiagram)
    U = F.underlying() if marked_input else F
    C = U.shape
    if U.cap < cap:
        raise SSetError("diagram values are too shallow for cap=%d" % cap)
    NC = nerve(C, cap)
    keys = []
    for n in range(cap + 1):
        layer = []
        for sid in NC.simplices(n):
            k = NC.key_of(n, sid)
            o0 = chain_object_of_key(C, k, n, 0)
            layer.extend((sid, x) for x in U.values[o0].simplices(n))
        keys.append(layer)

    def face_key(n, i, key):
        sid, x = key
        k = NC.key_of(n, sid)
        o0 = chain_object_of_key(C, k, n, 0)
        V = U.values[o0]
        if i == 0:
            arrow = k[0] if n >= 1 else C.identity[k[0]]
            nk = _face_base(C, NC, n, sid, 0)
            return (nk, U.maps[arrow].comp[n - 1][V.faces[n][0][x]])
        return (_face_base(C, NC, n, sid, i), V.faces[n][i][x])

    def deg_key(n, i, key):
        sid, x = key
        k = NC.key_of(n, sid)
        o0 = chain_object_of_key(C, k, n, 0)
        return (_degen_base(C, NC, n, sid, i),
                U.values[o0].degens[n][i][x])

    total = KeyedSSet(cap, keys, face_key, deg_key)
    proj = SimplicialMap(total, NC,
                         [[total.key_of(n, s)[0] for s in total.simplices(n)]
                          for n in range(cap + 1)])
    marked = None
    if marked_input:
        marked = set()
        for s in total.simplices(1):
            sid, x = total.key_of(1, s)
            k = NC.key_of(1, sid)
            o0 = chain_object_of_key(C, k, 1, 0)
            if x in F.values[o0].marked:
                marked.add(s)
        marked = frozenset(marked)
    return BarObject(total, proj, NC, F, marked)


def _face_base(C, NC, n, sid, i):
    from .pathspace import _nerve_face_key
    return NC.id_of(n - 1, _nerve_face_key(C, NC.key_of(n, sid), n, i))


def _degen_base(C, NC, n, sid, i):
    from .pathspace import _nerve_degen_key
    return NC.id_of(n + 1, _nerve_degen_key(C, NC.key_of(n, sid), n, i))


def iota(F, cap, bar=None, rel=None):
    """The inclusion comparison h!(F) -> relative nerve over the base:
    (sigma, x) goes to the tuple of transported front faces of x."""
    U = F.underlying() if isinstance(F, MarkedDiagram) else F
    C = U.shape
    bar = bar if bar is not None else bar_hocolim(F, cap)
    rel = rel if rel is not None else lurie_grothendieck(U, cap)
    NC = bar.base_nerve
    comp = []
    for n in range(cap + 1):
        row = []
        for s in bar.total.simplices(n):
            sid, x = bar.total.key_of(n, s)
            k = NC.key_of(n, sid)
            o0 = chain_object_of_key(C, k, n, 0)
            V0 = U.values[o0]
            beta = []
            for i in range(n + 1):
                front = V0.apply_vertex_map(n, x, tuple(range(i + 1)))
                arrow = chain_arrow(C, k, n, 0, i)
                beta.append(U.maps[arrow].comp[i][front])
            row.append(rel.total.id_of(n, (sid, tuple(beta))))
        comp.append(row)
    return SimplicialMap(bar.total, rel.total, comp), bar, rel


def iota_fiber_bijective(io, bar, rel, F):
    """The comparison restricted to each fiber is a bijection onto the
    corresponding relative-nerve fiber (its isomorphism content)."""
    from .fincat import constant_chain
    C = F.shape
    NC = bar.base_nerve
    cap = bar.total.cap
    for c in range(C.n_objects):
        for n in range(cap + 1):
            const = constant_chain(NC, C, c, n)
            bar_fib = [s for s in bar.total.simplices(n)
                       if bar.proj.comp[n][s] == const]
            rel_fib = set(s for s in rel.total.simplices(n)
                          if rel.proj.comp[n][s] == const)
            image = set(io.comp[n][s] for s in bar_fib)
            if image != rel_fib or len(image) != len(bar_fib):
                return False
    return True


def bar_fiber(bar, c):
    """Fiber of the bar construction over an object, with the inverse pair
    onto the value."""
    from .fincat import constant_chain
    from .sset import restrict, sub_sset
    U = bar.diagram.underlying() if isinstance(bar.diagram, MarkedDiagram) \
        else bar.diagram
    C = U.shape
    NC = bar.base_nerve
    cap = bar.total.cap
    selected = []
    for n in range(cap + 1):
        const = constant_chain(NC, C, c, n)
        selected.append([s for s in bar.total.simplices(n)
                         if bar.proj.comp[n][s] == const])
    fib, inc = sub_sset(bar.total, selected)
    X = U.values[c] if U.values[c].cap == cap else restrict(U.values[c], cap)
    to_value = [[bar.total.key_of(n, inc.comp[n][s])[1]
                 for s in fib.simplices(n)] for n in range(cap + 1)]
    from_value = [[selected[n].index(bar.total.id_of(
        n, (constant_chain(NC, C, c, n), x))) for x in X.simplices(n)]
        for n in range(cap + 1)]
    return fib, SimplicialMap(fib, X, to_value), \
        SimplicialMap(X, fib, from_value)


# -- unit and counit of the rectification adjunction --------------------------

def eta_unit(FM, d, cap_out, rectified=None, rel=None):
    """The unit F(d) -> [N(d/D) sharp, relnerve(F)]^+_D.

    The value at an n-simplex x is the over-base map whose component at a
    pair (slice simplex, operator into Delta[n]) transports the restricted
    front faces of x along the slice legs.
    """
    C = FM.shape
    cap = FM.cap
    OM, R = marked_rel_nerve(FM, cap)
    NC = R.base_nerve
    if rectified is None:
        over, Ucat, forget, objs, arrow_keys = under_nerve_sharp(
            C, d, cap, NC=NC)
        space = OverMappingSpace(over, OM, cap_out)
    else:
        space = rectified.spaces[d]
        Ucat, forget, objs = rectified.unders[d][:3]
        over = space.X
    NU = over.sset
    U = FM.underlying()
    Xd = U.values[d]
    comp = []
    for n in range(cap_out + 1):
        row = []
        for x in Xd.simplices(n):
            table = _eta_table(FM, d, n, x, space, NU, forget, objs, NC)
            row.append(space.id_of(n, table))
        comp.append(row)
    from .sset import restrict
    dom = Xd if Xd.cap == cap_out else restrict(Xd, cap_out)
    eta = SimplicialMap(dom, space.sset, comp)
    return eta, space, OM, R


def _eta_table(FM, d, n, x, space, NU, forget, objs, NC):
    """Value table of eta(x) on the prism Delta[n] x N(d/D).

    At a prism simplex (alpha, slice chain) the x-part is restricted along
    alpha, its front faces are transported along the slice legs d -> e_i,
    and the resulting tuple sits over the forgetful image of the chain.
    """
    U = FM.underlying()
    Ucat = forget.domain
    P, pr1, pr2 = space.prisms[n]
    delta_n = space.deltas[n]
    Xd = U.values[d]
    out = []
    for m in range(U.cap + 1):
        row = []
        for s in P.simplices(m):
            alpha = delta_n.key_of(m, pr1.comp[m][s])   # [m] -> [n]
            slice_key = NU.key_of(m, pr2.comp[m][s])
            if m == 0:
                base_key = (forget.obj_map[slice_key[0]],)
            else:
                base_key = tuple(forget.mor_map[mm] for mm in slice_key)
            xa = Xd.apply_vertex_map(n, x, alpha)
            beta = []
            for i in range(m + 1):
                front = Xd.apply_vertex_map(m, xa, tuple(range(i + 1)))
                leg = objs[chain_object_of_key(Ucat, slice_key, m, i)]
                beta.append(U.maps[leg].comp[i][front])
            sid = NC.id_of(m, base_key)
            row.append(space.Y.sset.id_of(m, (sid, tuple(beta))))
        out.append(tuple(row))
    return tuple(out)


def counit_w2(X, cap, rectified=None):
    """The counit h!(h*(X)) -> X: evaluate a mapping-space simplex at the
    identity-based lift of its base chain."""
    rect = rectified if rectified is not None else rectify_right(X, cap)
    RD = rect.diagram
    cap_out = RD.cap
    if cap > cap_out:
        raise SSetError("counit cap exceeds the rectified diagram")
    bar = bar_hocolim(RD, cap)
    C = X.shape
    NC = X.base_nerve
    comp = []
    for n in range(cap + 1):
        row = []
        for s in bar.total.simplices(n):
            sid, x = bar.total.key_of(n, s)
            k = NC.key_of(n, sid)
            o0 = chain_object_of_key(C, k, n, 0)
            space = rect.spaces[o0]
            Ucat, forget, objs, arrow_keys = rect.unders[o0]
            table = space.table(n, x)
            # locate the n-simplex (canonical lift, id_n) in the prism
            lift = _canonical_lift(Ucat, C, objs, arrow_keys, k, n)
            NU = space.X.sset
            lift_id = NU.id_of(n, lift)
            delta_n = space.deltas[n]
            idn = delta_n.id_of(n, tuple(range(n + 1)))
            P, pr1, pr2 = space.prisms[n]
            prism_id = idn * NU.counts[n] + lift_id
            row.append(table[n][prism_id])
        comp.append(row)
    from .sset import restrict
    target = X.sset if X.sset.cap == cap else restrict(X.sset, cap)
    return SimplicialMap(bar.total, target, comp), bar, rect


def _canonical_lift(Ucat, C, objs, arrow_keys, base_key, n):
    """The chain in d/D over a base chain starting at d with g_0 = id_d."""
    if n == 0:
        d = base_key[0]
        return (objs.index(C.identity[d]),)
    d = C.src[base_key[0]]
    legs = [C.identity[d]]
    for i in range(1, n + 1):
        legs.append(C.table[(base_key[i - 1], legs[-1])])
    key = []
    for i in range(n):
        gi = objs.index(legs[i])
        key.append(arrow_keys[(gi, base_key[i])])
    return tuple(key)


# -- localized composites ------------------------------------------------------

@dataclass
class HocolimResult:
    total: TruncSSet
    localization: Localization
    bar: BarObject
    marked_total: MarkedSSet


def hocolim_qcat(F, cap):
    """Localized marked bar construction of the naturally marked diagram:
    mark equivalences objectwise, take the bar construction with its marking,
    forget the base, and invert the marked edges."""
    if cap < 2:
        raise SSetError("hocolim needs cap >= 2 for the equivalence marking")
    FM = mark_diagram(F, "natural")
    bar = bar_hocolim(FM, cap)
    M = MarkedSSet(bar.total, bar.marked | degenerate_edges(bar.total))
    loc = localize(M)
    return HocolimResult(loc.total, loc, bar, M)


@dataclass
class ColimComparison:
    direct: TruncSSet
    composite: TruncSSet
    localization: Localization
    mode: str                    # "iso" | "retract"
    ok: bool
    detail: str


def direct_colim(F):
    """Degreewise colimit: coequalizer of the transport relations."""
    C = F.shape
    parts = list(F.values)
    relations = []
    for m in range(C.n_morphisms):
        a, b = C.src[m], C.tgt[m]
        for n in range(F.cap + 1):
            for s in parts[a].simplices(n):
                relations.append((a, n, s, b, F.maps[m].comp[n][s]))
    return coequalize_disjoint(parts, relations)


def colim_via_marked(F, cap=None):
    """Compare the direct degreewise colimit with the localized colimit of
    the naturally marked diagram.

    When the marked colimit carries no nondegenerate marked edges the two
    are certified degreewise isomorphic.  Otherwise the localization glues
    walking isomorphisms along edges that are already invertible; the
    certificate is then the retraction built from J-extensions (the
    "collapse the glued isomorphisms" comparison), which restricts to the
    identity on the direct colimit.
    """
    cap = F.cap if cap is None else cap
    if cap < 2:
        raise SSetError("the natural marking needs cap >= 2")
    Q, qmaps = direct_colim(F)
    FM = mark_diagram(F, "natural")
    QM, qmaps_m = colim_marked(FM)
    same = Q.counts == QM.sset.counts and all(
        qmaps[o].comp == qmaps_m[o].comp for o in range(F.shape.n_objects))
    if not same:
        return ColimComparison(Q, QM.sset, None, "iso", False,
                               "colimit mismatch between the two routes")
    loc = localize(QM)
    if not loc.glued_edges:
        return ColimComparison(Q, loc.total, loc, "iso",
                               loc.total.counts == Q.counts,
                               "no marked edges to invert")
    # retraction: extend each glued walking iso into the colimit itself
    p = loc.proj
    retr = [[None] * loc.total.counts[n] for n in range(cap + 1)]
    for n in range(cap + 1):
        for s in Q.simplices(n):
            retr[n][p.comp[n][s]] = s
    Cj, c_injs = loc.j_copies
    for idx, e in enumerate(loc.glued_edges):
        ext = extend_along_J(Q, e)
        if ext is None:
            return ColimComparison(Q, loc.total, loc, "retract", False,
                                   "no J-extension for glued edge %d" % e)
        J = ext.domain
        for n in range(cap + 1):
            for t in J.simplices(n):
                tot = loc.j_leg.comp[n][c_injs[idx].comp[n][t]]
                if retr[n][tot] is None:
                    retr[n][tot] = ext.comp[n][t]
    if any(v is None for row in retr for v in row):
        return ColimComparison(Q, loc.total, loc, "retract", False,
                               "retraction incomplete")
    U = SimplicialMap(loc.total, Q, retr)
    if U.validate():
        return ColimComparison(Q, loc.total, loc, "retract", False,
                               "retraction not simplicial")
    if any(U.comp[n][p.comp[n][s]] != s for n in range(cap + 1)
           for s in Q.simplices(n)):
        return ColimComparison(Q, loc.total, loc, "retract", False,
                               "U o p is not the identity")
    return ColimComparison(Q, loc.total, loc, "retract", True,
                           "identified glued isomorphisms back onto the "
                           "colimit")
