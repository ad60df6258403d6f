import itertools

import pytest

from relnerve.certify import check_simplicial_identities, verify_iso_map
from relnerve.sset import (SSetError, TruncationError, boundary,
                           build_generated, classifying_map, constant_map,
                           discrete, enumerate_maps, exponential,
                           ez_decompose, horn, identity_map,
                           invert_bijection, product, pushout, restrict,
                           standard_simplex, sub_sset, walking_iso)


def binomial(n, k):
    from math import comb
    return comb(n, k)


def test_delta_counts():
    D = standard_simplex(2, 2)
    # monotone maps [m] -> [2]
    assert D.counts == [3, 6, 10]
    assert check_simplicial_identities(D).ok


def test_boundary_counts():
    B = boundary(2, 2)
    assert [len(B.nondegenerate(n)) for n in range(3)] == [3, 3, 0]
    assert check_simplicial_identities(B).ok


@pytest.mark.parametrize("n,k", [(2, 0), (2, 1), (3, 2)])
def test_horn_counts(n, k):
    H = horn(n, k, n)
    D = standard_simplex(n, n)
    # the horn misses the top cell and the k-th facet
    missing = 2
    assert len(H.nondegenerate(n - 1)) == len(D.nondegenerate(n - 1)) - 1
    assert sum(len(H.nondegenerate(m)) for m in range(n + 1)) == \
        sum(len(D.nondegenerate(m)) for m in range(n + 1)) - missing
    assert check_simplicial_identities(H).ok


def test_horn_index_validation():
    with pytest.raises(SSetError):
        horn(2, 3, 2)
    with pytest.raises(SSetError):
        build_generated("horn", 2, n=2, k=-1)


def test_walking_iso_nondegenerate_profile():
    J = walking_iso(3)
    assert [len(J.nondegenerate(n)) for n in range(4)] == [2, 2, 2, 2]
    assert check_simplicial_identities(J).ok


def test_walking_iso_agrees_with_groupoid_nerve():
    from relnerve.fincat import indiscrete_groupoid, nerve
    J = walking_iso(3)
    N = nerve(indiscrete_groupoid(2), 3)
    assert J.counts == N.counts
    assert [len(J.nondegenerate(n)) for n in range(4)] == \
        [len(N.nondegenerate(n)) for n in range(4)]


def test_apply_vertex_map_against_delta_composition():
    D = standard_simplex(3, 3)
    for l in range(4):
        for u in itertools.combinations_with_replacement(range(4), l + 1):
            for s in D.simplices(3):
                t = D.key_of(3, s)
                assert D.apply_vertex_map(3, s, u) == \
                    D.id_of(l, tuple(t[v] for v in u))


def test_vertex_tuple():
    D = standard_simplex(2, 2)
    for s in D.simplices(2):
        assert D.vertex_tuple(2, s) == tuple(
            D.id_of(0, (v,)) for v in D.key_of(2, s))


def test_ez_decompose_unique_and_normalized():
    P = standard_simplex(0, 2)
    word, (m, y) = ez_decompose(P, 2, 0)
    assert word == [1, 0] and m == 0 and y == 0
    D = standard_simplex(1, 2)
    for s in D.simplices(2):
        word, (m, y) = ez_decompose(D, 2, s)
        assert not D.degenerate_flags(m)[y]
        assert all(a > b for a, b in zip(word, word[1:]))
        assert D.apply_word(m, y, word) == s
    # nondegenerate simplices decompose trivially
    e = D.id_of(1, (0, 1))
    assert ez_decompose(D, 1, e) == ([], (1, e))


def test_product_of_intervals():
    D1 = standard_simplex(1, 2)
    P, p1, p2 = product(D1, D1)
    assert P.counts[0] == 4
    assert len(P.nondegenerate(1)) == 5
    assert len(P.nondegenerate(2)) == 2
    assert check_simplicial_identities(P).ok
    assert not p1.validate() and not p2.validate()


def test_product_unit_and_swap():
    X = boundary(2, 2)
    pt = standard_simplex(0, 2)
    P, p1, _ = product(X, pt)
    assert p1.is_bijective()
    inv = invert_bijection(p1)
    assert verify_iso_map(p1, inv).ok
    # symmetry via the swap map
    Y = standard_simplex(1, 2)
    XY, pr1, pr2 = product(X, Y)
    YX, q1, q2 = product(Y, X)
    swap = [[pr2.comp[n][s] * X.counts[n] + pr1.comp[n][s]
             for s in range(XY.counts[n])] for n in range(3)]
    from relnerve.sset import SimplicialMap
    sw = SimplicialMap(XY, YX, swap)
    assert not sw.validate() and sw.is_bijective()


def test_pushout_identity_legs():
    X = boundary(2, 2)
    P, inj_b, inj_c = pushout(identity_map(X), identity_map(X))
    assert P.counts == X.counts
    assert inj_b.is_bijective()


def test_pushout_circle_from_two_arcs():
    # Delta[1] glued to Delta[1] along both endpoints is the circle
    cap = 2
    pts = discrete(2, cap)
    arc_b = standard_simplex(1, cap)
    arc_c = standard_simplex(1, cap)
    from relnerve.sset import SimplicialMap

    def endpoints_map(arc):
        comp = [[arc.id_of(0, (0,)), arc.id_of(0, (1,))]]
        for n in range(1, cap + 1):
            row = []
            for s in pts.simplices(n):
                cur = comp[0][s]   # discrete: id equals the point
                for d in range(n):
                    cur = arc.degens[d][0][cur]
                row.append(cur)
            comp.append(row)
        return SimplicialMap(pts, arc, comp)

    f = endpoints_map(arc_b)
    g = endpoints_map(arc_c)
    assert not f.validate() and not g.validate()
    P, _, _ = pushout(f, g)
    assert [len(P.nondegenerate(n)) for n in range(cap + 1)] == [2, 2, 0]
    from relnerve.homology import homology_table
    assert homology_table(P, 1) == [(1, []), (1, [])]


def test_pushout_along_identity_leg_gives_other_vertex():
    cap = 2
    D1 = standard_simplex(1, cap)
    J = walking_iso(cap)
    from relnerve.sset import SimplicialMap
    incl = SimplicialMap(D1, J, [[J.id_of(n, D1.key_of(n, t))
                                  for t in D1.simplices(n)]
                                 for n in range(cap + 1)])
    P, inj_b, inj_c = pushout(identity_map(D1), incl)
    assert P.counts == J.counts
    assert inj_c.is_bijective()


def test_exponential_interval_endomaps():
    D1 = standard_simplex(1, 3)
    E = exponential(D1, D1, 1)
    assert E.counts[0] == 3      # the three monotone endomaps of [1]
    assert check_simplicial_identities(E).ok


def test_exponential_point_argument_recovers_target():
    Y = boundary(2, 3)
    E = exponential(Y, standard_simplex(0, 3), 2)
    assert E.counts == Y.counts[:3]


def test_exponential_point_target_terminal():
    X = boundary(2, 3)
    E = exponential(standard_simplex(0, 3), X, 2)
    assert E.counts == [1, 1, 1]


def test_exponential_validity_bound():
    D1 = standard_simplex(1, 2)
    with pytest.raises(TruncationError):
        exponential(D1, D1, 2)     # 2 + 1 > 2


def test_truncation_commutes_with_product_and_pushout():
    X3 = boundary(2, 3)
    Y3 = standard_simplex(1, 3)
    P3 = product(X3, Y3)[0]
    P2 = product(restrict(X3, 2), restrict(Y3, 2))[0]
    assert restrict(P3, 2).counts == P2.counts
    Q3 = pushout(constant_map(Y3, X3, 0), identity_map(Y3))[0]
    Y2, X2 = restrict(Y3, 2), restrict(X3, 2)
    Q2 = pushout(constant_map(Y2, X2, 0), identity_map(Y2))[0]
    assert restrict(Q3, 2).counts == Q2.counts


def test_restrict_refuses_to_grow():
    X = standard_simplex(1, 2)
    with pytest.raises(TruncationError):
        restrict(X, 3)


def test_truncation_commutes_on_random_fixtures():
    import random
    from relnerve.randomgen import SuiteBounds, random_sub_delta
    rng = random.Random(2)
    bounds = SuiteBounds()
    for _ in range(8):
        X = random_sub_delta(rng, bounds, 3)
        Y = random_sub_delta(rng, bounds, 3)
        hi = product(X, Y)[0]
        lo = product(restrict(X, 2), restrict(Y, 2))[0]
        assert restrict(hi, 2).counts == lo.counts
        hi_p = pushout(constant_map(X, Y, 0), identity_map(X))[0]
        X2, Y2 = restrict(X, 2), restrict(Y, 2)
        lo_p = pushout(constant_map(X2, Y2, 0), identity_map(X2))[0]
        assert restrict(hi_p, 2).counts == lo_p.counts


def test_enumerate_maps_counts_maps_to_point_and_interval():
    X = boundary(2, 2)
    pt = standard_simplex(0, 2)
    assert len(enumerate_maps(X, pt)) == 1
    # maps Delta[1] -> Delta[1] are the monotone endomaps
    D1 = standard_simplex(1, 2)
    assert len(enumerate_maps(D1, D1)) == 3


def test_exponential_adjunction_counts():
    # maps Z -> [X => Y] biject with maps Z x X -> Y, through two
    # independent code paths (mapping-object construction vs enumeration
    # over the product)
    Y = standard_simplex(1, 3)
    X = standard_simplex(1, 3)
    E = exponential(Y, X, 1)
    for Z3 in (standard_simplex(1, 3), boundary(2, 3)):
        Z1 = restrict(Z3, 1)
        lhs = len(enumerate_maps(Z1, E))
        ZX = product(Z3, X)[0]
        rhs = len(enumerate_maps(ZX, Y))
        assert lhs == rhs


def test_classifying_map_picks_out_simplex():
    X = boundary(2, 2)
    for s in X.simplices(1):
        f = classifying_map(X, 1, s)
        assert not f.validate()
        D1 = f.domain
        assert f.comp[1][D1.id_of(1, (0, 1))] == s


def test_sub_sset_closed_inclusion():
    X = standard_simplex(2, 2)
    selected = [[X.id_of(0, (v,)) for v in (0, 1)],
                [X.id_of(1, k) for k in ((0, 0), (0, 1), (1, 1))],
                [X.id_of(2, k) for k in ((0, 0, 0), (0, 0, 1), (0, 1, 1),
                                         (1, 1, 1))]]
    S, inc = sub_sset(X, selected)
    assert S.counts == [2, 3, 4]
    assert not inc.validate()
    assert check_simplicial_identities(S).ok
