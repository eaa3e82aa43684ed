import random

import pytest

from chromalg.chromatic import (ChromCache, chromatic_dc, chromatic_statesum,
                                markov_trace_chrom, trace_poly_of_closed,
                                tutte_estimate_check)
from chromalg.errors import TooManyEdges
from chromalg.golden import GoldenNum, golden_eval
from chromalg.planar import Multigraph, PlanarMap
from chromalg.poly import IntPoly, falling_factorial
from chromalg.triangulate import (catalog, enumerate_triangulations,
                                  generate_triangulations, icosahedron,
                                  octahedron, random_planar_maps, tetrahedron)


def P(*coeffs):
    return IntPoly.of(coeffs, "Q")


def test_base_cases():
    assert chromatic_dc(Multigraph(1, [])).poly == P(0, 1)
    assert chromatic_dc(Multigraph(1, [(0, 0)])).poly.is_zero()
    assert chromatic_dc(Multigraph(3, [(0, 1), (1, 2), (0, 2)])).poly == \
        P(0, 2, -3, 1)
    assert chromatic_dc(Multigraph(2, [(0, 1), (0, 1)])).poly == P(0, -1, 1)


def test_k4_and_octahedron():
    assert chromatic_dc(tetrahedron().map).poly == falling_factorial(4)
    assert chromatic_dc(octahedron().map).poly == \
        P(0, -64, 154, -137, 58, -12, 1)


def test_statesum_small():
    assert chromatic_statesum(Multigraph(3, [(0, 1), (1, 2), (0, 2)])) == \
        P(0, 2, -3, 1)
    assert chromatic_statesum(Multigraph(2, [(0, 1)])) == P(0, -1, 1)
    assert chromatic_statesum(Multigraph(3, [])) == P(0, 0, 0, 1)
    with pytest.raises(TooManyEdges):
        chromatic_statesum(Multigraph(30, [(i, i + 1) for i in range(29)]),
                           bound=24)


def _connected_multigraphs(max_edges):
    """Exhaustive connected multigraphs (loops and parallels allowed)."""
    from chromalg.planar import canonical_form

    levels = {0: {Multigraph(1, [])}}
    seen_keys = {canonical_form(Multigraph(1, []))[0]}
    for e in range(1, max_edges + 1):
        nxt = {}
        for g in levels[e - 1]:
            candidates = []
            for u in range(g.n):
                for v in range(u, g.n):
                    candidates.append(Multigraph(g.n, list(g.edges) + [(u, v)]))
                candidates.append(
                    Multigraph(g.n + 1, list(g.edges) + [(u, g.n)]))
            for c in candidates:
                key, canon = canonical_form(c)
                if key not in seen_keys:
                    seen_keys.add(key)
                    nxt[key] = canon
        levels[e] = set(nxt.values())
    out = []
    for e in range(max_edges + 1):
        out.extend(levels[e])
    return out


def test_dc_equals_statesum_exhaustive_small():
    graphs = _connected_multigraphs(5)
    assert len(graphs) > 40
    for g in graphs:
        assert chromatic_dc(g).poly == chromatic_statesum(g), g


def test_dc_equals_statesum_random_maps():
    for m in random_planar_maps(40, seed=123, max_edges=16):
        assert chromatic_dc(m).poly == chromatic_statesum(m)


def test_statesum_homology_invariant():
    g = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 1)])
    assert chromatic_statesum(g, check_invariant=True) == chromatic_dc(g).poly


def test_cut_vertex_multiplicativity():
    rng = random.Random(42)
    for _ in range(20):
        n1, n2 = rng.randint(2, 5), rng.randint(2, 5)
        e1 = {(rng.randrange(n1), rng.randrange(n1)) for _ in range(n1 + 1)}
        e2 = {(rng.randrange(n2), rng.randrange(n2)) for _ in range(n2 + 1)}
        e1 = [(u, v) for u, v in e1 if u != v]
        e2 = [(u, v) for u, v in e2 if u != v]
        g1 = Multigraph(n1, e1)
        g2 = Multigraph(n2, e2)
        # glue at vertex 0 of each
        glued_edges = list(e1) + [(u + n1 - 1 if u else 0,
                                   v + n1 - 1 if v else 0) for u, v in e2]
        glued = Multigraph(n1 + n2 - 1, glued_edges)
        lhs = chromatic_dc(glued).poly * IntPoly.x("Q")
        rhs = chromatic_dc(g1).poly * chromatic_dc(g2).poly
        assert lhs == rhs


def test_hi_relation_consistency():
    # chi_Z1 + chi_Y1 = chi_Z2 + chi_Y2 for the four local configurations
    # completed by a random context with four attachment vertices.
    rng = random.Random(9)
    for _ in range(15):
        n = rng.randint(4, 7)
        base = {(rng.randrange(n), rng.randrange(n)) for _ in range(n)}
        base = [(u, v) for u, v in base if u != v]
        a, b, c, d = (rng.randrange(n) for _ in range(4))
        p, q = n, n + 1

        def chi(extra, nn):
            return chromatic_dc(Multigraph(nn, base + extra)).poly

        z1 = chi([(a, p), (b, p), (c, q), (d, q), (p, q)], n + 2)
        z2 = chi([(a, p), (c, p), (b, q), (d, q), (p, q)], n + 2)
        y2 = chi([(a, p), (b, p), (c, q), (d, q)], n + 2)  # Z1 with e deleted
        y1 = chi([(a, p), (c, p), (b, q), (d, q)], n + 2)  # Z2 with e deleted
        assert z1 + y1 == z2 + y2


def test_markov_trace_values():
    from chromalg.rect import RectGraph, identity_rect, theta_closed

    # empty diagram
    empty = identity_rect(0)
    assert markov_trace_chrom(empty) == IntPoly.one("Q")
    # single strand: closure = circle, trace Q-1
    assert markov_trace_chrom(identity_rect(1)) == P(-1, 1)
    # two strands: two nested circles
    assert markov_trace_chrom(identity_rect(2)) == P(-1, 1) * P(-1, 1)
    # closed theta graph: (Q-1)(Q-2)
    assert trace_poly_of_closed(theta_closed()) == P(-1, 1) * P(-2, 1)


def test_tutte_estimate():
    res = tutte_estimate_check(tetrahedron())
    assert res["holds"] and res["lhs"] == GoldenNum.of(-1)
    assert res["bound_exponent"] == 1
    assert tutte_estimate_check(octahedron())["holds"]
    assert tutte_estimate_check(icosahedron())["holds"]


def test_octahedron_golden_value():
    chi = chromatic_dc(octahedron().map).poly
    v = golden_eval(chi, "phi_plus_1")
    # |chi(phi+1)| <= phi^{-1}: tiny golden number
    est = tutte_estimate_check(octahedron())
    assert est["holds"] and est["bound_exponent"] == -1
    assert v == golden_eval(chi, GoldenNum.of(1, 1))


def test_enumerate_triangulation_counts():
    # Simple sphere triangulation counts: 1, 1, 2, 5 for V = 4..7 (A000109)
    all_t = enumerate_triangulations(7)
    assert [len(all_t[v]) for v in (4, 5, 6, 7)] == [1, 1, 2, 5]


def test_generated_triangulations_valid():
    for t in generate_triangulations(8, 5, seed=7):
        m = t.map
        assert m.n_vertices == 8
        assert m.n_faces == 2 * 8 - 4
        assert all(len(f) == 3 for f in m.faces_)


def test_generate_4_is_tetrahedron():
    from chromalg.planar import canonical_key
    t = generate_triangulations(4, 1, seed=0)[0]
    assert canonical_key(t.map) == canonical_key(tetrahedron().map)


def test_catalog_members_valid():
    for name, t in catalog().items():
        assert t.map.n_faces == 2 * t.map.n_vertices - 4, name


def test_cache_reuse():
    cache = ChromCache()
    g = octahedron().map
    r1 = chromatic_dc(g, cache)
    r2 = chromatic_dc(g, cache)
    assert r1.poly == r2.poly
    assert r2.cache_hits >= 1
    assert isinstance(r1.stats["wall_time"], float)
