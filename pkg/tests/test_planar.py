import random

import pytest

from chromalg.errors import ContractLoop, DisconnectedMap, InvalidParameters
from chromalg.planar import (Multigraph, PlanarMap, as_multigraph,
                             canonical_key, canonical_multigraph,
                             contract_edge, delete_edge, dual, faces,
                             map_from_faces)


def triangle():
    return map_from_faces([[0, 1, 2], [0, 2, 1]])


def tetrahedron():
    return map_from_faces([[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]])


def single_loop():
    # one vertex, one loop: darts 0,1 with sigma = (0 1)
    return PlanarMap((1, 0), (1, 0))


def theta():
    # two vertices joined by three parallel edges; built by hand:
    # darts at u: 0,2,4 (ccw), at v: 1,3,5 with alpha i <-> i+1 pairing
    # planar rotation: v sees the edges in reversed order
    return PlanarMap((1, 0, 3, 2, 5, 4), (2, 5, 4, 1, 0, 3))


def test_face_counts():
    assert len(faces(triangle())) == 2
    assert len(faces(single_loop())) == 2
    assert len(faces(tetrahedron())) == 4


def test_euler_validation_rejects_torus():
    # torus: one vertex, two edges, sigma a 4-cycle mixing the pairs
    with pytest.raises(InvalidParameters):
        PlanarMap((1, 0, 3, 2), (2, 3, 1, 0))


def test_theta_shape():
    t = theta()
    assert t.n_vertices == 2 and t.n_edges == 3 and t.n_faces == 3


def test_dual_theta_is_triangle():
    d = dual(theta())
    assert canonical_key(d) == canonical_key(triangle())


def test_dual_tetrahedron_self():
    t = tetrahedron()
    assert canonical_key(dual(t)) == canonical_key(t)


def test_dual_single_edge_is_loop():
    e = PlanarMap((1, 0), (0, 1))  # one edge, two vertices
    assert canonical_key(dual(e)) == canonical_key(single_loop())


def test_dual_involutive():
    for m in (triangle(), tetrahedron(), theta()):
        assert canonical_key(dual(dual(m))) == canonical_key(m)


def test_dual_requires_connected():
    t1, t2 = triangle(), triangle()
    n = t1.n_darts
    alpha = t1.alpha + tuple(h + n for h in t2.alpha)
    sigma = t1.sigma + tuple(h + n for h in t2.sigma)
    two = PlanarMap(alpha, sigma)
    with pytest.raises(DisconnectedMap):
        dual(two)


def test_delete_contract_triangle():
    t = triangle()
    h = t.edge_darts()[0]
    contracted = contract_edge(t, h)
    g = as_multigraph(contracted)
    assert g.n == 2 and len(g.edges) == 2
    assert g.edges[0] == g.edges[1]  # two parallel edges

    deleted = delete_edge(t, h)
    g2 = as_multigraph(deleted)
    assert g2.n == 3 and len(g2.edges) == 2
    assert not g2.has_loop()


def test_contract_parallel_pair_gives_loop():
    # 2-gon: two vertices, two parallel edges
    twogon = PlanarMap((1, 0, 3, 2), (2, 3, 0, 1))
    assert twogon.n_faces == 2
    h = twogon.edge_darts()[0]
    out = contract_edge(twogon, h)
    g = as_multigraph(out)
    assert g.n == 1 and len(g.edges) == 1 and g.has_loop()
    with pytest.raises(ContractLoop):
        contract_edge(out, 0)


def test_delete_to_isolated():
    e = PlanarMap((1, 0), (0, 1))
    out = delete_edge(e, 0)
    assert out.n_darts == 0
    assert out.n_vertices == 2
    g = as_multigraph(out)
    assert g.n == 2 and not g.edges


def test_delete_contract_commute_with_dual():
    # dual(G\e) iso dual(G)/e^ and dual(G/e) iso dual(G)\e^ on small maps
    for m in (triangle(), tetrahedron(), theta()):
        d = dual(m)
        for h in m.edge_darts():
            left = canonical_key(dual(delete_edge(m, h)))
            # the dual edge of h carries the same darts
            if not d.is_loop(h):
                right = canonical_key(contract_edge(d, h))
                assert left == right
            if not m.is_loop(h):
                left2 = canonical_key(dual(contract_edge(m, h)))
                right2 = canonical_key(delete_edge(d, h))
                assert left2 == right2


def test_canonical_key_properties():
    # triangle vs path differ
    path = Multigraph(3, [(0, 1), (1, 2)])
    tri = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
    assert canonical_multigraph(path) != canonical_multigraph(tri)

    # relabelings collide
    rng = random.Random(3)
    base = as_multigraph(tetrahedron())
    keys = set()
    for _ in range(50):
        perm = list(range(base.n))
        rng.shuffle(perm)
        g = Multigraph(base.n, [(perm[u], perm[v]) for u, v in base.edges])
        keys.add(canonical_multigraph(g))
    assert len(keys) == 1


def test_canonical_key_random_relabelings_10_vertices():
    rng = random.Random(17)
    n = 10
    edges = set()
    while len(edges) < 15:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    base = Multigraph(n, sorted(edges))
    keys = set()
    for _ in range(1000):
        perm = list(range(n))
        rng.shuffle(perm)
        g = Multigraph(n, [(perm[u], perm[v]) for u, v in base.edges])
        keys.add(canonical_multigraph(g))
    assert len(keys) == 1


def test_canonical_key_multigraph_features():
    # loops and parallel edges distinguish
    a = Multigraph(2, [(0, 1), (0, 1)])
    b = Multigraph(2, [(0, 1), (0, 0)])
    c = Multigraph(2, [(0, 1), (1, 1)])
    assert canonical_multigraph(a) != canonical_multigraph(b)
    assert canonical_multigraph(b) == canonical_multigraph(c)


def test_json_round_trip():
    t = tetrahedron()
    assert PlanarMap.from_json(t.to_json()) == t
    assert "v0 --" in t.to_dot()
