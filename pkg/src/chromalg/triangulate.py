"""Sphere triangulations: catalog solids, random generation, enumeration.

Random triangulations follow the classic recipe: repeatedly insert a
degree-3 vertex into a uniformly chosen face of the tetrahedron, then apply
random diagonal flips.  Flip closure is also used to enumerate *all*
triangulations with few vertices (the flip graph on sphere triangulations
with a fixed vertex count is connected).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidParameters, InvalidSize
from .planar import PlanarMap, canonical_key, map_from_faces


@dataclass(frozen=True)
class Triangulation:
    """A sphere map whose faces are all triangles; simple and connected."""

    map: PlanarMap

    def __post_init__(self):
        m = self.map
        if not m.is_connected():
            raise InvalidParameters("triangulation must be connected")
        for f in m.faces_:
            if len(f) != 3:
                raise InvalidParameters("non-triangular face")
        for h in m.edge_darts():
            if m.is_loop(h):
                raise InvalidParameters("triangulation contains a loop")

    @property
    def n_vertices(self):
        return self.map.n_vertices


def tetrahedron():
    return Triangulation(map_from_faces(
        [[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]))


def octahedron():
    return Triangulation(map_from_faces(
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 1],
         [5, 2, 1], [5, 3, 2], [5, 4, 3], [5, 1, 4]]))


def icosahedron():
    faces = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
             [1, 6, 2], [2, 7, 3], [3, 8, 4], [4, 9, 5], [5, 10, 1],
             [2, 6, 7], [3, 7, 8], [4, 8, 9], [5, 9, 10], [1, 10, 6],
             [11, 7, 6], [11, 8, 7], [11, 9, 8], [11, 10, 9], [11, 6, 10]]
    return Triangulation(map_from_faces(faces))


def bipyramid(k):
    """Double pyramid over a k-gon (k >= 3); k = 4 is the octahedron."""
    if k < 3:
        raise InvalidSize("bipyramid needs k >= 3")
    ring = list(range(1, k + 1))
    top, bottom = 0, k + 1
    faces = []
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        faces.append([top, a, b])
        faces.append([bottom, b, a])
    return Triangulation(map_from_faces(faces))


def catalog():
    """Named triangulations used throughout the test corpus."""
    out = {"tetrahedron": tetrahedron(), "octahedron": octahedron(),
           "icosahedron": icosahedron()}
    for k in (3, 5, 6, 7):
        out[f"bipyramid_{k}"] = bipyramid(k)
    return out


# ---------------------------------------------------------------------------
# Dart surgery: vertex insertion and diagonal flips.
# ---------------------------------------------------------------------------


def _vertex_cycles(m):
    return [list(c) for c in m.vertices]


def _rebuild_map(cycles, alpha):
    sigma = [0] * len(alpha)
    for cyc in cycles:
        k = len(cyc)
        for i, h in enumerate(cyc):
            sigma[h] = cyc[(i + 1) % k]
    return PlanarMap(tuple(alpha), tuple(sigma))


def insert_degree3(m, face_dart):
    """Subdivide the face containing face_dart with a new interior vertex."""
    face = None
    for f in m.faces_:
        if face_dart in f:
            face = f
            break
    if face is None or len(face) != 3:
        raise InvalidParameters("face_dart must sit on a triangular face")
    # Face orbit (d0, d1, d2); dart d_i is outgoing at the i-th corner.
    d = list(face)
    n = m.n_darts
    # New darts: for corner i, x_i at the old vertex and w_i at the new one.
    x = [n, n + 2, n + 4]
    w = [n + 1, n + 3, n + 5]
    alpha = list(m.alpha) + [0] * 6
    for i in range(3):
        alpha[x[i]] = w[i]
        alpha[w[i]] = x[i]
    cycles = _vertex_cycles(m)
    for i in range(3):
        # Insert x_i in the face corner at d_i, i.e. right after d_i.
        for cyc in cycles:
            if d[i] in cyc:
                cyc.insert(cyc.index(d[i]) + 1, x[i])
                break
    cycles.append([w[0], w[1], w[2]])
    out = _rebuild_map(cycles, alpha)
    return out


def flip(m, h):
    """Diagonal flip of edge h; returns None when the flip is not allowed.

    The two adjacent faces must be distinct triangles and the new diagonal
    must not already be an edge (triangulations stay simple).
    """
    h2 = m.alpha[h]
    f1, f2 = m.face_of[h], m.face_of[h2]
    if f1 == f2:
        return None
    face1, face2 = m.faces_[f1], m.faces_[f2]
    if len(face1) != 3 or len(face2) != 3:
        raise InvalidParameters("flip needs triangular faces")
    # face orbit (h, a, b): vertices v(h) --e--> v(a), with v(b) opposite.
    i1 = face1.index(h)
    a, b = face1[(i1 + 1) % 3], face1[(i1 + 2) % 3]
    i2 = face2.index(h2)
    c, dd = face2[(i2 + 1) % 3], face2[(i2 + 2) % 3]
    vb, vd = m.vertex_of[b], m.vertex_of[dd]
    if vb == vd:
        return None
    # simplicity: reject if edge (vb, vd) already present
    for x in m.vertices[vb]:
        if m.vertex_of[m.alpha[x]] == vd:
            return None
    cycles = _vertex_cycles(m)

    def remove(dart):
        for cyc in cycles:
            if dart in cyc:
                cyc.remove(dart)
                return
        raise AssertionError

    def insert_after(anchor, dart):
        for cyc in cycles:
            if anchor in cyc:
                cyc.insert(cyc.index(anchor) + 1, dart)
                return
        raise AssertionError

    # Reuse darts h, h2 for the new diagonal: h moves to the corner of f2 at
    # v(d), h2 to the corner of f1 at v(b).
    remove(h)
    remove(h2)
    insert_after(dd, h)
    insert_after(b, h2)
    out = _rebuild_map(cycles, list(m.alpha))
    for f in out.faces_:
        if len(f) != 3:
            raise AssertionError("flip produced a non-triangular face")
    return out


def generate_triangulations(vertices, count, seed):
    """Random triangulations with the given vertex count.

    Grows the tetrahedron by uniform degree-3 insertions, then mixes with
    random diagonal flips (3E accepted flips per map).
    """
    if vertices < 4:
        raise InvalidSize("triangulations need at least 4 vertices")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = tetrahedron().map
        while m.n_vertices < vertices:
            f = rng.randrange(len(m.faces_))
            m = insert_degree3(m, m.faces_[f][0])
        flips_wanted = 3 * m.n_edges
        attempts = 0
        done = 0
        while done < flips_wanted and attempts < 40 * flips_wanted:
            attempts += 1
            h = rng.randrange(m.n_darts)
            flipped = flip(m, h)
            if flipped is not None:
                m = flipped
                done += 1
        out.append(Triangulation(m))
    return out


def enumerate_triangulations(max_vertices):
    """All simple sphere triangulations with 4..max_vertices vertices.

    Exhaustive: for each vertex count the flip graph is connected, so flip
    closure of any single representative finds everything; representatives
    for V+1 come from degree-3 insertions into every face.
    """
    by_v = {4: [tetrahedron().map]}
    for v in range(4, max_vertices + 1):
        # flip closure at this vertex count
        seen = {}
        queue = list(by_v[v])
        for m in queue:
            seen[canonical_key(m)] = m
        while queue:
            m = queue.pop()
            for h in m.edge_darts():
                nxt = flip(m, h)
                if nxt is None:
                    continue
                key = canonical_key(nxt)
                if key not in seen:
                    seen[key] = nxt
                    queue.append(nxt)
        by_v[v] = list(seen.values())
        if v < max_vertices:
            seeds = []
            for m in by_v[v]:
                seeds.append(insert_degree3(m, 0))
            by_v[v + 1] = seeds
    return {v: [Triangulation(m) for m in ms] for v, ms in by_v.items()}


def random_planar_maps(count, seed, max_edges=16):
    """Random connected planar multigraph maps for oracle cross-checks.

    Each map starts from a random triangulation and applies random edge
    deletions and contractions, so loops and parallel edges do occur.
    """
    from .planar import contract_edge, delete_edge

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = rng.randint(5, 7)
        m = generate_triangulations(v, 1, rng.randrange(1 << 30))[0].map
        for _ in range(rng.randint(0, 4)):
            if m.n_edges <= 2:
                break
            h = m.edge_darts()[rng.randrange(m.n_edges)]
            if rng.random() < 0.5 and not m.is_loop(h):
                m2 = contract_edge(m, h)
            else:
                m2 = delete_edge(m, h)
            if m2.is_connected() and m2.n_edges >= 1:
                m = m2
        if m.n_edges <= max_edges:
            out.append(m)
    return out
