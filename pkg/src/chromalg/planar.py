"""Dart-based combinatorial maps for planar multigraphs.

A map is a pair of permutations on darts 0..2E-1: ``alpha`` is the
fixed-point-free involution pairing the two darts of each edge, ``sigma``
gives the counterclockwise rotation of darts around each vertex.  Faces are
the orbits of h -> sigma^{-1}(alpha(h)); with that convention the orbits of
the full-parallel ribbon boundary walk coincide with faces.  Vertices that
lose all darts under edge deletion are tracked by the ``isolated`` count.

Maps are immutable; editing operations return new maps.
"""

from __future__ import annotations

from .errors import ContractLoop, DisconnectedMap, InvalidParameters


def _orbits(perm):
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        h = start
        while not seen[h]:
            seen[h] = True
            cyc.append(h)
            h = perm[h]
        out.append(tuple(cyc))
    return tuple(out)


def _invert(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


class PlanarMap:
    """Immutable combinatorial map, genus checked to be 0 on construction."""

    __slots__ = ("alpha", "sigma", "isolated", "sigma_inv", "vertices",
                 "vertex_of", "faces_", "face_of", "_hash")

    def __init__(self, alpha, sigma, isolated=0, check=True):
        alpha = tuple(alpha)
        sigma = tuple(sigma)
        self.alpha = alpha
        self.sigma = sigma
        self.isolated = isolated
        n = len(alpha)
        if check:
            if len(sigma) != n:
                raise InvalidParameters("alpha/sigma size mismatch")
            if sorted(sigma) != list(range(n)):
                raise InvalidParameters("sigma is not a permutation")
            for h in range(n):
                if alpha[h] == h or alpha[alpha[h]] != h:
                    raise InvalidParameters("alpha is not a fixed-point-free involution")
        self.sigma_inv = _invert(sigma)
        self.vertices = _orbits(sigma)
        vo = [0] * n
        for i, cyc in enumerate(self.vertices):
            for h in cyc:
                vo[h] = i
        self.vertex_of = tuple(vo)
        face_next = tuple(self.sigma_inv[alpha[h]] for h in range(n))
        self.faces_ = _orbits(face_next)
        fo = [0] * n
        for i, cyc in enumerate(self.faces_):
            for h in cyc:
                fo[h] = i
        self.face_of = tuple(fo)
        self._hash = hash((alpha, sigma, isolated))
        if check:
            self._check_planar()

    # -- basic data ------------------------------------------------------

    @property
    def n_darts(self):
        return len(self.alpha)

    @property
    def n_edges(self):
        return len(self.alpha) // 2

    @property
    def n_vertices(self):
        return len(self.vertices) + self.isolated

    @property
    def n_faces(self):
        # An empty (or fully isolated) sphere map has the sphere itself as face.
        return len(self.faces_) if self.alpha else 1

    def edge_darts(self):
        """One representative dart per edge (the smaller one)."""
        return tuple(h for h in range(self.n_darts) if h < self.alpha[h])

    def degree(self, v):
        return len(self.vertices[v])

    def is_loop(self, h):
        return self.vertex_of[h] == self.vertex_of[self.alpha[h]]

    def __eq__(self, other):
        return (isinstance(other, PlanarMap) and self.alpha == other.alpha
                and self.sigma == other.sigma and self.isolated == other.isolated)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PlanarMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"

    # -- topology --------------------------------------------------------

    def components(self):
        """Dart sets of connected components (isolated vertices excluded)."""
        n = self.n_darts
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            stack = [start]
            comp = []
            seen[start] = True
            while stack:
                h = stack.pop()
                comp.append(h)
                for nxt in (self.alpha[h], self.sigma[h]):
                    if not seen[nxt]:
                        seen[nxt] = True
                        stack.append(nxt)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self):
        return self.isolated == 0 and len(self.components()) <= 1

    def _check_planar(self):
        # Euler formula V - E + F = 2 per connected component.
        for comp in self.components():
            v = len({self.vertex_of[h] for h in comp})
            f = len({self.face_of[h] for h in comp})
            e = len(comp) // 2
            if v - e + f != 2:
                raise InvalidParameters(
                    f"map has genus > 0 on a component: V={v} E={e} F={f}")

    def restrict(self, darts):
        """Submap on a dart subset closed under alpha and sigma."""
        darts = sorted(darts)
        relabel = {h: i for i, h in enumerate(darts)}
        alpha = tuple(relabel[self.alpha[h]] for h in darts)
        sigma = tuple(relabel[self.sigma[h]] for h in darts)
        return PlanarMap(alpha, sigma, check=False)

    # -- serialization ---------------------------------------------------

    def to_json(self):
        return {"darts": self.n_darts, "alpha": list(self.alpha),
                "sigma": list(self.sigma), "isolated": self.isolated}

    @staticmethod
    def from_json(obj):
        return PlanarMap(obj["alpha"], obj["sigma"], obj.get("isolated", 0))

    def to_dot(self):
        """Vertices/edges in DOT text; the embedding goes into comments."""
        lines = ["graph G {"]
        lines.append(f"  // rotation system sigma = {list(self.sigma)}")
        lines.append(f"  // edge involution alpha = {list(self.alpha)}")
        for i in range(len(self.vertices)):
            lines.append(f"  v{i};")
        for h in self.edge_darts():
            lines.append(f"  v{self.vertex_of[h]} -- v{self.vertex_of[self.alpha[h]]};")
        lines.append("}")
        return "\n".join(lines)


def faces(m):
    """Orbits of the face permutation h -> sigma^{-1}(alpha(h))."""
    return list(m.faces_)


def dual(m):
    """Dual map: vertex rotations become face traversals and vice versa."""
    if not m.is_connected():
        raise DisconnectedMap("dual of a disconnected map is ambiguous")
    face_next = tuple(m.sigma_inv[m.alpha[h]] for h in range(m.n_darts))
    return PlanarMap(m.alpha, face_next, check=False)


def _rebuild(cycles, removed, old_n):
    """Rebuild (alpha, sigma) after dart removals given new vertex cycles."""
    keep = [h for h in range(old_n) if h not in removed]
    relabel = {h: i for i, h in enumerate(keep)}
    sigma = [0] * len(keep)
    for cyc in cycles:
        k = len(cyc)
        for i, h in enumerate(cyc):
            sigma[relabel[h]] = relabel[cyc[(i + 1) % k]]
    return relabel, tuple(sigma)


def delete_edge(m, h):
    """Delete the edge containing dart h; rotation spliced locally."""
    h2 = m.alpha[h]
    removed = {h, h2}
    isolated = m.isolated
    cycles = []
    for cyc in m.vertices:
        new = [x for x in cyc if x not in removed]
        if new:
            cycles.append(new)
        elif cyc:
            isolated += 1
    relabel, sigma = _rebuild(cycles, removed, m.n_darts)
    alpha = [0] * len(relabel)
    for old, new in relabel.items():
        alpha[new] = relabel[m.alpha[old]]
    return PlanarMap(tuple(alpha), sigma, isolated, check=False)


def contract_edge(m, h):
    """Contract the non-loop edge containing dart h (endpoints merge)."""
    h2 = m.alpha[h]
    u, v = m.vertex_of[h], m.vertex_of[h2]
    if u == v:
        raise ContractLoop("cannot contract a loop")
    removed = {h, h2}
    cyc_u = list(m.vertices[u])
    cyc_v = list(m.vertices[v])
    # Rotate so the removed dart is first, then drop it and splice at its slot.
    iu, iv = cyc_u.index(h), cyc_v.index(h2)
    merged = cyc_u[iu + 1:] + cyc_u[:iu] + cyc_v[iv + 1:] + cyc_v[:iv]
    isolated = m.isolated
    cycles = []
    for i, cyc in enumerate(m.vertices):
        if i == u or i == v:
            continue
        cycles.append(list(cyc))
    if merged:
        cycles.append(merged)
    else:
        isolated += 1
    relabel, sigma = _rebuild(cycles, removed, m.n_darts)
    alpha = [0] * len(relabel)
    for old, new in relabel.items():
        alpha[new] = relabel[m.alpha[old]]
    return PlanarMap(tuple(alpha), sigma, isolated, check=False)


def map_from_faces(face_lists):
    """Build a map from faces given as cyclic vertex sequences.

    All faces must be oriented coherently (each directed edge used exactly
    once); the underlying graph must have no parallel edges or loops.  The
    Euler check on construction confirms planarity.
    """
    darts = []
    face_next_pairs = []
    for face in face_lists:
        k = len(face)
        ids = []
        for i in range(k):
            d = (face[i], face[(i + 1) % k])
            ids.append(len(darts))
            darts.append(d)
        for i in range(k):
            face_next_pairs.append((ids[i], ids[(i + 1) % k]))
    index = {}
    for i, d in enumerate(darts):
        if d in index:
            raise InvalidParameters(f"directed edge {d} used twice")
        index[d] = i
    alpha = [0] * len(darts)
    for i, (a, b) in enumerate(darts):
        if (b, a) not in index:
            raise InvalidParameters(f"edge {(a, b)} lacks its reverse")
        alpha[i] = index[(b, a)]
    face_next = [0] * len(darts)
    for a, b in face_next_pairs:
        face_next[a] = b
    # faces are orbits of sigma^{-1} alpha, so sigma = alpha o face_next^{-1}
    fn_inv = _invert(tuple(face_next))
    sigma = tuple(alpha[fn_inv[h]] for h in range(len(darts)))
    return PlanarMap(tuple(alpha), sigma)


# ---------------------------------------------------------------------------
# Abstract multigraphs and exact canonical forms.
# ---------------------------------------------------------------------------


class Multigraph:
    """Abstract multigraph: vertex count plus a sorted edge multiset."""

    __slots__ = ("n", "edges")

    def __init__(self, n, edges):
        self.n = n
        self.edges = tuple(sorted((u, v) if u <= v else (v, u) for u, v in edges))

    def __eq__(self, other):
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"

    def degrees(self):
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_loop(self):
        return any(u == v for u, v in self.edges)


def as_multigraph(m):
    """Forget the embedding of a PlanarMap."""
    nv = len(m.vertices)
    edges = [(m.vertex_of[h], m.vertex_of[m.alpha[h]]) for h in m.edge_darts()]
    return Multigraph(nv + m.isolated, edges)


def abstract_dual(m):
    """Abstract multigraph of the dual without building the dual map."""
    edges = [(m.face_of[h], m.face_of[m.alpha[h]]) for h in m.edge_darts()]
    return Multigraph(len(m.faces_), edges)


def canonical_form(g):
    """Exact canonical form of a multigraph: (byte key, relabeled graph).

    Colour refinement followed by individualization on the first
    non-singleton cell; the canonical labeling is the minimum over the
    leaves of the resulting search tree.  Keys are equal exactly when the
    multigraphs are isomorphic.
    """
    n = g.n
    if n == 0:
        return b"0:", Multigraph(0, [])
    adj = [dict() for _ in range(n)]
    loops = [0] * n
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            adj[u][v] = adj[u].get(v, 0) + 1
            adj[v][u] = adj[v].get(u, 0) + 1

    def refine(colors):
        while True:
            sig = []
            for v in range(n):
                neigh = sorted((colors[w], mult) for w, mult in adj[v].items())
                sig.append((colors[v], loops[v], tuple(neigh)))
            order = sorted(range(n), key=lambda v: sig[v])
            new = [0] * n
            c = 0
            for i, v in enumerate(order):
                if i and sig[v] != sig[order[i - 1]]:
                    c += 1
                new[v] = c
            if new == colors:
                return colors
            colors = new

    best = [None, None]

    def search(colors):
        colors = refine(colors)
        cells = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            edges = tuple(sorted(
                (colors[u], colors[v]) if colors[u] <= colors[v]
                else (colors[v], colors[u]) for u, v in g.edges))
            if best[0] is None or edges < best[0]:
                best[0] = edges
                best[1] = colors
            return
        for v in target:
            child = list(colors)
            cv = child[v]
            # individualize v: give it a colour just below its cell
            for w in range(n):
                if child[w] >= cv:
                    child[w] += 1
            child[v] = cv
            search(child)

    search([0] * n)
    edges = best[0]
    key = (str(n) + ":" + ",".join(f"{u}-{v}" for u, v in edges)).encode()
    return key, Multigraph(n, list(edges))


def canonical_multigraph(g):
    return canonical_form(g)[0]


def canonical_key(m):
    """Canonical key of the abstract multigraph underlying a map.

    Identical keys exactly when the maps are isomorphic as abstract
    multigraphs; embeddings are intentionally ignored (the chromatic
    polynomial only sees the abstract graph).
    """
    return canonical_multigraph(as_multigraph(m))
