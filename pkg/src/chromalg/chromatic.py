"""Exact chromatic polynomial engines.

Two independent routes compute chi exactly:

* ``chromatic_dc`` -- memoized deletion/contraction with block (cut-vertex)
  factoring, parallel-edge collapse, series reductions, and closed forms for
  trees, cycles and complete graphs.  Cache keys are exact canonical forms
  of abstract multigraphs, shared across a whole corpus run.
* ``chromatic_statesum`` -- the 2^E subset state sum
  chi(Q) = sum_s (-1)^{|s|} Q^{k(s)}, used as the independent oracle.

The Markov trace of a rectangle graph is chi of the dual of its closure
divided exactly by Q, extended multiplicatively over connected components.
"""

from __future__ import annotations

import threading
import time

from .errors import InexactDivision, TooManyEdges
from .golden import GoldenNum, PHI, golden_eval
from .planar import Multigraph, abstract_dual, as_multigraph, canonical_form
from .poly import IntPoly, falling_factorial

STATESUM_DEFAULT_BOUND = 24

_Q = IntPoly.x("Q")


class ChromCache:
    """Canonical-form keyed cache, safe for concurrent readers/writers."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        with self._lock:
            val = self._data.get(key)
            if val is None:
                self.misses += 1
            else:
                self.hits += 1
            return val

    def put(self, key, value):
        with self._lock:
            self._data[key] = value

    def __len__(self):
        return len(self._data)

    def items(self):
        with self._lock:
            return list(self._data.items())

    def load(self, mapping):
        with self._lock:
            self._data.update(mapping)


_GLOBAL_CACHE = ChromCache()


def global_cache():
    return _GLOBAL_CACHE


class ChromResult:
    """Chromatic polynomial plus engine statistics."""

    __slots__ = ("poly", "nodes", "cache_hits", "wall_time")

    def __init__(self, poly, nodes, cache_hits, wall_time):
        self.poly = poly
        self.nodes = nodes
        self.cache_hits = cache_hits
        self.wall_time = wall_time

    @property
    def stats(self):
        return {"recursion_nodes": self.nodes, "cache_hits": self.cache_hits,
                "wall_time": self.wall_time}


def _collapse(g):
    """Drop parallel duplicates; reports whether a loop is present."""
    seen = set()
    loop = False
    for u, v in g.edges:
        if u == v:
            loop = True
        else:
            seen.add((u, v))
    return loop, Multigraph(g.n, sorted(seen))


def _components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comps = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    return list(comps.values())


def _blocks(n, edges):
    """Biconnected components (as edge lists) of a simple graph."""
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    visited = [False] * n
    depth = [0] * n
    low = [0] * n
    stack = []
    blocks = []

    for root in range(n):
        if visited[root] or not adj[root]:
            continue
        # Iterative DFS to avoid recursion limits.
        frame = [(root, -1, iter(adj[root]))]
        visited[root] = True
        depth[root] = low[root] = 0
        while frame:
            v, parent_edge, it = frame[-1]
            advanced = False
            for w, ei in it:
                if ei == parent_edge:
                    continue
                if visited[w]:
                    if depth[w] < depth[v]:
                        stack.append(ei)
                        low[v] = min(low[v], depth[w])
                    continue
                visited[w] = True
                depth[w] = low[w] = depth[v] + 1
                stack.append(ei)
                frame.append((w, ei, iter(adj[w])))
                advanced = True
                break
            if advanced:
                continue
            frame.pop()
            if frame:
                pv = frame[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= depth[pv]:
                    # pv is a cut vertex (or root): pop a block
                    blk = []
                    while True:
                        ei = stack.pop()
                        blk.append(edges[ei])
                        if ei == parent_edge:
                            break
                    blocks.append(blk)
    return blocks


def _chi_block(block_edges, cache, stats):
    """chi of a 2-connected block (or bridge), via cache and reductions."""
    verts = sorted({x for e in block_edges for x in e})
    relabel = {v: i for i, v in enumerate(verts)}
    g = Multigraph(len(verts), [(relabel[u], relabel[v]) for u, v in block_edges])
    return _chi_simple(g, cache, stats)


def _chi_simple(g, cache, stats):
    """chi of a simple connected block after canonicalization."""
    n, e = g.n, len(g.edges)
    stats[0] += 1
    # Closed forms that need no cache.
    if e == 0:
        return _Q ** n
    if e == 1:
        return _Q * (_Q - 1)
    deg = g.degrees()
    if all(d == 2 for d in deg) and e == n:
        # cycle: (Q-1)^n + (-1)^n (Q-1)
        qm1 = _Q - 1
        return qm1 ** n + qm1 * ((-1) ** n)
    if e == n * (n - 1) // 2:
        return falling_factorial(n)

    code, cg = canonical_form(g)
    cached = cache.get(code)
    if cached is not None:
        stats[1] += 1
        return cached

    deg = cg.degrees()
    poly = None

    # Series reduction at a degree-2 vertex.
    v2 = next((v for v in range(cg.n) if deg[v] == 2), None)
    if v2 is not None:
        nbrs = sorted({w for (u, w) in cg.edges if u == v2}
                      | {u for (u, w) in cg.edges if w == v2})
        if len(nbrs) == 2:
            a, b = nbrs
            rest = [ed for ed in cg.edges if v2 not in ed]
            keep = [v for v in range(cg.n) if v != v2]
            relabel = {v: i for i, v in enumerate(keep)}
            base_edges = [(relabel[u], relabel[w]) for u, w in rest]
            ab = tuple(sorted((relabel[a], relabel[b])))
            g_minus = Multigraph(cg.n - 1, base_edges)
            with_ab = base_edges if ab in base_edges else base_edges + [ab]
            g_plus = Multigraph(cg.n - 1, with_ab)
            poly = (_Q - 1) * _chi_multigraph(g_minus, cache, stats) \
                - _chi_multigraph(g_plus, cache, stats)

    if poly is None:
        # Deletion-contraction on an edge joining the two highest-degree
        # vertices; ties broken by canonical edge order.
        best = max(cg.edges,
                   key=lambda ed: (max(deg[ed[0]], deg[ed[1]]),
                                   min(deg[ed[0]], deg[ed[1]]),
                                   (-ed[0], -ed[1])))
        u, v = best
        deleted = Multigraph(cg.n, [ed for ed in cg.edges if ed != best])
        # contract v into u
        cont_edges = []
        for a, b in cg.edges:
            if (a, b) == best:
                continue
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                cont_edges.append((a2, b2))
        keep = [w for w in range(cg.n) if w != v]
        relabel = {w: i for i, w in enumerate(keep)}
        contracted = Multigraph(cg.n - 1,
                                {(relabel[a], relabel[b]) for a, b in cont_edges})
        poly = _chi_multigraph(deleted, cache, stats) \
            - _chi_multigraph(contracted, cache, stats)

    cache.put(code, poly)
    return poly


def _chi_multigraph(g, cache, stats):
    """chi of an arbitrary multigraph: loops, parallels, blocks, base cases."""
    loop, g = _collapse(g)
    if loop:
        return IntPoly.zero("Q")
    if not g.edges:
        return _Q ** g.n
    used = {x for e in g.edges for x in e}
    isolated = g.n - len(used)
    blocks = _blocks(g.n, list(g.edges))
    comps_with_edges = sum(
        1 for comp in _components(g.n, g.edges) if len(comp) > 1)
    poly = _Q ** isolated
    for blk in blocks:
        poly = poly * _chi_block(blk, cache, stats)
    # chi multiplies over blocks with one Q per shared cut vertex:
    # chi(G) = prod chi(B) / Q^(blocks - components)
    power = len(blocks) - comps_with_edges
    for _ in range(power):
        poly = poly.divexact(_Q)
    return poly


def chromatic_dc(m, cache=None):
    """Exact chromatic polynomial by memoized deletion-contraction.

    Accepts a PlanarMap or a Multigraph; results are cached under the
    abstract canonical form and shared across runs via the global cache.
    """
    if cache is None:
        cache = _GLOBAL_CACHE
    g = as_multigraph(m) if hasattr(m, "alpha") else m
    stats = [0, 0]
    t0 = time.perf_counter()
    poly = _chi_multigraph(g, cache, stats)
    return ChromResult(poly, stats[0], stats[1], time.perf_counter() - t0)


def chromatic_statesum(m, bound=STATESUM_DEFAULT_BOUND, check_invariant=False):
    """State-sum oracle: chi(Q) = sum over edge subsets of (-1)^|s| Q^k(s).

    Exponential in the edge count; guarded by ``bound``.  With
    ``check_invariant`` the homology bookkeeping k(s) - n(s) + |s| = V is
    asserted after every edge insertion.
    """
    g = as_multigraph(m) if hasattr(m, "alpha") else m
    edges = list(g.edges)
    nv = g.n
    if len(edges) > bound:
        raise TooManyEdges(f"{len(edges)} edges exceeds bound {bound}")
    coeff = [0] * (nv + 1)
    parent = list(range(nv))
    size = [1] * nv

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    # Depth-first over include/exclude decisions with union rollback.
    def rec(i, k, ncyc, sign, count):
        if i == len(edges):
            coeff[k] += sign
            return
        rec(i + 1, k, ncyc, sign, count)
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            rec2_k, rec2_n = k, ncyc + 1
            undo = None
        else:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            rec2_k, rec2_n = k - 1, ncyc
            undo = (ru, rv)
        if check_invariant:
            assert rec2_k - rec2_n + (count + 1) == nv
        rec(i + 1, rec2_k, rec2_n, -sign, count + 1)
        if undo:
            ru, rv = undo
            size[ru] -= size[rv]
            parent[rv] = rv

    rec(0, nv, 0, 1, 0)
    return IntPoly.of(coeff, "Q")


def markov_trace_chrom(g):
    """Markov trace of a rectangle graph: Q^{-1} chi of the dual closure.

    Extended multiplicatively over the connected components of the closure
    (the dual of a disjoint union wedges at the shared outer region, which
    divides one Q per extra component).  The empty diagram traces to 1.
    """
    from .rect import closure

    closed = closure(g)
    out = IntPoly.one("Q")
    for comp in closed.components():
        sub = closed.restrict(comp)
        chi = chromatic_dc(abstract_dual(sub)).poly
        out = out * chi.divexact(_Q)
    return out


def trace_poly_of_closed(m):
    """Q^{-1} chi(dual) for an already-closed map, multiplicative over parts."""
    out = IntPoly.one("Q")
    for comp in m.components():
        sub = m.restrict(comp)
        chi = chromatic_dc(abstract_dual(sub)).poly
        out = out * chi.divexact(_Q)
    return out


def tutte_estimate_check(t):
    """Exact check of |chi_T(phi+1)| <= phi^(5-k) for a triangulation.

    Works entirely in Q[phi]: compares chi^2 * phi^(2k-10) against 1 using
    the exact golden sign.
    """
    m = t.map if hasattr(t, "map") else t
    k = m.n_vertices
    chi = chromatic_dc(m).poly
    val = golden_eval(chi, "phi_plus_1")
    scaled = val * val * PHI ** (2 * k - 10)
    holds = (GoldenNum.of(1) - scaled).sign() >= 0
    return {"holds": holds, "lhs": val, "bound_exponent": 5 - k}
