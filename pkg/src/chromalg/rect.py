"""Planar graphs in a rectangle with marked boundary endpoints.

A RectGraph is a planar map together with ordered lists of bottom and top
boundary endpoints; each endpoint is a 1-valent vertex reserved on the
rectangle boundary, recorded by its unique dart.  Vertical stacking (glue),
horizontal juxtaposition (tensor) and the Markov closure are the structural
operations.  Graphs built from elementary slices carry a construction
recipe which the homomorphism into the Temperley-Lieb algebra can replay
instead of expanding 2^E edge states.

Interior 2-valent vertices created by gluing are smoothed away; a circle
component is kept as a single 2-valent vertex with a loop.
"""

from __future__ import annotations

from .errors import ArityMismatch, BoundaryMismatch, InvalidParameters
from .planar import PlanarMap

# atom name -> (bottom arity, top arity, interior vertex count)
ATOMS = {
    "strand": (1, 1, 0),
    "cap": (2, 0, 0),     # arc joining two bottom endpoints
    "cup": (0, 2, 0),     # arc joining two top endpoints
    "split": (1, 2, 1),   # trivalent vertex, one leg down two up
    "merge": (2, 1, 1),   # trivalent vertex, two legs down one up
    "xvert": (2, 2, 1),   # four-valent vertex
}


class RectGraph:
    """Immutable rectangle graph; recipe is an optional slice word."""

    __slots__ = ("map", "bottom", "top", "recipe", "_key")

    def __init__(self, pmap, bottom, top, recipe=None, check=True):
        self.map = pmap
        self.bottom = tuple(bottom)
        self.top = tuple(top)
        self.recipe = recipe
        self._key = None
        if check:
            marked = list(self.bottom) + list(self.top)
            if len(set(marked)) != len(marked):
                raise InvalidParameters("duplicate boundary darts")
            for h in marked:
                v = pmap.vertex_of[h]
                if len(pmap.vertices[v]) != 1:
                    raise InvalidParameters("boundary endpoint must be 1-valent")

    @property
    def arity(self):
        return (len(self.bottom), len(self.top))

    def is_closed(self):
        return not self.bottom and not self.top

    def interior_vertices(self):
        boundary = {self.map.vertex_of[h] for h in self.bottom + self.top}
        return [i for i in range(len(self.map.vertices)) if i not in boundary]

    def __repr__(self):
        a, b = self.arity
        return f"RectGraph({a}->{b}, E={self.map.n_edges})"

    def key(self):
        """Canonical encoding respecting the embedding and boundary order."""
        if self._key is None:
            self._key = _rect_key(self)
        return self._key

    def __eq__(self, other):
        return isinstance(other, RectGraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self):
        obj = self.map.to_json()
        obj["boundary_bottom"] = list(self.bottom)
        obj["boundary_top"] = list(self.top)
        return obj

    @staticmethod
    def from_json(obj):
        return RectGraph(PlanarMap.from_json(obj),
                         obj.get("boundary_bottom", ()),
                         obj.get("boundary_top", ()))


def _bfs_code(m, seeds):
    """Relabel darts in discovery order from the seed list; returns the
    (alpha, sigma) code over discovered darts plus the label map."""
    label = {}
    order = []
    for s in seeds:
        if s not in label:
            label[s] = len(label)
            order.append(s)
    i = 0
    while i < len(order):
        h = order[i]
        for nxt in (m.alpha[h], m.sigma[h]):
            if nxt not in label:
                label[nxt] = len(label)
                order.append(nxt)
        i += 1
    alpha = tuple(label[m.alpha[h]] for h in order)
    sigma = tuple(label[m.sigma[h]] for h in order)
    return (alpha, sigma), label


def _rect_key(g):
    """Rooted canonical dart relabeling; free components get a min-over-dart
    code of their own and are appended as a sorted tuple."""
    m = g.map
    seeds = list(g.bottom) + list(g.top)
    core, label = _bfs_code(m, seeds) if seeds else (((), ()), {})
    extra = []
    reached = set(label)
    for comp in m.components():
        if comp[0] in reached:
            continue
        sub = m.restrict(comp)
        best = min(_bfs_code(sub, [s])[0] for s in range(sub.n_darts))
        extra.append(best)
    extra.sort()
    return repr((g.arity, core, tuple(extra), m.isolated)).encode()


# ---------------------------------------------------------------------------
# Atoms.
# ---------------------------------------------------------------------------


def atom(name):
    """Elementary rectangle graph, with itself as its one-slice recipe."""
    if name == "strand":
        pm = PlanarMap((1, 0), (0, 1))
        g = RectGraph(pm, (0,), (1,))
    elif name == "cap":
        pm = PlanarMap((1, 0), (0, 1))
        g = RectGraph(pm, (0, 1), ())
    elif name == "cup":
        pm = PlanarMap((1, 0), (0, 1))
        g = RectGraph(pm, (), (0, 1))
    elif name == "split":
        # vertex darts 0 down, 1 up-left, 2 up-right; ccw (0, 2, 1)
        alpha = (3, 4, 5, 0, 1, 2)
        sigma = (2, 0, 1, 3, 4, 5)
        g = RectGraph(PlanarMap(alpha, sigma), (3,), (4, 5))
    elif name == "merge":
        # vertex darts 0 down-left, 1 down-right, 2 up; ccw (0, 1, 2)
        alpha = (3, 4, 5, 0, 1, 2)
        sigma = (1, 2, 0, 3, 4, 5)
        g = RectGraph(PlanarMap(alpha, sigma), (3, 4), (5,))
    elif name == "xvert":
        # vertex darts 0 dl, 1 dr, 2 ur, 3 ul; ccw (0, 1, 2, 3);
        # boundary endpoint 6 is the top-left one, so it pairs with dart 3
        alpha = (4, 5, 7, 6, 0, 1, 3, 2)
        sigma = (1, 2, 3, 0, 4, 5, 6, 7)
        g = RectGraph(PlanarMap(alpha, sigma), (4, 5), (6, 7))
    else:
        raise InvalidParameters(f"unknown atom {name!r}")
    a_in, _, _ = ATOMS[name]
    g.recipe = (a_in, ((name, 0),))
    return g


def circle_graph():
    """A free circle: one 2-valent vertex carrying a loop."""
    return RectGraph(PlanarMap((1, 0), (1, 0)), (), ())


def identity_rect(n):
    pm_alpha = []
    pm_sigma = []
    bottom = []
    top = []
    for i in range(n):
        pm_alpha += [2 * i + 1, 2 * i]
        pm_sigma += [2 * i, 2 * i + 1]
        bottom.append(2 * i)
        top.append(2 * i + 1)
    g = RectGraph(PlanarMap(tuple(pm_alpha), tuple(pm_sigma)), bottom, top)
    g.recipe = (n, ())
    return g


def slice_graph(name, pos, width_in):
    """One atom at the given position among width_in input strands."""
    a_in, _, _ = ATOMS[name]
    if pos < 0 or pos + a_in > width_in:
        raise InvalidParameters("slice does not fit")
    left = identity_rect(pos)
    mid = atom(name)
    right = identity_rect(width_in - pos - a_in)
    return tensor(tensor(left, mid), right)


# ---------------------------------------------------------------------------
# Structural operations.
# ---------------------------------------------------------------------------


def _merge_maps(a, b):
    """Disjoint union; b's darts relabeled after a's."""
    na = a.n_darts
    alpha = list(a.alpha) + [h + na for h in b.alpha]
    sigma = list(a.sigma) + [h + na for h in b.sigma]
    return alpha, sigma, na


def tensor(a, b):
    """Horizontal juxtaposition: b placed to the right of a."""
    alpha, sigma, off = _merge_maps(a.map, b.map)
    pm = PlanarMap(tuple(alpha), tuple(sigma),
                   a.map.isolated + b.map.isolated, check=False)
    recipe = None
    if a.recipe is not None and b.recipe is not None:
        wa_out = len(a.top)
        slices = list(a.recipe[1]) + [(nm, p + wa_out) for nm, p in b.recipe[1]]
        recipe = (a.recipe[0] + b.recipe[0], tuple(slices))
    return RectGraph(pm, list(a.bottom) + [h + off for h in b.bottom],
                     list(a.top) + [h + off for h in b.top], recipe)


def _smooth(pm, protected):
    """Smooth interior 2-valent vertices; keep circles as vertex+loop."""
    alpha = list(pm.alpha)
    sigma = list(pm.sigma)
    removed = set()
    changed = True
    while changed:
        changed = False
        for cyc in _current_vertices(sigma, removed):
            if len(cyc) != 2:
                continue
            x, y = cyc
            if x in protected or y in protected:
                continue
            if alpha[x] == y:
                continue  # circle component: keep
            ax, ay = alpha[x], alpha[y]
            alpha[ax], alpha[ay] = ay, ax
            removed.update((x, y))
            changed = True
    keep = [h for h in range(len(alpha)) if h not in removed]
    relabel = {h: i for i, h in enumerate(keep)}
    new_alpha = tuple(relabel[alpha[h]] for h in keep)
    new_sigma = tuple(relabel[sigma[h]] if sigma[h] not in removed else None
                      for h in keep)
    # sigma untouched except removed darts vanish; removed darts formed their
    # own 2-cycles so surviving rotations never referenced them
    assert None not in new_sigma
    return PlanarMap(new_alpha, new_sigma, pm.isolated, check=False), relabel


def _current_vertices(sigma, removed):
    seen = set(removed)
    out = []
    for start in range(len(sigma)):
        if start in seen:
            continue
        cyc = []
        h = start
        while h not in seen:
            seen.add(h)
            cyc.append(h)
            h = sigma[h]
        out.append(cyc)
    return out


def glue(a, b):
    """Vertical stacking: bottom of a onto top of b.

    Identified endpoints become 2-valent interior vertices and are smoothed
    away immediately (2-valent vertices are trivial in the algebra).
    """
    if len(a.bottom) != len(b.top):
        raise ArityMismatch(
            f"glue needs matching arities, got {len(a.bottom)} and {len(b.top)}")
    alpha, sigma, off = _merge_maps(b.map, a.map)
    # fuse endpoint i of a.bottom with endpoint i of b.top
    for i in range(len(a.bottom)):
        x = a.bottom[i] + off
        y = b.top[i]
        sigma[x] = y
        sigma[y] = x
    pm = PlanarMap(tuple(alpha), tuple(sigma),
                   a.map.isolated + b.map.isolated, check=False)
    protected = {h + off for h in a.top} | set(b.bottom)
    smoothed, relabel = _smooth(pm, protected)
    recipe = None
    if a.recipe is not None and b.recipe is not None:
        recipe = (b.recipe[0], tuple(list(b.recipe[1]) + list(a.recipe[1])))
    return RectGraph(smoothed, [relabel[h] for h in b.bottom],
                     [relabel[h + off] for h in a.top], recipe)


def closure(g):
    """Close top to bottom with nested arcs around the right side.

    The i-th top endpoint joins the i-th bottom endpoint; endpoint vertices
    become 2-valent and are smoothed, so a closed identity strand becomes a
    free circle (vertex with a loop).
    """
    if len(g.bottom) != len(g.top):
        raise BoundaryMismatch("closure needs equal arities")
    pm = g.map
    n = pm.n_darts
    alpha = list(pm.alpha)
    for i in range(len(g.bottom)):
        alpha.extend((n + 2 * i + 1, n + 2 * i))
    sigma = list(pm.sigma) + [0] * (2 * len(g.bottom))
    for i in range(len(g.bottom)):
        x, y = n + 2 * i, n + 2 * i + 1
        bt, tp = g.bottom[i], g.top[i]
        # new dart x at the bottom endpoint vertex, y at the top one
        sigma[x] = bt
        sigma[bt] = x
        sigma[y] = tp
        sigma[tp] = y
    closed = PlanarMap(tuple(alpha), tuple(sigma), pm.isolated, check=False)
    smoothed, _ = _smooth(closed, set())
    return smoothed


def theta_closed():
    """The closed theta graph: two trivalent vertices, three parallel edges."""
    return closure(glue(atom("merge"), atom("split")))
