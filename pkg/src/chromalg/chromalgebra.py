"""The chromatic algebra and its homomorphism into Temperley-Lieb.

The homomorphism doubles every strand: each edge expands into the second
Jones-Wenzl projector (parallel minus 1/d times cut), a k-valent vertex
contributes d^((k-2)/2), and every term of the expansion is the boundary of
the corresponding ribbon subsurface.  Boundary curves are traced directly
on darts: walking out along the left side of dart h, an uncut edge delivers
the walk to sigma^{-1}(alpha(h)), a cut edge U-turns into sigma^{-1}(h),
and walks terminate at the two ports flanking each boundary endpoint.

Pullbacks of Jones-Wenzl projectors follow the recursive three-term wiring
(two boxes around a 4-valent vertex; three boxes around a pair of trivalent
vertices), with the recursion certified by the exact identity
phi(pull-back of P^(2m)) = P^(2m) rather than by any picture.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import (ArityMismatch, InvalidParameters, OddRootParity,
                     TooManyEdges)
from .chromatic import markov_trace_chrom
from .planar import PlanarMap
from .poly import (IntPoly, RatFun, delta, minpoly_Q, poly_d_even_to_q,
                   poly_q_to_d, ratfun_reduce_mod)
from .rect import ATOMS, RectGraph, atom, glue, identity_rect, slice_graph, tensor
from .tl import TLDiagram, TLElement, jones_wenzl, tl_mul, tl_trace

PHI_WALK_EDGE_BOUND = 22

_D = IntPoly.x("d")


# ---------------------------------------------------------------------------
# The homomorphism on a single rectangle graph.
# ---------------------------------------------------------------------------


def _phi_ports(g):
    """TL labels of the doubled boundary: dart -> (left port, right port)."""
    a, b = len(g.bottom), len(g.top)
    ports = {}
    for i, h in enumerate(g.bottom):
        # dart points up into the rectangle: left = west
        ports[h] = (2 * i, 2 * i + 1)
    for j, h in enumerate(g.top):
        # dart points down into the rectangle: left = east
        ports[h] = (2 * a + 2 * j + 1, 2 * a + 2 * j)
    return ports, 2 * a, 2 * b


def phi_walk(g, bound=PHI_WALK_EDGE_BOUND):
    """Direct 2^E ribbon-boundary expansion of the homomorphism."""
    m = g.map
    if m.n_edges > bound:
        raise TooManyEdges(f"phi expansion needs 2^{m.n_edges} states")
    boundary_vs = {m.vertex_of[h] for h in list(g.bottom) + list(g.top)}
    if m.isolated:
        raise InvalidParameters("isolated vertices have no image")
    half = 0
    for vi, cyc in enumerate(m.vertices):
        if vi in boundary_vs:
            continue
        k = len(cyc)
        if k == 1:
            # relation (3): interior ends kill the element
            return TLElement.zero(2 * len(g.bottom), 2 * len(g.top))
        half += k - 2
    parity = half & 1
    base_power = half // 2

    ports, nbot, ntop = _phi_ports(g)
    edge_of = {}
    for idx, h in enumerate(m.edge_darts()):
        edge_of[h] = idx
        edge_of[m.alpha[h]] = idx
    ne = m.n_edges
    sigma_inv = m.sigma_inv
    alpha = m.alpha
    vertex_of = m.vertex_of
    is_boundary_dart = {}
    for h in range(m.n_darts):
        is_boundary_dart[h] = vertex_of[h] in boundary_vs

    # exponent bookkeeping: coefficient of a state is
    # (-1)^cuts * d^(loops - cuts + base_power), global sqrt(d)^parity
    acc = {}
    start_darts = [g.bottom[i] for i in range(len(g.bottom))] + \
                  [g.top[j] for j in range(len(g.top))]
    for mask in range(1 << ne):
        cuts = bin(mask).count("1")
        visited = [False] * m.n_darts
        match = [None] * (nbot + ntop)

        for h0 in start_darts:
            # walk out along the left side of h0 until a boundary port
            cur = h0
            while True:
                visited[cur] = True
                arrive = cur if (mask >> edge_of[cur]) & 1 else alpha[cur]
                if is_boundary_dart[arrive]:
                    end = ports[arrive][1]
                    break
                cur = sigma_inv[arrive]
            start = ports[h0][0]
            match[start] = end
            match[end] = start
        loops = 0
        for h0 in range(m.n_darts):
            if visited[h0]:
                continue
            loops += 1
            cur = h0
            while not visited[cur]:
                visited[cur] = True
                arrive = cur if (mask >> edge_of[cur]) & 1 else alpha[cur]
                cur = sigma_inv[arrive]
        diagram = TLDiagram(nbot, ntop, match) if match else \
            TLDiagram(0, 0, ())
        expo = loops - cuts + base_power
        sign = -1 if cuts & 1 else 1
        key = diagram
        slot = acc.get(key)
        if slot is None:
            slot = {}
            acc[key] = slot
        slot[expo] = slot.get(expo, 0) + sign

    terms = {}
    for diagram, slot in acc.items():
        lo = min(slot)
        hi = max(slot)
        coeffs = [0] * (hi - lo + 1)
        for e, c in slot.items():
            coeffs[e - lo] = c
        num = IntPoly.of(coeffs, "d")
        if num.is_zero():
            continue
        if lo >= 0:
            r = RatFun.of(num.shift(lo), IntPoly.one("d"))
        else:
            r = RatFun.of(num, _D ** (-lo))
        terms[diagram] = r
    return TLElement(nbot, ntop, terms, parity)


@lru_cache(maxsize=None)
def _atom_image(name):
    return phi_walk(atom(name))


def _p2_row(pairs):
    """Tensor power of the doubled-strand image (P2 on each pair)."""
    el = TLElement(0, 0, {TLDiagram(0, 0, ()): RatFun.one("d")})
    strand_img = _atom_image("strand")
    for _ in range(pairs):
        el = el.tensor(strand_img)
    return el


def phi_recipe(g):
    """Replay a slice recipe through the homomorphism.

    Pass-through strands are padded with plain identities; one P2 row at the
    bottom and one at the top supply the projector for edges that never meet
    a vertex (P2 is idempotent, so extra projectors are harmless).
    """
    width_in, slices = g.recipe
    el = _p2_row(width_in)
    width = width_in
    for name, pos in slices:
        a_in, a_out, _ = ATOMS[name]
        img = _atom_image(name)
        padded = TLElement.identity(2 * pos).tensor(img).tensor(
            TLElement.identity(2 * (width - pos - a_in)))
        el = tl_mul(padded, el)
        width += a_out - a_in
    el = tl_mul(_p2_row(width), el)
    return el


def phi(g, bound=PHI_WALK_EDGE_BOUND):
    """Image of a rectangle graph (or ChromElement) in Temperley-Lieb."""
    if isinstance(g, ChromElement):
        return g.phi()
    if g.recipe is not None:
        return phi_recipe(g)
    return phi_walk(g, bound)


def phi_scalar(g):
    """Closed graphs map to scalars: the coefficient of the empty diagram."""
    el = phi(g)
    if el.bot or el.top:
        raise InvalidParameters("phi_scalar needs a closed graph")
    if el.is_zero():
        return RatFun.zero("d")
    return el.coefficient(TLDiagram(0, 0, ()))


# ---------------------------------------------------------------------------
# Linear combinations of rectangle graphs.
# ---------------------------------------------------------------------------


class ChromElement:
    """Linear combination of rectangle graphs with RatFun-in-d coefficients.

    All terms share the boundary arities; a global parity bit tracks an
    overall sqrt(d) scaling (trace-radical membership is insensitive to it).
    """

    __slots__ = ("bot", "top", "terms", "half_power")

    def __init__(self, bot, top, terms, half_power=0):
        self.bot = bot
        self.top = top
        self.terms = {}
        for graph, coeff in terms.items():
            if coeff.is_zero():
                continue
            if graph.arity != (bot, top):
                raise ArityMismatch("term arity mismatch")
            self.terms[graph] = coeff
        self.half_power = half_power & 1

    @staticmethod
    def from_graph(g, coeff=None):
        return ChromElement(len(g.bottom), len(g.top),
                            {g: RatFun.one("d") if coeff is None else coeff})

    @property
    def arity(self):
        return (self.bot, self.top)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.arity != other.arity:
            raise ArityMismatch("cannot add different arities")
        if self.terms and other.terms and self.half_power != other.half_power:
            raise InvalidParameters("sqrt(d) parity mismatch")
        out = dict(self.terms)
        for g, c in other.terms.items():
            acc = out.get(g)
            out[g] = c if acc is None else acc + c
        return ChromElement(self.bot, self.top, out,
                            self.half_power if self.terms else other.half_power)

    def scale(self, r):
        if isinstance(r, int):
            r = RatFun.const(r, "d")
        return ChromElement(self.bot, self.top,
                            {g: c * r for g, c in self.terms.items()},
                            self.half_power)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def compose(self, other):
        """Vertical stacking: self above other, bilinear over terms."""
        if self.bot != other.top:
            raise ArityMismatch("compose arity mismatch")
        carry = RatFun.from_poly(_D) if (self.half_power and other.half_power) \
            else None
        out = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = glue(g1, g2)
                c = c1 * c2 if carry is None else c1 * c2 * carry
                acc = out.get(g)
                out[g] = c if acc is None else acc + c
        return ChromElement(other.bot, self.top, out,
                            self.half_power ^ other.half_power)

    def tensor(self, other):
        carry = RatFun.from_poly(_D) if (self.half_power and other.half_power) \
            else None
        out = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = tensor(g1, g2)
                c = c1 * c2 if carry is None else c1 * c2 * carry
                acc = out.get(g)
                out[g] = c if acc is None else acc + c
        return ChromElement(self.bot + other.bot, self.top + other.top, out,
                            self.half_power ^ other.half_power)

    def phi(self):
        out = TLElement.zero(2 * self.bot, 2 * self.top)
        for g, c in self.terms.items():
            out = out + phi(g).scale(c)
        if self.half_power and out.half_power:
            out = out.scale(RatFun.from_poly(_D))
            return TLElement(out.bot, out.top, out.terms, 0)
        return TLElement(out.bot, out.top, out.terms,
                         out.half_power ^ self.half_power)

    def markov_trace(self):
        """Trace as a RatFun in Q; rejects odd sqrt(d) parity."""
        if self.bot != self.top:
            raise ArityMismatch("trace needs equal arities")
        val = self.trace_d()
        return _ratfun_d_to_q(val)

    def trace_d(self):
        """Trace with Q substituted by d^2, as a RatFun in d."""
        if self.half_power:
            raise OddRootParity("closed evaluation of an odd element")
        out = RatFun.zero("d")
        for g, c in self.terms.items():
            tr_q = markov_trace_chrom(g)
            out = out + c * RatFun.from_poly(poly_q_to_d(tr_q))
        return out

    def primitive(self):
        """Clear coefficient denominators and common content (positive scale).

        Trace-radical membership is scale-invariant, and the primitive form
        has no poles at any specialization.
        """
        from .poly import lcm_polys

        if not self.terms:
            return self
        dens = []
        for c in self.terms.values():
            if c.den not in dens:
                dens.append(c.den)
        lcm = lcm_polys(dens)
        cleared = {}
        for g, c in self.terms.items():
            cleared[g] = c.num * lcm.divexact(c.den)
        gcd_all = None
        for p in cleared.values():
            gcd_all = p.primitive() if gcd_all is None else gcd_all.gcd(p)
            if gcd_all == IntPoly.one("d"):
                break
        out = {g: RatFun.from_poly(p.divexact(gcd_all))
               for g, p in cleared.items()}
        return ChromElement(self.bot, self.top, out, self.half_power)

    def __repr__(self):
        return (f"ChromElement({self.bot}->{self.top}, "
                f"{len(self.terms)} terms"
                + (", sqrt(d)" if self.half_power else "") + ")")


def _ratfun_d_to_q(r):
    """Rewrite an even rational function of d in terms of Q = d^2."""
    num, den = r.num, r.den

    def parity(p):
        has_even = any(c and i % 2 == 0 for i, c in enumerate(p.coeffs))
        has_odd = any(c and i % 2 == 1 for i, c in enumerate(p.coeffs))
        if has_even and has_odd:
            raise OddRootParity("value is not a rational function of Q")
        return 1 if has_odd else 0

    if r.is_zero():
        return RatFun.zero("Q")
    pn, pd = parity(num), parity(den)
    if pn != pd:
        raise OddRootParity("value is an odd function of d")
    if pn:
        num = num.divexact(_D)
        den = den.divexact(_D)
        # odd/odd: divide one d from each
        pn2, pd2 = parity(num), parity(den)
        if pn2 or pd2:
            raise OddRootParity("value is not a rational function of Q")
    return RatFun.of(poly_d_even_to_q(num), poly_d_even_to_q(den))


def strand_element():
    return ChromElement.from_graph(identity_rect(1))


def identity_element(n):
    return ChromElement.from_graph(identity_rect(n))


def check_phi_trace_commutes(g):
    """tr_chi with Q -> d^2 equals tr_d of the image, exactly."""
    if isinstance(g, RectGraph):
        tr_q = markov_trace_chrom(g)
        image = phi(g)
    else:  # closed PlanarMap
        from .chromatic import trace_poly_of_closed

        tr_q = trace_poly_of_closed(g)
        image = phi(RectGraph(g, (), (), check=False))
    lhs = RatFun.from_poly(poly_q_to_d(tr_q))
    rhs = tl_trace(image)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Named elements: the defining relations and Tutte's phi+1 relation.
# ---------------------------------------------------------------------------


def i_graph():
    """Vertical edge between two trivalent vertices (2 -> 2)."""
    return glue(atom("split"), atom("merge"))


def h_graph():
    """Horizontal edge between two trivalent vertices (2 -> 2)."""
    return glue(slice_graph("merge", 1, 3), slice_graph("split", 0, 2))


def turnback_graph():
    """Cap over cup: the two-arc curve diagram (2 -> 2)."""
    return glue(slice_graph("cup", 0, 0), slice_graph("cap", 0, 2))


def hi_relation_element():
    """H + || - I - turnback: the defining H-I relation, killed by phi."""
    one = RatFun.one("d")
    return ChromElement(2, 2, {
        h_graph(): one,
        identity_rect(2): one,
        i_graph(): -one,
        turnback_graph(): -one,
    })


def tadpole_graph():
    """A loop at a trivalent vertex hanging off a strand (1 -> 1)."""
    g = slice_graph("split", 0, 1)            # stem vertex on the strand
    g = glue(slice_graph("split", 1, 2), g)   # loop vertex on the stem
    g = glue(slice_graph("cap", 1, 3), g)     # close the loop
    return g


@dataclass(frozen=True)
class Relation:
    """A chromatic element claimed to die against every trace at special Q.

    ``minpoly`` is the minimal polynomial of the special Q; ``minpoly_d``
    the minimal polynomial of d = sqrt(Q) = 2cos(pi j/(n+1)), used when the
    trace value mixes parities in d and so is not a rational function of Q.
    """

    element: ChromElement
    special: tuple
    minpoly: IntPoly
    minpoly_d: IntPoly
    name: str = ""


def _minpoly_d_of(j, n):
    from .poly import minpoly_two_cos

    return minpoly_two_cos(j, 2 * (n + 1)).rename("d")


def tutte_phi1_relation():
    """Z1^ + Z2^ - phi^{-3} [Y1^ + Y2^] at Q = phi + 1.

    The hatted graphs are the H and I wirings (coefficient 1) and the two
    curve diagrams (coefficient -phi^{-3}, stored as the rational function
    -1/d^3: at the relevant specialization d^2 = Q = phi^2 forces d = phi).
    Its image lands on (2 - 2 phi) P^(4) modulo d^2-d-1: the same relation
    as P^(4) = 0 up to an invertible scalar.
    """
    one = RatFun.one("d")
    inv_d3 = RatFun.of(IntPoly.one("d"), _D ** 3)
    el = ChromElement(2, 2, {
        h_graph(): one,
        i_graph(): one,
        identity_rect(2): -inv_d3,
        turnback_graph(): -inv_d3,
    })
    return Relation(el, (1, 4), minpoly_Q(1, 4), _minpoly_d_of(1, 4),
                    "tutte_phi1")


# ---------------------------------------------------------------------------
# Pullbacks of Jones-Wenzl projectors.
# ---------------------------------------------------------------------------


def _coeff_two(m):
    # -(1/d) Delta_{2m-3} / Delta_{2m-2}
    return -RatFun.of(delta(2 * m - 3), _D * delta(2 * m - 2))


def _coeff_three(m):
    # -(1/d) Delta_{2m-3}^2 / (Delta_{2m-1} Delta_{2m-2})
    return -RatFun.of(delta(2 * m - 3) * delta(2 * m - 3),
                      _D * delta(2 * m - 1) * delta(2 * m - 2))


@lru_cache(maxsize=None)
def pullback_even(m):
    """Pull-back of P^(2m) to the chromatic algebra on m strands.

    Recursive wiring: previous pull-back plus a strand; two copies around a
    4-valent vertex; three copies around a trivalent splice.  Correctness is
    certified by phi(pullback_even(m)) == jones_wenzl(2m), not by pictures.
    """
    if m < 1:
        raise InvalidParameters("pullback_even needs m >= 1")
    if m == 1:
        return strand_element()
    prev = pullback_even(m - 1)
    box = prev.tensor(strand_element())
    xv = ChromElement.from_graph(slice_graph("xvert", m - 2, m))
    two = box.compose(xv).compose(box)
    mg = ChromElement.from_graph(slice_graph("merge", m - 2, m))
    sp = ChromElement.from_graph(slice_graph("split", m - 2, m - 1))
    three = box.compose(sp).compose(prev).compose(mg).compose(box)
    return box + two.scale(_coeff_two(m)) + three.scale(_coeff_three(m))


@lru_cache(maxsize=None)
def pullback_even_phi(m):
    """phi of the even pull-back, evaluated on the recursion structure.

    Identical to phi(pullback_even(m)) by the homomorphism property (tested
    for small m); avoids materializing the term expansion at m = 4.
    """
    if m == 1:
        return _atom_image("strand")
    prev = pullback_even_phi(m - 1)
    box = prev.tensor(_atom_image("strand"))
    xv = phi(slice_graph("xvert", m - 2, m))
    two = tl_mul(tl_mul(box, xv), box)
    mg = phi(slice_graph("merge", m - 2, m))
    sp = phi(slice_graph("split", m - 2, m - 1))
    three = tl_mul(tl_mul(tl_mul(tl_mul(box, sp), prev), mg), box)
    return box + two.scale(_coeff_two(m)) + three.scale(_coeff_three(m))


def _odd_leading(m):
    # -Delta_{2m-1} / Delta_{2m}
    return -RatFun.of(delta(2 * m - 1), delta(2 * m))


@lru_cache(maxsize=None)
def pullback_odd(m):
    """Pull-back of P^(2m+1) to the chromatic category, arities (m, m+1).

    Base: a single trivalent vertex.  For m >= 2 the recursion wraps a
    trivalent side vertex between two copies of the even pull-back, with
    leading coefficient -Delta_{2m-1}/Delta_{2m}; the identity holds only at
    the special values (reduction mod the minimal polynomial of d).
    """
    if m < 1:
        raise InvalidParameters("pullback_odd needs m >= 1")
    if m == 1:
        return ChromElement.from_graph(atom("split"))
    box = pullback_even(m)
    sp = ChromElement.from_graph(slice_graph("split", m - 1, m))
    x = box.tensor(strand_element()).compose(sp).compose(box)
    return x.scale(_odd_leading(m))


@lru_cache(maxsize=None)
def pullback_odd_phi(m):
    """phi of the odd pull-back via the recursion structure."""
    if m == 1:
        return _atom_image("split")
    box = pullback_even_phi(m)
    sp = phi(slice_graph("split", m - 1, m))
    x = tl_mul(tl_mul(box.tensor(_atom_image("strand")), sp), box)
    return x.scale(_odd_leading(m))


@lru_cache(maxsize=None)
def r_element(m):
    """Pull-back of R^(2m-1) = P2_{2m-1} P^(2m-1)_1 P2_{2m-1}, arity (m, m).

    Exactly the first two terms of the even recursion: the turnback-paired
    P^(2m-1) needs no three-copy correction.
    """
    if m < 1:
        raise InvalidParameters("r_element needs m >= 1")
    if m == 1:
        return strand_element()
    prev = pullback_even(m - 1)
    box = prev.tensor(strand_element())
    xv = ChromElement.from_graph(slice_graph("xvert", m - 2, m))
    two = box.compose(xv).compose(box)
    return box + two.scale(_coeff_two(m))


def fig9_relations():
    """The two single-vertex rewirings equivalent to Tutte's relation.

    phi*H = turnback + (1-phi)*parallel and phi*I = parallel +
    (1-phi)*turnback, with phi stored as d.  Both differ from Tutte's
    element by a multiple of the H-I defining relation; each maps to a
    scalar multiple of P^(4) at the special value.
    """
    dpoly = RatFun.from_poly(_D)
    one = RatFun.one("d")
    one_minus_d = RatFun.from_poly(IntPoly.of((1, -1), "d"))
    a = ChromElement(2, 2, {h_graph(): dpoly, turnback_graph(): -one,
                            identity_rect(2): -one_minus_d})
    b = ChromElement(2, 2, {i_graph(): dpoly, identity_rect(2): -one,
                            turnback_graph(): -one_minus_d})
    mq, md = minpoly_Q(1, 4), _minpoly_d_of(1, 4)
    return (Relation(a, (1, 4), mq, md, "fig9_h"),
            Relation(b, (1, 4), mq, md, "fig9_i"))


def wrong_q_relation(rel, q_value):
    """Negative control: the same element checked at an unrelated Q."""
    mq = IntPoly.of((-q_value, 1), "Q")
    return Relation(rel.element, (0, 0), mq, poly_q_to_d(mq),
                    f"{rel.name}_wrong_Q_{q_value}")


def beraha_relation(j, n):
    """The trace-radical relation at Q = 2 + 2cos(2 pi j/(n+1))."""
    if not (0 < j < n):
        raise InvalidParameters("need 0 < j < n")
    if n % 2 == 0:
        el = pullback_even(n // 2)
    else:
        el = pullback_odd((n - 1) // 2)
    return Relation(el, (j, n), minpoly_Q(j, n), _minpoly_d_of(j, n),
                    f"beraha_{j}_{n}")


# ---------------------------------------------------------------------------
# Contexts and relation checking.
# ---------------------------------------------------------------------------

_CONTEXT_ATOMS = ("strand", "cap", "cup", "split", "merge")


def _context_words(width, target_top, max_vertices, max_len):
    """Yield slice words in deterministic DFS order, pruned by reachability."""

    def rec(cur_width, verts, word):
        if cur_width == target_top and word:
            yield tuple(word)
        remaining = max_len - len(word)
        if remaining == 0:
            return
        if abs(cur_width - target_top) > 2 * remaining:
            return
        if cur_width > width + target_top + 4:
            return
        for name in _CONTEXT_ATOMS:
            a_in, a_out, nv = ATOMS[name]
            if name == "strand":
                continue
            if verts + nv > max_vertices:
                continue
            for pos in range(0, cur_width - a_in + 1):
                word.append((name, pos))
                yield from rec(cur_width - a_in + a_out, verts + nv, word)
                word.pop()

    yield from rec(width, 0, [])


def _word_to_graph(width, word):
    g = identity_rect(width)
    for name, pos in word:
        cur = len(g.top)
        g = glue(slice_graph(name, pos, cur), g)
    return g


def enumerate_contexts(bot, top, max_vertices=4, limit=None, max_len=6):
    """Deterministic small trivalent contexts with the given arities."""
    seen = {}
    out = []
    if bot == top:
        g = identity_rect(bot)
        seen[g.key()] = True
        out.append(g)
    for word in _context_words(bot, top, max_vertices, max_len):
        g = _word_to_graph(bot, word)
        if len(g.top) != top:
            continue
        k = g.key()
        if k in seen:
            continue
        seen[k] = True
        out.append(g)
        if limit is not None and len(out) >= limit:
            break
    return out


def random_contexts(bot, top, count, seed, max_steps=10):
    """Seeded random cubic contexts (slice words with arity control)."""
    rng = random.Random(seed)
    out = []
    seen = set()
    attempts = 0
    while len(out) < count and attempts < 200 * count:
        attempts += 1
        width = bot
        word = []
        steps = rng.randint(1, max_steps)
        for _ in range(steps):
            choices = []
            for name in _CONTEXT_ATOMS:
                a_in, a_out, _ = ATOMS[name]
                if name == "strand":
                    continue
                if width - a_in < 0:
                    continue
                choices.append(name)
            name = rng.choice(choices)
            a_in, a_out, _ = ATOMS[name]
            pos = rng.randint(0, width - a_in)
            word.append((name, pos))
            width = width - a_in + a_out
        if width != top:
            continue
        g = _word_to_graph(bot, word)
        k = g.key()
        if k in seen:
            continue
        seen.add(k)
        out.append(g)
    return out


def contexts_for(rel, count, seed):
    """Arity-compatible contexts: enumerated small ones plus random ones."""
    bot, top = rel.element.arity
    # context stacks under the element: its top must match the element's
    # bottom and its bottom the element's top (so the closure is square)
    ctxs = enumerate_contexts(top, bot, max_vertices=4, limit=count)
    if len(ctxs) < count:
        ctxs += random_contexts(top, bot, count - len(ctxs), seed)
    return ctxs[:count]


def relation_check(rel, contexts):
    """Trace the relation against each context and reduce mod its minpoly.

    Per context: sum_i c_i * tr(glue(G_i, T)) as a rational function, made
    even in d by a global d factor when needed (scale invariance), rewritten
    in Q and reduced mod rel.minpoly.  Poles (DenominatorNotInvertible) are
    flagged per context rather than raised.
    """
    from .errors import DenominatorNotInvertible

    element = rel.element.primitive()
    results = []
    all_zero = True
    for idx, ctx in enumerate(contexts):
        try:
            val = _relation_trace_d(element, ctx)
            residue = _reduce_value(val, rel.minpoly, rel.minpoly_d)
            ok = residue.is_zero()
            results.append({"context": idx, "zero": ok,
                            "residue": residue.to_json()})
        except DenominatorNotInvertible:
            all_zero = False
            results.append({"context": idx, "zero": False, "pole": True})
            continue
        if not ok:
            all_zero = False
    return {"passed": all_zero, "contexts": results,
            "minpoly": rel.minpoly.to_json(), "special": list(rel.special),
            "name": rel.name}


def _relation_trace_d(element, ctx):
    out = RatFun.zero("d")
    for g, c in element.terms.items():
        tr_q = markov_trace_chrom(glue(g, ctx))
        out = out + c * RatFun.from_poly(poly_q_to_d(tr_q))
    return out


def _reduce_value(val, minpoly_q, minpoly_d):
    """Reduce a d-rational trace value at the special point, exactly.

    Preferred route (even values): rewrite in Q and reduce mod the minimal
    polynomial of Q.  Values that are odd in d are scaled by one global d
    first (zero-testing is scale-invariant).  Values of genuinely mixed
    parity -- elements like Tutte's, whose coefficients involve odd powers
    of d = phi -- are reduced against the minimal polynomial of d itself,
    whose roots are exactly the Galois conjugates of 2cos(pi j/(n+1)).
    """
    if val.is_zero():
        return IntPoly.zero("Q")
    try:
        q_val = _ratfun_d_to_q(val)
        return ratfun_reduce_mod(q_val, minpoly_q)
    except OddRootParity:
        pass
    try:
        q_val = _ratfun_d_to_q(val * RatFun.from_poly(_D))
        return ratfun_reduce_mod(q_val, minpoly_q)
    except OddRootParity:
        return ratfun_reduce_mod(val, minpoly_d)
