"""The Temperley-Lieb algebra over exact rational functions in d.

Diagrams are noncrossing perfect matchings of bot+top boundary points
(bottom 0..bot-1 left to right, then top bot..bot+top-1 left to right);
rectangular morphism shapes are allowed, the algebra TL_n being the square
case.  Multiplication x*y stacks x above y; closed loops created in the
middle each contribute a factor d.  The generator E_i carries the
idempotent 1/d normalization: E_i^2 = E_i, E_i E_{i+-1} E_i = E_i / d^2.

Coefficients are RatFun in d; elements may in addition carry a global
sqrt(d) parity bit, which the graph homomorphism produces on odd-valence
pictures.  Heavy products (Jones-Wenzl recursion) run on an internal
common-denominator representation whose numerators are packed into single
big integers (Kronecker substitution), so a coefficient multiply is one
machine-level integer multiply.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (IndexOutOfRange, InvalidParameters, StrandMismatch)
from .poly import IntPoly, RatFun, delta, lcm_polys


# ---------------------------------------------------------------------------
# Diagrams.
# ---------------------------------------------------------------------------


class TLDiagram:
    """Noncrossing perfect matching on bot bottom and top upper points."""

    __slots__ = ("bot", "top", "match", "_hash")

    def __init__(self, bot, top, match, check=True):
        self.bot = bot
        self.top = top
        self.match = tuple(match)
        self._hash = hash((bot, top, self.match))
        if check:
            n = bot + top
            if len(self.match) != n:
                raise InvalidParameters("match length mismatch")
            for i, j in enumerate(self.match):
                if j == i or self.match[j] != i:
                    raise InvalidParameters("match is not a perfect matching")
            if not _noncrossing(bot, top, self.match):
                raise InvalidParameters("matching crosses")

    def __eq__(self, other):
        return (self.bot == other.bot and self.top == other.top
                and self.match == other.match)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"TLDiagram({self.bot},{self.top},{self.match})"

    @staticmethod
    def identity(n):
        return TLDiagram(n, n, tuple(range(n, 2 * n)) + tuple(range(n)),
                         check=False)

    def is_identity(self):
        if self.bot != self.top:
            return False
        n = self.bot
        return all(self.match[i] == n + i for i in range(n))

    def pairs(self):
        return [(i, j) for i, j in enumerate(self.match) if i < j]

    def reflect(self):
        """Vertical reflection (bar involution): swap bottom and top."""
        b, t = self.bot, self.top

        def relabel(p):
            return p + t if p < b else p - b

        new = [0] * (b + t)
        for i, j in enumerate(self.match):
            new[relabel(i)] = relabel(j)
        return TLDiagram(t, b, new, check=False)


def _circular_positions(bot, top):
    """Boundary order: bottom left->right, then top right->left."""
    return list(range(bot)) + [bot + top - 1 - k for k in range(top)]


def _noncrossing(bot, top, match):
    stack = []
    for p in _circular_positions(bot, top):
        if stack and match[stack[-1]] == p:
            stack.pop()
        else:
            stack.append(p)
    return not stack


def compose_diagrams(x, y):
    """Stack diagram x above diagram y; returns (diagram, closed loops)."""
    if x.bot != y.top:
        raise StrandMismatch("interface mismatch")
    b, m, t = y.bot, x.bot, x.top
    # labels: y bottom 0..b-1, interface via both matches, x top -> b..b+t-1
    match = [None] * (b + t)
    visited_y = [False] * (b + m)
    visited_x = [False] * (m + t)

    def chase(start_side, p):
        # walk until an exterior point is reached; returns exterior label
        side = start_side
        while True:
            if side == "y":
                visited_y[p] = True
                q = y.match[p]
                visited_y[q] = True
                if q < b:
                    return q
                p, side = q - b, "x"
            else:
                visited_x[p] = True
                q = x.match[p]
                visited_x[q] = True
                if q >= m:
                    return b + (q - m)
                p, side = b + q, "y"

    for i in range(b):
        if match[i] is None:
            j = chase("y", i)
            match[i] = j
            match[j] = i
    for k in range(t):
        lbl = b + k
        if match[lbl] is None:
            j = chase("x", m + k)
            match[lbl] = j
            match[j] = lbl
    loops = 0
    for j in range(m):
        if not visited_x[j]:
            # follow the closed cycle through both interfaces
            loops += 1
            p, side = j, "x"
            while True:
                if side == "x":
                    visited_x[p] = True
                    q = x.match[p]
                    visited_x[q] = True
                    p, side = b + q, "y"
                else:
                    visited_y[p] = True
                    q = y.match[p]
                    visited_y[q] = True
                    p, side = q - b, "x"
                if side == "x" and p == j:
                    break
    return TLDiagram(b, t, match, check=False), loops


def tensor_diagrams(a, b):
    """Place diagram b to the right of diagram a."""
    bot, top = a.bot + b.bot, a.top + b.top

    def rel_a(p):
        return p if p < a.bot else b.bot + p

    def rel_b(p):
        return a.bot + p if p < b.bot else a.bot + a.top + p

    match = [None] * (bot + top)
    for i, j in enumerate(a.match):
        match[rel_a(i)] = rel_a(j)
    for i, j in enumerate(b.match):
        match[rel_b(i)] = rel_b(j)
    return TLDiagram(bot, top, match, check=False)


def _noncrossing_matchings(indices):
    """Yield noncrossing matchings of a linearly ordered index tuple.

    The first point pairs with an odd-offset point; the inside and outside
    segments recurse independently.
    """
    if not indices:
        yield ()
        return
    first = indices[0]
    for k in range(1, len(indices), 2):
        for inside in _noncrossing_matchings(indices[1:k]):
            for outside in _noncrossing_matchings(indices[k + 1:]):
                yield ((first, indices[k]),) + inside + outside


def enumerate_tl_diagrams(n):
    """Yield all TL_n basis diagrams (Catalan(n) of them)."""
    pts = _circular_positions(n, n)
    for pairing in _noncrossing_matchings(tuple(range(2 * n))):
        match = [None] * (2 * n)
        for i, j in pairing:
            match[pts[i]] = pts[j]
            match[pts[j]] = pts[i]
        yield TLDiagram(n, n, tuple(match), check=False)


# ---------------------------------------------------------------------------
# Elements.
# ---------------------------------------------------------------------------


class TLElement:
    """Linear combination of diagrams over RatFun in d.

    ``half_power`` is a global sqrt(d) parity bit (0 or 1); it shows up in
    images of graphs with odd-valence vertices and must match before
    elements can be added.
    """

    __slots__ = ("bot", "top", "terms", "half_power")

    def __init__(self, bot, top, terms, half_power=0):
        self.bot = bot
        self.top = top
        self.terms = {d: c for d, c in terms.items() if not c.is_zero()}
        self.half_power = half_power & 1

    @property
    def n(self):
        if self.bot != self.top:
            raise InvalidParameters("not a square element")
        return self.bot

    @staticmethod
    def zero(bot, top=None):
        return TLElement(bot, bot if top is None else top, {})

    @staticmethod
    def identity(n):
        return TLElement(n, n, {TLDiagram.identity(n): RatFun.one("d")})

    @staticmethod
    def from_diagram(d, coeff=None):
        return TLElement(d.bot, d.top,
                         {d: RatFun.one("d") if coeff is None else coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if self.is_zero() and other.is_zero():
            return self.bot == other.bot and self.top == other.top
        return (self.bot == other.bot and self.top == other.top
                and self.half_power == other.half_power
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.bot, self.top, self.half_power,
                     tuple(sorted(((d.match, c) for d, c in self.terms.items()),
                                  key=lambda x: x[0]))))

    def __add__(self, other):
        if (self.bot, self.top) != (other.bot, other.top):
            raise StrandMismatch("cannot add different shapes")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.half_power != other.half_power:
            raise InvalidParameters("sqrt(d) parity mismatch in addition")
        out = dict(self.terms)
        for dg, c in other.terms.items():
            acc = out.get(dg)
            out[dg] = c if acc is None else acc + c
        return TLElement(self.bot, self.top, out, self.half_power)

    def __neg__(self):
        return self.scale(RatFun.const(-1, "d"))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, r):
        if isinstance(r, int):
            r = RatFun.const(r, "d")
        return TLElement(self.bot, self.top,
                         {d: c * r for d, c in self.terms.items()},
                         self.half_power)

    def shift_half_power(self):
        """Multiply by sqrt(d): flips parity, and every full d moves in pairs."""
        return TLElement(self.bot, self.top, dict(self.terms),
                         self.half_power ^ 1)

    def coefficient(self, diagram):
        return self.terms.get(diagram, RatFun.zero("d"))

    def map_coefficients(self, fn):
        return TLElement(self.bot, self.top,
                         {d: fn(c) for d, c in self.terms.items()},
                         self.half_power)

    def tensor(self, other):
        out = {}
        carry = _half_carry(self.half_power, other.half_power)
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                dg = tensor_diagrams(d1, d2)
                c = c1 * c2 * carry if carry is not None else c1 * c2
                acc = out.get(dg)
                out[dg] = c if acc is None else acc + c
        return TLElement(self.bot + other.bot, self.top + other.top, out,
                         self.half_power ^ other.half_power)

    def to_json(self):
        return {"bot": self.bot, "top": self.top,
                "half_power": self.half_power,
                "terms": [{"pairing": list(d.match), "coeff": c.to_json()}
                          for d, c in sorted(self.terms.items(),
                                             key=lambda x: x[0].match)]}

    @staticmethod
    def from_json(obj):
        bot = obj.get("bot", obj.get("n"))
        top = obj.get("top", obj.get("n"))
        terms = {}
        for t in obj["terms"]:
            d = TLDiagram(bot, top, t["pairing"])
            terms[d] = RatFun.from_json(t["coeff"])
        return TLElement(bot, top, terms, obj.get("half_power", 0))

    def __repr__(self):
        return (f"TLElement({self.bot}->{self.top}, {len(self.terms)} terms"
                + (", sqrt(d)" if self.half_power else "") + ")")


def _half_carry(p1, p2):
    """sqrt(d) * sqrt(d) = d: the full power carried out of a parity product."""
    if p1 and p2:
        return RatFun.from_poly(IntPoly.x("d"))
    return None


def tl_generator(n, i):
    """E_i: cup-cap at strands i, i+1 (1-indexed) with coefficient 1/d."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"E_{i} not in TL_{n}")
    match = list(TLDiagram.identity(n).match)
    a, b = i - 1, i
    match[a], match[b] = b, a
    match[n + a], match[n + b] = n + b, n + a
    d = TLDiagram(n, n, match, check=False)
    return TLElement(n, n, {d: RatFun.of(IntPoly.one("d"), IntPoly.x("d"))})


def tl_mul(a, b):
    """Bilinear product: a stacked above b, closed loops scoring d each."""
    if a.bot != b.top:
        raise StrandMismatch(f"cannot stack {a.bot} over {b.top}")
    if len(a.terms) * len(b.terms) > 64:
        return _from_fast(_fast_mul(_to_fast(a), _to_fast(b)))
    out = {}
    dpoly = RatFun.from_poly(IntPoly.x("d"))
    carry = _half_carry(a.half_power, b.half_power)
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            dg, loops = compose_diagrams(d1, d2)
            c = c1 * c2
            if carry is not None:
                c = c * carry
            for _ in range(loops):
                c = c * dpoly
            acc = out.get(dg)
            out[dg] = c if acc is None else acc + c
    return TLElement(b.bot, a.top, out, a.half_power ^ b.half_power)


def _closure_loops(d):
    """Loops of the Markov closure (top i joined to bottom i)."""
    n = d.bot
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        p = start
        while not seen[p]:
            seen[p] = True
            q = d.match[p]
            seen[q] = True
            p = q + n if q < n else q - n  # closure arc
    return loops


def tl_trace(a):
    """Markov trace: close top to bottom around the side, score d^loops."""
    n = a.n
    if a.half_power:
        raise InvalidParameters("trace of an odd sqrt(d) element is not in Q(d)")
    out = RatFun.zero("d")
    if n == 0:
        # scalar element: empty diagram with its coefficient
        for d, c in a.terms.items():
            out = out + c
        return out
    dpoly = RatFun.from_poly(IntPoly.x("d"))
    for d, c in a.terms.items():
        k = _closure_loops(d)
        term = c
        for _ in range(k):
            term = term * dpoly
        out = out + term
    return out


def tl_inner(a, b):
    """<a, b> = tr(a * bar(b)); coefficients are real so bar is reflection."""
    if (a.bot, a.top) != (b.bot, b.top):
        raise StrandMismatch("inner product needs equal shapes")
    bbar = TLElement(b.top, b.bot,
                     {d.reflect(): c for d, c in b.terms.items()},
                     b.half_power)
    return tl_trace(tl_mul(a, bbar))


def partial_trace(a, side="right"):
    """End turnback tr_n: close the last (or first) strand only."""
    n = a.n
    if n < 1:
        raise InvalidParameters("partial trace needs a strand")
    dpoly = RatFun.from_poly(IntPoly.x("d"))
    out = {}
    for d, c in a.terms.items():
        if side == "right":
            pb, pt = n - 1, 2 * n - 1
        else:
            pb, pt = 0, n
        mb, mt = d.match[pb], d.match[pt]
        coeff = c
        pairs = []
        if mb == pt:
            coeff = coeff * dpoly
            for i, j in d.pairs():
                if i != pb:
                    pairs.append((i, j))
        else:
            for i, j in d.pairs():
                if pb in (i, j) or pt in (i, j):
                    continue
                pairs.append((i, j))
            pairs.append(tuple(sorted((mb, mt))))

        def relabel(p):
            q = p
            if side == "right":
                if p > pb:
                    q = p - 1
                if p > pt:
                    q = p - 2
                return q
            if p > n:
                return p - 2
            if p > 0:
                return p - 1
            return p

        match = [None] * (2 * n - 2)
        for i, j in pairs:
            ri, rj = relabel(i), relabel(j)
            match[ri] = rj
            match[rj] = ri
        dg = TLDiagram(n - 1, n - 1, match, check=False)
        acc = out.get(dg)
        out[dg] = coeff if acc is None else acc + coeff
    return TLElement(n - 1, n - 1, out, a.half_power)


def bend_top_to_bottom(a):
    """Planar rotation moving the rightmost top point to the bottom end.

    Hom(bot, top) -> Hom(bot+1, top-1); no coefficient changes (isotopy).
    """
    if a.top < 1:
        raise InvalidParameters("nothing to bend")
    b, t = a.bot, a.top
    last = b + t - 1

    def relabel(p):
        if p == last:
            return b
        return p if p < b else p + 1

    out = {}
    for d, c in a.terms.items():
        match = [None] * (b + t)
        for i, j in d.pairs():
            ri, rj = relabel(i), relabel(j)
            match[ri] = rj
            match[rj] = ri
        out[TLDiagram(b + 1, t - 1, match, check=False)] = c
    return TLElement(b + 1, t - 1, out, a.half_power)


# ---------------------------------------------------------------------------
# Packed common-denominator kernel for heavy products.
# ---------------------------------------------------------------------------

_B = 128  # bits per packed coefficient
_BASE = 1 << _B
_HALF = 1 << (_B - 1)


def _enc(p):
    """Pack an integer polynomial as its value at 2^_B (ring morphism)."""
    acc = 0
    for i, c in enumerate(p.coeffs):
        acc += c << (_B * i)
    return acc


def _dec(x, var="d"):
    """Unpack with balanced digits; verified by re-encoding."""
    coeffs = []
    y = x
    while y:
        r = y & (_BASE - 1)
        if r >= _HALF:
            r -= _BASE
        coeffs.append(r)
        y = (y - r) >> _B
    p = IntPoly.of(coeffs, var)
    if _enc(p) != x:
        raise InvalidParameters("packed coefficient overflow; raise _B")
    return p


class _Fast:
    """Common-denominator element: match tuples map to packed numerators."""

    __slots__ = ("bot", "top", "den", "terms", "half_power")

    def __init__(self, bot, top, den, terms, half_power=0):
        self.bot = bot
        self.top = top
        self.den = den
        self.terms = terms
        self.half_power = half_power


def _to_fast(a):
    dens = []
    for c in a.terms.values():
        if c.den not in dens:
            dens.append(c.den)
    den = lcm_polys(dens) if dens else IntPoly.one("d")
    terms = {}
    for dg, c in a.terms.items():
        scale = den.divexact(c.den)
        terms[bytes(dg.match)] = _enc(c.num * scale)
    return _Fast(a.bot, a.top, den, terms, a.half_power)


def _from_fast(f):
    terms = {}
    for match, packed in f.terms.items():
        if packed:
            terms[TLDiagram(f.bot, f.top, tuple(match), check=False)] = \
                RatFun.of(_dec(packed), f.den)
    return TLElement(f.bot, f.top, terms, f.half_power)


def _compose_match(m1, m2, b, mid, t):
    """Compose match byte strings (m1 above m2); returns (bytes, loops).

    m2 has bot=b, top=mid; m1 has bot=mid, top=t.  The inner chase mirrors
    compose_diagrams but works on raw byte strings for speed.
    """
    total = b + t
    match = bytearray(total)
    done = bytearray(total)
    seen = bytearray(mid)
    for start in range(total):
        if done[start]:
            continue
        if start < b:
            side, p = 0, start
        else:
            side, p = 1, mid + (start - b)
        while True:
            if side == 0:
                q = m2[p]
                if q < b:
                    end = q
                    break
                seen[q - b] = 1
                side, p = 1, q - b
            else:
                q = m1[p]
                if q >= mid:
                    end = b + (q - mid)
                    break
                seen[q] = 1
                side, p = 0, b + q
        match[start] = end
        match[end] = start
        done[start] = done[end] = 1
    loops = 0
    for j in range(mid):
        if seen[j]:
            continue
        loops += 1
        p = j
        while True:
            q = m1[p]          # x-side hop: q < mid on a closed cycle
            seen[q] = 1
            r = m2[b + q] - b  # y-side hop back to the x labels
            seen[r] = 1
            p = r
            if p == j:
                break
    return bytes(match), loops


def _fast_mul(f1, f2):
    """Product with coefficient-product table: Jones-Wenzl style elements
    have few distinct coefficients, so all bigint multiplies happen once."""
    if f1.bot != f2.top:
        raise StrandMismatch("interface mismatch")
    shift = _B if (f1.half_power and f2.half_power) else 0
    b, mid, t = f2.bot, f1.bot, f1.top

    def indexed(f):
        vals = {}
        items = []
        for match, c in f.terms.items():
            idx = vals.get(c)
            if idx is None:
                idx = len(vals)
                vals[c] = idx
            items.append((match, idx))
        return items, list(vals)

    items1, vals1 = indexed(f1)
    items2, vals2 = indexed(f2)
    table = [[(v1 * v2) << shift for v2 in vals2] for v1 in vals1]
    out = {}
    get = out.get
    compose = _compose_match
    B = _B
    for d1, i1 in items1:
        row = table[i1]
        for d2, i2 in items2:
            key, loops = compose(d1, d2, b, mid, t)
            val = row[i2] << (B * loops) if loops else row[i2]
            acc = get(key)
            if acc is None:
                out[key] = val
            else:
                out[key] = acc + val
    return _Fast(b, t, f1.den * f2.den,
                 {k: v for k, v in out.items() if v},
                 f1.half_power ^ f2.half_power)


def _fast_normalize(f):
    """Divide the common denominator and all numerators by their gcd."""
    g = f.den
    nums = {}
    for dg, packed in f.terms.items():
        if not packed:
            continue
        p = _dec(packed)
        nums[dg] = p
        if g.degree() > 0 or abs(g.leading()) != 1:
            g = g.gcd(p)
    if g.degree() > 0 or g.content() > 1:
        den = f.den.divexact(g)
        terms = {dg: _enc(p.divexact(g)) for dg, p in nums.items()}
    else:
        den = f.den
        terms = {dg: _enc(p) for dg, p in nums.items()}
    if den.leading() < 0:
        den = den * -1
        terms = {dg: _enc(_dec(v) * -1) for dg, v in terms.items()}
    return _Fast(f.bot, f.top, den, terms, f.half_power)


def _fast_lincomb(parts):
    """Sum of (RatFun, _Fast) pairs over one common denominator."""
    shape = (parts[0][1].bot, parts[0][1].top)
    dens = []
    for r, f in parts:
        dens.append(f.den * r.den)
    den = lcm_polys(dens)
    out = {}
    hp = parts[0][1].half_power
    for r, f in parts:
        scale = _enc(den.divexact(f.den * r.den) * r.num)
        if f.half_power != hp:
            raise InvalidParameters("parity mismatch in linear combination")
        for dg, packed in f.terms.items():
            val = packed * scale
            acc = out.get(dg)
            out[dg] = val if acc is None else acc + val
    return _Fast(shape[0], shape[1], den,
                 {d: v for d, v in out.items() if v}, hp)


def _fast_extend(f):
    """Tensor with one vertical strand on the right."""
    b, t = f.bot, f.top
    terms = {}
    for match, packed in f.terms.items():
        new = bytearray(b + t + 2)
        for i in range(b + t):
            ii = i if i < b else i + 1
            j = match[i]
            new[ii] = j if j < b else j + 1
        new[b] = b + t + 1
        new[b + t + 1] = b
        terms[bytes(new)] = packed
    return _Fast(b + 1, t + 1, f.den, terms, f.half_power)


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors.
# ---------------------------------------------------------------------------


def _jw_cache_path(n):
    import os

    root = os.environ.get("CHROMALG_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, f"jw_{n}.pkl")


def _jw_load(n):
    import os
    import pickle

    path = _jw_cache_path(n)
    if path is None or not os.path.exists(path):
        return None
    with open(path, "rb") as fh:
        den_coeffs, terms = pickle.load(fh)
    return _Fast(n, n, IntPoly.of(den_coeffs, "d"), terms)


def _jw_store(n, f):
    import os
    import pickle

    path = _jw_cache_path(n)
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "wb") as fh:
        pickle.dump((list(f.den.coeffs), f.terms), fh)


@lru_cache(maxsize=None)
def _jw_fast(n):
    if n < 1:
        raise InvalidParameters("jones_wenzl needs n >= 1")
    if n == 1:
        return _Fast(1, 1, IntPoly.one("d"),
                     {bytes(TLDiagram.identity(1).match): 1})
    cached = _jw_load(n)
    if cached is not None:
        return cached
    prev = _fast_extend(_jw_fast(n - 1))
    e = _Fast(n, n, IntPoly.x("d"),
              {bytes(next(iter(tl_generator(n, n - 1).terms)).match): 1})
    pe = _fast_mul(prev, e)
    pep = _fast_mul(pe, prev)
    # P(n) = P(n-1)_1 - (d Delta_{n-2} / Delta_{n-1}) P(n-1)_1 E_{n-1} P(n-1)_1
    c = RatFun.of(IntPoly.x("d") * delta(n - 2), delta(n - 1))
    combo = _fast_lincomb([(RatFun.one("d"), prev), (-c, pep)])
    out = _fast_normalize(combo)
    _jw_store(n, out)
    return out


def jones_wenzl(n):
    """The Jones-Wenzl projector P^(n), memoized, coefficients in Q(d)."""
    return _from_fast(_jw_fast(n))


def jw_reduced(n, modulus):
    """P^(n) with coefficients reduced mod the given polynomial in d."""
    from .poly import ratfun_reduce_mod

    el = jones_wenzl(n)
    return {d: ratfun_reduce_mod(c, modulus) for d, c in el.terms.items()}


def tl_pretty(a, width=3):
    """ASCII cup/cap art, one diagram per block."""
    lines = []
    for d, c in sorted(a.terms.items(), key=lambda x: x[0].match):
        lines.append(f"  {c}  *")
        lines.extend(_diagram_art(d, width))
    if a.half_power:
        lines.append("  (times sqrt(d))")
    return "\n".join(lines) if lines else "0"


def _diagram_art(d, width=3):
    b, t = d.bot, d.top
    cols = max(b, t)
    rows = []
    top_lbl = ["." for _ in range(cols)]
    bot_lbl = ["." for _ in range(cols)]
    for i in range(t):
        top_lbl[i] = "|"
    for i in range(b):
        bot_lbl[i] = "|"
    rows.append("  top: " + " ".join(top_lbl))
    pair_strs = []
    for i, j in d.pairs():
        def name(p):
            return f"b{p}" if p < b else f"t{p - b}"
        pair_strs.append(f"{name(i)}-{name(j)}")
    rows.append("  " + "  ".join(pair_strs))
    rows.append("  bot: " + " ".join(bot_lbl))
    return rows
