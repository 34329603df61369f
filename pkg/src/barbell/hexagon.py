"""The W3 target group: the module Z[t1^+-, t2^+-].[w13,w23] modulo the
hexagon relator submodule, organized orbit by orbit.

The relator family touches, at (p, q), exactly the four monomials
(p,q), (q,q-p), (p,p-q), (q,p), and the exponent maps

    r: (a, b) -> (a-b, a)        (order 6)
    s: (a, b) -> (-b, -a)        (involution, s r s = r^-1)

generate the dihedral group of the hexagon.  Every relator is supported
inside a single orbit, so the quotient splits as a direct sum over
orbits whose structure is read off a Smith normal form per orbit.
"""

from .intlat import IntMatrix, cokernel_structure, smith_normal_form
from .laurent import AffineMap2, LaurentPoly2

R_MAP = AffineMap2((1, -1, 1, 0))
S_MAP = AffineMap2((0, -1, -1, 0))

_snf_cache = {}


def on_degenerate_line(a, b):
    """True iff (a, b) lies on a vertex or edge-midpoint axis of the hexagon."""
    return a + b == 0 or a - b == 0 or a == 0 or b == 0 or 2 * a == b or 2 * b == a


class HexOrbit:
    """One dihedral orbit in Z^2 with a deterministic element order."""

    __slots__ = ("rep", "elements", "otype")

    def __init__(self, rep, elements, otype):
        self.rep = rep
        self.elements = elements
        self.otype = otype

    def index(self):
        return {v: i for i, v in enumerate(self.elements)}

    def __eq__(self, other):
        return isinstance(other, HexOrbit) and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        return "HexOrbit(rep=%r, size=%d, otype=%s)" % (self.rep, len(self.elements), self.otype)

    def to_json(self):
        return {"rep": list(self.rep), "otype": self.otype,
                "elements": [list(v) for v in self.elements]}


def orbit_of(a, b):
    """Orbit of (a, b) under the hexagon group, canonically ordered.

    The representative is the lexicographically least point; elements are
    listed as r^0..r^5 of the representative followed by the s-images of
    that traversal (duplicates skipped), so six-orbits come out as a pure
    r-cycle.
    """
    pts = {(a, b)}
    frontier = [(a, b)]
    while frontier:
        nxt = []
        for v in frontier:
            for m in (R_MAP, S_MAP):
                w = m.apply(*v)
                if w not in pts:
                    pts.add(w)
                    nxt.append(w)
        frontier = nxt
    rep = min(pts)
    order = []
    v = rep
    for _ in range(6):
        if v not in order:
            order.append(v)
        v = R_MAP.apply(*v)
    for u in list(order):
        w = S_MAP.apply(*u)
        if w not in order:
            order.append(w)
    if len(order) != len(pts):
        raise AssertionError("orbit traversal missed points at %r" % ((a, b),))
    otype = {1: "origin", 6: "six", 12: "twelve"}.get(len(pts))
    if otype is None:
        raise AssertionError("orbit of %r has impossible size %d" % ((a, b), len(pts)))
    return HexOrbit(rep, tuple(order), otype)


def k_relator(p, q, n):
    """The hexagon relator instance at (p, q), as a (t1, t2)-polynomial.

    t1^p t2^q - t1^q t2^(q-p) + (-1)^(n-1) (t1^p t2^(p-q) - t1^q t2^p);
    for n odd this is the familiar form
    t1^p t2^q + t1^p t2^(p-q) - t1^q t2^p - t1^q t2^(q-p).
    """
    s = 1 if n % 2 else -1
    return LaurentPoly2([((p, q), 1), ((q, q - p), -1),
                         ((p, p - q), s), ((q, p), -s)])


def orbit_relators(orbit, n):
    """Matrix of the distinct relator instances supported on the orbit.

    Rows are deduplicated up to sign and zero rows dropped; columns are
    indexed by the orbit's canonical element order.
    """
    idx = orbit.index()
    rows = []
    seen = set()
    for p, q in orbit.elements:
        rel = k_relator(p, q, n)
        row = [0] * len(orbit.elements)
        for mono, c in rel.terms.items():
            row[idx[mono]] += c
        if not any(row):
            continue
        lead = next(x for x in row if x)
        key = tuple(-x for x in row) if lead < 0 else tuple(row)
        if key in seen:
            continue
        seen.add(key)
        rows.append(list(key))
    return IntMatrix.from_rows(rows, len(orbit.elements))


def orbit_structure(orbit, n):
    """Isomorphism type of the orbit's summand of the quotient."""
    return cokernel_structure(orbit_relators(orbit, n))


def _orbit_snf(orbit, n):
    # benign data race under threads: entries are deterministic, so a
    # concurrent recompute just stores the same value twice
    key = (orbit.rep, n % 2)
    hit = _snf_cache.get(key)
    if hit is None:
        d, _, v = smith_normal_form(orbit_relators(orbit, n))
        moduli = []
        diag = d.diagonal()
        for i in range(len(orbit.elements)):
            m = diag[i] if i < len(diag) else 0
            moduli.append(m)
        hit = (v, tuple(moduli))
        _snf_cache[key] = hit
    return hit


class HexElement:
    """A (t1, t2)-polynomial read as sum of c * t1^p t2^q [w13, w23]."""

    __slots__ = ("poly", "n")

    def __init__(self, poly, n):
        self.poly = poly
        self.n = n

    def __eq__(self, other):
        return (isinstance(other, HexElement) and self.n == other.n
                and self.poly == other.poly)

    def __repr__(self):
        return "HexElement(%r, n=%d)" % (self.poly, self.n)


class HexNormalForm:
    """Per-orbit canonical coordinates; equal iff equal in the quotient.

    orbits: rep -> tuple of (value, modulus) pairs, one entry per basis
    position the orbit's Smith form leaves alive (modulus 0 means a free
    coordinate, otherwise the value is reduced mod the invariant factor).
    All-zero orbit blocks are omitted.
    """

    __slots__ = ("orbits",)

    def __init__(self, orbits):
        self.orbits = {rep: coords for rep, coords in orbits.items()
                       if any(v for v, _ in coords)}

    def is_zero(self):
        return not self.orbits

    def free_coordinates(self):
        """Free-part coordinates keyed (rep, position), torsion dropped."""
        out = {}
        for rep, coords in sorted(self.orbits.items()):
            for pos, (v, m) in enumerate(coords):
                if m == 0 and v:
                    out[(rep, pos)] = v
        return out

    def __eq__(self, other):
        return isinstance(other, HexNormalForm) and self.orbits == other.orbits

    def __repr__(self):
        if not self.orbits:
            return "0"
        bits = []
        for rep in sorted(self.orbits):
            bits.append("%r: %s" % (rep, list(self.orbits[rep])))
        return "HexNormalForm{%s}" % "; ".join(bits)

    def to_json(self):
        return {"orbits": [{"rep": list(rep),
                            "coords": [{"value": str(v), "modulus": m}
                                       for v, m in coords]}
                           for rep, coords in sorted(self.orbits.items())]}


def hex_normal_form(x):
    """Canonical form of a HexElement in the quotient by the relators."""
    by_orbit = {}
    for mono, c in x.poly.terms.items():
        orb = orbit_of(*mono)
        by_orbit.setdefault(orb.rep, (orb, {}))[1][mono] = c
    out = {}
    for rep, (orbit, monos) in by_orbit.items():
        v, moduli = _orbit_snf(orbit, x.n)
        vec = [monos.get(el, 0) for el in orbit.elements]
        # coordinates in the Smith basis: (vec . V) entry-wise mod d_i
        coords = []
        for i in range(len(orbit.elements)):
            y = sum(vec[k] * v.data[k][i] for k in range(len(vec)) if vec[k])
            m = moduli[i]
            if m == 1:
                continue
            coords.append((y % m if m else y, m))
        out[rep] = tuple(coords)
    return HexNormalForm(out)


# Monomial chart change between the two bracket bases:
#   t1^m t3^v [w12, w23]  =  - t1^(m-v) t2^(-v) [w13, w23].
# The exponent map is an involution; the constant -1 is forced by
# [w13,w23] = -[w12,w23] in the Whitehead algebra.  Any residual global
# sign convention is invisible to rank and vanishing statements.
_CHART = AffineMap2((1, -1, 0, -1))


def basis_change_12_to_13(poly):
    """From t1^m t3^v [w12,w23] coordinates to t1^p t2^q [w13,w23]."""
    return poly.reindex(_CHART, -1)


def basis_change_13_to_12(poly):
    """Inverse chart change; the map is its own exponent inverse."""
    return poly.reindex(_CHART, -1)
