"""Fundamental-class algebra on the free module spanned by G(p,q).

All derived families reduce to fixed integer combinations of the
primitive classes:

    G*(p,q) = -G(p, p-q)
    E(p,q)  = -G(-q, p) + G(p, -q)
    D(p,q)  = -E(q, p) - E(p, q)
            = -G(q,-p) + G(-q,p) - G(p,-q) + G(-p,q)

The (k-1) x (k-1) matrix F_k factors the symmetric k-strand family; it
is skew symmetric with zero total sum, and twisting multiplies rows and
columns by the twist vectors.  The third-order invariant sends G(p,q)
to the monomial t1^p t2^q on [w13, w23] (global sign fixed to +1).
"""

from .hexagon import HexElement, hex_normal_form
from .intlat import IntMatrix, rank_over_rationals
from .laurent import LaurentPoly2

ROMAN_FORMS = ("I", "IIb", "IIbe", "IIr", "IIre")


class GClass:
    """Integer combination of the primitive classes G(p,q)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                k = (k[0], k[1])
                c2 = d.get(k, 0) + c
                if c2:
                    d[k] = c2
                else:
                    d.pop(k, None)
        self.terms = d

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def add(self, other):
        d = dict(self.terms)
        for k, c in other.terms.items():
            c2 = d.get(k, 0) + c
            if c2:
                d[k] = c2
            else:
                del d[k]
        out = GClass.__new__(GClass)
        out.terms = d
        return out

    __add__ = add

    def neg(self):
        out = GClass.__new__(GClass)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    __neg__ = neg

    def __sub__(self, other):
        return self.add(other.neg())

    def scale(self, a):
        out = GClass.__new__(GClass)
        out.terms = {} if a == 0 else {k: a * c for k, c in self.terms.items()}
        return out

    def __eq__(self, other):
        return isinstance(other, GClass) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return "".join("%+d*G(%d,%d)" % (self.terms[k], k[0], k[1])
                       for k in sorted(self.terms))

    def to_json(self):
        return {"terms": [{"p": p, "q": q, "c": str(self.terms[(p, q)])}
                          for p, q in sorted(self.terms)]}

    @classmethod
    def from_json(cls, obj):
        return cls(((int(t["p"]), int(t["q"])), int(t["c"]))
                   for t in obj.get("terms", []))


def g(p, q):
    return GClass({(p, q): 1})


def gstar(p, q):
    return GClass({(p, p - q): -1})


def e(p, q):
    return GClass([((-q, p), -1), ((p, -q), 1)])


def d(p, q):
    return GClass([((q, -p), -1), ((-q, p), 1), ((p, -q), -1), ((-p, q), 1)])


def roman(form, p, q):
    """One of the five D-combinations entering the closed form of F_k."""
    if form == "I":
        return d(p, -q)
    if form == "IIb":
        return d(-q, p) - d(p - q, -p)
    if form == "IIbe":
        return d(-q, p) - d(-p - q, p) - d(p - q, -p) + d(-q, -p)
    if form == "IIr":
        return d(p, -q) - d(p - q, q)
    if form == "IIre":
        return d(p, -q) - d(p + q, -q) - d(p - q, q) + d(p, q)
    raise ValueError("unknown roman form %r" % (form,))


def _check_fk_args(k, p, q):
    if k < 2:
        raise ValueError("k must be >= 2")
    if not (1 <= p <= k - 1 and 1 <= q <= k - 1):
        raise ValueError("need 1 <= p, q <= k-1")


def f_level(k, level, p, q):
    """Level-L entry of the factored family, by the per-level case table."""
    _check_fk_args(k, p, q)
    if not 1 <= level <= k - 1:
        raise ValueError("need 1 <= L <= k-1")
    big_p = p >= k - level
    big_q = q >= level
    if big_p and big_q:
        return d(p, -q)
    if not big_p and not big_q:
        return GClass.zero()
    if big_p:  # q < level
        if p + q >= k:
            return d(p, -q) - d(p - q, q)
        return d(p, -q) - d(p + q, -q) - d(p - q, q) + d(p, q)
    # p < k - level, q >= level
    if p + q >= k:
        return d(-q, p) - d(p - q, -p)
    return d(-q, p) - d(-p - q, p) - d(p - q, -p) + d(-q, -p)


def f_closed(k, p, q):
    """Closed form of F_k(p,q), the sum of f_level over all levels."""
    _check_fk_args(k, p, q)
    if p + q < k:
        return roman("IIre", p, q).scale(p) + roman("IIbe", p, q).scale(q)
    return (roman("IIb", p, q).scale(k - p - 1)
            + roman("IIr", p, q).scale(k - q - 1)
            + roman("I", p, q).scale(p + q + 1 - k))


def twist_class(k, v, w):
    """Class of the family twisted by integer vectors v, w of length k-1.

    Twisting scales row p of F_k by v_p and column q by w_q, so the total
    class is sum_{p,q} v_p w_q F_k(p,q).
    """
    if len(v) != k - 1 or len(w) != k - 1:
        raise ValueError("twist vectors must have length k-1")
    acc = GClass.zero()
    for p in range(1, k):
        if not v[p - 1]:
            continue
        for q in range(1, k):
            if not w[q - 1]:
                continue
            acc = acc + f_closed(k, p, q).scale(v[p - 1] * w[q - 1])
    return acc


def delta_expansion(k):
    # the published 8-term expansion of delta_k
    a = (GClass([((k - 2, k - 1), 1), ((k - 1, k - 2), -1),
                 ((1 - k, 2 - k), 1), ((2 - k, 1 - k), -1)])).scale(k - 1)
    b = GClass([((k - 2, -1), -1), ((-(k - 2), 1), 1),
                ((1, -(k - 2)), -1), ((-1, k - 2), 1)])
    return a - b


def delta(k):
    """The twisted class F_k(k-1, k-2), checked against its expansion."""
    if k < 3:
        raise ValueError("delta_k needs k >= 3")
    out = f_closed(k, k - 1, k - 2)
    if out != delta_expansion(k):
        raise AssertionError("delta_%d disagrees with its closed expansion" % k)
    return out


def w3(x, n):
    """Third-order invariant: G(p,q) -> t1^p t2^q [w13, w23], linearly."""
    return HexElement(LaurentPoly2(dict(x.terms)), n)


def independence_rank(classes, n):
    """Exact rational rank of the stacked W3 normal forms.

    Returns (rank, matrix): rows are the free-part coordinates of each
    class's normal form over the union of touched orbit positions; full
    rank certifies linear independence in the quotient group.
    """
    if not classes:
        raise ValueError("need at least one class")
    frees = [hex_normal_form(w3(x, n)).free_coordinates() for x in classes]
    columns = sorted(set().union(*[f.keys() for f in frees]))
    col_index = {c: i for i, c in enumerate(columns)}
    m = IntMatrix(len(frees), len(columns))
    for i, f in enumerate(frees):
        for key, val in f.items():
            m.data[i][col_index[key]] = val
    return rank_over_rationals(m), m
