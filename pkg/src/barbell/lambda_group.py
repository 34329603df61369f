"""W2 target groups for circles and arcs.

For circles the invariant lands in a quotient of Z[t^{+-1}] by the
relations  t^k + (-1)^n t^(W0-1-k) = 0,  t^0 = 0,  t^-1 = 0,  where W0
is the degree of the underlying component and n >= 3 is the sphere
dimension.  After killing the four forced exponents {-1, 0, W0, W0-1}
and folding every exponent below (W0-1)/2 upwards, the survivors

    G_W0 = { k : 2k >= W0-1, k not in {-1, 0, W0, W0-1} }

form a basis; when n is even and the fold line 2k = W0-1 hits an
integer exponent that was not killed, that monomial carries a single
2-torsion bit instead of a free coordinate.

For arcs the target is simply Z[t^{+-1}] / <t^0>.
"""

from .intlat import IntMatrix, cokernel_structure
from .laurent import LaurentPoly1


class LambdaContext:
    """Parameters (W0, n) selecting one of the quotient groups."""

    __slots__ = ("w0", "n")

    def __init__(self, w0, n):
        if n < 3:
            raise ValueError("sphere dimension n must be >= 3")
        self.w0 = w0
        self.n = n

    @property
    def killed(self):
        return {-1, 0, self.w0, self.w0 - 1}

    def has_torsion(self):
        # fold line hits an integer exponent that survives the kill step;
        # equivalent to the "n even, W0 odd, |W0| > 2" exception
        if self.n % 2:
            return False
        if (self.w0 - 1) % 2:
            return False
        return (self.w0 - 1) // 2 not in self.killed

    def __eq__(self, other):
        return (isinstance(other, LambdaContext)
                and self.w0 == other.w0 and self.n == other.n)

    def __repr__(self):
        return "LambdaContext(w0=%d, n=%d)" % (self.w0, self.n)


class LambdaElement:
    """Normal-form element: free part on G_W0 plus an optional torsion bit."""

    __slots__ = ("ctx", "free_part", "torsion_bit")

    def __init__(self, ctx, free_part, torsion_bit=0):
        self.ctx = ctx
        self.free_part = free_part
        self.torsion_bit = torsion_bit & 1

    def is_zero(self):
        return self.free_part.is_zero() and not self.torsion_bit

    def add(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mismatched contexts")
        free = self.free_part + other.free_part
        bit = (self.torsion_bit + other.torsion_bit) & 1
        # merging two normal forms can only cancel, never leave the basis
        return LambdaElement(self.ctx, free, bit)

    __add__ = add

    def __sub__(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mismatched contexts")
        return LambdaElement(self.ctx, self.free_part - other.free_part,
                             (self.torsion_bit - other.torsion_bit) & 1)

    def __eq__(self, other):
        return (isinstance(other, LambdaElement) and self.ctx == other.ctx
                and self.free_part == other.free_part
                and self.torsion_bit == other.torsion_bit)

    def __repr__(self):
        if self.is_zero():
            return "0"
        s = repr(self.free_part) if not self.free_part.is_zero() else ""
        if self.torsion_bit:
            f = (self.ctx.w0 - 1) // 2
            s += ("+" if s else "") + "[t^%d mod 2]" % f
        return s

    def to_json(self):
        return {"free_part": self.free_part.to_json(),
                "torsion_bit": self.torsion_bit}


def lambda_reduce(p, ctx):
    """Reduce an integer Laurent polynomial to normal form in the quotient.

    Kills the exponents {-1, 0, W0, W0-1}, folds every exponent k with
    2k < W0-1 onto W0-1-k with the coefficient multiplied by -(-1)^n,
    and finally resolves the fold-line exponent: for n odd it is an
    ordinary free generator, for n even its coefficient survives only
    mod 2 as the torsion bit.
    """
    w0, n = ctx.w0, ctx.n
    fold_sign = 1 if n % 2 else -1
    killed = ctx.killed
    acc = {}
    for k, c in p.terms.items():
        if k in killed:
            continue
        if 2 * k < w0 - 1:
            k, c = w0 - 1 - k, fold_sign * c
        c2 = acc.get(k, 0) + c
        if c2:
            acc[k] = c2
        else:
            acc.pop(k, None)
    bit = 0
    if n % 2 == 0 and (w0 - 1) % 2 == 0:
        fixed = (w0 - 1) // 2
        if fixed in acc:
            bit = acc.pop(fixed) & 1
    return LambdaElement(ctx, LaurentPoly1(acc), bit)


def relator_matrix(ctx, lo, hi):
    """All defining relations supported on the exponent window [lo, hi].

    Returns (matrix, exponents); matrix rows are relator coefficient
    vectors over the monomial basis t^lo .. t^hi.  Used as the
    brute-force oracle against which lambda_reduce is checked.
    """
    if lo > hi:
        raise ValueError("empty window")
    exps = list(range(lo, hi + 1))
    idx = {k: i for i, k in enumerate(exps)}
    sgn = 1 if ctx.n % 2 == 0 else -1  # coefficient of t^(W0-1-k)
    rows = []
    for k in (0, -1):
        if k in idx:
            row = [0] * len(exps)
            row[idx[k]] = 1
            rows.append(row)
    for k in exps:
        j = ctx.w0 - 1 - k
        if j < k or j not in idx:
            continue
        row = [0] * len(exps)
        row[idx[k]] += 1
        row[idx[j]] += sgn
        if any(row):
            rows.append(row)
    return IntMatrix.from_rows(rows, len(exps)), exps


def lambda_structure(ctx, window):
    """Brute-force structure of the window-restricted quotient group."""
    lo, hi = window
    need = abs(ctx.w0) + 2
    if lo > -need or hi < need:
        raise ValueError("window too small: need at least [-%d, %d]" % (need, need))
    m, _ = relator_matrix(ctx, lo, hi)
    return cokernel_structure(m)


def w2_theta(k, ctx):
    """Value of the k-th half-ball resolution family: t^k - t^(k-1)."""
    return lambda_reduce(LaurentPoly1({k: 1, k - 1: -1}), ctx)


def w2_gamma(k, ctx):
    """Value of the k-th strand-connecting family; same formula as theta."""
    return lambda_reduce(LaurentPoly1({k: 1, k - 1: -1}), ctx)


def w2_alpha(i, ctx):
    """Value of the i-th torus generator on the degree-one component.

    Defined through the identity alpha_i = theta_(i+1) - theta_i, whose
    reduced form is t^(i+1) - 2 t^i + t^(i-1).
    """
    if ctx.w0 != 1:
        raise ValueError("alpha generators live on the W0 = 1 component")
    return lambda_reduce(LaurentPoly1({i + 1: 1, i: -2, i - 1: 1}), ctx)


def w2_arc_reduce(p):
    """Normal form in the arc target Z[t^{+-1}] / <t^0>: drop the t^0 term."""
    if 0 not in p.terms:
        return p
    d = dict(p.terms)
    del d[0]
    return LaurentPoly1(d)


class AlphaCombination:
    """Integer combination of the alpha generators, indices >= 1."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for i, c in (terms.items() if isinstance(terms, dict) else terms):
                if i < 1:
                    raise ValueError("alpha indices are positive")
                c2 = d.get(i, 0) + c
                if c2:
                    d[i] = c2
                else:
                    d.pop(i, None)
        self.terms = d

    def is_zero(self):
        return not self.terms

    def add(self, other):
        d = dict(self.terms)
        for i, c in other.terms.items():
            c2 = d.get(i, 0) + c
            if c2:
                d[i] = c2
            else:
                del d[i]
        out = AlphaCombination.__new__(AlphaCombination)
        out.terms = d
        return out

    __add__ = add

    def scale(self, a):
        out = AlphaCombination.__new__(AlphaCombination)
        out.terms = {} if a == 0 else {i: a * c for i, c in self.terms.items()}
        return out

    def __eq__(self, other):
        return isinstance(other, AlphaCombination) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return "".join("%+d*a%d" % (self.terms[i], i) for i in sorted(self.terms))

    def to_json(self):
        return {"terms": [{"i": i, "c": str(self.terms[i])} for i in sorted(self.terms)]}

    @classmethod
    def from_json(cls, obj):
        return cls((int(t["i"]), int(t["c"])) for t in obj.get("terms", []))


def cover_pullback(m, x):
    """Pull back along the m-fold cyclic cover.

    Each alpha_i maps to m * alpha_(i/m) when m divides i and dies
    otherwise, extended linearly.
    """
    if m < 1:
        raise ValueError("cover degree must be >= 1")
    out = {}
    for i, c in x.terms.items():
        if i % m == 0:
            j = i // m
            c2 = out.get(j, 0) + m * c
            if c2:
                out[j] = c2
            else:
                del out[j]
    return AlphaCombination(out)


def cover_kernel_iterate(x, m, depth):
    """True iff `depth` pullbacks along the m-fold cover annihilate x."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    cur = x
    for _ in range(depth):
        cur = cover_pullback(m, cur)
        if cur.is_zero():
            return True
    return cur.is_zero()
