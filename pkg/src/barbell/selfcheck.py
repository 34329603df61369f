"""Named runtime invariant suite behind the `selfcheck` command.

Each check re-derives one of the package's structural guarantees from
scratch at desk scale and raises CheckFailure on the first violation.
Checks call into the modules through their public attributes, so a
corrupted table (or a test fixture monkeypatching one) is caught here.
"""

import random

from . import classes, hexagon, whitehead
from .classes import GClass, d, delta, e, f_closed, f_level, g, gstar, w3
from .hexagon import (HexElement, R_MAP, S_MAP, basis_change_12_to_13,
                      hex_normal_form, orbit_of, orbit_relators, orbit_structure)
from .intlat import IntMatrix, IntegerRowSpan, determinant, rank_over_rationals, smith_normal_form
from .lambda_group import (AlphaCombination, LambdaContext, cover_pullback,
                           lambda_reduce, relator_matrix, w2_theta)
from .laurent import AffineMap2, LaurentPoly1, LaurentPoly2
from .whitehead import DegNElem, bracket, deg_n_gen, facet_map, pair_bracket


class CheckFailure(Exception):
    pass


def _fail(name, detail):
    raise CheckFailure("%s: %s" % (name, detail))


def _rand_poly1(rng, lo=-10, hi=10, nterms=6, cmax=8):
    return LaurentPoly1({rng.randrange(lo, hi + 1): rng.randrange(-cmax, cmax + 1)
                         for _ in range(rng.randrange(0, nterms + 1))})


def _rand_poly2(rng, lo=-6, hi=6, nterms=5, cmax=5):
    return LaurentPoly2({(rng.randrange(lo, hi + 1), rng.randrange(lo, hi + 1)):
                         rng.randrange(-cmax, cmax + 1)
                         for _ in range(rng.randrange(0, nterms + 1))})


def _no_zero_terms(poly):
    return all(c != 0 for c in poly.terms.values())


def check_laurent_algebra(params):
    rng = random.Random(params.seed)
    for _ in range(40):
        p, q, r = (_rand_poly1(rng) for _ in range(3))
        if (p + q) + r != p + (q + r) or p + q != q + p:
            _fail("laurent algebra", "addition not associative/commutative")
        if p.bar().bar() != p:
            _fail("laurent algebra", "bar is not an involution")
        if not (_no_zero_terms(p + q) and _no_zero_terms(p.bar())):
            _fail("laurent algebra", "zero coefficient stored")
    amaps = [AffineMap2((1, -1, 1, 0)), AffineMap2((0, -1, -1, 0)),
             AffineMap2((1, 0, 3, 1), (2, -5))]
    for amap in amaps:
        for _ in range(20):
            p2 = _rand_poly2(rng)
            back = p2.reindex(amap, 1).reindex(amap.inverse(), 1)
            if back != p2:
                _fail("laurent algebra", "reindex inverse round trip failed")
            if not _no_zero_terms(p2.reindex(amap, -1)):
                _fail("laurent algebra", "zero coefficient stored by reindex")


def check_snf_certificate(params):
    rng = random.Random(params.seed + 1)
    for _ in range(25):
        rows = rng.randrange(1, 7)
        cols = rng.randrange(1, 7)
        m = IntMatrix(rows, cols,
                      [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)])
        dd, u, v = smith_normal_form(m)
        if u.mul(m).mul(v) != dd:
            _fail("snf certificate", "U*M*V != D")
        if determinant(u) not in (1, -1) or determinant(v) not in (1, -1):
            _fail("snf certificate", "transform not unimodular")
        diag = [x for x in dd.diagonal() if x]
        for a, b in zip(diag, diag[1:]):
            if b % a:
                _fail("snf certificate", "diagonal not a divisibility chain")
        if rank_over_rationals(m) != len(diag):
            _fail("snf certificate", "rational rank disagrees with SNF rank")


def check_cokernel_invariance(params):
    from .intlat import cokernel_structure
    rng = random.Random(params.seed + 2)
    for _ in range(20):
        rows = rng.randrange(2, 6)
        cols = rng.randrange(1, 6)
        data = [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rows)]
        base = cokernel_structure(IntMatrix(rows, cols, data))
        i, j = rng.randrange(rows), rng.randrange(rows)
        perm = list(data)
        perm[0], perm[i] = perm[i], perm[0]
        neg = [row[:] for row in data]
        neg[j] = [-x for x in neg[j]]
        added = [row[:] for row in data]
        if i != j:
            added[i] = [a + b for a, b in zip(added[i], added[j])]
        for variant in (perm, neg, added):
            if cokernel_structure(IntMatrix(rows, cols, variant)) != base:
                _fail("cokernel invariance", "row operation changed the structure")


def check_lambda_oracle(params):
    rng = random.Random(params.seed + 3)
    for w0 in range(-6, 7):
        for n in (3, 4, 5, 6):
            ctx = LambdaContext(w0, n)
            m, exps = relator_matrix(ctx, -20, 20)
            span = IntegerRowSpan()
            for row in m.data:
                span.add(row)
            idx = {k: i for i, k in enumerate(exps)}
            for _ in range(params.samples):
                p = _rand_poly1(rng)
                vec = {idx[k]: c for k, c in p.terms.items()}
                if lambda_reduce(p, ctx).is_zero() != span.contains(vec):
                    _fail("lambda oracle equivalence",
                          "closed form and SNF membership disagree at "
                          "W0=%d n=%d on %r" % (w0, n, p))


def check_lambda_additivity(params):
    rng = random.Random(params.seed + 4)
    for w0 in (-5, -2, 0, 1, 3, 5):
        for n in (3, 4):
            ctx = LambdaContext(w0, n)
            for _ in range(30):
                p, q = _rand_poly1(rng), _rand_poly1(rng)
                if lambda_reduce(p + q, ctx) != lambda_reduce(p, ctx) + lambda_reduce(q, ctx):
                    _fail("lambda additivity", "reduce not additive at W0=%d n=%d" % (w0, n))
                again = lambda_reduce(lambda_reduce(p, ctx).free_part, ctx)
                if again.free_part != lambda_reduce(p, ctx).free_part or again.torsion_bit:
                    _fail("lambda additivity", "reduce not idempotent at W0=%d n=%d" % (w0, n))


def check_theta_span(params):
    for w0 in range(-4, 5):
        for n in (3, 4):
            ctx = LambdaContext(w0, n)
            span = IntegerRowSpan()
            for k in range(-15, 16):
                vec = dict(w2_theta(k, ctx).free_part.terms)
                if vec:
                    span.add(vec)
            fold = -(-(w0 - 1) // 2)  # ceil((w0-1)/2)
            fixed = (w0 - 1) // 2 if (w0 - 1) % 2 == 0 else None
            for j in range(fold, 13):
                if j in ctx.killed:
                    continue
                if ctx.has_torsion() and j == fixed:
                    continue
                if not span.contains({j: 1}):
                    _fail("theta span", "t^%d unreachable at W0=%d n=%d" % (j, w0, n))


def check_cover_multiplicativity(params):
    rng = random.Random(params.seed + 5)
    for _ in range(60):
        x = AlphaCombination({rng.randrange(1, 40): rng.randrange(-5, 6)
                              for _ in range(rng.randrange(0, 5))})
        m1, m2 = rng.randrange(1, 7), rng.randrange(1, 7)
        if cover_pullback(m1 * m2, x) != cover_pullback(m1, cover_pullback(m2, x)):
            _fail("cover multiplicativity", "m1=%d m2=%d on %r" % (m1, m2, x))
        if cover_pullback(1, x) != x:
            _fail("cover multiplicativity", "trivial cover moved %r" % (x,))


def check_facet_velocity_independence(params):
    rng = random.Random(params.seed + 6)
    for n in (3, 4):
        for _ in range(12):
            a, b = rng.randrange(-4, 5), rng.randrange(-4, 5)
            p = pair_bracket(a, b, n)
            for facet in ("t1=t2", "t2=t3"):
                base = facet_map(facet, p, 0, n).drop_edge_pairs()
                for vel in range(-3, 4):
                    if facet_map(facet, p, vel, n).drop_edge_pairs() != base:
                        _fail("facet velocity independence",
                              "%s image depends on the velocity degree" % facet)


def check_cyclic_identity(params):
    for n in (3, 4):
        forms = [bracket(deg_n_gen(1, 2, n=n), deg_n_gen(2, 3, n=n), n),
                 bracket(deg_n_gen(2, 3, n=n), deg_n_gen(3, 1, n=n), n),
                 bracket(deg_n_gen(3, 1, n=n), deg_n_gen(1, 2, n=n), n)]
        if forms[0] != forms[1] or forms[1] != forms[2]:
            _fail("cyclic identity", "three rotations disagree at n=%d" % n)


def check_t_action_compatibility(params):
    rng = random.Random(params.seed + 7)
    pairs = ((1, 2), (1, 3), (2, 3))
    for n in (3, 4):
        for _ in range(25):
            def rand_elem():
                el = DegNElem(n)
                for _ in range(rng.randrange(1, 4)):
                    i, j = pairs[rng.randrange(3)]
                    el = el.add(deg_n_gen(i, j, (rng.randrange(-3, 4), 0, 0), n,
                                          rng.randrange(-3, 4)))
                return el
            x, y = rand_elem(), rand_elem()
            mu = (rng.randrange(-3, 4), rng.randrange(-3, 4), rng.randrange(-3, 4))
            if bracket(x.act(mu), y.act(mu), n) != bracket(x, y, n).act(mu):
                _fail("t-action compatibility", "mu=%r" % (mu,))


def check_relator_family_equivalence(params):
    win = (-4, 4)
    for n in (3, 4):
        derived = {}
        hard = {}
        for (ab, rel) in whitehead.derive_R_relators(n, win):
            poly = basis_change_12_to_13(rel.triple_poly())
            if not poly.is_zero():
                rep = orbit_of(*ab).rep
                derived.setdefault(rep, []).append(poly)
            kr = hexagon.k_relator(ab[0], ab[1], n)
            if not kr.is_zero():
                rep = orbit_of(*ab).rep
                hard.setdefault(rep, []).append(kr)
        if set(derived) != set(hard):
            _fail("relator family equivalence", "orbit sets differ at n=%d" % n)
        for rep in derived:
            orbit = orbit_of(*rep)
            idx = orbit.index()
            spans = []
            for fam in (derived[rep], hard[rep]):
                span = IntegerRowSpan()
                for poly in fam:
                    vec = [0] * len(orbit.elements)
                    for mono, c in poly.terms.items():
                        vec[idx[mono]] += c
                    span.add(vec)
                spans.append(span)
            if not spans[0].equals(spans[1]):
                _fail("relator family equivalence",
                      "spans differ on orbit %r at n=%d" % (rep, n))


def check_orbit_partition(params):
    rng = random.Random(params.seed + 8)
    for _ in range(200):
        v = (rng.randrange(-30, 31), rng.randrange(-30, 31))
        w = v
        for _ in range(6):
            w = R_MAP.apply(*w)
        if w != v:
            _fail("orbit partition", "r^6 is not the identity")
        if S_MAP.apply(*S_MAP.apply(*v)) != v:
            _fail("orbit partition", "s^2 is not the identity")
        srs = S_MAP.apply(*R_MAP.apply(*S_MAP.apply(*v)))
        rinv = R_MAP.inverse().apply(*v)
        if srs != rinv:
            _fail("orbit partition", "s r s != r^-1")
    for _ in range(60):
        a = (rng.randrange(-8, 9), rng.randrange(-8, 9))
        b = (rng.randrange(-8, 9), rng.randrange(-8, 9))
        oa, ob = orbit_of(*a), orbit_of(*b)
        inter = set(oa.elements) & set(ob.elements)
        if inter and set(oa.elements) != set(ob.elements):
            _fail("orbit partition", "orbits neither equal nor disjoint")
        want = "origin" if a == (0, 0) else ("six" if hexagon.on_degenerate_line(*a) else "twelve")
        if oa.otype != want:
            _fail("orbit partition", "otype of %r is %s, expected %s" % (a, oa.otype, want))


def check_relator_orbit_locality(params):
    for n in (3, 4):
        for p in range(-10, 11):
            for q in range(-10, 11):
                allowed = set(orbit_of(p, q).elements)
                for mono in hexagon.k_relator(p, q, n).terms:
                    if mono not in allowed:
                        _fail("relator orbit-locality",
                              "relator at (%d,%d) touches %r outside its orbit"
                              % (p, q, mono))


def check_normal_form_soundness(params):
    rng = random.Random(params.seed + 9)
    for n in (3, 4):
        for _ in range(40):
            x, y = _rand_poly2(rng, -4, 4), _rand_poly2(rng, -4, 4)
            if rng.randrange(2):
                # make agreement likely: perturb x by a relator combination
                y = x
                for _ in range(rng.randrange(0, 3)):
                    pp, qq = rng.randrange(-4, 5), rng.randrange(-4, 5)
                    y = y + hexagon.k_relator(pp, qq, n).scale(rng.randrange(-2, 3))
            same_nf = (hex_normal_form(HexElement(x, n)) ==
                       hex_normal_form(HexElement(y, n)))
            diff = x - y
            by_orbit = {}
            for mono, c in diff.terms.items():
                by_orbit.setdefault(orbit_of(*mono).rep, {})[mono] = c
            member = True
            for rep, monos in by_orbit.items():
                orbit = orbit_of(*rep)
                idx = orbit.index()
                span = IntegerRowSpan()
                for row in orbit_relators(orbit, n).data:
                    span.add(row)
                vec = [0] * len(orbit.elements)
                for mono, c in monos.items():
                    vec[idx[mono]] += c
                if not span.contains(vec):
                    member = False
                    break
            if same_nf != member:
                _fail("normal-form soundness",
                      "normal-form equality disagrees with span membership (n=%d)" % n)


def check_torsion_factors(params):
    for n in (3, 4):
        for a in range(-5, 6):
            for b in range(-5, 6):
                st = orbit_structure(orbit_of(a, b), n)
                if any(t != 2 for t in st.torsion):
                    _fail("torsion factors", "invariant factor %r at orbit of (%d,%d)"
                          % (st.torsion, a, b))


def check_skew_symmetry(params):
    for k in range(2, params.kmax + 1):
        for p in range(1, k):
            for q in range(1, k):
                if not (f_closed(k, p, q) + f_closed(k, q, p)).is_zero():
                    _fail("skew symmetry", "F_%d(%d,%d) + F_%d(%d,%d) != 0"
                          % (k, p, q, k, q, p))


def check_total_sum_vanishes(params):
    for k in range(2, params.kmax + 1):
        total = GClass.zero()
        for p in range(1, k):
            for q in range(1, k):
                total = total + f_closed(k, p, q)
        if not total.is_zero():
            _fail("total sum vanishes", "sum of F_%d is %r" % (k, total))


def check_per_level_agreement(params):
    for k in range(2, params.kmax + 1):
        for p in range(1, k):
            for q in range(1, k):
                acc = GClass.zero()
                for lvl in range(1, k):
                    acc = acc + f_level(k, lvl, p, q)
                if acc != f_closed(k, p, q):
                    _fail("per-level agreement", "k=%d p=%d q=%d" % (k, p, q))


def check_symmetric_g_compatibility(params):
    # the G* form of the elementary class differs from the G form by the
    # hexagon combination at (-q, p), so the two agree in the quotient
    for p in range(-6, 7):
        for q in range(-6, 7):
            diff = e(p, q) - (gstar(-q, p).neg() + gstar(p, -q))
            if not hex_normal_form(w3(diff, 3)).is_zero():
                _fail("symmetric-g compatibility", "(p,q)=(%d,%d)" % (p, q))


def check_delta_expansion(params):
    for k in range(3, params.kmax + 1):
        delta(k)  # raises internally on mismatch with the 8-term expansion


def check_w3_hexagon_vanishing(params):
    rng = random.Random(params.seed + 10)
    for n in (3, 4):
        sgn = 1 if n % 2 else -1
        for _ in range(100):
            p, q = rng.randrange(-10, 11), rng.randrange(-10, 11)
            comb = (g(p, q) - g(q, q - p)
                    + (g(p, p - q) - g(q, p)).scale(sgn))
            if not hex_normal_form(w3(comb, n)).is_zero():
                _fail("w3 hexagon vanishing", "(p,q)=(%d,%d) n=%d" % (p, q, n))


def check_basis_change_consistency(params):
    rng = random.Random(params.seed + 11)
    eps = None
    for _ in range(100):
        p, q = rng.randrange(-12, 13), rng.randrange(-12, 13)
        lhs = basis_change_12_to_13(LaurentPoly2.monomial(p - q, -q))
        rhs = w3(g(p, q), 3).poly
        if lhs == rhs:
            ratio = 1
        elif lhs == rhs.neg():
            ratio = -1
        else:
            _fail("basis-change consistency", "value differs beyond sign at (%d,%d)" % (p, q))
        if eps is None:
            eps = ratio
        elif ratio != eps:
            _fail("basis-change consistency", "sign not constant across (p,q)")


def check_json_round_trip(params):
    rng = random.Random(params.seed + 12)
    for _ in range(30):
        p1 = _rand_poly1(rng)
        if LaurentPoly1.from_json(p1.to_json()) != p1:
            _fail("json round trip", "one-variable polynomial")
        p2 = _rand_poly2(rng)
        if LaurentPoly2.from_json(p2.to_json()) != p2:
            _fail("json round trip", "two-variable polynomial")
        gc = GClass({(rng.randrange(-9, 10), rng.randrange(-9, 10)):
                     rng.randrange(-10 ** 12, 10 ** 12)
                     for _ in range(rng.randrange(0, 5))})
        if GClass.from_json(gc.to_json()) != gc:
            _fail("json round trip", "G-class")


CHECKS = (
    ("laurent algebra", check_laurent_algebra),
    ("snf certificate", check_snf_certificate),
    ("cokernel invariance", check_cokernel_invariance),
    ("lambda oracle equivalence", check_lambda_oracle),
    ("lambda additivity", check_lambda_additivity),
    ("theta span", check_theta_span),
    ("cover multiplicativity", check_cover_multiplicativity),
    ("facet velocity independence", check_facet_velocity_independence),
    ("cyclic identity", check_cyclic_identity),
    ("t-action compatibility", check_t_action_compatibility),
    ("orbit partition", check_orbit_partition),
    # locality is a precondition for every check that consumes the relator
    # table, so it runs before them and is the first to flag a corrupt table
    ("relator orbit-locality", check_relator_orbit_locality),
    ("relator family equivalence", check_relator_family_equivalence),
    ("normal-form soundness", check_normal_form_soundness),
    ("torsion factors", check_torsion_factors),
    ("skew symmetry", check_skew_symmetry),
    ("total sum vanishes", check_total_sum_vanishes),
    ("per-level agreement", check_per_level_agreement),
    ("symmetric-g compatibility", check_symmetric_g_compatibility),
    ("delta expansion", check_delta_expansion),
    ("w3 hexagon vanishing", check_w3_hexagon_vanishing),
    ("basis-change consistency", check_basis_change_consistency),
    ("json round trip", check_json_round_trip),
)


class Params:
    __slots__ = ("kmax", "samples", "seed")

    def __init__(self, kmax=12, samples=60, seed=20210426):
        self.kmax = kmax
        self.samples = samples
        self.seed = seed


def run(params=None, report=None):
    """Run every check; returns (all_passed, results).

    results is a list of (name, passed, detail) with detail empty on
    success.  `report`, if given, is called with one line per check.
    """
    params = params or Params()
    results = []
    for name, fn in CHECKS:
        try:
            fn(params)
        except CheckFailure as exc:
            results.append((name, False, str(exc)))
            if report:
                report("FAIL %s" % exc)
        except Exception as exc:  # a crashed check is a failed check
            results.append((name, False, "%s: crashed: %r" % (name, exc)))
            if report:
                report("FAIL %s: crashed: %r" % (name, exc))
        else:
            results.append((name, True, ""))
            if report:
                report("ok   %s" % name)
    return all(ok for _, ok, _ in results), results
