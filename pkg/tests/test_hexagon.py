import random

from barbell.hexagon import (HexElement, R_MAP, S_MAP, basis_change_12_to_13,
                             basis_change_13_to_12, hex_normal_form, k_relator,
                             on_degenerate_line, orbit_of, orbit_relators,
                             orbit_structure)
from barbell.intlat import IntegerRowSpan, QuotientStructure
from barbell.laurent import LaurentPoly2


def test_orbit_of_unit_hexagon():
    orbit = orbit_of(1, 0)
    assert orbit.otype == "six"
    assert set(orbit.elements) == {(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)}
    assert orbit.rep == (-1, -1)


def test_orbit_of_origin():
    orbit = orbit_of(0, 0)
    assert orbit.otype == "origin"
    assert orbit.elements == ((0, 0),)


def test_orbit_of_generic_point():
    orbit = orbit_of(3, 1)
    assert orbit.otype == "twelve"
    assert len(set(orbit.elements)) == 12


def test_orbit_partition_and_group_relations():
    rng = random.Random(4)
    for _ in range(200):
        v = (rng.randrange(-25, 26), rng.randrange(-25, 26))
        w = v
        for _ in range(6):
            w = R_MAP.apply(*w)
        assert w == v
        assert S_MAP.apply(*S_MAP.apply(*v)) == v
        assert (S_MAP.apply(*R_MAP.apply(*S_MAP.apply(*v)))
                == R_MAP.inverse().apply(*v))
    for _ in range(50):
        a = (rng.randrange(-7, 8), rng.randrange(-7, 8))
        b = (rng.randrange(-7, 8), rng.randrange(-7, 8))
        ea, eb = set(orbit_of(*a).elements), set(orbit_of(*b).elements)
        assert not (ea & eb) or ea == eb


def test_otype_matches_degeneracy_lines():
    for a in range(-6, 7):
        for b in range(-6, 7):
            orbit = orbit_of(a, b)
            if (a, b) == (0, 0):
                assert orbit.otype == "origin"
            elif on_degenerate_line(a, b):
                assert orbit.otype == "six"
            else:
                assert orbit.otype == "twelve"


def test_origin_relator_trivial():
    m = orbit_relators(orbit_of(0, 0), 3)
    assert m.rows == 0
    assert orbit_structure(orbit_of(0, 0), 3) == QuotientStructure(1)


def test_six_orbit_structures_swap_with_parity():
    unit = orbit_of(0, 1)
    assert orbit_structure(unit, 3) == QuotientStructure(4)
    assert orbit_structure(unit, 4) == QuotientStructure(3, (2,))
    midline = orbit_of(1, 2)  # on 2a = b
    assert orbit_structure(midline, 3) == QuotientStructure(3, (2,))
    assert orbit_structure(midline, 4) == QuotientStructure(4)


def test_twelve_orbit_structure():
    assert orbit_structure(orbit_of(3, 1), 3) == QuotientStructure(7)
    assert orbit_structure(orbit_of(3, 1), 4) == QuotientStructure(7)


def test_torsion_factors_are_two():
    for a in range(-5, 6):
        for b in range(-5, 6):
            for n in (3, 4):
                st = orbit_structure(orbit_of(a, b), n)
                assert all(t == 2 for t in st.torsion)


def test_structure_classification_sweep():
    # twelve-orbits are always free of rank 7; six-orbits alternate with
    # parity, depending on whether the orbit meets a coordinate axis
    # (vertex axes a=0, b=0, a=b) or an edge-midpoint axis
    seen = set()
    for a in range(-6, 7):
        for b in range(-6, 7):
            orbit = orbit_of(a, b)
            if orbit.rep in seen or orbit.otype == "origin":
                continue
            seen.add(orbit.rep)
            odd, even = orbit_structure(orbit, 3), orbit_structure(orbit, 4)
            if orbit.otype == "twelve":
                assert odd == even == QuotientStructure(7), orbit.rep
                continue
            on_vertex_axis = any(x == 0 or y == 0 or x == y
                                 for x, y in orbit.elements)
            if on_vertex_axis:
                assert odd == QuotientStructure(4), orbit.rep
                assert even == QuotientStructure(3, (2,)), orbit.rep
            else:
                assert odd == QuotientStructure(3, (2,)), orbit.rep
                assert even == QuotientStructure(4), orbit.rep


def test_relator_orbit_locality():
    for n in (3, 4):
        for p in range(-10, 11):
            for q in range(-10, 11):
                allowed = set(orbit_of(p, q).elements)
                assert set(k_relator(p, q, n).terms) <= allowed


def test_relators_normalize_to_zero():
    for n in (3, 4):
        for p, q in ((2, 1), (5, 2), (-3, 4), (0, 0), (1, 1)):
            nf = hex_normal_form(HexElement(k_relator(p, q, n), n))
            assert nf.is_zero()


def test_origin_monomial_is_rank_one():
    nf = hex_normal_form(HexElement(LaurentPoly2.monomial(0, 0), 3))
    assert not nf.is_zero()
    assert list(nf.orbits) == [(0, 0)]
    assert nf.orbits[(0, 0)] == ((1, 0),)


def test_hexagon_combination_vanishes_for_odd_n():
    p, q = 5, 2
    comb = LaurentPoly2({(p, q): 1, (p, p - q): 1, (q, p): -1, (q, q - p): -1})
    assert hex_normal_form(HexElement(comb, 3)).is_zero()
    # the even-parity form vanishes for n = 4
    comb4 = LaurentPoly2({(p, q): 1, (q, q - p): -1, (p, p - q): -1, (q, p): 1})
    assert hex_normal_form(HexElement(comb4, 4)).is_zero()


def test_normal_form_soundness_random():
    rng = random.Random(12)
    for n in (3, 4):
        for _ in range(30):
            x = LaurentPoly2({(rng.randrange(-4, 5), rng.randrange(-4, 5)):
                              rng.randrange(-4, 5) for _ in range(4)})
            y = x
            if rng.randrange(2):
                for _ in range(rng.randrange(1, 3)):
                    y = y + k_relator(rng.randrange(-4, 5), rng.randrange(-4, 5),
                                      n).scale(rng.randrange(-2, 3))
            else:
                y = LaurentPoly2({(rng.randrange(-4, 5), rng.randrange(-4, 5)):
                                  rng.randrange(-4, 5) for _ in range(4)})
            same = (hex_normal_form(HexElement(x, n)) ==
                    hex_normal_form(HexElement(y, n)))
            diff = x - y
            member = True
            by_orbit = {}
            for mono, c in diff.terms.items():
                by_orbit.setdefault(orbit_of(*mono).rep, {})[mono] = c
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
            assert same == member


def test_basis_change_example():
    # t1^(p-q) t3^(-q) in the (t1,t3) chart maps to -t1^p t2^q
    for p, q in ((5, 2), (0, 0), (-3, 7)):
        got = basis_change_12_to_13(LaurentPoly2.monomial(p - q, -q))
        assert got == LaurentPoly2.monomial(p, q, -1)


def test_basis_change_round_trip():
    rng = random.Random(8)
    for _ in range(100):
        p = LaurentPoly2({(rng.randrange(-9, 10), rng.randrange(-9, 10)):
                          rng.randrange(-9, 10) for _ in range(5)})
        assert basis_change_13_to_12(basis_change_12_to_13(p)) == p
        assert basis_change_12_to_13(basis_change_13_to_12(p)) == p
