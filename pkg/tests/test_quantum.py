import random

import pytest

from qflag import (
    BOREL,
    ParabolicSubset,
    QClass,
    build_root_system,
    chevalley_multiply,
    classical_product,
    enumerate_min_reps,
    format_qclass,
    from_word,
    gw_invariant,
    identity,
    longest_element,
    quantum_product,
    simple_reflection,
    star,
)


def _unit(rs, w, degree=None):
    return QClass.unit(rs, BOREL, w, degree)


def test_projective_line_relation():
    # independent oracle: QH(P^1) = Z[h,q]/(h^2 - q)
    rs = build_root_system("A1")
    s1 = simple_reflection(rs, 1)
    assert quantum_product(rs, s1, s1) == _unit(rs, identity(rs), (1,))


def test_a2_divisor_products_hand_checked():
    rs = build_root_system("A2")
    s1, s2 = simple_reflection(rs, 1), simple_reflection(rs, 2)
    s2s1 = from_word(rs, (2, 1))
    s1s2 = from_word(rs, (1, 2))
    # evaluated by hand from the divisor rule
    assert quantum_product(rs, s1, s1) == QClass(
        rs, BOREL, {(s2s1, (0, 0)): 1, (identity(rs), (1, 0)): 1}
    )
    assert quantum_product(rs, s1, s2) == QClass(
        rs, BOREL, {(s1s2, (0, 0)): 1, (s2s1, (0, 0)): 1}
    )
    # diagram symmetry 1 <-> 2
    assert quantum_product(rs, s2, s2) == QClass(
        rs, BOREL, {(s1s2, (0, 0)): 1, (identity(rs), (0, 1)): 1}
    )
    assert quantum_product(rs, s1, s2s1) == QClass(rs, BOREL, {(s2, (1, 0)): 1})


def test_identity_class_is_neutral():
    rs = build_root_system("B2")
    e = identity(rs)
    for w in enumerate_min_reps(rs, BOREL):
        assert quantum_product(rs, e, w) == _unit(rs, w)
        assert quantum_product(rs, w, e) == _unit(rs, w)


def test_chevalley_classical_flag_drops_q_terms():
    rs = build_root_system("A2")
    s1 = simple_reflection(rs, 1)
    full = chevalley_multiply(rs, 1, s1)
    bare = chevalley_multiply(rs, 1, s1, quantum=False)
    assert bare == full.classical_part()
    with pytest.raises(ValueError):
        chevalley_multiply(rs, 3, s1)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_grading_integrality_and_positivity(name):
    rs = build_root_system(name)
    elements = enumerate_min_reps(rs, BOREL)
    for u in elements:
        for v in elements:
            qc = quantum_product(rs, u, v)
            for (w, d), c in qc.terms.items():
                assert isinstance(c, int) and c > 0
                assert u.length + v.length == w.length + 2 * sum(d)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_classical_limit_matches_classical_engine(name):
    rs = build_root_system(name)
    elements = enumerate_min_reps(rs, BOREL)
    for u in elements:
        for v in elements:
            assert quantum_product(rs, u, v).classical_part() == classical_product(
                rs, u, v
            )


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_classical_top_pairing_is_poincare_duality(name):
    rs = build_root_system(name)
    elements = enumerate_min_reps(rs, BOREL)
    w_o = longest_element(rs, ParabolicSubset.full(rs.rank))
    zero = (0,) * rs.rank
    for u in elements:
        for v in elements:
            coeff = classical_product(rs, u, v).coefficient(w_o, zero)
            assert coeff == (1 if v == w_o * u else 0)


def test_associativity_and_commutativity_exhaustive_a2():
    rs = build_root_system("A2")
    elements = enumerate_min_reps(rs, BOREL)
    for a in elements:
        for b in elements:
            assert quantum_product(rs, a, b) == quantum_product(rs, b, a)
            for c in elements:
                left = star(quantum_product(rs, a, b), _unit(rs, c))
                right = star(_unit(rs, a), quantum_product(rs, b, c))
                assert left == right


def test_associativity_sampled_a3():
    rs = build_root_system("A3")
    elements = enumerate_min_reps(rs, BOREL)
    rng = random.Random(17)
    for _ in range(30):
        a, b, c = (elements[rng.randrange(len(elements))] for _ in range(3))
        left = star(quantum_product(rs, a, b), _unit(rs, c))
        right = star(_unit(rs, a), quantum_product(rs, b, c))
        assert left == right


def test_gw_invariant_line_through_line_and_two_points():
    rs = build_root_system("A2")
    s1 = simple_reflection(rs, 1)
    pt = from_word(rs, (2, 1))
    assert gw_invariant(rs, [s1, pt, pt], (1, 0)) == 1


def test_gw_invariant_duality_normalization():
    # <sigma_u, sigma_{w_o u}, sigma_e>_0 = 1: the fundamental-class slot pins
    # the Poincare pairing.  (With the point class in the last slot the count
    # is zero for u != e; the grading already rules it out.)
    for name in ["A2", "B2"]:
        rs = build_root_system(name)
        w_o = longest_element(rs, ParabolicSubset.full(rs.rank))
        zero = (0,) * rs.rank
        for u in enumerate_min_reps(rs, BOREL):
            assert gw_invariant(rs, [u, w_o * u, identity(rs)], zero) == 1
            if u.length:
                assert gw_invariant(rs, [u, w_o * u, w_o], zero) == 0


def test_gw_invariant_vanishing_rules():
    rs = build_root_system("A2")
    s1 = simple_reflection(rs, 1)
    pt = from_word(rs, (2, 1))
    assert gw_invariant(rs, [s1, pt, pt], (-1, 0)) == 0
    assert gw_invariant(rs, [pt, pt, pt], (1, 0)) == 0  # grading: 6 != 3 + 2
    with pytest.raises(ValueError):
        gw_invariant(rs, [s1, pt], (1, 0))
    with pytest.raises(ValueError):
        gw_invariant(rs, [s1, pt, pt], (1,))


def test_gw_invariant_symmetric_under_permutations():
    from itertools import permutations

    rs = build_root_system("B2")
    elements = enumerate_min_reps(rs, BOREL)
    rng = random.Random(23)
    for _ in range(12):
        trip = tuple(elements[rng.randrange(len(elements))] for _ in range(3))
        for degree in [(0, 0), (1, 0), (0, 1), (1, 1)]:
            vals = {gw_invariant(rs, list(p), degree) for p in permutations(trip)}
            assert len(vals) == 1


def test_four_point_invariant_matches_iterated_product():
    # the engine defines n-point invariants through iterated products; check
    # the 4-point value against a manual two-step expansion
    rs = build_root_system("A2")
    s1 = simple_reflection(rs, 1)
    s2s1 = from_word(rs, (2, 1))
    w_o = longest_element(rs, ParabolicSubset.full(2))
    triple = star(quantum_product(rs, s1, s1), _unit(rs, s1))
    degree = (1, 0)
    expected = triple.coefficient(w_o * s2s1, degree)
    assert gw_invariant(rs, [s1, s1, s1, s2s1], degree) == expected
    assert expected == 1


def test_qclass_formatting():
    rs = build_root_system("A2")
    s1 = simple_reflection(rs, 1)
    s2s1 = from_word(rs, (2, 1))
    assert format_qclass(quantum_product(rs, s1, s1)) == "sigma[s2s1] + q1"
    assert format_qclass(quantum_product(rs, s1, s2s1)) == "q1 * sigma[s2]"
    assert format_qclass(QClass.zero(rs, BOREL)) == "0"
    assert format_qclass(_unit(rs, identity(rs))) == "sigma[e]"


def test_qclass_arithmetic_helpers():
    rs = build_root_system("A2")
    s1 = simple_reflection(rs, 1)
    a = _unit(rs, s1)
    b = _unit(rs, s1, (1, 0))
    total = a + b
    assert total.coefficient(s1, (0, 0)) == 1
    assert total.coefficient(s1, (1, 0)) == 1
    assert (total - a) == b
    assert a.shift((2, 0)).coefficient(s1, (2, 0)) == 1
    assert a.scale(3).coefficient(s1, (0, 0)) == 3
    assert (a - a).is_zero()
