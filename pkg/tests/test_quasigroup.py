import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasilab import (
    BadSymbol,
    NotLatin,
    NotSquare,
    OutOfRange,
    ParastropheSelector,
    Permutation,
    Quasigroup,
    cyclic,
    from_table,
    subtraction_quasigroup,
)
from conftest import addition_table
from oracles import parastrophe13_table


# -- construction and validation ------------------------------------------------


def test_trivial_order_one():
    q = from_table(1, [[0]])
    assert q.order == 1
    assert q.mul(0, 0) == 0


def test_z3_subtraction_table_is_valid():
    q = from_table(3, [[0, 2, 1], [1, 0, 2], [2, 1, 0]])
    assert q.to_lists() == subtraction_quasigroup(cyclic(3)).to_lists()


def test_not_latin_reports_column():
    with pytest.raises(NotLatin) as exc:
        from_table(2, [[0, 1], [0, 1]])
    assert exc.value.axis == "column"
    assert exc.value.index == 0
    assert exc.value.positions == (0, 1)


def test_not_latin_reports_row():
    with pytest.raises(NotLatin) as exc:
        Quasigroup([[0, 0], [1, 1]])
    assert exc.value.axis == "row"
    assert exc.value.index == 0


def test_not_square():
    with pytest.raises(NotSquare):
        from_table(2, [[0, 1]])
    with pytest.raises(NotSquare):
        from_table(2, [[0, 1], [1, 0], [0, 1]])
    with pytest.raises(NotSquare):
        Quasigroup([[0, 1], [1]])
    with pytest.raises(NotSquare):
        from_table(0, [])


def test_bad_symbol():
    with pytest.raises(BadSymbol):
        Quasigroup([[0, 2], [2, 0]])
    with pytest.raises(BadSymbol):
        Quasigroup([[0, -1], [-1, 0]])
    with pytest.raises(BadSymbol):
        Quasigroup([[0.0, 1.0], [1.0, 0.0]])


def test_table_is_readonly():
    q = from_table(2, [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        q.table[0, 0] = 1


# -- operation and divisions -----------------------------------------------------


def test_mul_examples(z3_sub, z4_sub):
    assert z3_sub.mul(1, 2) == 2          # 1 - 2 = 2 mod 3
    assert z4_sub.mul(0, 3) == 1          # -3 = 1 mod 4
    e = z4_sub.unit_predicates().right_unit
    assert all(z4_sub.mul(x, e) == x for x in range(4))


def test_mul_out_of_range(z3_sub):
    with pytest.raises(OutOfRange):
        z3_sub.mul(0, 3)
    with pytest.raises(OutOfRange):
        z3_sub.ldiv(3, 0)
    with pytest.raises(OutOfRange):
        z3_sub.rdiv(-1, 0)


def test_ldiv_example(z3_sub):
    # 1 * z = 2 means 1 - z = 2, so z = 2
    assert z3_sub.ldiv(1, 2) == 2


def test_division_identities_exhaustive(z4_sub):
    q = z4_sub
    for x in range(4):
        for y in range(4):
            assert q.mul(x, q.ldiv(x, y)) == y
            assert q.ldiv(x, q.mul(x, y)) == y
            assert q.mul(q.rdiv(x, y), y) == x
            assert q.rdiv(q.mul(y, x), x) == y


# -- translations -----------------------------------------------------------------


def test_right_translation_at_zero_is_identity(z4_sub):
    assert z4_sub.right_translation(0).is_identity()


def test_left_translation_image(z3_sub):
    assert z3_sub.left_translation(0).image == (0, 2, 1)


def test_translations_are_permutations(z5_sub):
    for a in range(5):
        assert isinstance(z5_sub.left_translation(a), Permutation)
        assert isinstance(z5_sub.right_translation(a), Permutation)


# -- parastrophes -------------------------------------------------------------------


def test_parastrophe_13_of_addition_is_subtraction(z3_add, z3_sub):
    assert z3_add.parastrophe("(13)") == z3_sub
    # independent oracle: solve c*b = a by table scan
    assert z3_add.parastrophe("(13)").to_lists() == parastrophe13_table(z3_add.to_lists())


def test_parastrophe_identity_selector(z4_sub):
    assert z4_sub.parastrophe("e") == z4_sub


def test_parastrophe_13_is_involution(z5_sub):
    assert z5_sub.parastrophe("(13)").parastrophe("(13)") == z5_sub


def test_parastrophe_composition_all_pairs(z4_sub):
    names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    for s_name, t_name in itertools.product(names, repeat=2):
        s = ParastropheSelector.from_name(s_name)
        t = ParastropheSelector.from_name(t_name)
        assert z4_sub.parastrophe(s).parastrophe(t) == z4_sub.parastrophe(t * s)


def test_bad_selector():
    with pytest.raises(ValueError):
        ParastropheSelector((1, 1, 2))
    with pytest.raises(ValueError):
        ParastropheSelector.from_name("(31)")


# -- isotopes ------------------------------------------------------------------------


def test_isotope_identity_triple(z5_sub):
    e = Permutation.identity(5)
    assert z5_sub.isotope(e, e, e) == z5_sub


def test_isotope_negation_gives_subtraction():
    add = Quasigroup(addition_table(5))
    e = Permutation.identity(5)
    neg = Permutation([(-y) % 5 for y in range(5)])
    expected = [[(x - y) % 5 for y in range(5)] for x in range(5)]
    assert add.isotope(e, neg, e).to_lists() == expected


def test_isotope_degree_mismatch(z5_sub):
    from quasilab import DegreeMismatch

    e4 = Permutation.identity(4)
    with pytest.raises(DegreeMismatch):
        z5_sub.isotope(e4, e4, e4)


# -- unit predicates ---------------------------------------------------------------


def test_unit_profile_z4_subtraction(z4_sub):
    u = z4_sub.unit_predicates()
    assert u.right_unit == 0
    assert u.left_unit is None
    assert u.is_unipotent
    assert not u.is_commutative
    assert not u.is_loop


def test_unit_profile_z2_subtraction():
    q = subtraction_quasigroup(cyclic(2))
    u = q.unit_predicates()
    assert u.is_loop and u.is_associative and u.is_commutative


def test_unit_profile_z3_addition(z3_add):
    u = z3_add.unit_predicates()
    assert u.left_unit == u.right_unit == 0
    assert u.is_loop and u.is_associative


# -- property tests over random isotopes ----------------------------------------------


@st.composite
def random_quasigroups(draw, max_order=6):
    n = draw(st.integers(min_value=1, max_value=max_order))
    alpha = Permutation(draw(st.permutations(list(range(n)))))
    beta = Permutation(draw(st.permutations(list(range(n)))))
    gamma = Permutation(draw(st.permutations(list(range(n)))))
    base = Quasigroup(addition_table(n))
    q = base.isotope(alpha, beta, gamma)
    if draw(st.booleans()):
        q = q.parastrophe(draw(st.sampled_from(["(12)", "(13)", "(23)", "(123)", "(132)"])))
    return q


@settings(max_examples=60, deadline=None)
@given(random_quasigroups(), st.data())
def test_division_identities_random(q, data):
    n = q.order
    x = data.draw(st.integers(0, n - 1))
    y = data.draw(st.integers(0, n - 1))
    assert q.mul(x, q.ldiv(x, y)) == y
    assert q.ldiv(x, q.mul(x, y)) == y
    assert q.mul(q.rdiv(x, y), y) == x
    assert q.rdiv(q.mul(y, x), x) == y


@settings(max_examples=40, deadline=None)
@given(random_quasigroups(), st.data())
def test_isotope_inverse_recovers(q, data):
    n = q.order
    alpha = Permutation(data.draw(st.permutations(list(range(n)))))
    beta = Permutation(data.draw(st.permutations(list(range(n)))))
    gamma = Permutation(data.draw(st.permutations(list(range(n)))))
    there = q.isotope(alpha, beta, gamma)
    back = there.isotope(alpha.inverse(), beta.inverse(), gamma.inverse())
    assert back == q


@settings(max_examples=40, deadline=None)
@given(random_quasigroups())
def test_parastrophes_preserve_latin(q):
    for name in ("(12)", "(13)", "(23)", "(123)", "(132)"):
        p = q.parastrophe(name)   # constructor re-validates the Latin property
        assert p.order == q.order
