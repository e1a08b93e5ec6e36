from collections import Counter
import itertools

from hypothesis import given, settings, strategies as st
import pytest

from kacdem.cartan import MixedDatum, build_datum
from kacdem.crystal import NotDominant, demazure_crystal, stabilizer_nodes
from kacdem.demazure import (
    CharacterPoly, FiniteCharacter, NegativeResult, demazure_char_ops, demazure_char_word, demazure_op,
    dominant_coweights, dominant_weights, module_char, restrict_finite, sum_char, twist, twist_weight,
    untwisted_char, verify_identity,
)
from kacdem.weyl import weyl_group

from conftest import g_coweight
from oracles import naive_demazure_op, naive_demazure_word, weight


def char(d, *pairs):
    """CharacterPoly from (weight, multiplicity) pairs."""
    acc = Counter()
    for w, m in pairs:
        acc[w.as_int_tuple()] += m
    return CharacterPoly(d.label, acc)


# ---------------------------------------------------------------------------
# operators


def test_operator_basic_cases(A1):
    d = A1.datum
    lam = d.Lam(0)
    assert demazure_op(d, 1, CharacterPoly.monomial(lam)) == CharacterPoly.monomial(lam)
    assert demazure_op(d, 0, CharacterPoly.monomial(lam)) == char(d, (lam, 1), (lam - d.alpha(0), 1))
    mu = d.Lam(0) - d.Lam(1)  # <alpha_1^vee, mu> = -1
    assert demazure_op(d, 1, CharacterPoly.monomial(mu)).terms == {}
    nu = d.Lam(0) * 2 - d.Lam(1) * 2  # pairing -2
    assert demazure_op(d, 1, CharacterPoly.monomial(nu)) == char(d, (nu + d.alpha(1), -1))
    with pytest.raises(NegativeResult):
        demazure_char_word(d, nu, (1,))
    with pytest.raises(MixedDatum):
        demazure_op(build_datum("A2~1"), 1, CharacterPoly.monomial(lam))


def test_operator_expansion_r1_ro(A1):
    d = A1.datum
    lam, a, delta = d.Lam(0), d.alpha(1), d.delta_weight()
    chi = demazure_char_word(d, lam, (1, 0))
    assert chi == char(d, (lam, 1), (lam + a - delta, 1), (lam - delta, 1), (lam - a - delta, 1))
    assert demazure_char_word(d, lam, ()) == CharacterPoly.monomial(lam)


@st.composite
def small_character(draw):
    label = draw(st.sampled_from(["A1~1", "A2~1", "A2~2", "C2~1"]))
    d = build_datum(label)
    n = d.rank + 1
    terms = draw(st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=n, max_size=n), st.integers(-2, 2),
                                    st.integers(1, 3)), min_size=1, max_size=4))
    acc = Counter()
    for coeffs, delta, m in terms:
        acc[weight(d, coeffs, delta).as_int_tuple()] += m
    return d, dict(acc), draw(st.integers(0, d.rank))


@settings(max_examples=120, deadline=None)
@given(small_character())
def test_operator_matches_naive_and_is_idempotent(data):
    d, terms, i = data
    chi = CharacterPoly(d.label, terms)
    once = demazure_op(d, i, chi)
    assert once.terms == naive_demazure_op(d, i, terms)
    assert demazure_op(d, i, once) == once


# ---------------------------------------------------------------------------
# paths against operators


TYPES = ["A1~1", "A2~1", "A2~2", "C2~1", "G2~1", "D3~2"]


@st.composite
def weight_and_element(draw):
    label = draw(st.sampled_from(TYPES))
    g = weyl_group(build_datum(label))
    d = g.datum
    level = draw(st.integers(1, 3))
    lam = draw(st.sampled_from(dominant_weights(d, level)))
    word = draw(st.lists(st.integers(0, d.rank), max_size=6))
    w = g.min_coset_rep(g.from_word(word), stabilizer_nodes(d, lam))
    return g, lam, w


@settings(max_examples=220, deadline=None)
@given(weight_and_element())
def test_paths_equal_operators(data):
    g, lam, w = data
    assert g.length(w) <= 6
    paths = demazure_crystal(g, lam, w).character()
    ops = demazure_char_ops(g, lam, w)
    assert paths == ops
    word, _ = g.reduced_word(w)
    assert ops.terms == naive_demazure_word(g.datum, lam, word)
    level = g.datum.level(lam)
    assert all(g.datum.level(x) == level for x in paths.weights())


# ---------------------------------------------------------------------------
# worked modules


def _lam(d, *coeffs):
    return weight(d, list(coeffs))


def test_module_dimensions_and_layers(A1, A2t):
    d = A1.datum
    cases = [
        (_lam(d, 1, 0), 2, [1, 3]),
        (_lam(d, 0, 1), -2, [2, 1, 1]),
        (_lam(d, 1, 1), 1, [2]),
        (_lam(d, 1, 1), -1, [1, 1]),
        (_lam(d, 1, 1), 2, [2, 4]),
        (_lam(d, 1, 1), -2, [2, 2, 1, 1]),
        (_lam(d, 2, 0), 2, [1, 3, 5]),
    ]
    for lam, mu, layers in cases:
        for method in ("paths", "ops"):
            chi = module_char(A1, lam, (mu,), method)
            assert chi.layers() == layers, (lam, mu, method)
            assert chi.dim == sum(layers)
    t = A2t.datum
    assert module_char(A2t, _lam(t, 1, 0), g_coweight(A2t, 0, 1)).layers() == [1, 5]
    assert module_char(A2t, _lam(t, 0, 2), g_coweight(A2t, 0, -1)).layers() == [3, 2, 1]
    assert module_char(A2t, _lam(t, 1, 0), (0, 0)) == CharacterPoly.monomial(_lam(t, 1, 0))
    with pytest.raises(ValueError):
        module_char(A1, _lam(d, 1, 0), (2,), "magic")


def test_untwisted_level_two_A2():
    chi = untwisted_char(build_datum("A2~2").label.untwisted, 2, (0, 1))
    assert chi.layers() == [6]


def test_sums(A1):
    d = A1.datum
    lam = _lam(d, 1, 1)
    assert sum_char(A1, lam, [(1,), (-1,)]).layers() == [2, 1]
    assert sum_char(A1, lam, [(2,), (-2,)]).layers() == [2, 5, 1, 1]
    assert sum_char(A1, lam, [(2,), (-2,)]).dim == 9
    assert sum_char(A1, lam, [(2,)]) == module_char(A1, lam, (2,))


def test_restrict_and_twist(A1, A2t):
    d = A1.datum
    chi = char(d, (d.Lam(0), 1), (d.Lam(0) - d.alpha(1) - d.delta_weight(), 2))
    fin = restrict_finite(chi)
    assert fin == FiniteCharacter({(0,): 1, (-2,): 2})
    assert twist(fin, (0,)) == fin
    assert twist(fin, (1,)) == FiniteCharacter({(1,): 1, (-1,): 2})
    assert twist(fin, (5,)).dim == fin.dim
    # alpha_1 and alpha_2 of A2 both restrict to beta
    t = A2t.datum
    g = build_datum("A2~1")
    beta = restrict_finite(CharacterPoly.monomial(t.alpha(1)))
    for j in (1, 2):
        assert restrict_finite(CharacterPoly.monomial(g.alpha(j)), t.restriction) == beta


def test_example_one_tensor_identity(A1):
    d = A1.datum
    lhs = twist(restrict_finite(module_char(A1, _lam(d, 1, 0), (2,))), (1,))
    rhs = restrict_finite(module_char(A1, _lam(d, 0, 1), (-2,)))
    assert lhs == rhs


# ---------------------------------------------------------------------------
# verification


def test_verify_examples(A2t):
    d = build_datum("A1~1")
    rep = verify_identity("A1~1", _lam(d, 0, 1), (2,))
    assert rep.match and (rep.lhs_dim, rep.rhs_dim) == (4, 4)
    assert rep.S == ((-2,),)
    rep = verify_identity("A1~1", _lam(d, 1, 1), (1,))
    assert rep.match and (rep.lhs_dim, rep.rhs_dim) == (3, 3)
    assert rep.component_dims == {(1,): 2, (-1,): 2}
    t = build_datum("A2~2")
    rep = verify_identity("A2~2", _lam(t, 1, 0), (0, 1))
    assert rep.match and (rep.lhs_dim, rep.rhs_dim) == (6, 6)
    assert rep.S == (g_coweight(A2t, 0, 1),)
    rep = verify_identity("A2~2", _lam(t, 0, 2), (0, 1))
    assert rep.match and (rep.lhs_dim, rep.rhs_dim) == (6, 6)
    assert rep.S == (g_coweight(A2t, 0, -1),)


def test_verify_level_three_literal_example():
    d = build_datum("A1~1")
    rep = verify_identity("A1~1", _lam(d, 2, 1), (2,))
    assert rep.level == 3 and rep.match and rep.lhs_dim == rep.rhs_dim == 16


def test_verify_errors():
    d = build_datum("A1~1")
    with pytest.raises(NotDominant):
        verify_identity("A1~1", _lam(d, 1, -1), (2,))
    with pytest.raises(NotDominant):
        verify_identity("A1~1", _lam(d, 1, 0), (-2,))
    with pytest.raises(MixedDatum):
        verify_identity("A1~1", _lam(build_datum("A2~2"), 1, 0), (2,))


def test_twist_weight(A1, A2):
    d = A1.datum
    # kappa = 0: plain restriction
    assert twist_weight(A1, _lam(d, 0, 1), (2,)) == (1,)
    # kappa = omega^vee swaps the two nodes of A1~1
    assert twist_weight(A1, _lam(d, 0, 1), (1,)) == (0,)
    assert twist_weight(A1, _lam(d, 1, 0), (1,)) == (1,)
    assert twist_weight(A1, _lam(d, 1, 1), (1,)) == (1,)
    # in general it is the finite part of sigma_kappa^{-1}(lam), computed here through the Weyl action
    for g in (A1, A2):
        for level in (1, 2):
            for lam in dominant_weights(g.datum, level):
                for mu in itertools.product(range(-2, 3), repeat=g.rank):
                    sigma = g.omega_decompose(mu).element
                    assert g.in_affine_part(g.translation(mu) * sigma.inverse())
                    moved = g.act(sigma.inverse(), lam)
                    assert twist_weight(g, lam, mu) == tuple(int(x) for x in moved.coeffs[1:])
    assert twist_weight(A2, weight(A2.datum, [0, 2, 0]), g_coweight(A2, 0, 0)) == (2, 0)


def test_literal_twist_differs_only_off_the_neutral_component():
    d = build_datum("A1~1")
    rep = verify_identity("A1~1", _lam(d, 0, 1), (1,))
    assert rep.match and not rep.literal_twist_match
    rep = verify_identity("A1~1", _lam(d, 1, 1), (1,))
    assert rep.match and rep.literal_twist_match


def test_enumerations():
    d = build_datum("A1~1")
    assert sorted(w.coeffs for w in dominant_weights(d, 2)) == [(0, 2), (1, 1), (2, 0)]
    t = build_datum("A2~2")
    # dual Kac labels (2, 1): level 2 has Lambda_o, 2 Lambda_1
    assert sorted(w.coeffs for w in dominant_weights(t, 2)) == [(0, 2), (1, 0)]
    assert dominant_coweights(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert len(dominant_coweights(2, 3)) == 10


SWEEP_TYPES = ("A1~1", "A2~1", "A2~2")


@pytest.mark.parametrize("label", SWEEP_TYPES)
def test_sweep(label):
    d = build_datum(label)
    total = 0
    for level in (1, 2, 3):
        for lam in dominant_weights(d, level):
            for mu in dominant_coweights(d.g_rank, 3):
                rep = verify_identity(label, lam, mu)
                assert rep.match, (label, str(lam), mu)
                assert rep.full_orbit_match, (label, str(lam), mu)
                assert rep.lhs_dim == rep.rhs_dim
                total += 1
    assert total > 0
