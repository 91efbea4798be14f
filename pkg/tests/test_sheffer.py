import random
from fractions import Fraction
from math import factorial

import pytest

from logalg.classics import bernoulli_seq, hermite_seq, laguerre_sheffer_seq
from logalg.operators import (
    ArtinOp,
    bernoulli_j,
    forward_difference,
    monomial_op,
    shift_op,
)
from logalg.series import LogSeries, OrderTag, agrees, harmonic
from logalg.sheffer import (
    AppellRule,
    AssociatedRule,
    GradedSeq,
    HarmonicRule,
    ShefferRule,
    appell_from_constants,
)
from oracles import classical_bernoulli

F = Fraction
G, Z = OrderTag.GENERIC, OrderTag.ZERO


def named_sequences():
    return [
        GradedSeq(HarmonicRule()),
        bernoulli_seq(),
        hermite_seq(F(1, 2)),
        GradedSeq(AssociatedRule(forward_difference)),
        laguerre_sheffer_seq(0),
        laguerre_sheffer_seq(2),
    ]


def random_generic_series(rng, top_max=4, floor_min=-8):
    floor = rng.randint(floor_min, -1)
    top = rng.randint(floor + 1, top_max)
    coeffs = {top: F(1)}
    for d in range(floor, top):
        if rng.random() < 0.6:
            coeffs[d] = F(rng.randint(-6, 6), rng.randint(1, 6))
    return LogSeries(G, floor, coeffs)


# -- members -----------------------------------------------------------


def test_harmonic_member_is_basis():
    seq = GradedSeq(HarmonicRule())
    for a in (-3, 0, 2):
        assert seq.member(G, a, a - 4) == harmonic(G, a, a - 4)


def test_appell_identity_rule_is_harmonic():
    seq = GradedSeq(AppellRule(lambda cap: ArtinOp(cap, {0: F(1)})))
    for a in range(-3, 4):
        assert seq.member(G, a, a - 5) == harmonic(G, a, a - 5)


def test_members_are_monic_with_top_degree_a():
    for seq in named_sequences():
        for a in range(-3, 4):
            m = seq.member(G, a, a - 5)
            assert m.top_degree() == a
            assert abs(m.coeff(a)) == 1  # Laguerre route carries (-1)^a


def test_zero_order_members_vanish_below_zero():
    for seq in named_sequences():
        assert seq.member(Z, -2, -4).is_zero()


def test_associated_of_delta_is_lower_factorial():
    # oracle: (x)_n = x(x-1)...(x-n+1), classical binomial-type sequence
    seq = GradedSeq(AssociatedRule(forward_difference))
    expected = {0: {0: F(1)}, 1: {1: F(1)}, 2: {2: F(1), 1: F(-1)}}
    coeffs = [F(1)]
    for n in range(5):
        if n:
            # multiply by (x - (n-1))
            new = [F(0)] * (n + 1)
            for i, c in enumerate(coeffs):
                new[i + 1] += c
                new[i] -= (n - 1) * c
            coeffs = new
        got = seq.member(Z, n, 0)
        assert got.coeffs == {i: c for i, c in enumerate(coeffs) if c != 0}


def test_rejects_unnormalized_operators():
    bad_h = GradedSeq(AppellRule(lambda cap: ArtinOp(cap, {0: F(2)})))
    with pytest.raises(ValueError):
        bad_h.member(G, 1, -2)
    bad_f = GradedSeq(AssociatedRule(lambda cap: ArtinOp(cap, {1: F(-1)})))
    with pytest.raises(ValueError):
        bad_f.member(G, 1, -2)


def test_member_floor_above_degree_rejected():
    with pytest.raises(ValueError):
        bernoulli_seq().member(G, 1, 2)


def test_cache_deepening():
    seq = bernoulli_seq()
    shallow = seq.member(G, 0, -2)
    deep = seq.member(G, 0, -6)
    assert deep.floor == -6 and shallow.floor == -2
    assert agrees(shallow, deep)


# -- characterization checks -------------------------------------------


@pytest.mark.parametrize("seq", named_sequences())
def test_lowering_all_rules(seq):
    for a in range(-6, 7):
        assert seq.check_lowering(G, a, a - 6)


def test_lowering_harmonic_at_zero():
    assert GradedSeq(HarmonicRule()).check_lowering(G, 0, -3)


@pytest.mark.parametrize("seq", named_sequences())
def test_binomial_shift_all_rules(seq):
    for a in range(-4, 5):
        for z in (F(1), F(-1), F(1, 2)):
            assert seq.check_binomial_shift(G, a, z, a - 5)


def test_binomial_shift_z_zero_trivial():
    assert bernoulli_seq().check_binomial_shift(G, 3, 0, -4)


def test_biorthogonality_bernoulli():
    seq = bernoulli_seq()
    for a in range(-4, 5):
        for b in range(0, 7):
            assert seq.check_biorthogonality(a, b)


def test_biorthogonality_explicit_values():
    seq = bernoulli_seq()
    j = bernoulli_j(6)
    b2 = seq.member(G, 2, -2)
    assert (j * monomial_op(2, 6)).apply(b2).eval_functional() == F(2)
    b3 = seq.member(G, 3, -2)
    assert (j * monomial_op(1, 6)).apply(b3).eval_functional() == F(0)


# -- Appell formula ----------------------------------------------------


def test_appell_from_constants_matches_operator_route():
    numbers = {k: b for k, b in enumerate(classical_bernoulli(14))}
    seq = bernoulli_seq()
    for a in range(-2, 3):
        built = appell_from_constants(numbers, G, a, -8)
        assert agrees(built, seq.member(G, a, -8))


def test_appell_from_constants_harmonic_case():
    assert appell_from_constants({0: F(1)}, G, -2, -6) == harmonic(G, -2, -6)


def test_appell_from_constants_table_rows():
    numbers = {k: b for k, b in enumerate(classical_bernoulli(10))}
    row = appell_from_constants(numbers, G, -1, -7)
    assert row.coeffs == {-1: F(1), -2: F(1, 2), -3: F(1, 6), -5: F(-1, 30), -7: F(1, 42)}
    row2 = appell_from_constants(numbers, G, 2, -4)
    assert row2.coeffs == {2: F(1), 1: F(-1), 0: F(1, 6), -2: F(1, 360), -4: F(-1, 2520)}


# -- Taylor expansion --------------------------------------------------


def test_taylor_of_harmonic_in_bernoulli_basis():
    coeffs = bernoulli_seq().taylor_coeffs(harmonic(G, 2, -8), -1)
    assert coeffs == {2: F(1), 1: F(1), 0: F(1, 3), -1: F(1, 12)}


def test_taylor_of_member_is_delta():
    for seq in named_sequences():
        m = seq.member(G, 2, -4)
        coeffs = seq.taylor_coeffs(m, -4)
        assert coeffs == {2: m.coeff(2)}


def test_taylor_of_zero_series_is_empty():
    assert bernoulli_seq().taylor_coeffs(LogSeries(G, -4, {}), -2) == {}


def test_taylor_roundtrip_randomized():
    rng = random.Random(42)
    sequences = named_sequences()
    for i in range(30):
        p = random_generic_series(rng)
        seq = sequences[i % len(sequences)]
        coeffs = seq.taylor_coeffs(p, p.floor)
        rec = seq.reconstruct(coeffs, G, p.floor)
        assert agrees(rec, p)


# -- operator expansion ------------------------------------------------


def test_expand_d_in_harmonic_basis():
    d = GradedSeq(HarmonicRule()).expand_operator(monomial_op(1, 4), -3)
    assert d == {1: F(1)}


def test_expand_identity_in_bernoulli_basis():
    # d_a are the lam_0 coefficients of the Bernoulli rows over rf(a)
    d = bernoulli_seq().expand_operator(ArtinOp(4, {0: F(1)}), -2)
    assert d[0] == F(1) and d[1] == F(-1, 2) and d[2] == F(1, 12)


def test_expand_operator_reconstruction():
    rng = random.Random(5)
    for seq in named_sequences():
        cap = 5
        target = ArtinOp(cap, {k: F(rng.randint(-3, 3), rng.randint(1, 4)) for k in range(cap + 1)})
        if target.is_zero():
            continue
        d = seq.expand_operator(target, -4)
        for b in (-2, 0, 1):
            lam = harmonic(G, b, b - 4)
            want = target.apply(lam)
            got = LogSeries(G, want.floor, {})
            for a, da in d.items():
                got = got + seq.expansion_basis_op(a, cap + 6).apply(lam).scale(da)
            assert agrees(got.truncate(want.floor), want)


# -- generating functions ----------------------------------------------


def test_genfun_bernoulli_coefficient():
    # y^2 coefficient of (y/(e^y-1)) e^{xy} is (x^2 - x + 1/6)/2
    row = bernoulli_seq().genfun_coefficient(2)
    assert row.coeffs == {2: F(1, 2), 1: F(-1, 2), 0: F(1, 12)}


def test_genfun_harmonic_is_exponential():
    seq = GradedSeq(HarmonicRule())
    for k in range(5):
        row = seq.genfun_coefficient(k)
        assert row.coeffs == {k: F(1, factorial(k))}


def test_genfun_associated_delta():
    # exp(x log(1+y)): member(2)/2 = (x^2 - x)/2
    seq = GradedSeq(AssociatedRule(forward_difference))
    row = seq.genfun_coefficient(2)
    assert row.coeffs == {2: F(1, 2), 1: F(-1, 2)}


@pytest.mark.parametrize(
    "seq",
    [
        bernoulli_seq(),
        hermite_seq(F(1, 2)),
        GradedSeq(HarmonicRule()),
        GradedSeq(AssociatedRule(forward_difference)),
    ],
)
def test_genfun_check_through_y8(seq):
    assert seq.genfun_check_order_zero(8)


def test_genfun_detects_wrong_member():
    # a Sheffer rule whose h disagrees with the Bernoulli one
    seq = GradedSeq(ShefferRule(lambda cap: shift_op(1, cap), lambda cap: monomial_op(1, cap)))
    bern = bernoulli_seq()
    assert seq.member(Z, 2, 0) != bern.member(Z, 2, 0)
