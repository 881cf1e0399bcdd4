"""Generator-pair specs: validation, enumeration, kernel and rank closed forms.

Every closed form asserted here is also cross-checked against the
enumeration oracles by the verify module; these tests pin concrete
values so a regression names the exact code that moved.
"""

import pytest

from z2z4.code import (
    AdditiveCode,
    Word,
    is_gray_linear_bruteforce,
    kernel_bruteforce,
    span_bruteforce,
)
from z2z4.cyclic import (
    CyclicSpec,
    cardinality,
    cyclic_spec,
    enumerate_cyclic_specs,
    gray_linear,
    kernel_dim_candidates,
    kernel_spec,
    linear_subcode_spec,
    materialize,
    maximal_linear_subcodes,
    order_two_spec,
    quaternary_linear,
    rank_candidates,
    rank_spec,
    raw_pair_count,
    spec_from_dict,
    spec_to_dict,
    three_generator_words,
    type_from_degrees,
)
from z2z4.errors import SpecError
from z2z4.gf2 import BIN_ONE, BIN_ZERO, BinPoly
from z2z4.z4 import Q_ONE, QuatPoly

X1 = BinPoly.parse("x + 1")
P3 = QuatPoly((3, 1, 2, 1))
Q3 = QuatPoly((3, 2, 3, 1))
XM1 = QuatPoly((3, 1))


def _mixed_3() -> CyclicSpec:
    return cyclic_spec(1, 3, X1, BIN_ONE, Q_ONE, QuatPoly((3, 1)),
                       QuatPoly((1, 1, 1)))


def test_validate_rejects_even_beta():
    with pytest.raises(SpecError, match="beta-odd"):
        cyclic_spec(1, 4, BIN_ONE, BIN_ZERO, Q_ONE, Q_ONE, Q_ONE)


def test_validate_rejects_wrong_factorization():
    with pytest.raises(SpecError, match="factorization"):
        cyclic_spec(1, 3, BIN_ONE, BIN_ZERO, Q_ONE, Q_ONE, Q_ONE)


def test_validate_rejects_bad_binary_divisor():
    with pytest.raises(SpecError, match="b-divides"):
        cyclic_spec(2, 3, BinPoly.parse("x^2 + x + 1"), BIN_ZERO,
                    Q_ONE, Q_ONE, QuatPoly.parse("x^3 - 1"))


def test_validate_rejects_wide_mixing_row():
    with pytest.raises(SpecError, match="ell-degree"):
        cyclic_spec(1, 3, BIN_ONE, BIN_ONE, Q_ONE, Q_ONE,
                    QuatPoly.parse("x^3 - 1"))


def test_validate_rejects_unclosed_pair():
    # b = x^2 - 1 with ell = 1 and h = x - 1 fails the shift-closure
    # divisibility conditions at alpha = 2, beta = 3
    with pytest.raises(SpecError, match="pair-closure"):
        cyclic_spec(2, 3, BinPoly.parse("x^2 + 1"), BIN_ONE,
                    Q_ONE, XM1, QuatPoly((1, 1, 1)))


def test_known_type():
    spec = _mixed_3()
    t = type_from_degrees(spec)
    assert (t.alpha, t.beta, t.gamma, t.delta, t.kappa) == (1, 3, 1, 2, 1)
    assert (t.kappa1, t.kappa2) == (0, 1)
    assert cardinality(spec) == 32


def test_materialize_counts():
    spec = _mixed_3()
    code = materialize(spec)
    assert code.size == cardinality(spec)
    assert code.is_cyclic()


def test_enumeration_counts_frozen():
    assert raw_pair_count(2, 7) == 189
    assert raw_pair_count(3, 7) == 405
    assert len(list(enumerate_cyclic_specs(1, 3))) == 24
    assert len(list(enumerate_cyclic_specs(2, 7))) == 117
    assert len(list(enumerate_cyclic_specs(3, 3))) == 96
    assert len(list(enumerate_cyclic_specs(4, 5))) == 69


def test_enumeration_type_filter():
    specs = list(enumerate_cyclic_specs(2, 7, type_filter=(2, 3)))
    assert len(specs) == 6
    kappas = sorted(type_from_degrees(s).kappa for s in specs)
    assert kappas == [1, 1, 2, 2, 2, 2]
    only_k1 = list(enumerate_cyclic_specs(2, 7, type_filter=(2, 3, 1)))
    assert len(only_k1) == 2


def test_enumeration_is_deterministic():
    a = [spec_to_dict(s) for s in enumerate_cyclic_specs(2, 5)]
    b = [spec_to_dict(s) for s in enumerate_cyclic_specs(2, 5)]
    assert a == b


def test_every_enumerated_spec_is_valid():
    for spec in enumerate_cyclic_specs(3, 5):
        code = materialize(spec)
        assert code.size == cardinality(spec)
        assert code.is_cyclic()


def test_kernel_closed_form_small():
    res = kernel_spec(_mixed_3())
    assert res.dimension == 3
    assert res.k_prime == QuatPoly((1, 1, 1))
    assert res.minimal_divisors == (QuatPoly((1, 1, 1)),)
    kernel = materialize(res.spec)
    assert kernel == kernel_bruteforce(materialize(_mixed_3()))


def test_kernel_of_linear_code_is_everything():
    spec = cyclic_spec(1, 7, BIN_ONE, BIN_ZERO, P3 * Q3, XM1, Q_ONE)
    assert gray_linear(spec)
    res = kernel_spec(spec)
    assert res.k_prime == Q_ONE
    t = type_from_degrees(spec)
    assert res.dimension == t.gamma + 2 * t.delta


def test_kernel_dim_candidates():
    t = type_from_degrees(_mixed_3())
    assert kernel_dim_candidates(t) == (3, 5)
    specs = list(enumerate_cyclic_specs(2, 7, type_filter=(2, 3)))
    assert kernel_dim_candidates(type_from_degrees(specs[0])) == (5, 6, 8)


def test_rank_closed_form_small():
    res = rank_spec(_mixed_3())
    assert res.rank == 6
    assert res.r == Q_ONE
    lifted = span_bruteforce(materialize(_mixed_3())).lifted
    assert materialize(res.spec) == lifted


def test_rank_candidates():
    specs = list(enumerate_cyclic_specs(2, 7, type_filter=(2, 3)))
    assert rank_candidates(type_from_degrees(specs[0])) == (8, 9, 10, 11)
    t = type_from_degrees(_mixed_3())
    assert rank_candidates(t) == (5, 6)


def test_linearity_closed_form_matches_bruteforce():
    for spec in enumerate_cyclic_specs(1, 3):
        closed = gray_linear(spec)
        brute = is_gray_linear_bruteforce(materialize(spec))
        assert closed == brute, str(spec)


def test_quaternary_linearity_criterion():
    # linear exactly when gcd of f mod 2 with the root-sumset divisor of g is 1
    assert quaternary_linear(XM1, Q3, 7)          # f = x - 1, h = p3
    assert not quaternary_linear(XM1 * P3, Q3, 7)  # p3 roots meet the sumset
    assert not quaternary_linear(XM1 * Q3, P3, 7)
    assert quaternary_linear(P3 * Q3, Q_ONE, 7)   # g = 1 is always linear


def test_order_two_subcode_spec():
    spec = _mixed_3()
    sub = order_two_spec(spec)
    assert materialize(sub) == materialize(spec).order_two_subcode()


def test_three_generator_presentation():
    spec = _mixed_3()
    w1, w2, w3 = three_generator_words(spec)
    gens = []
    w = w1
    for _ in range(spec.alpha):
        gens.append(w)
        w = w.shift()
    for start in (w2, w3):
        w = start
        for _ in range(spec.beta):
            gens.append(w)
            w = w.shift()
    assert AdditiveCode(spec.alpha, spec.beta, gens) == materialize(spec)


def test_maximal_linear_subcodes():
    spec = cyclic_spec(1, 7, BIN_ONE, BIN_ZERO, XM1, Q_ONE, P3 * Q3)
    subs = maximal_linear_subcodes(spec)
    # the divisor moved from g to h identifies each subcode
    assert {s.h for s in subs} == {P3, Q3}
    for sub in subs:
        assert gray_linear(sub)
        assert materialize(sub).is_subcode_of(materialize(spec))


def test_linear_subcode_spec_moves_divisor():
    spec = cyclic_spec(1, 7, BIN_ONE, BIN_ZERO, XM1, Q_ONE, P3 * Q3)
    sub = linear_subcode_spec(spec, P3)
    assert sub.f == spec.f
    assert sub.h == P3
    assert sub.g == Q3
    assert gray_linear(sub)
    with pytest.raises(ValueError):
        linear_subcode_spec(spec, QuatPoly((1, 1)))  # x + 1 does not divide g


def test_spec_dict_round_trip():
    for spec in enumerate_cyclic_specs(2, 3):
        assert spec_from_dict(spec_to_dict(spec)) == spec
    d = {"alpha": 1, "beta": 3, "b": "x+1", "ell": "1", "f": "1",
         "h": "3+x", "g": [1, 1, 1]}
    assert spec_from_dict(d) == _mixed_3()
    with pytest.raises(ValueError, match="missing field"):
        spec_from_dict({"alpha": 1})
