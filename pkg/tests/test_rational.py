import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from slicedepth.errors import BadParity, EmptySequence, NotEven, OutOfRange, ZeroTailValue
from slicedepth.rational import (
    EvenCF,
    determinant,
    eval_cf,
    even_cf,
    pell_family,
    sqrt_cf_terms,
    two_bridge_representatives,
)


def convergent_value(coeffs):
    """Oracle: evaluate a continued fraction front-to-back with the h/k recurrence."""
    h, h_prev = 1, 0
    k, k_prev = 0, 1
    for a in coeffs:
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
    return Fraction(h, k)


@pytest.mark.parametrize("coeffs, expected", [
    ([4, 4], Fraction(17, 4)),
    ([4, 4, 4, 4], Fraction(305, 72)),
    ([4, 2, 4, 2], Fraction(89, 20)),
    ([2], Fraction(2)),
    ([4, -2], Fraction(7, 2)),
])
def test_eval_cf_examples(coeffs, expected):
    assert eval_cf(coeffs) == expected


def test_eval_cf_single_term_is_integer():
    for a in (-7, -2, 1, 5, 10**30):
        assert eval_cf([a]) == Fraction(a, 1)


def test_eval_cf_errors():
    with pytest.raises(EmptySequence):
        eval_cf([])
    with pytest.raises(ZeroTailValue):
        eval_cf([3, 0])
    # tail [1, -1] = 1 - 1 = 0
    with pytest.raises(ZeroTailValue):
        eval_cf([2, 1, -1])


@given(st.lists(st.integers(-50, 50).filter(bool), min_size=1, max_size=12))
def test_eval_cf_matches_recurrence_oracle(coeffs):
    try:
        value = eval_cf(coeffs)
    except ZeroTailValue:
        return
    assert value == convergent_value(coeffs)


@pytest.mark.parametrize("f, expected", [
    (Fraction(17, 4), (4, 4)),
    (Fraction(9, 2), (4, 2)),
    (Fraction(7, 2), (4, -2)),
    (Fraction(305, 72), (4, 4, 4, 4)),
    (Fraction(-17, 4), (-4, -4)),
])
def test_even_cf_examples(f, expected):
    cf = even_cf(f)
    assert cf.coefficients == expected
    assert convergent_value(expected) == f


def test_even_cf_errors():
    with pytest.raises(BadParity):
        even_cf(Fraction(8, 3))
    with pytest.raises(BadParity):
        even_cf(Fraction(7, 3))
    with pytest.raises(OutOfRange):
        even_cf(Fraction(3, 4))
    with pytest.raises(OutOfRange):
        even_cf(Fraction(1, 2))


@st.composite
def normal_form_fractions(draw, bound=10**6):
    p = draw(st.integers(3, bound).filter(lambda n: n % 2))
    q = draw(st.integers(1, (p - 1) // 2).map(lambda n: 2 * n))
    assume(math.gcd(p, q) == 1)
    sign = draw(st.sampled_from([1, -1]))
    return Fraction(sign * p, q)


@settings(max_examples=300, deadline=None)
@given(normal_form_fractions())
def test_even_cf_roundtrip(f):
    cf = even_cf(f)
    assert all(a != 0 and a % 2 == 0 for a in cf)
    assert len(cf) % 2 == 0
    assert convergent_value(cf.coefficients) == f


def test_even_cf_agrees_with_enumeration():
    # Every even-length sequence over {+-2, +-4, +-6} of length <= 4 whose value is in
    # normal form must be recovered exactly: the all-even expansion is unique.
    entries = [-6, -4, -2, 2, 4, 6]
    seen = {}
    for m in (2, 4):
        for seq in itertools.product(entries, repeat=m):
            value = convergent_value(seq)
            assert value not in seen, (seq, seen.get(value))
            seen[value] = seq
            assert even_cf(value).coefficients == seq


def test_even_cf_type_rejects_odd_entries():
    with pytest.raises(NotEven):
        EvenCF([4, 3])
    with pytest.raises(NotEven):
        EvenCF([0, 2])
    assert str(EvenCF([4, -2])) == "C(4,-2)"


@pytest.mark.parametrize("f, det", [
    (Fraction(17, 4), 17), (Fraction(9, 2), 9), (Fraction(7, 2), 7), (Fraction(-7, 2), 7),
])
def test_determinant(f, det):
    assert determinant(f) == det


def test_determinant_rejects_even_numerator():
    with pytest.raises(BadParity):
        determinant(Fraction(8, 3))


def _same_knot_residues(p, q):
    """Oracle: all q' in (0, p) with q' = +-q or q q' = +-1 (mod p), by brute force."""
    return {r for r in range(1, p) if (r - q) % p == 0 or (r + q) % p == 0
            or (r * q - 1) % p == 0 or (r * q + 1) % p == 0}


@pytest.mark.parametrize("p, q", [(7, 3), (17, 4), (9, 4), (49, 15), (89, 34), (3, 1)])
def test_representatives_match_brute_force(p, q):
    reps = two_bridge_representatives(Fraction(p, q))
    assert {r.denominator for r in reps} == {r for r in _same_knot_residues(p, q) if r % 2 == 0}
    assert all(r.numerator == p for r in reps)


def test_representatives_list_given_presentation_first():
    assert two_bridge_representatives(Fraction(7, 2))[0] == Fraction(7, 2)
    assert two_bridge_representatives(Fraction(7, 3)) == [Fraction(7, 4), Fraction(7, 2)]


def test_sqrt_cf_terms():
    assert list(itertools.islice(sqrt_cf_terms(5), 5)) == [2, 4, 4, 4, 4]
    assert list(itertools.islice(sqrt_cf_terms(6), 6)) == [2, 2, 4, 2, 4, 2]
    with pytest.raises(ValueError):
        next(sqrt_cf_terms(9))


def smallest_pell_solution(d):
    """Oracle: brute-force the fundamental solution of x^2 - d y^2 = 1."""
    y = 1
    while True:
        x = math.isqrt(d * y * y + 1)
        if x * x - d * y * y == 1:
            return x, y
        y += 1


@pytest.mark.parametrize("d", [5, 6])
def test_pell_first_record_is_fundamental_solution(d):
    rec = pell_family(d, 1)[0]
    assert (rec.convergent_x, rec.convergent_y) == smallest_pell_solution(d)
    assert rec.index == 1


def test_pell_d5_values():
    records = pell_family(5, 3)
    assert [r.shifted for r in records] == [Fraction(17, 4), Fraction(305, 72), Fraction(5473, 1292)]
    assert (records[0].convergent_x, records[0].convergent_y) == (9, 4)


def test_pell_d6_values():
    records = pell_family(6, 3)
    assert [r.shifted for r in records] == [Fraction(9, 2), Fraction(89, 20), Fraction(881, 198)]


@pytest.mark.parametrize("d, pattern", [(5, (4, 4)), (6, (4, 2))])
def test_pell_identities_and_even_expansions(d, pattern):
    records = pell_family(d, 10)
    assert [r.index for r in records] == list(range(1, 20, 2))
    for k, r in enumerate(records, start=1):
        x, y, p, q = r.convergent_x, r.convergent_y, r.shifted_p, r.shifted_q
        assert x * x - d * y * y == 1
        assert p * p - 4 * p * q - (d - 4) * q * q == 1
        assert Fraction(p, q) == Fraction(x, y) + 2
        assert math.gcd(p, q) == 1
        assert even_cf(r.shifted).coefficients == pattern * k


def test_pell_rejects_bad_arguments():
    with pytest.raises(ValueError):
        pell_family(7, 3)
    with pytest.raises(ValueError):
        pell_family(5, 0)
