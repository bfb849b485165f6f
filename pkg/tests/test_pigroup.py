"""Tests for generators, enumeration, affine coordinates and structure checks."""

import itertools
from random import Random

import pytest

from perfiso import (
    AffineCoords,
    CHECK_KEYS,
    EXHAUSTIVE,
    NotPerfect,
    PERFECT,
    POSITIVE_THEN_NEGATE,
    SignedIsometry,
    decompose,
    enumerate_perfect,
    feasible_bound,
    gen_aut,
    gen_linear,
    gen_negid,
    is_perfect,
    iter_perfect,
    recompose,
    verify_structure,
)
from perfiso.pigroup import _candidate_is_perfect

SEED = 20260809


# ---------------------------------------------------------------------------
# generators


def test_gen_linear_examples():
    assert gen_linear(5, 0) == SignedIsometry.identity(5)
    assert gen_linear(5, 2).as_literal() == "+2,+3,+4,+0,+1"
    with pytest.raises(ValueError):
        gen_linear(5, 5)
    with pytest.raises(ValueError):
        gen_linear(5, -1)


@pytest.mark.parametrize("p", (3, 5, 7))
def test_gen_linear_is_injective_homomorphism(p):
    seen = set()
    for a in range(p):
        seen.add(gen_linear(p, a))
        for a2 in range(p):
            assert gen_linear(p, a).compose(gen_linear(p, a2)) == gen_linear(
                p, (a + a2) % p
            )
    assert len(seen) == p


def test_gen_aut_examples():
    assert gen_aut(5, 1) == SignedIsometry.identity(5)
    assert gen_aut(5, 2).as_literal() == "+0,+2,+4,+1,+3"
    with pytest.raises(ValueError):
        gen_aut(5, 0)
    with pytest.raises(ValueError):
        gen_aut(5, 10)


@pytest.mark.parametrize("p", (3, 5, 7))
def test_gen_aut_is_injective_homomorphism(p):
    seen = set()
    for u in range(1, p):
        seen.add(gen_aut(p, u))
        for u2 in range(1, p):
            assert gen_aut(p, u).compose(gen_aut(p, u2)) == gen_aut(p, (u * u2) % p)
    assert len(seen) == p - 1


def test_gen_negid():
    p = 5
    neg = gen_negid(p)
    assert neg.compose(neg) == SignedIsometry.identity(p)
    assert is_perfect(neg).status == PERFECT
    assert neg.sign_profile() == "all_negative"


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_generators_are_perfect(p):
    for a in range(p):
        assert is_perfect(gen_linear(p, a)).status == PERFECT
    for u in range(1, p):
        assert is_perfect(gen_aut(p, u)).status == PERFECT


# ---------------------------------------------------------------------------
# fast candidate checker agrees with the kernel checker


@pytest.mark.parametrize("p", (2, 3))
def test_fast_checker_matches_is_perfect_exhaustively(p):
    for image in itertools.permutations(range(p)):
        for signs in itertools.product((1, -1), repeat=p):
            fast = _candidate_is_perfect(p, image, signs)
            full = is_perfect(SignedIsometry(p, image, signs)).status == PERFECT
            assert fast == full


@pytest.mark.parametrize("p", (5, 7))
def test_fast_checker_matches_is_perfect_random(p):
    rng = Random(SEED + p)
    for _ in range(300):
        image = list(range(p))
        rng.shuffle(image)
        signs = tuple(rng.choice((1, -1)) for _ in range(p))
        fast = _candidate_is_perfect(p, tuple(image), signs)
        full = is_perfect(SignedIsometry(p, image, signs)).status == PERFECT
        assert fast == full


@pytest.mark.parametrize("p", (5, 7))
def test_fast_checker_matches_on_homogeneous_candidates(p):
    # the banded scan used for homogeneous signs is the enumeration hot path
    rng = Random(SEED + 7 * p)
    candidates = []
    for _ in range(200):
        image = list(range(p))
        rng.shuffle(image)
        candidates.append(tuple(image))
    for eps in (1, -1):
        for a in range(p):
            for u in range(1, p):
                candidates.append(recompose(p, AffineCoords(eps, a, u)).image)
    for image in candidates:
        for signs in ((1,) * p, (-1,) * p):
            fast = _candidate_is_perfect(p, image, signs)
            full = is_perfect(SignedIsometry(p, image, signs)).status == PERFECT
            assert fast == full


# ---------------------------------------------------------------------------
# enumeration


@pytest.mark.parametrize(
    "p,expected_order", [(2, 4), (3, 12), (5, 40)]
)
@pytest.mark.parametrize("mode", (EXHAUSTIVE, POSITIVE_THEN_NEGATE))
def test_enumeration_orders(p, expected_order, mode):
    report = enumerate_perfect(p, mode)
    assert report.order == expected_order
    assert report.checks["order_formula"] is True
    assert report.checks["homogeneous_sign"] is True
    assert report.checks["affine_completeness"] is True
    assert report.checks["semidirect_law"] is None
    assert report.checks["negid_central"] is None
    assert report.elements == sorted(report.elements)
    assert not report.failures


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_modes_agree(p):
    a = enumerate_perfect(p, EXHAUSTIVE)
    b = enumerate_perfect(p, POSITIVE_THEN_NEGATE)
    assert a.elements == b.elements
    assert a.order == b.order
    assert a.checks == b.checks
    if p <= 5:
        assert set(iter_perfect(p, EXHAUSTIVE)) == set(
            iter_perfect(p, POSITIVE_THEN_NEGATE)
        )


def test_feasibility_bounds():
    assert feasible_bound(EXHAUSTIVE) == 7
    assert feasible_bound(POSITIVE_THEN_NEGATE) == 11
    with pytest.raises(ValueError):
        list(iter_perfect(11, EXHAUSTIVE))
    with pytest.raises(ValueError):
        list(iter_perfect(13, POSITIVE_THEN_NEGATE))
    with pytest.raises(ValueError):
        enumerate_perfect(13, EXHAUSTIVE)
    with pytest.raises(ValueError):
        feasible_bound("bogus")


def test_iter_perfect_rejects_non_prime():
    with pytest.raises(ValueError):
        list(iter_perfect(6, EXHAUSTIVE))


# ---------------------------------------------------------------------------
# affine coordinates


def test_decompose_examples():
    assert decompose(SignedIsometry.identity(5)) == AffineCoords(1, 0, 1)
    assert decompose(-SignedIsometry.identity(5)) == AffineCoords(-1, 0, 1)
    iso = SignedIsometry.from_literal(5, "+1,+3,+0,+2,+4")
    assert decompose(iso) == AffineCoords(1, 1, 2)


def test_decompose_rejects_non_affine_and_mixed():
    with pytest.raises(NotPerfect):
        decompose(SignedIsometry.from_literal(5, "+0,+2,+1,+3,+4"))
    with pytest.raises(NotPerfect):
        decompose(SignedIsometry(3, (0, 1, 2), (1, -1, 1)))


def test_recompose_validation():
    with pytest.raises(ValueError):
        recompose(5, AffineCoords(0, 0, 1))
    with pytest.raises(ValueError):
        recompose(5, AffineCoords(1, 0, 0))
    with pytest.raises(ValueError):
        recompose(5, AffineCoords(1, 5, 1))


@pytest.mark.parametrize("p", (2, 3, 5))
def test_decompose_recompose_roundtrip(p):
    for iso in iter_perfect(p, EXHAUSTIVE):
        assert recompose(p, decompose(iso)) == iso
    for eps in (-1, 1):
        for a in range(p):
            for u in range(1, p):
                coords = AffineCoords(eps, a, u)
                assert decompose(recompose(p, coords)) == coords


def test_recomposition_matches_generator_composition():
    p = 5
    for a in range(p):
        for u in range(1, p):
            iso = recompose(p, AffineCoords(1, a, u))
            assert iso == gen_linear(p, a).compose(gen_aut(p, u))
            for k in range(p):
                assert iso.image[k] == (a + u * k) % p


# ---------------------------------------------------------------------------
# structure verification


@pytest.mark.parametrize("p", (2, 3, 5))
def test_verify_structure_all_checks_pass(p):
    report = verify_structure(p)
    assert report.order == 2 * p * (p - 1)
    assert all(report.checks[key] is True for key in CHECK_KEYS)
    assert report.all_pass()
    assert not report.failures


def test_affine_composition_law_example():
    p = 5
    lhs = recompose(p, AffineCoords(1, 1, 2))
    rhs = recompose(p, AffineCoords(1, 3, 4))
    composed = decompose(lhs.compose(rhs))
    assert composed == AffineCoords(1, (1 + 2 * 3) % p, (2 * 4) % p)
    assert composed == AffineCoords(1, 2, 3)


def test_conjugation_relation_on_generators():
    for p in (3, 5, 7):
        for a in range(p):
            for u in range(1, p):
                scale = gen_aut(p, u)
                conjugated = scale.compose(gen_linear(p, a)).compose(scale.invert())
                assert conjugated == gen_linear(p, (a * u) % p)


def test_report_json_dict_shape():
    report = enumerate_perfect(3, EXHAUSTIVE)
    payload = report.to_json_dict()
    assert set(payload) == {"p", "order", "elements", "checks"}
    assert tuple(payload["checks"]) == CHECK_KEYS
    assert payload["elements"][0] == {"eps": -1, "a": 0, "u": 1}
    assert payload["order"] == 12
