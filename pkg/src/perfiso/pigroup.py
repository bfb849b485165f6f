"""The group of perfect self-isometries: generators, enumeration, structure.

Perfect isometries of the prime-order cyclic block form a group under
composition.  This module provides its three generator families

  * shifts        - all-positive maps k -> a + k   (character multiplication),
  * unit scalings - all-positive maps k -> u * k   (automorphism twists),
  * global negation,

exhaustive enumeration of the whole group from scratch, the affine
coordinates (eps, a, u) of each element, and computational checks of the
group structure (closure, the affine composition law, normality of the
shift family, centrality of negation).

Enumeration modes:

  * ``exhaustive`` scans all 2^p * p! signed candidates and assumes nothing
    about signs; feasible for p <= 7.
  * ``positive_then_negate`` scans the p! all-positive candidates and
    adjoins their negations (negating an isometry negates its kernel, which
    changes neither divisibility nor the zero pattern); feasible for p <= 11.

Both modes produce identical reports wherever both are feasible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .cyclotomic import require_prime
from .isometry import ALL_POSITIVE, MIXED, SignedIsometry

__all__ = [
    "EXHAUSTIVE",
    "POSITIVE_THEN_NEGATE",
    "MODES",
    "CHECK_KEYS",
    "NotPerfect",
    "AffineCoords",
    "PIGroupReport",
    "gen_linear",
    "gen_aut",
    "gen_negid",
    "recompose",
    "decompose",
    "iter_perfect",
    "enumerate_perfect",
    "verify_structure",
    "feasible_bound",
]

EXHAUSTIVE = "exhaustive"
POSITIVE_THEN_NEGATE = "positive_then_negate"
MODES = (EXHAUSTIVE, POSITIVE_THEN_NEGATE)

_MODE_MAX_P = {EXHAUSTIVE: 7, POSITIVE_THEN_NEGATE: 11}

CHECK_HOMOGENEOUS = "homogeneous_sign"
CHECK_AFFINE = "affine_completeness"
CHECK_SEMIDIRECT = "semidirect_law"
CHECK_NEGID = "negid_central"
CHECK_ORDER = "order_formula"
CHECK_KEYS = (
    CHECK_HOMOGENEOUS,
    CHECK_AFFINE,
    CHECK_SEMIDIRECT,
    CHECK_NEGID,
    CHECK_ORDER,
)


class NotPerfect(Exception):
    """The isometry is not of the affine perfect form."""


@dataclass(frozen=True, order=True)
class AffineCoords:
    """Coordinates (eps, a, u) of the isometry k -> eps * (a + u*k)."""

    eps: int
    a: int
    u: int


@dataclass
class PIGroupReport:
    """Enumeration outcome plus named check results.

    ``checks`` always carries the five keys in CHECK_KEYS; a value of None
    means the check was not evaluated by the producing operation (plain
    enumeration leaves the two structural checks to verify_structure).
    """

    p: int
    order: int
    elements: list[AffineCoords]
    checks: dict[str, bool | None]
    failures: list[str] = field(default_factory=list)

    def all_pass(self) -> bool:
        """True when no evaluated check failed."""
        return all(v is not False for v in self.checks.values())

    def to_json_dict(self) -> dict:
        out: dict = {
            "p": self.p,
            "order": self.order,
            "elements": [{"eps": c.eps, "a": c.a, "u": c.u} for c in self.elements],
            "checks": {key: self.checks[key] for key in CHECK_KEYS},
        }
        if self.failures:
            out["failures"] = list(self.failures)
        return out


def feasible_bound(mode: str) -> int:
    """Largest p accepted by iter_perfect for the given mode."""
    if mode not in _MODE_MAX_P:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return _MODE_MAX_P[mode]


def _require_feasible(p: int, mode: str) -> None:
    bound = feasible_bound(mode)
    if p > bound:
        raise ValueError(
            f"enumeration at p={p} is infeasible in mode {mode}; the bound is p <= {bound}"
        )


def gen_linear(p: int, a: int) -> SignedIsometry:
    """All-positive shift k -> (a + k) mod p (multiplication by character a)."""
    p = require_prime(p)
    if not 0 <= a < p:
        raise ValueError(f"shift index must lie in 0..{p - 1}, got {a}")
    return SignedIsometry(p, [(a + k) % p for k in range(p)], (1,) * p)


def gen_aut(p: int, u: int) -> SignedIsometry:
    """All-positive unit scaling k -> (u * k) mod p.

    This is the isometry induced by the automorphism g -> g^(u^-1); in
    index terms it inverts aut_twist_index(p, u, .).
    """
    p = require_prime(p)
    if u % p == 0:
        raise ValueError(f"u must be a unit mod {p}, got {u}")
    u %= p
    return SignedIsometry(p, [(u * k) % p for k in range(p)], (1,) * p)


def gen_negid(p: int) -> SignedIsometry:
    """Negation of the identity: identity permutation, all signs -1."""
    return -SignedIsometry.identity(p)


def recompose(p: int, coords: AffineCoords) -> SignedIsometry:
    """The signed isometry k -> eps * (a + u*k) for the given coordinates."""
    if coords.eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {coords.eps}")
    iso = gen_linear(p, coords.a).compose(gen_aut(p, coords.u))
    return iso if coords.eps == 1 else -iso


def decompose(iso: SignedIsometry) -> AffineCoords:
    """Unique affine coordinates of a perfect isometry.

    The sign profile fixes eps, the image of index 0 fixes a, and the step
    from index 0 to index 1 fixes u.  The candidate coordinates are then
    recomposed and compared against the input in full; any mismatch means
    the input was not a perfect isometry and raises NotPerfect.
    """
    profile = iso.sign_profile()
    if profile == MIXED:
        raise NotPerfect(f"mixed sign profile: {iso.as_literal()}")
    eps = 1 if profile == ALL_POSITIVE else -1
    p = iso.p
    a = iso.image[0]
    u = (iso.image[1] - iso.image[0]) % p
    coords = AffineCoords(eps, a, u)
    if recompose(p, coords) != iso:
        raise NotPerfect(f"not an affine map: {iso.as_literal()}")
    return coords


@lru_cache(maxsize=None)
def _mult_table(p: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    mt = tuple(tuple(i * m % p for i in range(p)) for m in range(p))
    mod2 = tuple(range(p)) * 2
    return mt, mod2


def _candidate_is_perfect(p: int, image: tuple[int, ...], signs: tuple[int, ...]) -> bool:
    """Early-exit perfectness test for a raw (image, signs) candidate.

    Equivalent to ``is_perfect(SignedIsometry(p, image, signs)).ok`` but
    stops at the first offending kernel entry, which is what makes full
    enumeration cheap.  For homogeneous signs the first kernel row and
    column are forced (sign * p at (0, 0), zero elsewhere: each is a
    geometric sum over a full set of roots of unity), so the scan starts at
    entry (1, 1); mixed-sign candidates are scanned in full from (0, 0).
    """
    mt, mod2 = _mult_table(p)
    homog = signs.count(signs[0]) == p
    start = 1 if homog else 0
    for m in range(start, p):
        mrow = mt[m]
        base = [mrow[i] for i in image]
        for n in range(start, p):
            krow = mt[n]
            counts = [0] * p
            for k in range(p):
                counts[mod2[base[k] + krow[k]]] += signs[k]
            last = counts[p - 1]
            nonzero = False
            for c in counts:
                d = c - last
                if d % p:
                    return False
                if d:
                    nonzero = True
            if nonzero and ((m == 0) != (n == 0)):
                return False
    return True


def iter_perfect(p: int, mode: str = POSITIVE_THEN_NEGATE) -> Iterator[SignedIsometry]:
    """Yield every perfect signed isometry, in a deterministic per-mode order.

    ``exhaustive`` walks permutations lexicographically and, within each,
    all sign patterns; ``positive_then_negate`` walks the all-positive
    candidates and yields each hit followed by its negation.
    """
    p = require_prime(p)
    _require_feasible(p, mode)
    if mode == EXHAUSTIVE:
        for image in itertools.permutations(range(p)):
            for signs in itertools.product((1, -1), repeat=p):
                if _candidate_is_perfect(p, image, signs):
                    yield SignedIsometry(p, image, signs)
    else:
        positive = (1,) * p
        for image in itertools.permutations(range(p)):
            if _candidate_is_perfect(p, image, positive):
                hit = SignedIsometry(p, image, positive)
                yield hit
                yield -hit


def _base_report(p: int, found: list[SignedIsometry], failures: list[str]) -> PIGroupReport:
    coords: list[AffineCoords] = []
    decomposable = True
    for iso in found:
        try:
            coords.append(decompose(iso))
        except NotPerfect:
            decomposable = False
            failures.append(f"non-affine perfect isometry: {iso.as_literal()}")

    homogeneous = True
    for iso in found:
        if iso.sign_profile() == MIXED:
            homogeneous = False
            failures.append(f"mixed-sign perfect isometry: {iso.as_literal()}")

    expected = {
        recompose(p, AffineCoords(eps, a, u))
        for eps in (-1, 1)
        for a in range(p)
        for u in range(1, p)
    }
    affine = decomposable and set(found) == expected
    if decomposable and not affine:
        missing = expected - set(found)
        extra = set(found) - expected
        for iso in sorted(missing, key=SignedIsometry.as_literal):
            failures.append(f"affine isometry not enumerated: {iso.as_literal()}")
        for iso in sorted(extra, key=SignedIsometry.as_literal):
            failures.append(f"enumerated isometry outside affine family: {iso.as_literal()}")

    checks: dict[str, bool | None] = {
        CHECK_HOMOGENEOUS: homogeneous,
        CHECK_AFFINE: affine,
        CHECK_SEMIDIRECT: None,
        CHECK_NEGID: None,
        CHECK_ORDER: len(found) == 2 * p * (p - 1),
    }
    return PIGroupReport(
        p=p,
        order=len(found),
        elements=sorted(coords),
        checks=checks,
        failures=failures,
    )


def enumerate_perfect(p: int, mode: str = POSITIVE_THEN_NEGATE) -> PIGroupReport:
    """Enumerate the whole group and report order, elements and basic checks."""
    found = list(iter_perfect(p, mode))
    return _base_report(p, found, [])


def _structural_checks(
    p: int, found: list[SignedIsometry], failures: list[str]
) -> tuple[bool, bool]:
    """Closure, affine composition law, conjugation relation, trivial
    intersection (folded into one semidirect verdict) plus centrality of
    negation.  Failures append a line naming the offending pair."""
    found_set = set(found)
    identity = SignedIsometry.identity(p)
    semidirect = True

    for iso in found:
        if iso.invert() not in found_set:
            semidirect = False
            failures.append(f"inverse escapes the set: {iso.as_literal()}")

    try:
        coord_of = {iso: decompose(iso) for iso in found}
    except NotPerfect:
        failures.append("composition law skipped: some element is non-affine")
        return False, False

    for lhs in found:
        cl = coord_of[lhs]
        for rhs in found:
            composed = lhs.compose(rhs)
            if composed not in found_set:
                semidirect = False
                failures.append(
                    f"composition escapes the set: {lhs.as_literal()} o {rhs.as_literal()}"
                )
                continue
            cr = coord_of[rhs]
            want = AffineCoords(
                cl.eps * cr.eps, (cl.a + cl.u * cr.a) % p, (cl.u * cr.u) % p
            )
            if coord_of[composed] != want:
                semidirect = False
                failures.append(
                    f"composition law fails: {lhs.as_literal()} o {rhs.as_literal()}"
                )

    for a in range(p):
        shift = gen_linear(p, a)
        for u in range(1, p):
            scale = gen_aut(p, u)
            conjugated = scale.compose(shift).compose(scale.invert())
            if conjugated != gen_linear(p, a * u % p):
                semidirect = False
                failures.append(f"conjugation relation fails at a={a}, u={u}")

    shifts = {gen_linear(p, a) for a in range(p)}
    scalings = {gen_aut(p, u) for u in range(1, p)}
    if shifts & scalings != {identity}:
        semidirect = False
        failures.append("shift and scaling families intersect beyond the identity")

    negid = gen_negid(p)
    negid_central = negid.compose(negid) == identity and negid != identity
    if not negid_central:
        failures.append("negation is not an involution")
    for iso in found:
        if negid.compose(iso) != iso.compose(negid):
            negid_central = False
            failures.append(f"negation fails to commute with {iso.as_literal()}")

    return semidirect, negid_central


def verify_structure(p: int, mode: str = POSITIVE_THEN_NEGATE) -> PIGroupReport:
    """Enumerate and additionally verify the group structure of the result."""
    p = require_prime(p)
    found = list(iter_perfect(p, mode))
    report = _base_report(p, found, [])
    semidirect, negid_central = _structural_checks(p, found, report.failures)
    report.checks[CHECK_SEMIDIRECT] = semidirect
    report.checks[CHECK_NEGID] = negid_central
    return report
