"""Signed isometries of the character lattice and their perfectness checks.

Every isometry of the lattice spanned by the irreducible characters is a
signed bijection: index k goes to sign[k] times the character image[k].
Each such map I owns an exact p x p kernel, entry (m, n) being the sum over
k of sign[k] * zeta^(image[k]*m + k*n).  The kernel drives two linear
transforms (one per coordinate) and the two perfectness criteria:

  * integrality  - every kernel entry divisible by p (the common centralizer
    order in an abelian group of order p);
  * separation   - nonzero entries never pair the identity with a
    non-identity element.

``is_perfect`` tests the kernel entries directly; ``is_perfect_via_spaces``
re-derives the same verdict from the behaviour of the two transforms on the
indicator basis, giving an independent cross-check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .characters import ClassFunction, character, indicator
from .cyclotomic import CycInt, require_prime

__all__ = [
    "PERFECT",
    "FAILS_INTEGRALITY",
    "FAILS_SEPARATION",
    "ALL_POSITIVE",
    "ALL_NEGATIVE",
    "MIXED",
    "NonIntegralTransform",
    "SignedIsometry",
    "KernelTable",
    "Verdict",
    "kernel_table",
    "forward_transform",
    "forward_transform_raw",
    "adjoint_transform",
    "adjoint_transform_raw",
    "check_integrality",
    "check_separation",
    "is_perfect",
    "is_perfect_via_spaces",
]

PERFECT = "perfect"
FAILS_INTEGRALITY = "fails_integrality"
FAILS_SEPARATION = "fails_separation"

ALL_POSITIVE = "all_positive"
ALL_NEGATIVE = "all_negative"
MIXED = "mixed"

_LITERAL_TOKEN = re.compile(r"[+-]\d+")


class NonIntegralTransform(ArithmeticError):
    """A transform value failed the required division by p."""

    def __init__(self, point: int) -> None:
        super().__init__(f"transform value at element index {point} is not divisible by p")
        self.point = point


class SignedIsometry:
    """A signed bijection on character indices 0..p-1."""

    __slots__ = ("_p", "_image", "_signs")

    def __init__(self, p: int, image: Iterable[int], signs: Iterable[int]) -> None:
        p = require_prime(p)
        image_t = tuple(int(i) for i in image)
        signs_t = tuple(int(s) for s in signs)
        if len(image_t) != p or sorted(image_t) != list(range(p)):
            raise ValueError(f"image must be a permutation of 0..{p - 1}, got {image_t}")
        if len(signs_t) != p or any(s not in (1, -1) for s in signs_t):
            raise ValueError(f"signs must be +1/-1 entries of length {p}, got {signs_t}")
        self._p = p
        self._image = image_t
        self._signs = signs_t

    @property
    def p(self) -> int:
        return self._p

    @property
    def image(self) -> tuple[int, ...]:
        return self._image

    @property
    def signs(self) -> tuple[int, ...]:
        return self._signs

    @classmethod
    def identity(cls, p: int) -> SignedIsometry:
        return cls(p, range(p), (1,) * p)

    @classmethod
    def from_literal(cls, p: int, text: str) -> SignedIsometry:
        """Parse a literal like "+2,+0,+1".

        Position k carries the signed image of index k; signs are mandatory
        and whitespace is ignored.
        """
        p = require_prime(p)
        compact = "".join(str(text).split())
        tokens = compact.split(",") if compact else []
        if len(tokens) != p:
            raise ValueError(f"literal has {len(tokens)} entries, expected {p}")
        image: list[int] = []
        signs: list[int] = []
        for tok in tokens:
            if not _LITERAL_TOKEN.fullmatch(tok):
                raise ValueError(f"bad literal entry {tok!r}; expected a signed index like +2")
            idx = int(tok[1:])
            if idx >= p:
                raise ValueError(f"index {idx} out of range for p={p}")
            signs.append(1 if tok[0] == "+" else -1)
            image.append(idx)
        return cls(p, image, signs)

    def as_literal(self) -> str:
        return ",".join(
            f"{'+' if s == 1 else '-'}{i}" for i, s in zip(self._image, self._signs)
        )

    def image_character(self, k: int) -> ClassFunction:
        """The image of character k: sign[k] times character image[k]."""
        return self._signs[k] * character(self._p, self._image[k])

    def compose(self, other: SignedIsometry) -> SignedIsometry:
        """self after other: index k goes through other first, then self."""
        if self._p != other._p:
            raise ValueError(f"mismatched moduli: p={self._p} vs p={other._p}")
        image = tuple(self._image[i] for i in other._image)
        signs = tuple(
            other._signs[k] * self._signs[other._image[k]] for k in range(self._p)
        )
        return SignedIsometry(self._p, image, signs)

    def invert(self) -> SignedIsometry:
        image = [0] * self._p
        signs = [1] * self._p
        for k, i in enumerate(self._image):
            image[i] = k
            signs[i] = self._signs[k]
        return SignedIsometry(self._p, image, signs)

    def __neg__(self) -> SignedIsometry:
        return SignedIsometry(self._p, self._image, tuple(-s for s in self._signs))

    def sign_profile(self) -> str:
        """One of ALL_POSITIVE, ALL_NEGATIVE, MIXED."""
        if all(s == 1 for s in self._signs):
            return ALL_POSITIVE
        if all(s == -1 for s in self._signs):
            return ALL_NEGATIVE
        return MIXED

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedIsometry):
            return NotImplemented
        return (
            self._p == other._p
            and self._image == other._image
            and self._signs == other._signs
        )

    def __hash__(self) -> int:
        return hash((self._p, self._image, self._signs))

    def __repr__(self) -> str:
        return f"SignedIsometry(p={self._p}, literal={self.as_literal()!r})"


@dataclass(frozen=True)
class KernelTable:
    """Exact p x p kernel; entry [m][n] pairs element m (image side) with n (source side)."""

    p: int
    entries: tuple[tuple[CycInt, ...], ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a perfectness check; witness is a kernel-entry index on failure."""

    status: str
    witness: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.status == PERFECT


def kernel_table(iso: SignedIsometry) -> KernelTable:
    """Build the kernel attached to a signed isometry.

    Entry (m, n) accumulates sign[k] at the power image[k]*m + k*n (mod p)
    over all source indices k.  Entries are signed sums of p roots of unity,
    so normalized coefficients stay within 2p in magnitude; the assertion
    pins that exactness bound.
    """
    p = iso.p
    image, signs = iso.image, iso.signs
    rows = []
    for m in range(p):
        base = [image[k] * m % p for k in range(p)]
        row = []
        for n in range(p):
            counts = [0] * p
            for k in range(p):
                counts[(base[k] + k * n) % p] += signs[k]
            entry = CycInt(p, counts)
            assert all(abs(c) <= 2 * p for c in entry.coeffs)
            row.append(entry)
        rows.append(tuple(row))
    return KernelTable(p, tuple(rows))


def _require_compatible(kt: KernelTable, f: ClassFunction) -> None:
    if kt.p != f.p:
        raise ValueError(f"mismatched moduli: p={kt.p} vs p={f.p}")


def forward_transform_raw(
    kt: KernelTable, beta: ClassFunction
) -> tuple[tuple[CycInt, ...], tuple[bool, ...]]:
    """Un-divided forward sums plus per-entry divisibility flags.

    Output index m carries the sum over n of entry (m, -n) times beta(g^n);
    the exact transform divides each sum by p.
    """
    _require_compatible(kt, beta)
    p = kt.p
    sums = []
    flags = []
    for m in range(p):
        row = kt.entries[m]
        acc = CycInt.zero(p)
        for n in range(p):
            acc = acc + row[(p - n) % p] * beta.values[n]
        sums.append(acc)
        flags.append(acc.is_multiple_of_p)
    return tuple(sums), tuple(flags)


def forward_transform(kt: KernelTable, beta: ClassFunction) -> ClassFunction:
    """Apply the kernel to a source-side class function, exactly.

    Raises NonIntegralTransform at the first output index whose sum is not
    divisible by p.
    """
    sums, flags = forward_transform_raw(kt, beta)
    values = []
    for m, (s, ok) in enumerate(zip(sums, flags)):
        if not ok:
            raise NonIntegralTransform(m)
        values.append(s.divide_exact_by_p())
    return ClassFunction(kt.p, tuple(values))


def adjoint_transform_raw(
    kt: KernelTable, alpha: ClassFunction
) -> tuple[tuple[CycInt, ...], tuple[bool, ...]]:
    """Mirror of forward_transform_raw with the kernel coordinates swapped."""
    _require_compatible(kt, alpha)
    p = kt.p
    sums = []
    flags = []
    for n in range(p):
        acc = CycInt.zero(p)
        for m in range(p):
            acc = acc + kt.entries[(p - m) % p][n] * alpha.values[m]
        sums.append(acc)
        flags.append(acc.is_multiple_of_p)
    return tuple(sums), tuple(flags)


def adjoint_transform(kt: KernelTable, alpha: ClassFunction) -> ClassFunction:
    """Apply the kernel to an image-side class function, exactly."""
    sums, flags = adjoint_transform_raw(kt, alpha)
    values = []
    for n, (s, ok) in enumerate(zip(sums, flags)):
        if not ok:
            raise NonIntegralTransform(n)
        values.append(s.divide_exact_by_p())
    return ClassFunction(kt.p, tuple(values))


def check_integrality(kt: KernelTable) -> tuple[int, int] | None:
    """First kernel entry (row-major) not divisible by p, or None if all pass."""
    for m in range(kt.p):
        for n in range(kt.p):
            if not kt.entries[m][n].is_multiple_of_p:
                return (m, n)
    return None


def check_separation(kt: KernelTable) -> tuple[int, int] | None:
    """First nonzero entry (row-major) pairing identity with non-identity, or None."""
    for m in range(kt.p):
        for n in range(kt.p):
            if kt.entries[m][n] and ((m == 0) != (n == 0)):
                return (m, n)
    return None


def is_perfect(iso: SignedIsometry) -> Verdict:
    """Perfectness of the isometry's kernel; integrality is checked first."""
    kt = kernel_table(iso)
    witness = check_integrality(kt)
    if witness is not None:
        return Verdict(FAILS_INTEGRALITY, witness)
    witness = check_separation(kt)
    if witness is not None:
        return Verdict(FAILS_SEPARATION, witness)
    return Verdict(PERFECT)


def is_perfect_via_spaces(iso: SignedIsometry) -> Verdict:
    """Perfectness via the transforms' behaviour on the indicator basis.

    Integral-valued class functions are integer combinations of indicators,
    so both transforms preserve integrality exactly when every indicator
    image has all sums divisible by p.  The only class functions supported
    on elements of order prime to p are multiples of the identity indicator,
    so separation holds exactly when both transforms keep that indicator
    supported at the identity.  Witnesses are reported as kernel-entry
    indices; the scan order differs from is_perfect, so a failing witness
    may name a different offending entry.
    """
    kt = kernel_table(iso)
    p = kt.p
    for j in range(p):
        delta = indicator(p, j)
        _, flags = forward_transform_raw(kt, delta)
        for m, ok in enumerate(flags):
            if not ok:
                return Verdict(FAILS_INTEGRALITY, (m, (p - j) % p))
        _, flags = adjoint_transform_raw(kt, delta)
        for n, ok in enumerate(flags):
            if not ok:
                return Verdict(FAILS_INTEGRALITY, ((p - j) % p, n))
    delta = indicator(p, 0)
    sums, _ = forward_transform_raw(kt, delta)
    for m in range(1, p):
        if sums[m]:
            return Verdict(FAILS_SEPARATION, (m, 0))
    sums, _ = adjoint_transform_raw(kt, delta)
    for n in range(1, p):
        if sums[n]:
            return Verdict(FAILS_SEPARATION, (0, n))
    return Verdict(PERFECT)
