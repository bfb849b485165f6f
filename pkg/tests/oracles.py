"""Independent oracles and random generators shared by the test modules.

Everything here deliberately avoids the library's normalized-coefficient
arithmetic paths: multiplication expands plain integer polynomials,
divisibility solves p*y = x by exact rational division over the reduced
power basis, and kernel entries are rebuilt from character-table values.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from perfiso import CycInt, SignedIsometry, char_table, generalized_character


def poly_mul_reduced(p: int, xs: list[int], ys: list[int]) -> tuple[int, ...]:
    """Multiply in Z[X]/(X^p - 1), then normalize with the all-ones relation."""
    raw = [0] * (2 * p)
    for i, a in enumerate(xs):
        for j, b in enumerate(ys):
            raw[i + j] += a * b
    folded = [raw[i] + raw[i + p] for i in range(p)]
    last = folded[-1]
    return tuple(c - last for c in folded)


def divisible_by_p_oracle(p: int, raw_coeffs: list[int]) -> bool:
    """Solve p*y = x for integer y over the basis 1, zeta, ..., zeta^(p-2).

    The raw coefficients are first rewritten in the reduced basis (the top
    power is eliminated through the all-ones relation), then each reduced
    coordinate is divided by p with exact rational arithmetic; x lies in
    p*O exactly when every quotient is an integer.
    """
    top = raw_coeffs[p - 1]
    reduced = [Fraction(c - top) for c in raw_coeffs[: p - 1]]
    return all((r / p).denominator == 1 for r in reduced)


def kernel_entry_oracle(iso: SignedIsometry, m: int, n: int) -> CycInt:
    """Kernel entry (m, n) rebuilt from character-table values and ring products."""
    p = iso.p
    table = char_table(p)
    acc = CycInt.zero(p)
    for k in range(p):
        acc = acc + iso.signs[k] * (table.entries[iso.image[k]][m] * table.entries[k][n])
    return acc


def random_cycint(rng: Random, p: int, bound: int = 0) -> CycInt:
    """Random element with raw coefficients in [-bound, bound] (default 3p)."""
    bound = bound or 3 * p
    return CycInt(p, [rng.randint(-bound, bound) for _ in range(p)])


def random_isometry(rng: Random, p: int) -> SignedIsometry:
    image = list(range(p))
    rng.shuffle(image)
    signs = [rng.choice((1, -1)) for _ in range(p)]
    return SignedIsometry(p, image, signs)


def random_generalized_character(rng: Random, p: int, bound: int = 3):
    return generalized_character(p, [rng.randint(-bound, bound) for _ in range(p)])
