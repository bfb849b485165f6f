"""Exact arithmetic in the ring of integers extended by a prime-order root of unity.

An element of Z[zeta], with zeta a primitive p-th root of unity and p prime,
is held as a length-p integer coefficient vector over the powers
1, zeta, ..., zeta^(p-1).  The single relation 1 + zeta + ... + zeta^(p-1) = 0
lets every vector be normalized so its last entry is zero, which makes the
representation unique: two elements are equal exactly when their normalized
vectors match.  Everything here is plain integer arithmetic; no floating
point enters this module.
"""

from __future__ import annotations

from operator import index as _as_int
from typing import Iterable

__all__ = [
    "CycInt",
    "is_prime",
    "require_prime",
    "zeta_pow",
    "symbolic_str",
]


def is_prime(n: int) -> bool:
    """Trial-division primality test; every p used here is tiny."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    p = _as_int(p)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return p


class CycInt:
    """An element of Z[zeta] in normalized coefficient form (last entry zero)."""

    __slots__ = ("_p", "_coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]) -> None:
        p = require_prime(p)
        c = [_as_int(x) for x in coeffs]
        if len(c) != p:
            raise ValueError(f"expected {p} coefficients, got {len(c)}")
        last = c[-1]
        if last:
            c = [x - last for x in c]
        self._p = p
        self._coeffs = tuple(c)

    @property
    def p(self) -> int:
        return self._p

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @classmethod
    def from_int(cls, p: int, n: int) -> CycInt:
        coeffs = [0] * require_prime(p)
        coeffs[0] = _as_int(n)
        return cls(p, coeffs)

    @classmethod
    def zero(cls, p: int) -> CycInt:
        return cls.from_int(p, 0)

    @classmethod
    def one(cls, p: int) -> CycInt:
        return cls.from_int(p, 1)

    def _coerce(self, other: object) -> CycInt | None:
        if isinstance(other, CycInt):
            if other._p != self._p:
                raise ValueError(
                    f"mismatched root orders: p={self._p} vs p={other._p}"
                )
            return other
        if isinstance(other, int):
            return CycInt.from_int(self._p, other)
        return None

    def __add__(self, other: int | CycInt) -> CycInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self._p, [a + b for a, b in zip(self._coeffs, o._coeffs)])

    __radd__ = __add__

    def __sub__(self, other: int | CycInt) -> CycInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self._p, [a - b for a, b in zip(self._coeffs, o._coeffs)])

    def __rsub__(self, other: int | CycInt) -> CycInt:
        return (-self) + other

    def __neg__(self) -> CycInt:
        return CycInt(self._p, [-a for a in self._coeffs])

    def __mul__(self, other: int | CycInt) -> CycInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self._p
        out = [0] * p
        for i, xi in enumerate(self._coeffs):
            if not xi:
                continue
            for j, yj in enumerate(o._coeffs):
                if yj:
                    out[(i + j) % p] += xi * yj
        return CycInt(p, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycInt):
            return self._p == other._p and self._coeffs == other._coeffs
        if isinstance(other, int):
            return self == CycInt.from_int(self._p, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._p, self._coeffs))

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def divide_exact_by_p(self) -> CycInt | None:
        """Quotient by p when this element lies in p*O, else None.

        In normalized form, membership in p*O is exactly coefficientwise
        divisibility by p; all entries congruent mod p forces them all
        congruent to the (zero) last entry.
        """
        p = self._p
        if any(c % p for c in self._coeffs):
            return None
        return CycInt(p, [c // p for c in self._coeffs])

    @property
    def is_multiple_of_p(self) -> bool:
        return not any(c % self._p for c in self._coeffs)

    def __str__(self) -> str:
        terms: list[str] = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                zk = "z" if k == 1 else f"z^{k}"
                body = zk if abs(c) == 1 else f"{abs(c)}*{zk}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CycInt(p={self._p}, coeffs={self._coeffs})"


def zeta_pow(p: int, k: int) -> CycInt:
    """zeta^k as a normalized element; the exponent is reduced mod p."""
    p = require_prime(p)
    coeffs = [0] * p
    coeffs[k % p] = 1
    return CycInt(p, coeffs)


def symbolic_str(x: CycInt) -> str:
    """Compact rendering used by the CLI.

    Plain integers print bare, single roots print as "z^k" (optionally
    signed), single-term multiples as "c*z^k", and anything else falls back
    to the full normalized coefficient list.
    """
    p = x.p
    for k in range(p):
        zk = zeta_pow(p, k)
        if x == zk:
            return "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if x == -zk:
            return "-1" if k == 0 else ("-z" if k == 1 else f"-z^{k}")
    nonzero = [(k, c) for k, c in enumerate(x.coeffs) if c]
    if not nonzero:
        return "0"
    if len(nonzero) == 1:
        k, c = nonzero[0]
        if k == 0:
            return str(c)
        return f"{c}*z" if k == 1 else f"{c}*z^{k}"
    return "(" + ",".join(str(c) for c in x.coeffs) + ")"
