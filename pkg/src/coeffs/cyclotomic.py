"""
Coefficients in Z[1/r][q, q^-1][zeta] / (zeta^r - 1).

This is the group algebra of Z/r over A[1/r]: exponents of zeta are reduced
mod r and nothing else. The isomorphism with the idempotent presentation
needs zeta to be a primitive root of unity; cyc_primitive() projects onto
that component (reduction mod the r-th cyclotomic polynomial) and is applied
only when such images are compared.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping

import sympy

from src.coeffs.laurent import Coefficient, LaurentScalar, ZERO
from src.errors import CoefficientError, ParameterMismatchError


def _denominator_ok(d: int, r: int) -> bool:
    while d > 1:
        g = gcd(d, r)
        if g == 1:
            return False
        d //= g
    return True


class CycScalar:
    """sum_k comps[k] * zeta^k for 0 <= k < r."""

    __slots__ = ("r", "_comps")

    def __init__(self, r: int, comps: Mapping[int, "LaurentScalar | Coefficient"] | None = None):
        if r < 1:
            raise CoefficientError(f"r must be positive, got {r}")
        self.r = r
        acc: dict[int, LaurentScalar] = {}
        for k, value in (comps or {}).items():
            k %= r
            acc[k] = acc.get(k, ZERO) + LaurentScalar.coerce(value)
        self._comps = {k: c for k, c in acc.items() if c}
        for c in self._comps.values():
            for coeff in c.terms.values():
                if isinstance(coeff, Fraction) and not _denominator_ok(coeff.denominator, r):
                    raise CoefficientError(
                        f"denominator {coeff.denominator} is not a power of r={r}"
                    )

    @classmethod
    def one(cls, r: int) -> "CycScalar":
        return cls(r, {0: 1})

    @classmethod
    def zeta(cls, r: int, k: int = 1) -> "CycScalar":
        return cls(r, {k: 1})

    @classmethod
    def from_laurent(cls, r: int, a: "LaurentScalar | Coefficient") -> "CycScalar":
        return cls(r, {0: a})

    @property
    def comps(self) -> tuple[LaurentScalar, ...]:
        return tuple(self._comps.get(k, ZERO) for k in range(self.r))

    def component(self, k: int) -> LaurentScalar:
        return self._comps.get(k % self.r, ZERO)

    def _coerce(self, other) -> "CycScalar | None":
        if isinstance(other, CycScalar):
            if other.r != self.r:
                raise ParameterMismatchError(f"zeta orders differ: {self.r} vs {other.r}")
            return other
        if isinstance(other, (LaurentScalar, int, Fraction)):
            return CycScalar.from_laurent(self.r, other)
        return None

    def __bool__(self) -> bool:
        return bool(self._comps)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycScalar) and other.r != self.r:
            return False
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._comps == other._comps

    def __hash__(self) -> int:
        return hash((self.r, frozenset(self._comps.items())))

    def __neg__(self) -> "CycScalar":
        return CycScalar(self.r, {k: -c for k, c in self._comps.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._comps)
        for k, c in other._comps.items():
            out[k] = out.get(k, ZERO) + c
        return CycScalar(self.r, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (LaurentScalar, int, Fraction)):
            return CycScalar(self.r, {k: c * other for k, c in self._comps.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, LaurentScalar] = {}
        for k1, c1 in self._comps.items():
            for k2, c2 in other._comps.items():
                k = (k1 + k2) % self.r
                out[k] = out.get(k, ZERO) + c1 * c2
        return CycScalar(self.r, out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._comps:
            return "0"
        parts = []
        for k in sorted(self._comps):
            c = self._comps[k]
            if k == 0:
                parts.append(str(c))
                continue
            mono = "z" if k == 1 else f"z^{k}"
            if c == 1:
                parts.append(mono)
            elif len(c.terms) == 1:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(f"({c})*{mono}")
        return "(" + " + ".join(parts) + ")"

    def __repr__(self) -> str:
        return f"CycScalar(r={self.r}, {str(self)!r})"


def cyc_reduce(c: CycScalar) -> CycScalar:
    """Canonical form: zeta exponents in [0, r), fractions reduced, zeros pruned."""
    return CycScalar(c.r, dict(enumerate(c.comps)))


@lru_cache(maxsize=None)
def cyclotomic_coefficients(r: int) -> tuple[int, ...]:
    """Coefficients of the r-th cyclotomic polynomial, constant term first."""
    z = sympy.Symbol("z")
    poly = sympy.Poly(sympy.cyclotomic_poly(r, z), z)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def cyc_primitive(c: CycScalar) -> CycScalar:
    """Reduce modulo the r-th cyclotomic polynomial (zeta a primitive root)."""
    coeffs = cyclotomic_coefficients(c.r)
    degree = len(coeffs) - 1
    comps = list(c.comps)
    for k in range(c.r - 1, degree - 1, -1):
        lead = comps[k]
        if not lead:
            continue
        for j, pj in enumerate(coeffs):
            comps[k - degree + j] = comps[k - degree + j] - lead * pj
    return CycScalar(c.r, dict(enumerate(comps)))
