"""
Laurent polynomials in q with exact coefficients.

A = Z[q, q^-1] is the ground ring of every Hecke-type algebra in the package.
Coefficients are ints, or Fractions when a LaurentScalar is used as a
component of a CycScalar. Zero coefficients are never stored, so equality of
values is equality of term maps.
"""

from fractions import Fraction
from typing import Iterator, Mapping, Union

Coefficient = Union[int, Fraction]


def _normalize(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class LaurentScalar:
    """Finitely supported map exponent -> coefficient, read as sum c * q^e."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coefficient] | None = None):
        self._terms: dict[int, Coefficient] = {}
        if terms:
            for exp, c in terms.items():
                if c != 0:
                    self._terms[int(exp)] = _normalize(c)

    @classmethod
    def constant(cls, c: Coefficient) -> "LaurentScalar":
        return cls({0: c})

    @classmethod
    def q(cls, power: int = 1) -> "LaurentScalar":
        return cls({power: 1})

    @classmethod
    def coerce(cls, value: "LaurentScalar | Coefficient") -> "LaurentScalar":
        if isinstance(value, LaurentScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as a Laurent polynomial")

    # --- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict[int, Coefficient]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Coefficient]]:
        """Terms by descending exponent."""
        for exp in sorted(self._terms, reverse=True):
            yield exp, self._terms[exp]

    def coefficient(self, exp: int) -> Coefficient:
        return self._terms.get(exp, 0)

    @property
    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def max_degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def negative_part(self) -> "LaurentScalar":
        """The terms with exponent < 0, i.e. the part lying in q^-1 Z[q^-1]."""
        return LaurentScalar({e: c for e, c in self._terms.items() if e < 0})

    # --- ring structure -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.constant(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.constant(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentScalar(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.constant(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentScalar()
            return LaurentScalar({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out: dict[int, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentScalar":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials can be inverted")
            return LaurentScalar({-e * -k: c ** -k})
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> "LaurentScalar":
        """q -> q^-1."""
        return LaurentScalar({-e: c for e, c in self._terms.items()})

    # --- text -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.items():
            if exp == 0:
                body = str(abs(c))
            else:
                mono = "q" if exp == 1 else f"q^{exp}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentScalar({str(self)!r})"


ZERO = LaurentScalar()
ONE = LaurentScalar.constant(1)
Q = LaurentScalar.q(1)
# q - q^-1, the deformation parameter of every quadratic relation
Q_DIFF = LaurentScalar({1: 1, -1: -1})


def laurent_mul(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    return a * b


def laurent_bar(a: LaurentScalar) -> LaurentScalar:
    return a.bar()
