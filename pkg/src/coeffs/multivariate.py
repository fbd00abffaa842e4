"""
Laurent polynomials in a few commuting variables, and monomial involutions.

These realize the commutative base rings B of generalized matrix algebras.
An involution sigma is a monomial substitution x^e -> x^(M e) given by an
integer matrix M with M^2 = I: identity, inverting variables, swapping them,
and combinations thereof.
"""

from fractions import Fraction
from typing import Mapping, Sequence

from src.coeffs.laurent import Coefficient, LaurentScalar
from src.errors import CompatibilityError, IndexOutOfRangeError, ParameterMismatchError

MAX_VARIABLES = 3

Exponent = tuple[int, ...]


class MultiLaurent:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Coefficient] | None = None):
        if not 0 <= nvars <= MAX_VARIABLES:
            raise IndexOutOfRangeError(f"base rings have at most {MAX_VARIABLES} variables, got {nvars}")
        self.nvars = nvars
        self._terms: dict[Exponent, Coefficient] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ParameterMismatchError(f"exponent {exp} has wrong length for {nvars} variables")
            if c != 0:
                self._terms[exp] = c

    @classmethod
    def constant(cls, nvars: int, c: Coefficient = 1) -> "MultiLaurent":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, index: int, power: int = 1) -> "MultiLaurent":
        if not 0 <= index < nvars:
            raise IndexOutOfRangeError(f"variable index {index} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[index] = power
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def from_laurent(cls, a: LaurentScalar, nvars: int = 1, index: int = 0) -> "MultiLaurent":
        """Embed A = Z[q, q^-1] with q sent to the variable `index`."""
        out = {}
        for e, c in a.terms.items():
            exp = [0] * nvars
            exp[index] = e
            out[tuple(exp)] = c
        return cls(nvars, out)

    @property
    def terms(self) -> dict[Exponent, Coefficient]:
        return dict(self._terms)

    def embed(self, offset: int, nvars: int) -> "MultiLaurent":
        """Place the variables at positions offset.. of a ring with nvars variables."""
        if offset + self.nvars > nvars:
            raise IndexOutOfRangeError("embedding does not fit")
        out = {}
        for exp, c in self._terms.items():
            full = [0] * nvars
            full[offset:offset + self.nvars] = exp
            out[tuple(full)] = c
        return MultiLaurent(nvars, out)

    def substitute(self, matrix: Sequence[Sequence[int]]) -> "MultiLaurent":
        """Monomial substitution x^e -> x^(M e)."""
        out: dict[Exponent, Coefficient] = {}
        for exp, c in self._terms.items():
            new = tuple(sum(row[j] * exp[j] for j in range(self.nvars)) for row in matrix)
            out[new] = out.get(new, 0) + c
        return MultiLaurent(self.nvars, out)

    def _coerce(self, other) -> "MultiLaurent | None":
        if isinstance(other, MultiLaurent):
            if other.nvars != self.nvars:
                raise ParameterMismatchError(f"rings differ: {self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiLaurent.constant(self.nvars, other)
        return None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiLaurent) and other.nvars != self.nvars:
            return False
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __neg__(self) -> "MultiLaurent":
        return MultiLaurent(self.nvars, {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiLaurent(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponent, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiLaurent(self.nvars, out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            c = self._terms[exp]
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(exp) if e != 0
            ]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiLaurent({self.nvars}, {str(self)!r})"


class MonomialInvolution:
    """sigma(x^e) = x^(M e) with M an integer matrix, M^2 = I."""

    def __init__(self, matrix: Sequence[Sequence[int]], name: str = "sigma"):
        self.matrix = tuple(tuple(int(v) for v in row) for row in matrix)
        self.name = name
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise CompatibilityError("involution matrix must be square")
        square = tuple(
            tuple(sum(self.matrix[i][k] * self.matrix[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        if square != identity:
            raise CompatibilityError(f"{name} is not an involution: M^2 != I")

    @property
    def nvars(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, nvars: int) -> "MonomialInvolution":
        return cls([[int(i == j) for j in range(nvars)] for i in range(nvars)], "id")

    @classmethod
    def inversion(cls, nvars: int) -> "MonomialInvolution":
        return cls([[-int(i == j) for j in range(nvars)] for i in range(nvars)], "inv")

    @classmethod
    def swap(cls, nvars: int, i: int, j: int) -> "MonomialInvolution":
        rows = [[int(a == b) for b in range(nvars)] for a in range(nvars)]
        rows[i][i] = rows[j][j] = 0
        rows[i][j] = rows[j][i] = 1
        return cls(rows, f"swap{i}{j}")

    def direct_sum(self, other: "MonomialInvolution") -> "MonomialInvolution":
        n1, n2 = self.nvars, other.nvars
        rows = [list(row) + [0] * n2 for row in self.matrix]
        rows += [[0] * n1 + list(row) for row in other.matrix]
        return MonomialInvolution(rows, f"{self.name}(x){other.name}")

    def __call__(self, b: MultiLaurent) -> MultiLaurent:
        if b.nvars != self.nvars:
            raise ParameterMismatchError("involution and element live in different rings")
        return b.substitute(self.matrix)

    def __repr__(self) -> str:
        return f"MonomialInvolution({self.name}, {self.matrix})"
