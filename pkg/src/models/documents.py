"""
JSON documents for elements of every algebra in the package.

{"algebra": tag, "r": int, "n": int, "ring": "A" | "R", "terms": [...]}

Each term carries the fields its algebra needs: "alpha" (X, Z or translation
exponents), "lambda" (residue tuple), "t" (exponents of t_1..t_n), "w" (a
permutation in one-line notation) and, for E, "block": [l1, l2]. A
coefficient maps each q-exponent to an int or, over R or with fractional
coefficients, to a list of [numerator, denominator, zeta-exponent] triples.
"""

from fractions import Fraction
from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.algebras.bernstein import BernsteinElem
from src.algebras.idempotent import HhatElement
from src.algebras.iwahori import IMElement
from src.algebras.matrix_model import EElement
from src.algebras.sparse import add_term
from src.algebras.yokonuma import YElement
from src.coeffs.cyclotomic import CycScalar
from src.coeffs.laurent import LaurentScalar
from src.combinatorics.affine_weyl import ExtAffineElem
from src.combinatorics.permutations import check_perm
from src.combinatorics.residues import check_residues
from src.errors import CoefficientError, ParameterMismatchError

CoeffDoc = dict[str, Union[int, list[list[int]]]]


class TermDoc(BaseModel):
    """One basis monomial with its coefficient."""
    model_config = ConfigDict(populate_by_name=True)

    alpha: list[int] | None = None
    lambda_: list[int] | None = Field(default=None, alias="lambda")
    t: list[int] | None = None
    w: list[int]
    block: list[list[int]] | None = None
    coeff: CoeffDoc


class ElementDoc(BaseModel):
    algebra: Literal["Y", "H", "Hhat", "E", "AH"]
    r: int = Field(default=1, ge=1)
    n: int = Field(ge=1)
    ring: Literal["A", "R"] = "A"
    terms: list[TermDoc] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_lengths(self) -> "ElementDoc":
        for k, term in enumerate(self.terms):
            for name in ("alpha", "lambda_", "t", "w"):
                value = getattr(term, name)
                if value is not None and len(value) != self.n:
                    raise ValueError(f"term {k}: {name.rstrip('_')} has length {len(value)}, expected {self.n}")
            if self.algebra == "E" and (term.block is None or len(term.block) != 2):
                raise ValueError(f"term {k}: E terms need a block [l1, l2]")
        return self

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)


# --- coefficients ---------------------------------------------------------


def _triple(c, zeta: int) -> list[int]:
    c = Fraction(c)
    return [c.numerator, c.denominator, zeta]


def encode_coeff(c) -> CoeffDoc:
    out: dict = {}
    if isinstance(c, CycScalar):
        for k in range(c.r):
            for e, coeff in c.component(k).items():
                out.setdefault(str(e), []).append(_triple(coeff, k))
        return dict(sorted(out.items(), key=lambda item: -int(item[0])))
    for e, coeff in LaurentScalar.coerce(c).items():
        out[str(e)] = coeff if isinstance(coeff, int) else [_triple(coeff, 0)]
    return out


def decode_coeff(raw: CoeffDoc, ring: str = "A", r: int = 1):
    comps: dict[int, dict[int, Fraction]] = {}
    for exp, value in raw.items():
        e = int(exp)
        triples = [[value, 1, 0]] if isinstance(value, int) else value
        for triple in triples:
            if len(triple) != 3:
                raise CoefficientError(f"coefficient triple {triple} should be [num, den, zeta]")
            num, den, zeta = triple
            if den == 0:
                raise CoefficientError("zero denominator")
            if ring == "A" and zeta != 0:
                raise CoefficientError("zeta appears in a coefficient over A")
            add_term(comps.setdefault(zeta, {}), e, Fraction(num, den))
    if ring == "R":
        return CycScalar(r, {k: LaurentScalar(terms) for k, terms in comps.items()})
    return LaurentScalar(comps.get(0, {}))


# --- elements -------------------------------------------------------------


def element_to_doc(elem) -> ElementDoc:
    if isinstance(elem, YElement):
        terms = [TermDoc(t=list(k), w=list(w), coeff=encode_coeff(c)) for (k, w), c in elem.sorted_terms()]
        return ElementDoc(algebra="Y", r=elem.r, n=elem.n, ring="R", terms=terms)
    if isinstance(elem, BernsteinElem):
        terms = [TermDoc(alpha=list(a), w=list(w), coeff=encode_coeff(c)) for (a, w), c in elem.sorted_terms()]
        return ElementDoc(algebra="AH", n=elem.n, terms=terms)
    if isinstance(elem, IMElement):
        terms = [TermDoc(alpha=list(x.trans), w=list(x.perm), coeff=encode_coeff(c)) for x, c in elem.sorted_terms()]
        return ElementDoc(algebra="H", n=elem.n, terms=terms)
    if isinstance(elem, HhatElement):
        terms = [_hhat_term(key, c) for key, c in elem.sorted_terms()]
        return ElementDoc(algebra="Hhat", r=elem.r, n=elem.n, ring=_ring_of(elem), terms=terms)
    if isinstance(elem, EElement):
        terms, ring = [], "A"
        for (lam1, lam2), value in sorted(elem.blocks.items()):
            ring = "R" if _ring_of(value) == "R" else ring
            for key, c in value.sorted_terms():
                terms.append(_hhat_term(key, c, block=[list(lam1), list(lam2)]))
        return ElementDoc(algebra="E", r=elem.r, n=elem.n, ring=ring, terms=terms)
    raise TypeError(f"no document form for {type(elem).__name__}")


def _ring_of(elem: HhatElement) -> str:
    return "R" if any(isinstance(c, CycScalar) for c in elem.terms.values()) else "A"


def _hhat_term(key, c, block=None) -> TermDoc:
    alpha, lam, w = key
    return TermDoc(alpha=list(alpha), lambda_=list(lam), w=list(w), block=block, coeff=encode_coeff(c))


def _required(term: TermDoc, name: str, n: int) -> tuple[int, ...]:
    value = getattr(term, name)
    return tuple(value) if value is not None else (0,) * n


def doc_to_element(doc: ElementDoc):
    r, n = doc.r, doc.n
    if doc.algebra == "Y" and doc.ring != "R":
        raise ParameterMismatchError("Y elements have coefficients in R")
    out: dict = {}
    blocks: dict = {}
    for term in doc.terms:
        w = check_perm(term.w)
        c = decode_coeff(term.coeff, doc.ring, r)
        if doc.algebra == "Y":
            key = (tuple(k % r for k in _required(term, "t", n)), w)
        elif doc.algebra == "AH":
            key = (_required(term, "alpha", n), w)
        elif doc.algebra == "H":
            key = ExtAffineElem(_required(term, "alpha", n), w)
        else:
            if term.lambda_ is None:
                raise ParameterMismatchError(f"{doc.algebra} terms need a residue tuple")
            key = (_required(term, "alpha", n), check_residues(r, term.lambda_, n), w)
        if doc.algebra == "E":
            pair = (check_residues(r, term.block[0], n), check_residues(r, term.block[1], n))
            add_term(blocks.setdefault(pair, {}), key, c)
        else:
            add_term(out, key, c)
    if doc.algebra == "Y":
        return YElement(r, n, out)
    if doc.algebra == "AH":
        return BernsteinElem(n, out)
    if doc.algebra == "H":
        return IMElement(n, out)
    if doc.algebra == "Hhat":
        return HhatElement(r, n, out)
    return EElement(r, n, {pair: HhatElement(r, n, terms) for pair, terms in blocks.items()})
