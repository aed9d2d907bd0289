"""Sparse multivariate polynomials over a ground field and over the tropical
semifield, graded pieces of homogeneous ideals, and coefficient-wise
valuation.

A monomial is an exponent tuple of naturals; term maps never store zero
(resp. -inf) coefficients.  The canonical term order is graded lexicographic:
higher total degree first, ties broken by descending exponent tuple, so the
degree-2 basis in two variables reads x^2, x*y, y^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Sequence, Tuple

from . import linalg
from .fields import Valuation
from .semiring import NEG_INF, TropicalValue, trop_sum

Monomial = Tuple[int, ...]


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def grlex_key(m: Monomial):
    """Sort key putting graded-lex-larger monomials first."""
    return (-mono_degree(m), tuple(-e for e in m))


def monomials_of_degree(nvars: int, d: int) -> List[Monomial]:
    """All degree-d monomials in graded-lex order (descending lex)."""
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for bars in combinations_with_replacement(range(nvars), d):
        expo = [0] * nvars
        for v in bars:
            expo[v] += 1
        out.append(tuple(expo))
    out.sort(key=grlex_key)
    return out


def mono_str(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Poly:
    """Polynomial over a ground field, as a sparse map monomial -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Monomial, object] | Iterable = ()):
        cleaned = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong arity for {nvars} variables")
            key = tuple(mono)
            if key in cleaned:
                s = cleaned[key] + coeff
                if s:
                    cleaned[key] = s
                else:
                    del cleaned[key]
            elif coeff:
                cleaned[key] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> List[Monomial]:
        return sorted(self.terms, key=grlex_key)

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def __add__(self, other: "Poly") -> "Poly":
        merged = dict(self.terms)
        for m, c in other.terms.items():
            if m in merged:
                s = merged[m] + c
                if s:
                    merged[m] = s
                else:
                    del merged[m]
            else:
                merged[m] = c
        return Poly(self.nvars, merged)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                prod = c1 * c2
                if m in out:
                    s = out[m] + prod
                    if s:
                        out[m] = s
                    else:
                        del out[m]
                elif prod:
                    out[m] = prod
        return Poly(self.nvars, out)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly(self.nvars, {})
        return Poly(self.nvars, {m: coeff * c for m, coeff in self.terms.items()})

    def mono_shift(self, mono: Monomial) -> "Poly":
        return Poly(self.nvars, {mono_mul(m, mono): c for m, c in self.terms.items()})

    def coefficient_vector(self, basis: Sequence[Monomial], zero) -> List:
        return [self.terms.get(m, zero) for m in basis]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset((m, c) for m, c in self.terms.items())))

    def to_str(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in self.support():
            c = str(self.terms[m])
            mono = mono_str(m, names)
            if mono == "1":
                parts.append(c)
            elif c == "1":
                parts.append(mono)
            else:
                wrap = any(ch in c for ch in "+/ ") or "-" in c[1:]
                parts.append(f"({c})*{mono}" if wrap else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.terms!r})"


class TropPoly:
    """Tropical polynomial: sparse map monomial -> finite tropical coefficient.

    Addition is coefficient-wise max and never cancels, so the support of a
    sum is the union of supports.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Monomial, TropicalValue] | Iterable = ()):
        cleaned = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong arity for {nvars} variables")
            if not coeff.is_neg_inf:
                key = tuple(mono)
                cleaned[key] = cleaned[key] + coeff if key in cleaned else coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("TropPoly is immutable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> List[Monomial]:
        return sorted(self.terms, key=grlex_key)

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    def __add__(self, other: "TropPoly") -> "TropPoly":
        merged = dict(self.terms)
        for m, c in other.terms.items():
            merged[m] = merged[m] + c if m in merged else c
        return TropPoly(self.nvars, merged)

    def __mul__(self, other: "TropPoly") -> "TropPoly":
        out: Dict[Monomial, TropicalValue] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                prod = c1 * c2
                out[m] = out[m] + prod if m in out else prod
        return TropPoly(self.nvars, out)

    def scale(self, c: TropicalValue) -> "TropPoly":
        if c.is_neg_inf:
            return TropPoly(self.nvars, {})
        return TropPoly(self.nvars, {m: coeff * c for m, coeff in self.terms.items()})

    def mono_shift(self, mono: Monomial) -> "TropPoly":
        return TropPoly(self.nvars, {mono_mul(m, mono): c for m, c in self.terms.items()})

    def delete_term(self, mono: Monomial) -> "TropPoly":
        out = dict(self.terms)
        out.pop(tuple(mono), None)
        return TropPoly(self.nvars, out)

    def term_value(self, mono: Monomial, point: Sequence[TropicalValue]) -> TropicalValue:
        """Value of one term at a point; x^0 contributes 0 even at x = -inf."""
        value = self.terms[mono]
        for e, p in zip(mono, point):
            if e:
                value = value * (p ** e)
        return value

    def __call__(self, point: Sequence[TropicalValue]) -> TropicalValue:
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        return trop_sum(self.term_value(m, point) for m in self.terms)

    def coefficient_vector(self, basis: Sequence[Monomial]) -> Tuple[TropicalValue, ...]:
        return tuple(self.terms.get(m, NEG_INF) for m in basis)

    @staticmethod
    def from_vector(vec: Sequence[TropicalValue], basis: Sequence[Monomial], nvars: int) -> "TropPoly":
        return TropPoly(nvars, {m: c for m, c in zip(basis, vec) if not c.is_neg_inf})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TropPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def to_str(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "-inf"
        parts = []
        for m in self.support():
            c = self.terms[m]
            mono = mono_str(m, names)
            if mono == "1":
                parts.append(str(c))
            elif str(c) == "0":
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TropPoly({self.nvars}, {{{', '.join(f'{m}: {c}' for m, c in sorted(self.terms.items()))}}})"


def tropicalize_poly(v: Valuation, f: Poly) -> TropPoly:
    """Coefficient-wise valuation; support can only shrink."""
    return TropPoly(f.nvars, {m: v(c) for m, c in f.terms.items()})


@dataclass(frozen=True)
class GradedPiece:
    """The degree-d slice of a homogeneous ideal: an RREF basis matrix of
    span{m*g : g generator of degree e <= d, deg(m) = d - e} in the
    graded-lex monomial basis."""

    degree: int
    ambient_basis: Tuple[Monomial, ...]
    matrix: Tuple[Tuple[object, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def ncols(self) -> int:
        return len(self.ambient_basis)


def ideal_graded_piece(gens: Sequence[Poly], d: int, nvars: int, zero) -> GradedPiece:
    """Exact RREF span of the degree-d monomial multiples of the generators.

    Canonical by construction: the ambient basis order is graded-lex and the
    echelon form does not depend on generator or multiple enumeration order.
    """
    basis = monomials_of_degree(nvars, d)
    rows = []
    for g in gens:
        if not g:
            continue
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
        e = g.degree()
        if e > d:
            continue
        for m in monomials_of_degree(nvars, d - e):
            rows.append(g.mono_shift(m).coefficient_vector(basis, zero))
    reduced, _ = linalg.rref(rows, len(basis))
    return GradedPiece(d, tuple(basis), tuple(tuple(r) for r in reduced))


def classical_hilbert(gens: Sequence[Poly], d: int, nvars: int, zero) -> int:
    """dim of (polynomial ring / ideal) in degree d: #monomials - rank."""
    piece = ideal_graded_piece(gens, d, nvars, zero)
    return len(piece.ambient_basis) - piece.rank
