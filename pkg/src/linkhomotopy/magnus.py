"""Truncated noncommutative power series and the Magnus expansion.

``NcPoly`` is an element of Z<<X_1, ..., X_n>> truncated above a fixed degree,
optionally in the square-free quotient where every monomial with a repeated
variable is zero.  Monomials are tuples of variable indices.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Mapping

from .words import Word

Monomial = tuple[int, ...]


class RingMismatchError(ValueError):
    pass


def _has_repeat(mono: Monomial) -> bool:
    return len(set(mono)) != len(mono)


def monomial_key(mono: Monomial) -> tuple[int, Monomial]:
    return (len(mono), mono)


class NcPoly:
    """Element of the truncated ring; immutable by convention."""

    __slots__ = ("variable_count", "degree", "square_free", "terms")

    def __init__(
        self,
        variable_count: int,
        degree: int,
        terms: Mapping[Monomial, int] | None = None,
        square_free: bool = False,
    ):
        if degree < 0:
            raise ValueError("truncation degree must be >= 0")
        self.variable_count = variable_count
        self.degree = degree
        self.square_free = square_free
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if c == 0 or len(mono) > degree:
                continue
            if square_free and _has_repeat(mono):
                continue
            if any(not 1 <= i <= variable_count for i in mono):
                raise ValueError(f"monomial {mono} uses a variable outside 1..{variable_count}")
            clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in clean.items() if c != 0}

    @classmethod
    def _raw(cls, variable_count, degree, square_free, terms) -> NcPoly:
        p = cls.__new__(cls)
        p.variable_count = variable_count
        p.degree = degree
        p.square_free = square_free
        p.terms = terms
        return p

    @classmethod
    def one(cls, variable_count: int, degree: int, square_free: bool = False) -> NcPoly:
        return cls._raw(variable_count, degree, square_free, {(): 1})

    @classmethod
    def variable(cls, i: int, variable_count: int, degree: int, square_free: bool = False) -> NcPoly:
        return cls(variable_count, degree, {(i,): 1}, square_free)

    def _like(self, terms: dict[Monomial, int]) -> NcPoly:
        return NcPoly._raw(self.variable_count, self.degree, self.square_free, terms)

    def _check(self, other: NcPoly) -> None:
        if (self.variable_count, self.degree, self.square_free) != (
            other.variable_count,
            other.degree,
            other.square_free,
        ):
            raise RingMismatchError(
                "operands live in different rings: "
                f"(n={self.variable_count}, D={self.degree}, sf={self.square_free}) vs "
                f"(n={other.variable_count}, D={other.degree}, sf={other.square_free})"
            )

    def __add__(self, other: NcPoly) -> NcPoly:
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._like(out)

    def __neg__(self) -> NcPoly:
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: NcPoly) -> NcPoly:
        return self + (-other)

    def __mul__(self, other: NcPoly) -> NcPoly:
        self._check(other)
        D, sf = self.degree, self.square_free
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            room = D - len(m1)
            s1 = set(m1) if sf else None
            for m2, c2 in other.terms.items():
                if len(m2) > room:
                    continue
                if sf and not s1.isdisjoint(m2):
                    continue
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return self._like({m: c for m, c in out.items() if c})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return (
            self.variable_count == other.variable_count
            and self.degree == other.degree
            and self.square_free == other.square_free
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variable_count, self.degree, self.square_free, frozenset(self.terms.items())))

    def coefficient(self, mono: Iterable[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def homogeneous_part(self, k: int) -> dict[Monomial, int]:
        return {m: c for m, c in self.terms.items() if len(m) == k}

    def min_degree(self) -> int | None:
        """Lowest degree of a nonzero term of ``self - 1``; None if ``self == 1``."""
        degs = [len(m) for m, c in self.terms.items() if m != () or c != 1]
        return min(degs) if degs else None

    def square_free_projection(self) -> NcPoly:
        return NcPoly(self.variable_count, self.degree, self.terms, square_free=True)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: monomial_key(mc[0]))

    def to_text(self) -> str:
        return poly_text(self.sorted_terms())

    def to_json(self) -> list[dict]:
        return [{"monomial": list(m), "coeff": str(c)} for m, c in self.sorted_terms()]

    def __repr__(self) -> str:
        mode = ", square_free" if self.square_free else ""
        return f"NcPoly(n={self.variable_count}, D={self.degree}{mode}: {self.to_text()})"


def poly_text(terms: Iterable[tuple[Monomial, object]], var: str = "X") -> str:
    parts: list[str] = []
    for mono, c in terms:
        name = "".join(f"{var}{i}" for i in mono)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{mag}*{name}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _right_multiply_letter(terms: dict[Monomial, int], i: int, sign: int, D: int, sf: bool) -> dict[Monomial, int]:
    # p * M(x_i^sign), computed in place of a general product for speed.
    out = dict(terms)
    if sign > 0 or sf:
        s = 1 if sign > 0 else -1
        for m, c in terms.items():
            if len(m) < D and not (sf and i in m):
                key = m + (i,)
                v = out.get(key, 0) + s * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out
    # plain inverse: 1 - X_i + X_i^2 - ...
    for m, c in terms.items():
        for k in range(1, D - len(m) + 1):
            key = m + (i,) * k
            v = out.get(key, 0) + (-1) ** k * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def magnus(w: Word, degree: int, square_free: bool = False, variable_count: int | None = None) -> NcPoly:
    """Magnus expansion m_i -> 1 + X_i, truncated above ``degree``.

    In square-free mode the inverse m_i^-1 expands to exactly ``1 - X_i``.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    n = w.alphabet_size if variable_count is None else variable_count
    if n < w.alphabet_size:
        raise ValueError("variable_count smaller than the word's alphabet")
    terms: dict[Monomial, int] = {(): 1}
    for a in w.letters:
        terms = _right_multiply_letter(terms, a.generator, a.sign, degree, square_free)
    return NcPoly._raw(n, degree, square_free, terms)


def mu_coeff(p: NcPoly, index: Iterable[int]) -> int:
    """Coefficient of X_I in ``p``."""
    index = tuple(index)
    if len(index) > p.degree:
        raise ValueError(f"|I| = {len(index)} exceeds truncation degree {p.degree}")
    return p.coefficient(index)


# --- indeterminacy ------------------------------------------------------------


class MissingInvariantError(KeyError):
    pass


def indeterminacy_sequences(index: Iterable[int], target: int) -> set[tuple[tuple[int, ...], int]]:
    """Lower-order (J, j') pairs whose invariants enter Delta(I; j).

    Take every cyclic permutation of the sequence (I, j), delete at least one
    entry keeping the order, and keep results of length >= 2; the last entry
    is the target.
    """
    seq = tuple(index) + (target,)
    m = len(seq)
    out = set()
    for r in range(m):
        rot = seq[r:] + seq[:r]
        for size in range(2, m):
            for keep in itertools.combinations(range(m), size):
                sub = tuple(rot[k] for k in keep)
                out.add((sub[:-1], sub[-1]))
    return out


def delta_indeterminacy(mu_table: Mapping[tuple[tuple[int, ...], int], int], index: Iterable[int], target: int) -> int:
    """gcd of the lower-order mu invariants; 0 when they all vanish."""
    g = 0
    for key in sorted(indeterminacy_sequences(index, target)):
        if key not in mu_table:
            raise MissingInvariantError(f"missing lower-order invariant mu{key}")
        g = math.gcd(g, mu_table[key])
    return g


def mu_bar(mu: int, delta: int) -> int:
    """Residue of ``mu`` modulo ``delta`` in [0, delta); ``mu`` itself when delta == 0."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return mu % delta if delta else mu
