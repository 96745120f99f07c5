"""String links in C(n;n) and the Milnor invariants of their closures.

A string link whose first n-1 strands are straight is an element of RF(n-1)
on ``t1 .. t{n-1}``.  The n-th longitude of its closure is the same word with
each ``t_j`` replaced by the meridian ``m_j``, so mu(I; n) is the coefficient
of X_I in the square-free Magnus expansion of that word.  Only indices I with
distinct entries (link-homotopy invariants) are supported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .magnus import NcPoly, magnus
from .rfree import RFWord, commutator_word, is_brunnian
from .words import Word

Multiindex = tuple[int, ...]
Perm = tuple[int, ...]


class NotBrunnianError(ValueError):
    """mu_vector / kappa need a Brunnian input (no indeterminacy handling)."""


StringLink = RFWord


def permutations(n: int) -> list[Perm]:
    """Sigma(2, ..., n-1) in lexicographic order."""
    return list(itertools.permutations(range(2, n)))


def tau_n_sigma(n: int, sigma: Perm) -> StringLink:
    """The Brunnian generator [t1, t_sigma(2), ..., t_sigma(n-1)]."""
    sigma = tuple(sigma)
    if n < 2 or sorted(sigma) != list(range(2, n)):
        raise ValueError(f"{sigma} is not a permutation of 2..{n - 1}")
    return RFWord(commutator_word((1,) + sigma, n - 1), n)


def brunnian_product(n: int, exponents: dict[Perm, int]) -> StringLink:
    """prod_sigma tau(n, sigma)^e_sigma, in lexicographic order of sigma."""
    acc = Word.identity(n - 1)
    for s in permutations(n):
        e = exponents.get(s, 0)
        if e:
            acc = acc * tau_n_sigma(n, s).word ** e
    return RFWord(acc, n)


def longitude(L: StringLink) -> Word:
    """The n-th longitude as a word in the meridians m_1 .. m_{n-1}."""
    return L.word.with_symbol("m")


def longitude_expansion(L: StringLink, degree: int | None = None) -> NcPoly:
    d = L.rank if degree is None else degree
    return magnus(longitude(L), max(d, 1), square_free=True, variable_count=L.rank)


def _check_index(L: StringLink, I: Multiindex) -> None:
    if len(set(I)) != len(I):
        raise ValueError(f"repeated index in {I}: only distinct-index invariants are supported")
    if any(not 1 <= i <= L.rank for i in I):
        raise ValueError(f"index {I} outside 1..{L.rank}")


def closure_mu(L: StringLink, I: Multiindex, expansion: NcPoly | None = None) -> int:
    """mu(I; n) of the closure of L."""
    I = tuple(I)
    _check_index(L, I)
    p = expansion if expansion is not None else longitude_expansion(L)
    return p.coefficient(I)


def distinct_indices(rank: int, max_length: int | None = None) -> list[Multiindex]:
    top = rank if max_length is None else min(max_length, rank)
    return [I for k in range(1, top + 1) for I in itertools.permutations(range(1, rank + 1), k)]


def mu_table(L: StringLink, max_length: int | None = None) -> dict[Multiindex, int]:
    """All distinct-index mu(I; n), I of length 1..max_length."""
    p = longitude_expansion(L)
    return {I: p.coefficient(I) for I in distinct_indices(L.rank, max_length)}


@dataclass(frozen=True)
class MuVector:
    components: int
    entries: dict[Perm, int] = field(default_factory=dict)

    def __post_init__(self):
        if set(self.entries) != set(permutations(self.components)):
            raise ValueError("MuVector domain must be all of Sigma(2..n-1)")

    def values(self) -> tuple[int, ...]:
        return tuple(self.entries[s] for s in permutations(self.components))

    def to_json(self) -> dict:
        return {
            "n": self.components,
            "mu": [{"sigma": list(s), "value": str(self.entries[s])} for s in permutations(self.components)],
        }


def mu_vector(L: StringLink) -> MuVector:
    """(mu(1, sigma(2), ..., sigma(n-1); n))_sigma for a Brunnian L."""
    if not is_brunnian(L):
        raise NotBrunnianError("mu_vector needs a Brunnian string link")
    p = longitude_expansion(L)
    return MuVector(L.components, {s: p.coefficient((1,) + s) for s in permutations(L.components)})


def product_formula_rhs(z1: StringLink, z2: StringLink, I: Multiindex) -> int:
    """mu(I)(z1) + mu(I)(z2) + sum over proper splittings I = J K of mu(J)(z1) mu(K)(z2)."""
    I = tuple(I)
    p1, p2 = longitude_expansion(z1), longitude_expansion(z2)
    total = closure_mu(z1, I, p1) + closure_mu(z2, I, p2)
    for k in range(1, len(I)):
        total += closure_mu(z1, I[:k], p1) * closure_mu(z2, I[k:], p2)
    return total


def check_product_formula(z1: StringLink, z2: StringLink, I: Multiindex) -> bool:
    if z1.components != z2.components:
        raise ValueError("component mismatch")
    return closure_mu(z1 * z2, I) == product_formula_rhs(z1, z2, I)


def conjugation_invariance(z: StringLink, lam: StringLink, I: Multiindex) -> bool:
    if not is_brunnian(z):
        raise NotBrunnianError("conjugation invariance is asserted for Brunnian z only")
    return closure_mu(lam * z * ~lam, I) == closure_mu(z, I)
