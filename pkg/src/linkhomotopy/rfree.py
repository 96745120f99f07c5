"""The reduced free group RF(n-1) on tau_1, ..., tau_{n-1}.

Elements are words in ``t1 .. t{n-1}``; ``n`` is the number of strands of the
string links they stand for.  Equality, lower central series degree and the
normal form are all read off the square-free Magnus expansion truncated at
degree n-1, which is where the group's nilpotency class ends.

The normal form writes ``z = lambda_1 ... lambda_{n-1}`` with ``lambda_k`` the
product, over increasing ``I = (i_1 < ... < i_k)`` and then lexicographic
``sigma``, of ``tau(I, sigma)^e(I, sigma)`` where
``tau(I, sigma) = [t_{i_1}, t_{i_sigma(2)}, ..., t_{i_sigma(k)}]``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .magnus import NcPoly, magnus
from .words import Word, inverse, product, simple_commutator

Multiindex = tuple[int, ...]
Perm = tuple[int, ...]  # one-line notation (sigma(2), ..., sigma(k))


class NormalFormError(RuntimeError):
    """The peeling residual failed to become trivial: an internal bug."""


@dataclass(frozen=True)
class RFWord:
    word: Word
    components: int

    def __post_init__(self):
        if self.components < 1:
            raise ValueError("need at least 1 component")
        if self.word.alphabet_size != self.components - 1:
            raise ValueError(
                f"RF({self.components - 1}) word must use {self.components - 1} generators, "
                f"got alphabet of size {self.word.alphabet_size}"
            )

    @property
    def rank(self) -> int:
        return self.components - 1

    def __mul__(self, other: RFWord) -> RFWord:
        if self.components != other.components:
            raise ValueError("component mismatch")
        return RFWord(self.word * other.word, self.components)

    def __invert__(self) -> RFWord:
        return RFWord(inverse(self.word), self.components)

    def __str__(self) -> str:
        return str(self.word)


def rf_word(word: Word, components: int | None = None) -> RFWord:
    return RFWord(word, word.alphabet_size + 1 if components is None else components)


def sf_magnus(w: RFWord) -> NcPoly:
    return magnus(w.word, max(w.rank, 1), square_free=True, variable_count=w.rank)


def rf_equal(a: RFWord, b: RFWord) -> bool:
    if a.components != b.components:
        raise ValueError("component mismatch")
    return a.word == b.word or sf_magnus(a) == sf_magnus(b)


def is_trivial(w: RFWord) -> bool:
    return w.word.is_identity() or sf_magnus(w).is_one()


def lcs_degree(w: RFWord) -> int:
    """Largest k with w in RF_k, reported as n when w is trivial."""
    d = sf_magnus(w).min_degree()
    return w.components if d is None else d


# --- basis of the graded quotients -------------------------------------------


def permutations_of(k: int) -> list[Perm]:
    """All permutations of {2, ..., k} in lexicographic one-line order."""
    return list(itertools.permutations(range(2, k + 1)))


def basis_pairs(n: int, k: int) -> list[tuple[Multiindex, Perm]]:
    """The pairs (I, sigma) with |I| = k, in canonical order."""
    return [(I, s) for I in itertools.combinations(range(1, n), k) for s in permutations_of(k)]


def tau_sequence(I: Multiindex, sigma: Perm) -> Multiindex:
    """Generator sequence (i_1, i_sigma(2), ..., i_sigma(k))."""
    if sorted(sigma) != list(range(2, len(I) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 2..{len(I)}")
    return (I[0],) + tuple(I[s - 1] for s in sigma)


def commutator_word(gens: Multiindex, rank: int) -> Word:
    return simple_commutator([Word.generator(g, rank) for g in gens])


def tau_I_sigma(I: Multiindex, sigma: Perm, n: int) -> Word:
    return commutator_word(tau_sequence(I, sigma), n - 1)


@lru_cache(maxsize=None)
def _tau_magnus(I: Multiindex, sigma: Perm, n: int, exponent: int) -> NcPoly:
    w = tau_I_sigma(I, sigma, n) ** exponent
    return magnus(w, n - 1, square_free=True, variable_count=n - 1)


def quotient_rank_formula(n: int, k: int) -> int:
    return math.factorial(k - 1) * math.comb(n - 1, k)


def quotient_rank_enumerated(n: int, k: int) -> int:
    """Rank of the degree-k Magnus leading terms of the tau(I, sigma), |I| = k."""
    from .linalg import rank

    rows = [_tau_magnus(I, s, n, 1).homogeneous_part(k) for I, s in basis_pairs(n, k)]
    cols = sorted({m for r in rows for m in r})
    index = {m: j for j, m in enumerate(cols)}
    return rank([{index[m]: c for m, c in r.items()} for r in rows], len(cols))


def quotient_rank(n: int, k: int) -> int:
    """Rank of RF(n-1)_k / RF(n-1)_{k+1}, checked against an explicit basis."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    formula = quotient_rank_formula(n, k)
    count = len(basis_pairs(n, k))
    independent = quotient_rank_enumerated(n, k)
    if not formula == count == independent:
        raise ArithmeticError(f"rank mismatch at n={n}, k={k}: {formula}, {count}, {independent}")
    return formula


# --- normal form ---------------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    components: int
    exponents: dict[tuple[Multiindex, Perm], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "exponents", {k: v for k, v in self.exponents.items() if v})

    def __getitem__(self, key: tuple[Multiindex, Perm]) -> int:
        return self.exponents.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.components == other.components and self.exponents == other.exponents

    def __hash__(self):
        return hash((self.components, frozenset(self.exponents.items())))

    def items(self) -> list[tuple[Multiindex, Perm, int]]:
        return [(I, s, e) for (I, s), e in sorted(self.exponents.items(), key=lambda kv: (len(kv[0][0]), kv[0]))]

    def degrees(self) -> set[int]:
        return {len(I) for I, _ in self.exponents}

    def recompose(self) -> RFWord:
        n = self.components
        factors = [
            tau_I_sigma(I, s, n) ** self.exponents[(I, s)]
            for k in range(1, n)
            for I, s in basis_pairs(n, k)
            if (I, s) in self.exponents
        ]
        return RFWord(product(factors, n - 1), n)

    def to_json(self) -> dict:
        return {
            "n": self.components,
            "terms": [{"I": list(I), "sigma": list(s), "e": str(e)} for I, s, e in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> NormalForm:
        return cls(
            data["n"], {(tuple(t["I"]), tuple(t["sigma"])): int(t["e"]) for t in data["terms"]}
        )

    def to_text(self) -> str:
        if not self.exponents:
            return "trivial"
        lines = []
        for I, s, e in self.items():
            seq = ",".join(f"t{g}" for g in tau_sequence(I, s))
            lines.append(f"e(I={','.join(map(str, I))}; sigma=({','.join(map(str, s))})) = {e}   [{seq}]")
        return "\n".join(lines)


def normal_form(w: RFWord) -> NormalForm:
    """Peel off one lower-central-series layer at a time.

    At stage k the residual lies in RF_k; the coefficient of
    X_{i_1} X_{i_sigma(2)} ... X_{i_sigma(k)} in its expansion is e(I, sigma),
    because among the leading terms of the tau(J, rho), |J| = k, only
    tau(I, sigma) contains that monomial.  The residual is then divided on the
    left by lambda_k.
    """
    n = w.components
    residual = sf_magnus(w)
    exps: dict[tuple[Multiindex, Perm], int] = {}
    for k in range(1, n):
        lam_inv = NcPoly.one(n - 1, n - 1, square_free=True)
        for I, s in basis_pairs(n, k):
            e = residual.coefficient(tau_sequence(I, s))
            if e:
                exps[(I, s)] = e
                # (prod of factors)^-1 accumulates on the right of lam_inv reversed
                lam_inv = _tau_magnus(I, s, n, -e) * lam_inv
        residual = lam_inv * residual
        low = residual.min_degree()
        if low is not None and low <= k:
            raise NormalFormError(f"residual not in RF_{k + 1} after stage {k}: degree {low} term survives")
    if not residual.is_one():
        raise NormalFormError("residual nontrivial after the last stage")
    return NormalForm(n, exps)


# --- strand deletion -------------------------------------------------------------


def delete_strand(w: RFWord, j: int) -> RFWord:
    """Send t_j to 1 and shift higher generators down by one."""
    if not 1 <= j <= w.rank:
        raise ValueError(f"strand {j} out of range 1..{w.rank}")
    pairs = [(a.generator - (a.generator > j), a.sign) for a in w.word.letters if a.generator != j]
    return RFWord(Word.from_pairs(pairs, w.rank - 1, w.word.symbol), w.components - 1)


def brunnian_witness(w: RFWord) -> int | None:
    """First strand whose deletion leaves a nontrivial element, or None."""
    for j in range(1, w.rank + 1):
        if not is_trivial(delete_strand(w, j)):
            return j
    return None


def is_brunnian(w: RFWord) -> bool:
    return brunnian_witness(w) is None
