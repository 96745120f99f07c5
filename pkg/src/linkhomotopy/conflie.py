"""The Drinfeld-Kohno Lie algebra of Conf(n) and the graded torus model TF(n).

As a vector space the Drinfeld-Kohno algebra is the direct sum of free Lie
algebras ``L_1, ..., L_{n-1}``, where ``L_j`` is free on
``B_{j+1,1}, ..., B_{j+1,j}``.  Inside a factor the bracket is the free one.
Across factors, ``L_p`` acts on ``L_q`` (p < q) by derivations; a generator
``B_{k,i}`` acts on the generators of the factor with top index ``m > k`` by

    B_{m,i} -> [B_{m,i}, B_{m,k}],   B_{m,k} -> [B_{m,k}, B_{m,i}],   others -> 0,

which is what the 4T relations force.  ``check_4T`` certifies a table.

Labels are symmetric, ``B_{i,j} = B_{j,i}``, canonicalised to the larger
index first.  A factor ``L_{k-1}`` stores ``B_{k,i}`` as free generator ``i``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from . import linalg
from .freelie import (
    LieElt,
    LyndonWord,
    basis_permutations,
    lie_bracket,
    lyndon_words,
    pbw_matrix,
    standard_factorization,
    substitute_generators,
)

ActionTable = Callable[[int, int, int, int], LieElt]


def canonical_label(k: int, i: int) -> tuple[int, int]:
    if k == i:
        raise ValueError(f"B_{{{k},{i}}} is not a generator")
    return (k, i) if k > i else (i, k)


_LABEL = re.compile(r"^\s*B\s*(\d+)\s*,\s*(\d+)\s*$")
_TORUS_LABEL = re.compile(r"^\s*t\s*(\d+)\s*,\s*(\d+)\s*\(\s*(\d+)\s*\)\s*$")


def parse_label(text: str) -> tuple[int, int]:
    m = _LABEL.match(text)
    if not m:
        raise ValueError(f"malformed generator label {text!r}; expected B<k>,<i>")
    return canonical_label(int(m.group(1)), int(m.group(2)))


def parse_torus_label(text: str) -> tuple[int, int, int]:
    m = _TORUS_LABEL.match(text)
    if not m:
        raise ValueError(f"malformed torus generator {text!r}; expected t<k>,<i>(<l>)")
    k, i = canonical_label(int(m.group(1)), int(m.group(2)))
    return k, i, int(m.group(3))


def default_action(k: int, i: int, m: int, r: int) -> LieElt:
    """ad(B_{k,i}) applied to B_{m,r}, for k < m, as an element of L_{m-1}."""
    g = m - 1
    if r == i:
        return lie_bracket(LieElt.generator(i, g), LieElt.generator(k, g))
    if r == k:
        return lie_bracket(LieElt.generator(k, g), LieElt.generator(i, g))
    return LieElt.zero(g)


def corrupted_action(k0: int = 2, i0: int = 1, m0: int = 3, r0: int = 2) -> ActionTable:
    """Default table with the sign of one entry flipped; a negative control."""

    def table(k, i, m, r):
        img = default_action(k, i, m, r)
        return -img if (k, i, m, r) == (k0, i0, m0, r0) else img

    return table


@dataclass(frozen=True)
class DKElt:
    """Element of the Drinfeld-Kohno algebra: one free Lie element per factor."""

    n: int
    factors: tuple[LieElt, ...]

    def __post_init__(self):
        if len(self.factors) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} factors, got {len(self.factors)}")
        for j, f in enumerate(self.factors, start=1):
            if f.generator_count != j:
                raise ValueError(f"factor {j} must use generators B_{{{j + 1},1..{j}}}")

    @classmethod
    def zero(cls, n: int) -> DKElt:
        return cls(n, tuple(LieElt.zero(j) for j in range(1, n)))

    @classmethod
    def in_factor(cls, n: int, k: int, elt: LieElt) -> DKElt:
        """Place ``elt`` (on generators 1..k-1) in the factor with top index k."""
        facs = [LieElt.zero(j) for j in range(1, n)]
        facs[k - 2] = elt
        return cls(n, tuple(facs))

    @classmethod
    def generator(cls, n: int, k: int, i: int) -> DKElt:
        k, i = canonical_label(k, i)
        if k > n:
            raise ValueError(f"B_{{{k},{i}}} not in the algebra for n={n}")
        return cls.in_factor(n, k, LieElt.generator(i, k - 1))

    def _check(self, other: DKElt) -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other: DKElt) -> DKElt:
        self._check(other)
        return DKElt(self.n, tuple(a + b for a, b in zip(self.factors, other.factors)))

    def __neg__(self) -> DKElt:
        return DKElt(self.n, tuple(-a for a in self.factors))

    def __sub__(self, other: DKElt) -> DKElt:
        return self + (-other)

    def scale(self, c) -> DKElt:
        return DKElt(self.n, tuple(a.scale(c) for a in self.factors))

    def __rmul__(self, c) -> DKElt:
        return self.scale(c)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.factors)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def factor(self, k: int) -> LieElt:
        """Component in the factor with top index k (generators B_{k,*})."""
        return self.factors[k - 2]

    def degrees(self) -> set[int]:
        return set().union(*(f.degrees() for f in self.factors)) if self.factors else set()

    def to_text(self) -> str:
        parts = []
        for k in range(2, self.n + 1):
            f = self.factor(k)
            if f:
                parts.append(f.to_text(var=f"B{k},"))
        return " + ".join(f"({p})" for p in parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "factors": [{"k": k, "elt": self.factor(k).to_json()} for k in range(2, self.n + 1) if self.factor(k)],
        }


class DrinfeldKohno:
    """Bracket on DKElt driven by a derivation action table."""

    def __init__(self, n: int, action: ActionTable | None = None):
        if n < 2:
            raise ValueError("n must be >= 2")
        self.n = n
        self.action = action or default_action
        self._der_cache: dict[tuple[int, int, int, LyndonWord], LieElt] = {}

    def generator(self, k: int, i: int) -> DKElt:
        return DKElt.generator(self.n, k, i)

    def _derive_word(self, k: int, i: int, m: int, w: LyndonWord) -> LieElt:
        # ad(B_{k,i}) on P(w) in L_{m-1}, by the Leibniz rule
        key = (k, i, m, w)
        hit = self._der_cache.get(key)
        if hit is not None:
            return hit
        if len(w) == 1:
            out = self.action(k, i, m, w[0])
        else:
            u, v = standard_factorization(w)
            pu, pv = LieElt(m - 1, {u: 1}), LieElt(m - 1, {v: 1})
            out = lie_bracket(self._derive_word(k, i, m, u), pv) + lie_bracket(pu, self._derive_word(k, i, m, v))
        self._der_cache[key] = out
        return out

    def _derive_generator(self, k: int, i: int, m: int, y: LieElt) -> LieElt:
        out = LieElt.zero(m - 1)
        for w, c in y.terms.items():
            out = out + self._derive_word(k, i, m, w).scale(c)
        return out

    def _act_word(self, k: int, w: LyndonWord, m: int, y: LieElt) -> LieElt:
        # ad(P(w)) for P(w) in L_{k-1}; ad [u, v] = ad u ad v - ad v ad u
        if len(w) == 1:
            return self._derive_generator(k, w[0], m, y)
        u, v = standard_factorization(w)
        return self._act_word(k, u, m, self._act_word(k, v, m, y)) - self._act_word(
            k, v, m, self._act_word(k, u, m, y)
        )

    def act(self, x: LieElt, k: int, y: LieElt, m: int) -> LieElt:
        """[x, y] for x in the factor with top index k < m and y in factor m."""
        if not k < m:
            raise ValueError("acting factor must be lower")
        out = LieElt.zero(m - 1)
        if not y:
            return out
        for w, c in x.terms.items():
            out = out + self._act_word(k, w, m, y).scale(c)
        return out

    def bracket(self, a: DKElt, b: DKElt) -> DKElt:
        a._check(b)
        if a.n != self.n:
            raise ValueError(f"size mismatch: algebra n={self.n}, element n={a.n}")
        out = [LieElt.zero(j) for j in range(1, self.n)]
        for p in range(2, self.n + 1):
            ap, bp = a.factor(p), b.factor(p)
            if ap and bp:
                out[p - 2] = out[p - 2] + lie_bracket(ap, bp)
            for q in range(p + 1, self.n + 1):
                if ap:
                    bq = b.factor(q)
                    if bq:
                        out[q - 2] = out[q - 2] + self.act(ap, p, bq, q)
                if bp:
                    aq = a.factor(q)
                    if aq:
                        out[q - 2] = out[q - 2] - self.act(bp, p, aq, q)
        return DKElt(self.n, tuple(out))

    def left_normed(self, elts: Sequence[DKElt]) -> DKElt:
        acc = elts[0]
        for e in elts[1:]:
            acc = self.bracket(acc, e)
        return acc


_DEFAULT_ALGEBRAS: dict[int, DrinfeldKohno] = {}


def dk_algebra(n: int) -> DrinfeldKohno:
    if n not in _DEFAULT_ALGEBRAS:
        _DEFAULT_ALGEBRAS[n] = DrinfeldKohno(n)
    return _DEFAULT_ALGEBRAS[n]


def dk_bracket(a: DKElt, b: DKElt) -> DKElt:
    a._check(b)
    return dk_algebra(a.n).bracket(a, b)


def relation_instances(n: int) -> Iterable[tuple[str, tuple[int, ...], DKElt, DKElt]]:
    """Every instance of the two 4T families, as (family, sigma, left, right)."""
    gen = lambda a, b: DKElt.generator(n, a, b)
    if n >= 4:
        for s in itertools.permutations(range(1, n + 1), 4):
            yield "disjoint", s, gen(s[1], s[0]), gen(s[3], s[2])
    for s in itertools.permutations(range(1, n + 1), 3):
        yield "triangle", s, gen(s[1], s[0]), gen(s[2], s[0]) + gen(s[2], s[1])


def check_4T(n: int, algebra: DrinfeldKohno | None = None, failures: list | None = None) -> bool:
    """True iff the bracket kills every 4T instance and is antisymmetric on generators."""
    alg = algebra or dk_algebra(n)
    ok = True
    for family, s, left, right in relation_instances(n):
        if alg.bracket(left, right):
            ok = False
            if failures is not None:
                failures.append((family, s))
    labels = [(k, i) for k in range(2, n + 1) for i in range(1, k)]
    for (k, i), (l, j) in itertools.product(labels, repeat=2):
        a, b = alg.generator(k, i), alg.generator(l, j)
        if alg.bracket(a, b) + alg.bracket(b, a):
            ok = False
            if failures is not None:
                failures.append(("antisymmetry", (k, i, l, j)))
    return ok


# --- deletion maps ------------------------------------------------------------------


def psi_dk(a: DKElt, i: int) -> DKElt:
    """Forget point i: kill every B_{k,j} with i in {k, j}, relabel the rest."""
    n = a.n
    if not 1 <= i <= n:
        raise ValueError(f"point {i} out of range 1..{n}")
    shift = lambda x: x - (x > i)
    facs = [LieElt.zero(j) for j in range(1, n - 1)]
    for k in range(2, n + 1):
        if k == i:
            continue
        f = a.factor(k)
        if not f:
            continue
        k2 = shift(k)
        if k2 < 2:
            continue
        relabel = {r: (None if r == i else shift(r)) for r in range(1, k)}
        facs[k2 - 2] = facs[k2 - 2] + substitute_generators(f, relabel, k2 - 1)
    return DKElt(n - 1, tuple(facs))


# --- the graded torus model ---------------------------------------------------------

Multiindex = tuple[int, ...]


@dataclass(frozen=True)
class TorusElt:
    """Associated-graded element of TF(n): multiindex I -> DK element of degree |I|."""

    n: int
    graded: Mapping[Multiindex, DKElt] = field(default_factory=dict)
    torus_dim: int = -1

    def __post_init__(self):
        if self.torus_dim < 0:
            object.__setattr__(self, "torus_dim", self.n - 1)
        clean = {}
        for I, v in self.graded.items():
            I = tuple(I)
            if list(I) != sorted(set(I)) or (I and not 1 <= I[0] <= I[-1] <= self.torus_dim):
                raise ValueError(f"{I} is not an ordered multiindex in 1..{self.torus_dim}")
            if v.n != self.n:
                raise ValueError("graded piece lives in the wrong algebra")
            if v and v.degrees() != {len(I)}:
                raise ValueError(f"piece at {I} is not homogeneous of degree {len(I)}")
            if v:
                clean[I] = v
        object.__setattr__(self, "graded", clean)

    @classmethod
    def zero(cls, n: int, torus_dim: int = -1) -> TorusElt:
        return cls(n, {}, torus_dim)

    def __add__(self, other: TorusElt) -> TorusElt:
        self._check(other)
        out = dict(self.graded)
        for I, v in other.graded.items():
            out[I] = out[I] + v if I in out else v
        return TorusElt(self.n, out, self.torus_dim)

    def __neg__(self) -> TorusElt:
        return TorusElt(self.n, {I: -v for I, v in self.graded.items()}, self.torus_dim)

    def __sub__(self, other: TorusElt) -> TorusElt:
        return self + (-other)

    def scale(self, c) -> TorusElt:
        return TorusElt(self.n, {I: v.scale(c) for I, v in self.graded.items()}, self.torus_dim)

    def _check(self, other: TorusElt) -> None:
        if (self.n, self.torus_dim) != (other.n, other.torus_dim):
            raise ValueError("torus elements of different shapes")

    def is_zero(self) -> bool:
        return not self.graded

    def __bool__(self) -> bool:
        return bool(self.graded)

    def support(self) -> list[Multiindex]:
        return sorted(self.graded, key=lambda I: (len(I), I))

    def piece(self, I: Multiindex) -> DKElt:
        return self.graded.get(tuple(I), DKElt.zero(self.n))


def torus_generator(n: int, k: int, i: int, l: int) -> TorusElt:
    """t_{k,i}(l): the generator B_{k,i} placed in torus coordinate l."""
    return TorusElt(n, {(l,): DKElt.generator(n, k, i)})


def fox_sign(I: Multiindex, J: Multiindex) -> int:
    w = sum(1 for i in I for j in J if i > j)
    return -1 if w % 2 else 1


def fox_bracket(u: TorusElt, v: TorusElt, algebra: DrinfeldKohno | None = None) -> TorusElt:
    """Bilinear graded bracket: overlapping supports give 0, disjoint ones a signed DK bracket."""
    u._check(v)
    alg = algebra or dk_algebra(u.n)
    out: dict[Multiindex, DKElt] = {}
    for I, a in u.graded.items():
        for J, b in v.graded.items():
            if set(I) & set(J):
                continue
            val = alg.bracket(a, b)
            if not val:
                continue
            K = tuple(sorted(I + J))
            if fox_sign(I, J) < 0:
                val = -val
            out[K] = out[K] + val if K in out else val
    return TorusElt(u.n, out, u.torus_dim)


def psi_delete(u: TorusElt, i: int) -> TorusElt:
    """Apply the point-forgetting map to every graded piece; torus coordinates are kept."""
    return TorusElt(u.n - 1, {I: psi_dk(v, i) for I, v in u.graded.items()}, u.torus_dim)


def t_n_sigma(n: int, sigma: Sequence[int], algebra: DrinfeldKohno | None = None) -> TorusElt:
    """[t_{n,1}(1), t_{n,sigma(2)}(sigma(2)), ..., t_{n,sigma(n-1)}(sigma(n-1))]."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(2, n)):
        raise ValueError(f"{sigma} is not a permutation of 2..{n - 1}")
    acc = torus_generator(n, n, 1, 1)
    for s in sigma:
        acc = fox_bracket(acc, torus_generator(n, n, s, s), algebra)
    return acc


def btf_basis(n: int) -> list[TorusElt]:
    if n < 3:
        raise ValueError("btf_basis needs n >= 3")
    return [t_n_sigma(n, s) for s in basis_permutations(n)]


def realized_sign(n: int, sigma: Sequence[int]) -> int:
    """Sign of t(n, sigma)'s top piece relative to B(n, sigma)."""
    sign = 1
    I: tuple[int, ...] = (1,)
    for s in sigma:
        sign *= fox_sign(I, (s,))
        I = tuple(sorted(I + (s,)))
    return sign


# --- the Brunnian kernel on a graded piece --------------------------------------------


def _graded_basis(n: int, degree: int) -> list[tuple[int, LyndonWord]]:
    """Basis of the degree-d part of the DK algebra: (top index k, Lyndon word)."""
    return [(k, w) for k in range(2, n + 1) for w in lyndon_words(k - 1, degree)]


def _content(w: LyndonWord) -> tuple[int, ...]:
    return tuple(sorted(w))


def brunnian_kernel(n: int, degree: int) -> list[DKElt]:
    """Basis of the common kernel of psi_1, ..., psi_n on the degree-d part.

    Every psi_i preserves the top index and the letter content up to an order
    preserving relabel, so the computation splits into blocks indexed by
    (k, content); each block is solved by exact elimination.
    """
    blocks: dict[tuple[int, tuple[int, ...]], list[LyndonWord]] = defaultdict(list)
    for k, w in _graded_basis(n, degree):
        blocks[(k, _content(w))].append(w)
    kernel: list[DKElt] = []
    for (k, _), words in sorted(blocks.items()):
        row_index: dict[tuple, int] = {}
        rows: dict[int, dict[int, Fraction]] = defaultdict(dict)
        for col, w in enumerate(words):
            elt = DKElt.in_factor(n, k, LieElt(k - 1, {w: 1}))
            for i in range(1, n + 1):
                img = psi_dk(elt, i)
                for k2 in range(2, n):
                    for w2, c in img.factor(k2).terms.items():
                        r = row_index.setdefault((i, k2, w2), len(row_index))
                        rows[r][col] = rows[r].get(col, 0) + c
        mat = [rows[r] for r in range(len(row_index))]
        for vec in linalg.nullspace(mat, len(words)):
            kernel.append(DKElt.in_factor(n, k, LieElt(k - 1, {words[j]: c for j, c in vec.items()})))
    return kernel


def _coordinates(elts: Sequence[DKElt], degree: int) -> tuple[list[dict[int, Fraction]], int]:
    index = {b: j for j, b in enumerate(_graded_basis(elts[0].n, degree))} if elts else {}
    rows = []
    for e in elts:
        row = {}
        for k in range(2, e.n + 1):
            for w, c in e.factor(k).terms.items():
                row[index[(k, w)]] = c
        rows.append(row)
    return rows, len(index)


@dataclass
class KernelReport:
    n: int
    kernel_dim: int
    basis_rank: int
    joint_rank: int
    pbw_det: Fraction

    @property
    def spans_equal(self) -> bool:
        return self.kernel_dim == self.basis_rank == self.joint_rank

    @property
    def expected(self) -> int:
        return math.factorial(self.n - 2)

    @property
    def ok(self) -> bool:
        return self.spans_equal and self.kernel_dim == self.expected and self.pbw_det != 0


def btf_kernel_report(n: int) -> KernelReport:
    """Kernel of all deletions on the top piece, compared with span(btf_basis).

    Independence of the basis is established twice: by the rank of its
    coordinates and by the determinant of the PBW leading-coefficient matrix.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    d = n - 1
    top = (tuple(range(1, n)),)
    kernel = brunnian_kernel(n, d)
    basis = [t.piece(top[0]) for t in btf_basis(n)]
    krows, ncols = _coordinates(kernel, d)
    brows, _ = _coordinates(basis, d)
    return KernelReport(
        n=n,
        kernel_dim=linalg.rank(krows, ncols),
        basis_rank=linalg.rank(brows, ncols),
        joint_rank=linalg.rank(krows + brows, ncols),
        pbw_det=linalg.determinant(pbw_matrix(n)),
    )


def btf_kernel_rank(n: int) -> int:
    return btf_kernel_report(n).kernel_dim
