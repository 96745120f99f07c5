"""Free Lie algebras over Q in the Lyndon basis.

Generators are positive integers ordered as integers.  A Lyndon word ``w``
stands for its standard bracketing ``P(w)``: ``P(a) = a`` for a letter and
``P(w) = [P(u), P(v)]`` where ``v`` is the longest proper Lyndon suffix of
``w``.  Every Lie polynomial is stored as a combination of these.

Bracket trees are plain nested pairs: an ``int`` leaf or ``(left, right)``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from . import linalg

LyndonWord = tuple[int, ...]
Tree = Union[int, tuple["Tree", "Tree"]]


# --- Lyndon words ----------------------------------------------------------------


def is_lyndon(w: Sequence[int]) -> bool:
    w = tuple(w)
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def standard_factorization(w: LyndonWord) -> tuple[LyndonWord, LyndonWord]:
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no standard factorization")


def lyndon_words(alphabet: int, length: int) -> list[LyndonWord]:
    """Lyndon words of exactly ``length`` over 1..alphabet, in lex order (Duval)."""
    out = []
    if alphabet < 1 or length < 1:
        return out
    w = [0]
    while w:
        if len(w) == length:
            out.append(tuple(c + 1 for c in w))
        m = len(w)
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == alphabet - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def lyndon_words_with_content(content: Mapping[int, int]) -> list[LyndonWord]:
    """Lyndon words using letter ``a`` exactly ``content[a]`` times."""
    letters = [a for a, k in sorted(content.items()) for _ in range(k)]
    words = {p for p in itertools.permutations(letters) if p[0] == letters[0] and is_lyndon(p)}
    return sorted(words)


def witt_dimension(alphabet: int, degree: int) -> int:
    """Dimension of the degree-d part of the free Lie algebra (Witt's formula)."""
    total = 0
    for d in range(1, degree + 1):
        if degree % d == 0:
            total += _mobius(d) * alphabet ** (degree // d)
    return total // degree


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def standard_tree(w: LyndonWord) -> Tree:
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (standard_tree(u), standard_tree(v))


def leaves(t: Tree) -> list[int]:
    if isinstance(t, int):
        return [t]
    return leaves(t[0]) + leaves(t[1])


def tree_str(t: Tree, var: str = "x") -> str:
    if isinstance(t, int):
        return f"{var}{t}"
    return f"[{tree_str(t[0], var)},{tree_str(t[1], var)}]"


def left_normed_tree(gens: Sequence[int]) -> Tree:
    if not gens:
        raise ValueError("left-normed bracket needs at least one generator")
    t: Tree = gens[0]
    for g in gens[1:]:
        t = (t, g)
    return t


# --- Lyndon rewriting --------------------------------------------------------------


@lru_cache(maxsize=None)
def _bracket_lyndon(a: LyndonWord, b: LyndonWord) -> tuple[tuple[LyndonWord, int], ...]:
    """[P(a), P(b)] in the Lyndon basis, integer coefficients."""
    if a == b:
        return ()
    if a > b:
        return tuple((w, -c) for w, c in _bracket_lyndon(b, a))
    if len(a) == 1:
        return ((a + b, 1),)
    u, v = standard_factorization(a)
    if v >= b:
        return ((a + b, 1),)
    # [[u, v], b] = [u, [v, b]] + [[u, b], v]
    acc: dict[LyndonWord, int] = {}
    for w, c in _bracket_lyndon(v, b):
        for x, d in _bracket_lyndon(u, w):
            acc[x] = acc.get(x, 0) + c * d
    for w, c in _bracket_lyndon(u, b):
        for x, d in _bracket_lyndon(w, v):
            acc[x] = acc.get(x, 0) + c * d
    return tuple(sorted((w, c) for w, c in acc.items() if c))


class GeneratorMismatchError(ValueError):
    pass


class LieElt:
    """Element of the free Lie algebra on generators 1..generator_count."""

    __slots__ = ("generator_count", "terms")

    def __init__(self, generator_count: int, terms: Mapping[LyndonWord, object] | None = None):
        self.generator_count = generator_count
        clean = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                w = tuple(w)
                if not is_lyndon(w):
                    raise ValueError(f"{w} is not a Lyndon word")
                if max(w) > generator_count or min(w) < 1:
                    raise GeneratorMismatchError(f"{w} uses a generator outside 1..{generator_count}")
                clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def _raw(cls, g: int, terms: dict[LyndonWord, Fraction]) -> LieElt:
        e = cls.__new__(cls)
        e.generator_count = g
        e.terms = terms
        return e

    @classmethod
    def zero(cls, generator_count: int) -> LieElt:
        return cls._raw(generator_count, {})

    @classmethod
    def generator(cls, i: int, generator_count: int) -> LieElt:
        return cls(generator_count, {(i,): 1})

    def _check(self, other: LieElt) -> None:
        if self.generator_count != other.generator_count:
            raise GeneratorMismatchError(
                f"generator sets differ: {self.generator_count} vs {other.generator_count}"
            )

    def __add__(self, other: LieElt) -> LieElt:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return LieElt._raw(self.generator_count, out)

    def __neg__(self) -> LieElt:
        return LieElt._raw(self.generator_count, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: LieElt) -> LieElt:
        return self + (-other)

    def scale(self, c) -> LieElt:
        c = Fraction(c)
        if not c:
            return LieElt.zero(self.generator_count)
        return LieElt._raw(self.generator_count, {w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c) -> LieElt:
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElt):
            return NotImplemented
        return self.generator_count == other.generator_count and self.terms == other.terms

    def __hash__(self):
        return hash((self.generator_count, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self) -> list[tuple[LyndonWord, Fraction]]:
        return sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def to_json(self) -> list[dict]:
        return [
            {"lyndon_word": list(w), "coeff": f"{c.numerator}/{c.denominator}"} for w, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, generator_count: int, data: list[dict]) -> LieElt:
        return cls(generator_count, {tuple(t["lyndon_word"]): Fraction(t["coeff"]) for t in data})

    def to_text(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            body = tree_str(standard_tree(w), var)
            mag = abs(c)
            s = body if mag == 1 else f"{mag}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + s)
            else:
                parts.append(("- " if c < 0 else "+ ") + s)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LieElt({self.to_text()})"


def lie_bracket(a: LieElt, b: LieElt) -> LieElt:
    a._check(b)
    out: dict[LyndonWord, Fraction] = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            for w, k in _bracket_lyndon(u, v):
                out[w] = out.get(w, 0) + c * d * k
    return LieElt._raw(a.generator_count, {w: c for w, c in out.items() if c})


def from_tree(t: Tree, generator_count: int) -> LieElt:
    if isinstance(t, int):
        return LieElt.generator(t, generator_count)
    return lie_bracket(from_tree(t[0], generator_count), from_tree(t[1], generator_count))


def left_normed(gens: Sequence[int], generator_count: int | None = None) -> LieElt:
    """[[...[g1, g2], ...], gk] in the Lyndon basis."""
    if not gens:
        raise ValueError("left_normed needs at least one generator")
    g = max(gens) if generator_count is None else generator_count
    acc = LieElt.generator(gens[0], g)
    for x in gens[1:]:
        acc = lie_bracket(acc, LieElt.generator(x, g))
    return acc


def basis_element(n: int, sigma: Sequence[int]) -> LieElt:
    """[x_1, x_sigma(2), ..., x_sigma(n-1)] on generators 1..n-1."""
    return _basis_element(n, tuple(sigma))


@lru_cache(maxsize=None)
def _basis_element(n: int, sigma: tuple[int, ...]) -> LieElt:
    return left_normed((1,) + sigma, n - 1)


@lru_cache(maxsize=None)
def _basis_expansion(n: int, sigma: tuple[int, ...]) -> TensorPoly:
    return uea_expand(_basis_element(n, sigma))


def substitute_generators(a: LieElt, relabel: Mapping[int, int | None], generator_count: int) -> LieElt:
    """Image under a generator map that kills (None) or relabels letters.

    The relabelling must be order preserving on the surviving letters, which
    keeps Lyndon words Lyndon.
    """
    out: dict[LyndonWord, Fraction] = {}
    for w, c in a.terms.items():
        image = tuple(relabel[x] for x in w)
        if any(x is None for x in image):
            continue
        out[image] = out.get(image, 0) + c
    return LieElt(generator_count, out)


# --- tensor (universal enveloping) algebra ---------------------------------------


class TensorPoly:
    """Noncommutative polynomial with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None):
        self.terms = {tuple(w): Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms):
        t = cls.__new__(cls)
        t.terms = terms
        return t

    def __add__(self, other: TensorPoly) -> TensorPoly:
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return TensorPoly._raw(out)

    def __neg__(self) -> TensorPoly:
        return TensorPoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: TensorPoly) -> TensorPoly:
        return self + (-other)

    def __mul__(self, other: TensorPoly) -> TensorPoly:
        out: dict[tuple[int, ...], Fraction] = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                w = u + v
                out[w] = out.get(w, 0) + c * d
        return TensorPoly._raw({w: c for w, c in out.items() if c})

    def scale(self, c) -> TensorPoly:
        c = Fraction(c)
        return TensorPoly._raw({w: c * v for w, v in self.terms.items() if c})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, w: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def __repr__(self) -> str:
        from .magnus import poly_text

        return f"TensorPoly({poly_text(sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])), 'x')})"


def commutator_poly(a: TensorPoly, b: TensorPoly) -> TensorPoly:
    return a * b - b * a


@lru_cache(maxsize=None)
def _expand_lyndon(w: LyndonWord) -> TensorPoly:
    if len(w) == 1:
        return TensorPoly._raw({w: Fraction(1)})
    u, v = standard_factorization(w)
    return commutator_poly(_expand_lyndon(u), _expand_lyndon(v))


def expand_tree(t: Tree) -> TensorPoly:
    if isinstance(t, int):
        return TensorPoly._raw({(t,): Fraction(1)})
    return commutator_poly(expand_tree(t[0]), expand_tree(t[1]))


def uea_expand(a: LieElt) -> TensorPoly:
    """Image in the tensor algebra: [u, v] -> uv - vu."""
    out = TensorPoly()
    for w, c in a.terms.items():
        out = out + _expand_lyndon(w).scale(c)
    return out


def lyndon_coordinates(p: TensorPoly, generator_count: int) -> LieElt:
    """Inverse of ``uea_expand`` by triangularity.

    P(w) equals w plus lexicographically larger words of the same length, so
    the smallest word in the support of a Lie polynomial is Lyndon and its
    coefficient is the coordinate of P(w).
    """
    rest = TensorPoly._raw(dict(p.terms))
    coords: dict[LyndonWord, Fraction] = {}
    while rest.terms:
        w = min(rest.terms, key=lambda u: (len(u), u))
        if not is_lyndon(w):
            raise ValueError(f"not a Lie polynomial: leading word {w} is not Lyndon")
        c = rest.terms[w]
        coords[w] = c
        rest = rest - _expand_lyndon(w).scale(c)
    return LieElt(generator_count, coords)


# --- the multilinear component and its left-normed basis ----------------------------


def multilinear_lyndon_words(m: int) -> list[LyndonWord]:
    """Lyndon words using each of 1..m exactly once."""
    return [w for w in lyndon_words(m, m) if len(set(w)) == m]


def multilinear_dim(n: int) -> int:
    """Dimension of the multilinear degree-(n-1) part on x_1..x_{n-1}, by enumeration."""
    if n < 3:
        raise ValueError("multilinear_dim needs n >= 3")
    dim = len(multilinear_lyndon_words(n - 1))
    if dim != math.factorial(n - 2):
        raise ArithmeticError(f"multilinear dimension {dim} != (n-2)! at n={n}")
    return dim


def basis_permutations(n: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(2, n)))


def pbw_leading_coeff(n: int, sigma: Sequence[int], xi: Sequence[int]) -> Fraction:
    """Coefficient of x_1 x_xi(2) ... x_xi(n-1) in the expansion of B(n, sigma)."""
    perm = set(range(2, n))
    if set(sigma) != perm or len(sigma) != n - 2 or set(xi) != perm or len(xi) != n - 2:
        raise ValueError(f"malformed permutations {sigma}, {xi} of 2..{n - 1}")
    return _basis_expansion(n, tuple(sigma)).coefficient((1,) + tuple(xi))


def pbw_matrix(n: int) -> list[list[Fraction]]:
    perms = basis_permutations(n)
    return [[pbw_leading_coeff(n, s, x) for x in perms] for s in perms]


class NotMultilinearError(ValueError):
    pass


def _check_multilinear_tree(t: Tree, n: int) -> None:
    if sorted(leaves(t)) != list(range(1, n)):
        raise NotMultilinearError(f"{tree_str(t)} is not multilinear in x_1..x_{n - 1}")


def _attach(seq: tuple[int, ...], t: Tree) -> dict[tuple[int, ...], int]:
    # [L(seq), t] as left-normed brackets, via [x, [y, z]] = [[x, y], z] - [[x, z], y]
    if isinstance(t, int):
        return {seq + (t,): 1}
    left, right = t
    out: dict[tuple[int, ...], int] = {}
    for s1, c1 in _attach(seq, left).items():
        for s2, c2 in _attach(s1, right).items():
            out[s2] = out.get(s2, 0) + c1 * c2
    for s1, c1 in _attach(seq, right).items():
        for s2, c2 in _attach(s1, left).items():
            out[s2] = out.get(s2, 0) - c1 * c2
    return {s: c for s, c in out.items() if c}


def _to_front(t: Tree, first: int) -> dict[tuple[int, ...], int]:
    """Rewrite a bracket tree containing ``first`` once as left-normed brackets starting with it."""
    if isinstance(t, int):
        if t != first:
            raise NotMultilinearError(f"generator {first} missing")
        return {(t,): 1}
    left, right = t
    sign = 1
    if first not in leaves(left):
        left, right, sign = right, left, -1
    out: dict[tuple[int, ...], int] = {}
    for seq, c in _to_front(left, first).items():
        for s2, d in _attach(seq, right).items():
            out[s2] = out.get(s2, 0) + sign * c * d
    return {s: c for s, c in out.items() if c}


def rewrite_jacobi(a: Tree | LieElt, n: int) -> dict[tuple[int, ...], Fraction]:
    """Coordinates in {B(n, sigma)} by shuffling x_1 to the front with Jacobi."""
    if isinstance(a, LieElt):
        out: dict[tuple[int, ...], Fraction] = {}
        for w, c in a.terms.items():
            for s, d in rewrite_jacobi(standard_tree(w), n).items():
                out[s] = out.get(s, 0) + c * d
        return {s: c for s, c in out.items() if c}
    _check_multilinear_tree(a, n)
    return {seq[1:]: Fraction(c) for seq, c in _to_front(a, 1).items()}


def rewrite_linear(a: LieElt, n: int) -> dict[tuple[int, ...], Fraction]:
    """Coordinates in {B(n, sigma)} by an exact solve in the Lyndon basis."""
    words = multilinear_lyndon_words(n - 1)
    index = {w: i for i, w in enumerate(words)}
    if any(w not in index for w in a.terms):
        raise NotMultilinearError("input is not in the multilinear component")
    perms = basis_permutations(n)
    columns = [{index[w]: c for w, c in basis_element(n, s).terms.items()} for s in perms]
    x = linalg.solve(columns, {index[w]: c for w, c in a.terms.items()}, len(words))
    return {s: c for s, c in zip(perms, x) if c}


def rewrite_to_basis(a: Tree | LieElt, n: int) -> dict[tuple[int, ...], Fraction]:
    """Coordinates of a multilinear element in the basis {B(n, sigma)}.

    Computed twice, by Jacobi shuffling and by a linear solve; they must agree.
    """
    elt = from_tree(a, n - 1) if not isinstance(a, LieElt) else a
    if not isinstance(a, LieElt):
        _check_multilinear_tree(a, n)
    by_jacobi = rewrite_jacobi(a, n)
    by_solve = rewrite_linear(elt, n)
    if by_jacobi != by_solve:
        raise ArithmeticError(f"rewriting disagrees: jacobi={by_jacobi}, solve={by_solve}")
    return by_solve
