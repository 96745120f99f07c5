"""Free-group words: letters, free reduction, parsing and commutators.

Words are immutable and always stored freely reduced, so syntactic equality
is equality in the free group.  The alphabet is either the string-link
generators ``t1, t2, ...`` or the meridians ``m1, m2, ...``; the symbol only
matters for rendering.

Commutator convention: ``[x, y] = x y x^-1 y^-1``, and ``[w1, ..., wk]`` is
left-normed, ``[[...[w1, w2], ...], wk]``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class WordSyntaxError(ValueError):
    """Raised for malformed word text; carries the offending position."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class AlphabetError(ValueError):
    pass


class GeneratorRangeError(WordSyntaxError, AlphabetError):
    """A parsed generator index lies outside the alphabet."""


@dataclass(frozen=True, order=True)
class Letter:
    generator: int
    sign: int = 1

    def __post_init__(self):
        if self.generator < 1:
            raise AlphabetError(f"generator index must be >= 1, got {self.generator}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> Letter:
        return Letter(self.generator, -self.sign)


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for a in letters:
        if stack and stack[-1].generator == a.generator and stack[-1].sign == -a.sign:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word over ``alphabet_size`` generators."""

    letters: tuple[Letter, ...]
    alphabet_size: int
    symbol: str = field(default="t", compare=False)

    def __post_init__(self):
        if self.alphabet_size < 0:
            raise AlphabetError("alphabet_size must be nonnegative")
        letters = _reduce(self.letters)
        for a in letters:
            if a.generator > self.alphabet_size:
                raise AlphabetError(
                    f"generator {self.symbol}{a.generator} outside alphabet of size {self.alphabet_size}"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, alphabet_size: int, symbol: str = "t") -> Word:
        return cls((), alphabet_size, symbol)

    @classmethod
    def generator(cls, i: int, alphabet_size: int, sign: int = 1, symbol: str = "t") -> Word:
        return cls((Letter(i, sign),), alphabet_size, symbol)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], alphabet_size: int, symbol: str = "t") -> Word:
        return cls(tuple(Letter(g, s) for g, s in pairs), alphabet_size, symbol)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __pow__(self, k: int) -> Word:
        return power(self, k)

    def __invert__(self) -> Word:
        return inverse(self)

    def is_identity(self) -> bool:
        return not self.letters

    def with_symbol(self, symbol: str) -> Word:
        return Word(self.letters, self.alphabet_size, symbol)

    def __str__(self) -> str:
        return render(self)


def concat(a: Word, b: Word) -> Word:
    if a.alphabet_size != b.alphabet_size:
        raise AlphabetError(f"alphabet mismatch: {a.alphabet_size} vs {b.alphabet_size}")
    return Word(a.letters + b.letters, a.alphabet_size, a.symbol)


def inverse(w: Word) -> Word:
    return Word(tuple(a.inverse() for a in reversed(w.letters)), w.alphabet_size, w.symbol)


def power(w: Word, k: int) -> Word:
    base = w if k >= 0 else inverse(w)
    return Word(base.letters * abs(k), w.alphabet_size, w.symbol)


def product(words: Iterable[Word], alphabet_size: int, symbol: str = "t") -> Word:
    letters: list[Letter] = []
    for w in words:
        if w.alphabet_size != alphabet_size:
            raise AlphabetError(f"alphabet mismatch: {w.alphabet_size} vs {alphabet_size}")
        letters.extend(w.letters)
    return Word(tuple(letters), alphabet_size, symbol)


def commutator(x: Word, y: Word) -> Word:
    return product((x, y, inverse(x), inverse(y)), x.alphabet_size, x.symbol)


def simple_commutator(ws: Sequence[Word]) -> Word:
    """Left-normed commutator ``[[...[w1, w2], w3]...], wk]``."""
    if not ws:
        raise ValueError("simple_commutator needs at least one word")
    acc = ws[0]
    for w in ws[1:]:
        acc = commutator(acc, w)
    return acc


def substitute(w: Word, images: dict[int, Word], alphabet_size: int, symbol: str = "t") -> Word:
    """Apply the homomorphism sending generator ``i`` to ``images[i]``."""
    letters: list[Letter] = []
    inverses: dict[int, Word] = {}
    for a in w.letters:
        img = images[a.generator]
        if a.sign < 0:
            if a.generator not in inverses:
                inverses[a.generator] = inverse(img)
            img = inverses[a.generator]
        letters.extend(img.letters)
    return Word(tuple(letters), alphabet_size, symbol)


def render(w: Word) -> str:
    if not w.letters:
        return "e"
    return " ".join(f"{w.symbol}{a.generator}" + ("'" if a.sign < 0 else "") for a in w.letters)


def random_word(alphabet_size: int, length: int, rng: random.Random, symbol: str = "t") -> Word:
    """A uniformly random reduced word of exactly ``length`` letters."""
    letters: list[Letter] = []
    while len(letters) < length:
        a = Letter(rng.randint(1, alphabet_size), rng.choice((1, -1)))
        if letters and letters[-1] == a.inverse():
            continue
        letters.append(a)
    return Word(tuple(letters), alphabet_size, symbol)


# --- parser -----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>[tm])(?P<idx>\d+)
  | (?P<ident>e)(?![A-Za-z0-9])
  | (?P<power>\^\s*(?P<exp>[+-]?\d+))
  | (?P<prime>')
  | (?P<punct>[\[\],()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if m.group("gen"):
            tokens.append(("gen", m.group(0), pos))
        elif m.group("ident"):
            tokens.append(("ident", "e", pos))
        elif m.group("power"):
            tokens.append(("power", m.group("exp"), pos))
        elif m.group("prime"):
            tokens.append(("prime", "'", pos))
        elif m.group("punct"):
            tokens.append((m.group(0), m.group(0), pos))
        elif kind != "ws":
            raise WordSyntaxError("unrecognised token", pos, text)
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet_size: int):
        self.text = text
        self.n = alphabet_size
        self.tokens = _tokenize(text)
        self.i = 0
        self.symbol: str | None = None

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise WordSyntaxError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def product(self) -> Word:
        factors = []
        while self.peek()[0] in ("gen", "ident", "[", "("):
            factors.append(self.postfix())
        if not factors:
            tok = self.peek()
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise WordSyntaxError(f"expected a word, found {what}", tok[2], self.text)
        return product(factors, self.n)

    def postfix(self) -> Word:
        w = self.atom()
        while self.peek()[0] in ("prime", "power"):
            kind, value, _ = self.tokens[self.i]
            self.i += 1
            w = inverse(w) if kind == "prime" else power(w, int(value))
        return w

    def atom(self) -> Word:
        kind, value, pos = self.peek()
        if kind == "gen":
            self.i += 1
            symbol, idx = value[0], int(value[1:])
            if self.symbol is None:
                self.symbol = symbol
            elif symbol != self.symbol:
                raise WordSyntaxError(f"mixed generator symbols {self.symbol!r} and {symbol!r}", pos, self.text)
            if not 1 <= idx <= self.n:
                raise GeneratorRangeError(f"generator index {value} out of range 1..{self.n}", pos, self.text)
            return Word.generator(idx, self.n)
        if kind == "ident":
            self.i += 1
            return Word.identity(self.n)
        if kind == "(":
            self.i += 1
            w = self.product()
            self.take(")")
            return w
        if kind == "[":
            self.i += 1
            parts = [self.product()]
            while self.peek()[0] == ",":
                self.i += 1
                parts.append(self.product())
            self.take("]")
            return simple_commutator(parts)
        what = "end of input" if kind == "end" else repr(value)
        raise WordSyntaxError(f"unexpected {what}", pos, self.text)


def parse_word(text: str, alphabet_size: int, symbol: str | None = None) -> Word:
    """Parse the ASCII word grammar.

    ``t3`` / ``m3`` are generators, a postfix ``'`` or ``^-1`` inverts,
    juxtaposition multiplies, ``[a, b, c]`` is the left-normed commutator,
    parentheses group and ``e`` is the empty word.  ``^k`` for any integer
    ``k`` is accepted as a power.
    """
    p = _Parser(text, alphabet_size)
    w = p.product()
    p.take("end")
    return w.with_symbol(symbol or p.symbol or "t")
