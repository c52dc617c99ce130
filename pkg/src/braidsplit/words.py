"""Generator symbols and freely reduced words over them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping


class WordError(ValueError):
    pass


# kind -> number of indices carried by the symbol
_ARITY = {"a": 1, "b": 1, "C": 2, "sigma": 1, "x": 0, "y": 0, "sg": 0, "rho": 1}
_ORDER = {k: i for i, k in enumerate(["a", "b", "C", "sigma", "x", "y", "sg", "rho"])}


@dataclass(frozen=True)
class Symbol:
    """One generator.  ``kind`` is a, b, C or sigma; the kernel kinds x, y, sg
    and rho only appear in presentations of the abelianized-kernel quotient."""

    kind: str
    index: tuple = ()

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise WordError(f"unknown generator kind {self.kind!r}")
        idx = self.index
        if isinstance(idx, int):
            idx = (idx,)
            object.__setattr__(self, "index", idx)
        if len(idx) != _ARITY[self.kind]:
            raise WordError(f"{self.kind} takes {_ARITY[self.kind]} indices, got {idx}")
        if any(not isinstance(i, int) or i < 1 for i in idx):
            raise WordError(f"indices must be positive integers: {self.kind}{idx}")
        if self.kind == "C" and idx[0] > idx[1]:
            raise WordError(f"C{idx[0]}.{idx[1]} needs i <= j")

    @property
    def is_trivial(self):
        return self.kind == "C" and self.index[0] == self.index[1]

    def sort_key(self):
        return (_ORDER[self.kind], self.index)

    def __str__(self):
        if self.kind == "C":
            return f"C{self.index[0]}.{self.index[1]}"
        if self.kind == "sigma":
            return f"s{self.index[0]}"
        if self.kind == "rho":
            return f"r{self.index[0]}"
        if self.index:
            return f"{self.kind}{self.index[0]}"
        return self.kind

    def __repr__(self):
        return f"Symbol({self})"


def a(i=1):
    return Symbol("a", (i,))


def b(i=1):
    return Symbol("b", (i,))


def C(i, j):
    return Symbol("C", (i, j))


def sigma(i):
    return Symbol("sigma", (i,))


def rho(i):
    return Symbol("rho", (i,))


X = Symbol("x")
Y = Symbol("y")
SG = Symbol("sg")


def free_reduce(letters: Iterable) -> tuple:
    out = []
    for sym, e in letters:
        if not isinstance(sym, Symbol):
            raise WordError(f"not a generator symbol: {sym!r}")
        if e == 0 or sym.is_trivial:
            continue
        if out and out[-1][0] == sym:
            e += out[-1][1]
            out.pop()
            if e:
                out.append((sym, e))
        else:
            out.append((sym, e))
    return tuple(out)


class Word:
    """Run-length encoded reduced word: a tuple of (Symbol, nonzero exponent)."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable = ()):
        self.letters = free_reduce(letters)

    @classmethod
    def gen(cls, sym, e=1):
        return cls([(sym, e)])

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return Word(self.letters + Word.coerce(other).letters)

    def __rmul__(self, other):
        return Word.coerce(other) * self

    def __pow__(self, k):
        if k < 0:
            return invert(self) ** (-k)
        return Word(self.letters * k)

    def __invert__(self):
        return invert(self)

    @staticmethod
    def coerce(w):
        if isinstance(w, Word):
            return w
        if isinstance(w, Symbol):
            return Word.gen(w)
        raise TypeError(f"cannot make a word from {w!r}")

    def symbols(self):
        return {s for s, _ in self.letters}

    def exponent_sum(self, sym):
        return sum(e for s, e in self.letters if s == sym)

    def unit_letters(self):
        """Expand to single letters (symbol, +-1)."""
        for s, e in self.letters:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield s, step

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


EMPTY = Word()


def invert(w: Word) -> Word:
    return Word((s, -e) for s, e in reversed(w.letters))


def substitute(w: Word, images: Mapping) -> Word:
    """Apply the homomorphism given by ``images`` (symbol -> Word)."""
    out = []
    for s, e in w.letters:
        if s not in images:
            raise WordError(f"no image given for generator {s}")
        img = Word.coerce(images[s])
        piece = img.letters if e > 0 else invert(img).letters
        out.extend(piece * abs(e))
    return Word(out)


def word(*parts) -> Word:
    """Build a word from symbols, (symbol, exp) pairs and words."""
    out = []
    for p in parts:
        if isinstance(p, Word):
            out.extend(p.letters)
        elif isinstance(p, Symbol):
            out.append((p, 1))
        else:
            out.append(tuple(p))
    return Word(out)


_TOKEN = re.compile(r"^(a|b|s|r)(\d+)$|^C(\d+)\.(\d+)$|^(x|y|sg)$")


def parse_symbol(tok: str) -> Symbol:
    m = _TOKEN.match(tok)
    if not m:
        raise WordError(f"bad generator token {tok!r}")
    if m.group(1):
        kind = {"a": "a", "b": "b", "s": "sigma", "r": "rho"}[m.group(1)]
        return Symbol(kind, (int(m.group(2)),))
    if m.group(3):
        return Symbol("C", (int(m.group(3)), int(m.group(4))))
    return Symbol(m.group(5))


def parse_word(text: str) -> Word:
    """Parse ``a1 b2^-3 C1.3 s2^2``; the empty word is ``e``."""
    letters = []
    for tok in text.split():
        if tok == "e":
            continue
        base, _, exp = tok.partition("^")
        try:
            e = int(exp) if exp else 1
        except ValueError:
            raise WordError(f"bad exponent in {tok!r}") from None
        letters.append((parse_symbol(base), e))
    return Word(letters)


def format_word(w: Word) -> str:
    if not w.letters:
        return "e"
    return " ".join(str(s) if e == 1 else f"{s}^{e}" for s, e in w.letters)
