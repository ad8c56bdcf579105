"""Letters and words over a quiver, independent of any relations.

A word is either a nonempty tuple of letters or a trivial word sitting at a
vertex with a sign in {+1, -1}.  Literal syntax: space separated arrow ids,
a trailing ``-`` marks a formal inverse, ``1_<v>`` / ``1_<v>-`` for trivial
words.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidString


@dataclass(frozen=True)
class Letter:
    arrow: str
    inverted: bool = False

    def inverse(self) -> Letter:
        return Letter(self.arrow, not self.inverted)

    def __str__(self):
        return self.arrow + ("-" if self.inverted else "")


@dataclass(frozen=True)
class StringWord:
    letters: tuple[Letter, ...] = ()
    vertex: str | None = None
    sign: int = 1

    def __post_init__(self):
        if self.letters:
            if self.vertex is not None:
                raise InvalidString("a nontrivial word carries no vertex")
        elif self.vertex is None:
            raise InvalidString("a trivial word needs a vertex")
        if self.sign not in (1, -1):
            raise InvalidString(f"bad sign {self.sign!r}")

    @classmethod
    def trivial(cls, vertex, sign=1) -> StringWord:
        return cls((), str(vertex), sign)

    @classmethod
    def of(cls, letters) -> StringWord:
        letters = tuple(letters)
        if not letters:
            raise InvalidString("empty letter sequence; use StringWord.trivial")
        return cls(letters)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> StringWord:
        if self.is_trivial:
            return StringWord.trivial(self.vertex, -self.sign)
        return StringWord(tuple(x.inverse() for x in reversed(self.letters)))

    @property
    def is_direct(self) -> bool:
        return all(not x.inverted for x in self.letters)

    @property
    def is_inverse(self) -> bool:
        return all(x.inverted for x in self.letters)

    def __str__(self):
        if self.is_trivial:
            return f"1_{self.vertex}" + ("-" if self.sign < 0 else "")
        return " ".join(str(x) for x in self.letters)

    def __repr__(self):
        return f"StringWord({str(self)!r})"


def inverse(word: StringWord) -> StringWord:
    return word.inverse()


def parse_word(text: str) -> StringWord:
    """Parse the literal syntax, e.g. ``"be al- be-"`` or ``"1_3"``."""
    tokens = text.split()
    if not tokens:
        raise InvalidString("empty string literal")
    if len(tokens) == 1 and tokens[0].startswith("1_"):
        tok = tokens[0]
        sign = 1
        if tok.endswith("-"):
            tok, sign = tok[:-1], -1
        vertex = tok[2:]
        if not vertex:
            raise InvalidString(f"trivial word without vertex: {text!r}")
        return StringWord.trivial(vertex, sign)
    letters = []
    for tok in tokens:
        inverted = tok.endswith("-")
        name = tok[:-1] if inverted else tok
        if not name:
            raise InvalidString(f"bad token {tok!r} in {text!r}")
        letters.append(Letter(name, inverted))
    return StringWord.of(letters)


def concat(*parts) -> tuple[Letter, ...]:
    """Concatenate letter sequences of words (trivial words contribute nothing)."""
    out: list[Letter] = []
    for part in parts:
        if isinstance(part, StringWord):
            out.extend(part.letters)
        elif isinstance(part, Letter):
            out.append(part)
        else:
            out.extend(part)
    return tuple(out)
