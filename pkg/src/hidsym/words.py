"""Freely reduced words over named generators and their text grammar.

Grammar::

    word  := "1" | term ("*" term)*
    term  := atom ("^" ["-"] digits)?
    atom  := NAME | "(" word ")"

Examples: ``a0*f0*a0^-1``, ``(f0*a0^-1)^2*f0^-1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, TypeVar

T = TypeVar("T")

Letter = tuple[str, int]


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for name, e in letters:
        if e not in (1, -1):
            raise ValueError(f"exponent must be +-1, got {e}")
        if out and out[-1][0] == name and out[-1][1] == -e:
            out.pop()
        else:
            out.append((name, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def gen(cls, name: str, exponent: int = 1) -> "Word":
        return cls(((name, 1 if exponent > 0 else -1),) * abs(exponent))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((n, -e) for n, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def names(self) -> set[str]:
        return {n for n, _ in self.letters}

    def __str__(self):
        return format_word(self)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    parts = []
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        name, e = letters[i]
        power = (j - i) * e
        parts.append(name if power == 1 else f"{name}^{power}")
        i = j
    return "*".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<op>[*^()]))")


class WordSyntaxError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"unexpected character at {pos} in {text!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
        pos = m.end()
    return tokens


def parse_word(text: str) -> Word:
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def expect(value):
        nonlocal pos
        if peek()[1] != value:
            raise WordSyntaxError(f"expected {value!r} in {text!r}")
        pos += 1

    def atom() -> Word:
        nonlocal pos
        kind, value = peek()
        if kind == "name":
            pos += 1
            return Word.gen(value)
        if value == "(":
            pos += 1
            w = expr()
            expect(")")
            return w
        if kind == "int" and value == "1":
            pos += 1
            return Word()
        raise WordSyntaxError(f"unexpected token {value!r} in {text!r}")

    def term() -> Word:
        nonlocal pos
        w = atom()
        if peek()[1] == "^":
            pos += 1
            kind, value = peek()
            if kind != "int":
                raise WordSyntaxError(f"expected integer exponent in {text!r}")
            pos += 1
            w = w ** int(value)
        return w

    def expr() -> Word:
        nonlocal pos
        w = term()
        while peek()[1] == "*":
            pos += 1
            w = w * term()
        return w

    if not tokens:
        raise WordSyntaxError("empty word")
    result = expr()
    if pos != len(tokens):
        raise WordSyntaxError(f"trailing input in {text!r}")
    return result


def evaluate(
    word: Word,
    images: Mapping[str, T],
    identity: T,
    mul: Callable[[T, T], T],
    inverse: Callable[[T], T],
) -> T:
    """Evaluate left to right: ``x*y`` is ``mul(x, y)``."""
    missing = word.names() - set(images)
    if missing:
        raise KeyError(f"unnamed generators: {sorted(missing)}")
    inverses: dict[str, T] = {}
    result = identity
    for name, e in word.letters:
        if e == 1:
            x = images[name]
        else:
            if name not in inverses:
                inverses[name] = inverse(images[name])
            x = inverses[name]
        result = mul(result, x)
    return result
