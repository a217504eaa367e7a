"""Breadth-first balls in finitely generated matrix groups, exact membership and word certificates.

Words act on the left: ``x*y`` evaluates to ``x o y`` (``y`` applied first).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Union

from . import registry as reg
from .moebius import ExtendedIsometry, as_isometry, compose, parse_matrix
from .words import Word, evaluate, format_word, parse_word

DEFAULT_BUDGET = 2 * 10**6
DEFAULT_RADIUS = 6
DELTA0_RADIUS = 8


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class NotFound:
    """Absence from a ball; says nothing about membership in the group."""

    radius: int

    def __bool__(self):
        return False

    def __str__(self):
        return f"not in ball of radius {self.radius}"


# name resolution ----------------------------------------------------------------

_FAMILY = re.compile(r"^(?:a(?P<a>\d+)|p(?P<pk>[1-4])_(?P<pj>-?\d+)|m1_(?P<m>-?\d+)|(?P<g>[fgh](?:bar)?)_(?P<gj>\d+))$")


def resolve(name: str) -> ExtendedIsometry:
    """Registry names plus the conjugation families ``a<k>``, ``p<k>_<j>``, ``m1_<n>``, ``f_<j>``/``fbar_<j>``."""
    table = reg.registry()
    if name in table:
        return table[name]
    m = _FAMILY.match(name)
    if m:
        if m["a"] is not None:
            return reg.a_family(int(m["a"]))
        if m["pk"] is not None:
            return reg.p_family(int(m["pk"]), int(m["pj"]))
        if m["m"] is not None:
            return reg.m1_family(int(m["m"]))
        if m["g"] is not None:
            return reg.gamma_t_generators(int(m["gj"]))[name if m["gj"] != "1" else m["g"]]
    if name.endswith("bar") and name[:-3] in ("f", "g", "h"):
        return reg.conj_gamma_t0_generator(name[:-3])
    raise KeyError(f"unknown element name {name!r}")


def evaluate_word(word: Union[Word, str], images: Optional[Mapping[str, ExtendedIsometry]] = None) -> ExtendedIsometry:
    if isinstance(word, str):
        word = parse_word(word)
    if images is None:
        images = {n: resolve(n) for n in word.names()}
    return evaluate(word, images, ExtendedIsometry.identity(), compose, ExtendedIsometry.inverse)


def evaluate_expression(text: str) -> ExtendedIsometry:
    """A matrix literal ``[[a, b], [c, d]]`` or a word over named elements."""
    text = text.strip()
    if text.startswith("[["):
        return ExtendedIsometry(parse_matrix(text, normalize=True))
    return evaluate_word(text)


# groups --------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratedGroup:
    name: str
    names: tuple[str, ...]
    generators: tuple[ExtendedIsometry, ...] = field(compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names) or len(self.names) != len(self.generators):
            raise ValueError("generator names must be unique")

    @classmethod
    def from_names(cls, name: str, names: Iterable[str]) -> "GeneratedGroup":
        names = tuple(names)
        return cls(name, names, tuple(resolve(n) for n in names))

    @property
    def images(self) -> dict[str, ExtendedIsometry]:
        return dict(zip(self.names, self.generators))

    def letters(self) -> list[tuple[str, int]]:
        """Tie-break order: generator index, then exponent -1 before +1."""
        return [(n, e) for n in self.names for e in (-1, 1)]

    def evaluate(self, word: Union[Word, str]) -> ExtendedIsometry:
        return evaluate_word(word, self.images)


def delta_n_names(n: int) -> list[str]:
    names = ["s", "t"]
    for j in range(1, n + 1):
        names += list(reg.gamma_t_generators(j))
    return names


@lru_cache(maxsize=None)
def preset(name: str) -> GeneratedGroup:
    """Named groups: Delta0, GammaT0, Lambda, H0, HT0, PSL2Z, Delta<n>, H<n>."""
    fixed = {
        "Delta0": ("s", "t"),
        "GammaT0": ("f", "g", "h"),
        "Lambda": ("p1", "p2", "p3"),
        "H0": ("a0", "b0", "f0"),
        "HT0": ("a0", "a1", "f0"),
        "PSL2Z": ("f0", "a0"),
    }
    if name in fixed:
        return GeneratedGroup.from_names(name, fixed[name])
    m = re.fullmatch(r"(Delta|H)(\d+)", name)
    if m:
        n = int(m[2])
        names = delta_n_names(n) if m[1] == "Delta" else ["f0", "b0"] + [f"a{k}" for k in range(n + 1)]
        return GeneratedGroup.from_names(name, names)
    raise KeyError(f"unknown group {name!r}")


# balls ---------------------------------------------------------------------------

@dataclass
class BallIndex:
    group: GeneratedGroup
    radius: int
    words: dict[tuple, Word]
    elements: dict[tuple, ExtendedIsometry]

    def __len__(self):
        return len(self.words)

    def __contains__(self, x) -> bool:
        return as_isometry(x).key() in self.words

    def word_for(self, x) -> Optional[Word]:
        return self.words.get(as_isometry(x).key())

    def audit(self) -> list[tuple]:
        """Keys whose stored word does not evaluate back to the key."""
        return [k for k, w in self.words.items() if self.group.evaluate(w).key() != k]


def enumerate_ball(G: GeneratedGroup, radius: int, budget: int = DEFAULT_BUDGET) -> BallIndex:
    if radius < 0:
        raise ValueError("radius must be >= 0")
    return _ball(G, radius, budget)


@lru_cache(maxsize=32)
def _ball(G: GeneratedGroup, radius: int, budget: int) -> BallIndex:
    letters = G.letters()
    values = {(n, e): (x if e == 1 else x.inverse()) for n, x in G.images.items() for e in (1, -1)}
    identity = ExtendedIsometry.identity()
    words = {identity.key(): Word()}
    elements = {identity.key(): identity}
    frontier = [(identity, Word())]
    for _ in range(radius):
        nxt = []
        for value, word in frontier:
            for letter in letters:
                if word.letters and word.letters[-1] == (letter[0], -letter[1]):
                    continue
                y = compose(value, values[letter])
                k = y.key()
                if k in words:
                    continue
                w = Word(word.letters + (letter,))
                words[k] = w
                elements[k] = y
                if len(words) > budget:
                    raise BudgetExceeded(f"ball in {G.name} exceeds {budget} elements")
                nxt.append((y, w))
        frontier = nxt
        if not frontier:
            break
    return BallIndex(G, radius, words, elements)


def _word_sort_key(G: GeneratedGroup, w: Word):
    index = {n: i for i, n in enumerate(G.names)}
    return (len(w), [(index[n], 0 if e < 0 else 1) for n, e in w.letters])


def express(target, G: GeneratedGroup, radius: int, budget: int = DEFAULT_BUDGET) -> Union[Word, NotFound]:
    """A word of minimal length <= radius evaluating to ``target``, by meeting in the middle."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    target = as_isometry(target)
    left = enumerate_ball(G, (radius + 1) // 2, budget)
    right = enumerate_ball(G, radius // 2, budget)
    best = None
    for key, v in right.words.items():
        # target = u v  <=>  u = target v^-1
        u = left.words.get(compose(target, right.elements[key].inverse()).key())
        if u is None:
            continue
        w = u * v
        if best is None or _word_sort_key(G, w) < _word_sort_key(G, best):
            best = w
    if best is None:
        return NotFound(radius)
    assert G.evaluate(best).key() == target.key()
    return best


def conjugacy_search(x, y, G: GeneratedGroup, radius: int, budget: int = DEFAULT_BUDGET) -> Union[Word, NotFound]:
    """A shortest ``w`` in the ball with ``w x w^-1 = y``."""
    x, y = as_isometry(x), as_isometry(y)
    ball = enumerate_ball(G, radius, budget)
    target = y.key()
    best = None
    for key, w in ball.words.items():
        g = ball.elements[key]
        if compose(compose(g, x), g.inverse()).key() == target:
            if best is None or _word_sort_key(G, w) < _word_sort_key(G, best):
                best = w
    return NotFound(radius) if best is None else best


# identity certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    lhs: str
    rhs: str
    ok: bool
    lhs_value: str
    rhs_value: str


def verify_identity_set(identities: Iterable[tuple[str, str]]) -> list[IdentityCheck]:
    """Evaluate each side exactly (word over named elements or matrix literal) and compare in PSL2."""
    out = []
    for lhs, rhs in identities:
        x, y = evaluate_expression(lhs), evaluate_expression(rhs)
        out.append(IdentityCheck(lhs, rhs, x.key() == y.key(), str(x), str(y)))
    return out


# displayed word identities in H_T0 and PSL2(Z)
WORD_IDENTITIES = (
    ("f", "a0*f0*a0^-1"),
    ("g", "(a0^-1*a1)*f0^-1*(a0^-1*a1)^-1"),
    ("h", "a1*a0*f0^-1*a1"),
    ("m1", "(f0*a0^-1)^2*f0^-1"),
)

G_M1_G_INV = ("g*m1*g^-1", "[[1, -1], [2, -1]]")


def m1_family_certificate(n: int) -> tuple[str, str]:
    """m1_n = (f0 a_2n^-1)^2 f0^-1, placing m1_n in H_2n."""
    return (f"m1_{n}", f"(f0*a{2 * n}^-1)^2*f0^-1")

