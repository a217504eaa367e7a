"""Reduction of Gaussian-integer matrices modulo the prime 1 + 2i onto PSL2(F5)."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .moebius import ProjectiveMatrix
from .numfield import FieldElem
from .permgroup import Permutation, phi
from .registry import P_WORDS, mat
from .words import Word, evaluate, parse_word

P = 5
# 1 + 2i = 0 forces i = 2, since 2 * 2 = -1 mod 5
I_IMAGE = 2


class NotGaussianInteger(ValueError):
    pass


def _check_i_image(i_image: int) -> None:
    if (i_image * i_image + 1) % P:
        raise ValueError(f"{i_image}^2 != -1 mod {P}")


def reduce_scalar(x: FieldElem, i_image: int = I_IMAGE) -> int:
    _check_i_image(i_image)
    if not x.is_gaussian_integer():
        raise NotGaussianInteger(f"{x} is not a Gaussian integer")
    return (int(x.a) + int(x.c) * i_image) % P


@dataclass(frozen=True, order=True)
class PSL2F5:
    """Element of PSL2(F5) in canonical sign form: first nonzero entry is 1 or 2."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        entries = [x % P for x in (self.a, self.b, self.c, self.d)]
        if (entries[0] * entries[3] - entries[1] * entries[2]) % P != 1:
            raise ValueError(f"determinant of {entries} is not 1 mod {P}")
        lead = next(x for x in entries if x)
        if lead > 2:
            entries = [-x % P for x in entries]
        for name, value in zip("abcd", entries):
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls) -> "PSL2F5":
        return cls(1, 0, 0, 1)

    def __mul__(self, o: "PSL2F5") -> "PSL2F5":
        return PSL2F5(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                      self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def inverse(self) -> "PSL2F5":
        return PSL2F5(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "PSL2F5":
        base = self if n >= 0 else self.inverse()
        result = PSL2F5.identity()
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return self == PSL2F5.identity()

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def reduce_matrix(m: ProjectiveMatrix, i_image: int = I_IMAGE) -> PSL2F5:
    return PSL2F5(*(reduce_scalar(x, i_image) for x in m.entries))


def _closure(gens: Iterable[PSL2F5]) -> set[PSL2F5]:
    gens = list(gens)
    seen = {PSL2F5.identity()}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def image_order(gens: Iterable[ProjectiveMatrix], i_image: int = I_IMAGE) -> int:
    return len(_closure(reduce_matrix(g, i_image) for g in gens))


def psl2_f5_order() -> int:
    return len(_closure([PSL2F5(1, 1, 0, 1), PSL2F5(0, 1, -1, 0)]))


def kernel_contains(m: ProjectiveMatrix, i_image: int = I_IMAGE) -> bool:
    return reduce_matrix(m, i_image).is_identity()


# theta versus phi on Lambda ----------------------------------------------------------

LAMBDA_GENERATORS = ("p1", "p2", "p3")
# phi(f) corresponds to this class
PHI_F_IMAGE = PSL2F5(1, 0, 4, 1)


def phi_of_p(name: str) -> Permutation:
    """phi(p_k) through the displayed word for p_k in f, g, h."""
    images = {n: phi(n) for n in ("f", "g", "h")}
    word = parse_word(P_WORDS[name][1])
    return evaluate(word, images, Permutation.identity(12), lambda x, y: x * y, Permutation.inverse)


@dataclass(frozen=True)
class ThetaPhiResult:
    ok: bool
    words_checked: int
    witness: Optional[Word] = None
    theta: Optional[PSL2F5] = None
    phi_image: Optional[Permutation] = None

    def __bool__(self):
        return self.ok


def _reduced_words(letters, radius):
    """Freely reduced words of length <= radius, shortlex order, with their letter lists."""
    yield ()
    frontier = [()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for letter in letters:
                if w and w[-1][0] == letter[0] and w[-1][1] == -letter[1]:
                    continue
                nxt.append(w + (letter,))
        yield from nxt
        frontier = nxt


def check_theta_equals_phi(radius: int, i_image: int = I_IMAGE,
                           phi_f_image: PSL2F5 = PHI_F_IMAGE) -> ThetaPhiResult:
    """Compare the mod (1+2i) reduction with phi on every Lambda-word of length <= radius,
    identifying phi(f)^k with ``phi_f_image``^k."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    f = phi("f")
    identification = {}
    power = Permutation.identity(12)
    target = PSL2F5.identity()
    for _ in range(f.order()):
        identification[power] = target
        power, target = power * f, target * phi_f_image

    theta_gen = {n: reduce_matrix(mat(n), i_image) for n in LAMBDA_GENERATORS}
    phi_gen = {n: phi_of_p(n) for n in LAMBDA_GENERATORS}
    letters = [(n, e) for n in LAMBDA_GENERATORS for e in (-1, 1)]
    theta_val = {n: {1: theta_gen[n], -1: theta_gen[n].inverse()} for n in LAMBDA_GENERATORS}
    phi_val = {n: {1: phi_gen[n], -1: phi_gen[n].inverse()} for n in LAMBDA_GENERATORS}

    checked = 0
    for letters_w in _reduced_words(letters, radius):
        theta_w, phi_w = PSL2F5.identity(), Permutation.identity(12)
        for n, e in letters_w:
            theta_w = theta_w * theta_val[n][e]
            phi_w = phi_w * phi_val[n][e]
        checked += 1
        if identification.get(phi_w) != theta_w:
            return ThetaPhiResult(False, checked, Word(letters_w), theta_w, phi_w)
    return ThetaPhiResult(True, checked)
