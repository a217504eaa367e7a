"""Permutations of {1..n}, generated subgroups and the explicit representation into S12."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .words import Word, evaluate, parse_word

DEFAULT_CLOSURE_CAP = 10**6
SUBGROUP_ENUMERATION_CAP = 10**4


class ClosureBudgetExceeded(RuntimeError):
    pass


class NotBlockInvariant(ValueError):
    def __init__(self, generator: "Permutation", block: str, image: frozenset):
        self.generator, self.block, self.image = generator, block, image
        super().__init__(f"{generator} maps block {block} to {sorted(image)}, which is not a block")


class Permutation:
    """Bijection of {1..degree}; ``(p * q)(i) = p(q(i))``."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse ``(1 5 9)(2 6 10)``; ``()`` or an empty string is the identity."""
        return cls(_cycles_to_images(parse_cycles(text), degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        mine = self.images
        return Permutation(tuple(mine[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
        base = self if n >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(n)):
            result = result * base
        return result

    def conjugate(self, x: "Permutation") -> "Permutation":
        """``x * self * x^-1``."""
        return x * self * x.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def order(self) -> int:
        n = 1
        for cyc in self.cycles():
            n = n * len(cyc) // gcd(n, len(cyc))
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation.from_cycles({format_cycles(self)!r}, {self.degree})"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[str]]:
    text = text.strip()
    cycles = _CYCLE.findall(text)
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"cannot parse cycle notation {text!r}")
    return [c.split() for c in cycles if c.split()]


def _cycles_to_images(cycles: list[list[str]], degree: int) -> list[int]:
    images = list(range(1, degree + 1))
    seen = set()
    for cyc in cycles:
        pts = [int(x) for x in cyc]
        for p in pts:
            if not 1 <= p <= degree or p in seen:
                raise ValueError(f"bad point {p} in cycle {cyc}")
            seen.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b
    return images


def format_cycles(p: Permutation, labels: Optional[Sequence[str]] = None) -> str:
    """Cycle notation; ``labels[i-1]`` names point ``i`` when given."""
    name = (lambda i: labels[i - 1]) if labels else str
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(name(i) for i in cyc) + ")" for cyc in cycles)


class PermGroup:
    """Subgroup of S_n generated by ``generators``; elements enumerated on demand."""

    def __init__(self, generators: Iterable[Permutation], degree: Optional[int] = None,
                 cap: int = DEFAULT_CLOSURE_CAP, elements: Optional[frozenset] = None):
        self.generators = tuple(generators)
        degrees = {g.degree for g in self.generators}
        if degree is not None:
            degrees.add(degree)
        if len(degrees) != 1:
            raise ValueError("generators must share one degree (or give degree for the trivial group)")
        self.degree = degrees.pop()
        self.cap = cap
        if elements is not None:
            self.__dict__["elements"] = elements

    @cached_property
    def elements(self) -> frozenset:
        identity = Permutation.identity(self.degree)
        seen = {identity}
        queue = deque([identity])
        gens = [g for g in self.generators if not g.is_identity()]
        while queue:
            x = queue.popleft()
            for g in gens:
                y = g * x
                if y not in seen:
                    seen.add(y)
                    if len(seen) > self.cap:
                        raise ClosureBudgetExceeded(f"closure exceeds {self.cap} elements")
                    queue.append(y)
        return frozenset(seen)

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order()

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.elements <= other.elements

    def orbit(self, point: int) -> set[int]:
        orbit, queue = {point}, deque([point])
        while queue:
            i = queue.popleft()
            for g in self.generators:
                j = g(i)
                if j not in orbit:
                    orbit.add(j)
                    queue.append(j)
        return orbit

    def conjugate_by(self, x: Permutation) -> "PermGroup":
        return PermGroup([g.conjugate(x) for g in self.generators], self.degree,
                         elements=frozenset(g.conjugate(x) for g in self.elements))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators=[{', '.join(map(str, self.generators))}])"


def closure(gens: Iterable[Permutation], degree: Optional[int] = None, cap: int = DEFAULT_CLOSURE_CAP) -> PermGroup:
    group = PermGroup(gens, degree, cap)
    group.elements
    return group


def _from_elements(elements: Iterable[Permutation], degree: int) -> PermGroup:
    elements = frozenset(elements)
    return PermGroup(sorted(elements), degree, elements=elements)


def stabilizer(G: PermGroup, point: int) -> PermGroup:
    if not 1 <= point <= G.degree:
        raise ValueError(f"point {point} outside 1..{G.degree}")
    return _from_elements((g for g in G.elements if g(point) == point), G.degree)


def intersect(H1: PermGroup, H2: PermGroup) -> PermGroup:
    if H1.degree != H2.degree:
        raise ValueError("degree mismatch")
    return _from_elements(H1.elements & H2.elements, H1.degree)


@dataclass(frozen=True)
class RelationAudit:
    ok: bool
    failing: Optional[str] = None
    value: Optional[Permutation] = None


def verify_relations(images: Mapping[str, Permutation], relations: Iterable[str | Word]) -> RelationAudit:
    """Check that every relator evaluates to the identity; report the first that does not."""
    degree = next(iter(images.values())).degree
    identity = Permutation.identity(degree)
    for rel in relations:
        word = parse_word(rel) if isinstance(rel, str) else rel
        value = evaluate(word, images, identity, lambda x, y: x * y, Permutation.inverse)
        if not value.is_identity():
            return RelationAudit(False, str(rel), value)
    return RelationAudit(True)


# blocks --------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockSystem:
    names: tuple[str, ...]
    blocks: tuple[frozenset, ...]

    def __post_init__(self):
        if len(self.names) != len(self.blocks) or len(set(self.names)) != len(self.names):
            raise ValueError("block names must be unique, one per block")
        sizes = {len(b) for b in self.blocks}
        union = set().union(*self.blocks)
        if len(sizes) != 1 or len(union) != sum(len(b) for b in self.blocks):
            raise ValueError("blocks must be disjoint and of equal size")

    @classmethod
    def from_mapping(cls, blocks: Mapping[str, Iterable[int]]) -> "BlockSystem":
        return cls(tuple(blocks), tuple(frozenset(b) for b in blocks.values()))

    def index_of(self, block: frozenset) -> Optional[int]:
        try:
            return self.blocks.index(block)
        except ValueError:
            return None


def block_permutation(g: Permutation, blocks: BlockSystem) -> Permutation:
    images = []
    for name, block in zip(blocks.names, blocks.blocks):
        image = frozenset(g(i) for i in block)
        j = blocks.index_of(image)
        if j is None:
            raise NotBlockInvariant(g, name, image)
        images.append(j + 1)
    return Permutation(images)


def block_action(G: PermGroup, blocks: BlockSystem) -> PermGroup:
    """Induced group on the blocks; points are block positions 1..k."""
    gens = [block_permutation(g, blocks) for g in G.generators]
    return closure(gens, len(blocks.blocks))


# subgroups --------------------------------------------------------------------------

def subgroups(H: PermGroup, cap: int = SUBGROUP_ENUMERATION_CAP) -> list[PermGroup]:
    """All subgroups, as joins of cyclic subgroups.  Sorted by order."""
    if H.order() > cap:
        raise ClosureBudgetExceeded(f"subgroup enumeration limited to order {cap}")
    cyclic = {}
    for g in H.elements:
        c = closure([g], H.degree)
        cyclic[c.elements] = c
    found = dict(cyclic)
    frontier = list(cyclic.values())
    while frontier:
        new = []
        for K in frontier:
            for C in cyclic.values():
                if C.elements <= K.elements:
                    continue
                J = closure(K.generators + C.generators, H.degree)
                if J.elements not in found:
                    found[J.elements] = J
                    new.append(J)
        frontier = new
    return sorted(found.values(), key=lambda K: (K.order(), sorted(K.elements)))


def normalizes(x: Permutation, K: PermGroup) -> bool:
    return all(g.conjugate(x) in K for g in K.generators)


def largest_normalized(H: PermGroup, x: Permutation) -> PermGroup:
    """The largest subgroup K of H with x K x^-1 = K."""
    candidates = [K for K in subgroups(H) if normalizes(x, K)]
    best = max(candidates, key=lambda K: K.order())
    # the join of normalized subgroups is normalized, so the maximum is unique
    assert all(K.is_subgroup_of(best) for K in candidates)
    return best


def largest_normalized_by_intersection(H: PermGroup, x: Permutation) -> PermGroup:
    """Independent route: the intersection of all x^k H x^-k."""
    result, conj = H, H
    for _ in range(x.order()):
        conj = conj.conjugate_by(x)
        result = intersect(result, conj)
    return result


def orbits_of_affine_map(modulus: int, multiplier: int) -> list[list[int]]:
    """Orbits of ``j -> multiplier * j mod modulus``, each listed in iteration order."""
    if gcd(multiplier, modulus) != 1:
        raise ValueError("multiplier must be a unit")
    seen, orbits = set(), []
    for start in range(modulus):
        if start in seen:
            continue
        orbit, j = [], start
        while j not in seen:
            seen.add(j)
            orbit.append(j)
            j = multiplier * j % modulus
        orbits.append(orbit)
    return orbits


# the representation of H_T0 into S12 ---------------------------------------------------

PHI_DEGREE = 12

PHI_CYCLES = {
    "a0": "(1 5 9)(2 6 10)(3 7 11)(4 8 12)",
    "a1": "(1 8 10)(2 7 9)(3 6 12)(4 5 11)",
    "f0": "(1 5 11 10 3)(2 7 6 8 12)",
    "f": "(2 7 5 9 3)(4 6 11 10 12)",
    "g": "(2 9 12 7 4)(3 11 6 8 5)",
    "h": "(2 12 7 8 6 3 4 11 10 9 5)",
    "m1": "(1 8)(2 12)(3 4)(5 11)(6 9)(7 10)",
}

PHI_GENERATORS = ("a0", "a1", "f0")

# relators of the presentation of H_T0
H_T0_RELATORS = ("a0^3", "a1^3", "(a0*a1^-1)^2", "(a0*f0)^2", "(a1*f0)^2")

# images of a0, a1 on the triples, as printed
PSI_CYCLES = {"a0": "(D E F)", "a1": "(C D F)"}

ABCD_BLOCKS = {"C": (1, 5, 9), "D": (8, 2, 11), "E": (3, 6, 12), "F": (4, 7, 10)}


def phi(name: str) -> Permutation:
    return Permutation.from_cycles(PHI_CYCLES[name], PHI_DEGREE)


def phi_images() -> dict[str, Permutation]:
    return {name: phi(name) for name in PHI_CYCLES}


def triples() -> BlockSystem:
    return BlockSystem.from_mapping(ABCD_BLOCKS)


def parse_block_cycles(text: str, blocks: BlockSystem) -> Permutation:
    """``(D E F)`` read on the named blocks of ``blocks``."""
    positions = {name: str(k) for k, name in enumerate(blocks.names, 1)}
    renamed = [[positions[x] for x in cyc] for cyc in parse_cycles(text)]
    return Permutation(_cycles_to_images(renamed, len(blocks.names)))
