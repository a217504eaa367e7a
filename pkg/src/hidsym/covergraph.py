"""Graph-of-spaces model of the 11-sheeted covers N_n and of their closed doubles.

Pieces are covers of the base pieces (M_S, the copies M_T(i), and mirror
copies); ports are boundary components of pieces lying over a base boundary
sphere; gluings identify ports by J, R_T or the mirror map.  Only the data the
gluing argument uses is recorded: degrees, component tags and the cusp
permutation induced by the hidden extension on the degree-1 component.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from typing import Optional

import networkx as nx

from .permgroup import Permutation, closure, largest_normalized, orbits_of_affine_map, phi

SHEETS = 11
MUTATION = Permutation.from_cycles("(1 3)(2 4)", 4)

F0, GCOMP, GINVCOMP = "F0", "Gcomp", "Ginvcomp"
COMPONENT_TAGS = (F0, GCOMP, GINVCOMP)

# cover of M_S glued by J to each boundary component of the T-cover
J_TABLE = {F0: "S-plain", GCOMP: "Na", GINVCOMP: "Nb"}
COVER_DEGREES = {"S-plain": 1, "Na": 5, "Nb": 5, "Ttilde": SHEETS}
# R_T and the mirror map send each component to the copy with the same tag
TAG_CORRESPONDENCE = {"J": {t: t for t in COMPONENT_TAGS}, "R_T": {t: t for t in COMPONENT_TAGS},
                      "mirror": {t: t for t in COMPONENT_TAGS}}


class InvalidParameter(ValueError):
    pass


# boundary components of the T0-cover ------------------------------------------------

def h_exponent(x: Permutation) -> int:
    """The j with x = h^j f^k for some k, read off from phi."""
    h, f = phi("h"), phi("f")
    for j in range(SHEETS):
        for k in range(5):
            if h ** j * f ** k == x:
                return j
    raise ValueError(f"{x} is not in <h, f>")


@dataclass(frozen=True)
class ComponentCensus:
    orbits: dict[str, tuple[int, ...]]

    @property
    def degrees(self) -> dict[str, int]:
        return {tag: len(orbit) for tag, orbit in self.orbits.items()}


def boundary_census() -> ComponentCensus:
    """Tag each orbit of j -> 4j mod 11: the orbit of 0 is F0, the orbit holding the
    h-exponent of phi(g) is Gcomp, the one holding that of phi(g^-1) is Ginvcomp."""
    orbits = orbits_of_affine_map(SHEETS, 4)
    g = phi("g")
    anchors = {F0: 0, GCOMP: h_exponent(g), GINVCOMP: h_exponent(g.inverse())}
    tagged = {}
    for tag, j in anchors.items():
        orbit = next(o for o in orbits if j in o)
        tagged[tag] = tuple(sorted(orbit))
    if len({o for o in tagged.values()}) != 3:
        raise AssertionError("component tags do not separate the three orbits")
    return ComponentCensus(tagged)


# graph data ------------------------------------------------------------------------

@dataclass(frozen=True)
class Piece:
    id: str
    base: str
    cover_tag: str
    degree: int


@dataclass(frozen=True)
class BoundaryPort:
    id: str
    piece: str
    side: str  # "minus" | "plus"
    component_tag: str
    degree: int
    sphere: str
    cusp_labels: frozenset = frozenset({1, 2, 3, 4})
    # permutation of cusp labels induced by the extension; None where it is not a lift
    mutation_marker: Optional[Permutation] = None
    # whether the extension preserves this component
    preserved: bool = True


@dataclass(frozen=True)
class Gluing:
    port_a: str
    port_b: str
    map_tag: str  # "J" | "R_T" | "mirror"


@dataclass
class CoverGraph:
    pieces: dict[str, Piece]
    ports: dict[str, BoundaryPort]
    gluings: list[Gluing]
    n: int
    m: Optional[int] = None

    @property
    def closed(self) -> bool:
        return self.m is not None

    def glued_ports(self) -> set[str]:
        return {p for g in self.gluings for p in (g.port_a, g.port_b)}

    def unglued_ports(self) -> list[BoundaryPort]:
        used = self.glued_ports()
        return [p for pid, p in self.ports.items() if pid not in used]

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        for p in self.pieces.values():
            G.add_node(p.id, base=p.base, cover_tag=p.cover_tag, degree=p.degree)
        for gl in self.gluings:
            a, b = self.ports[gl.port_a], self.ports[gl.port_b]
            G.add_edge(a.piece, b.piece, map_tag=gl.map_tag, tag_a=a.component_tag,
                       tag_b=b.component_tag, degree=a.degree, port_a=a.id, port_b=b.id)
        return G

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def without_piece(self, piece_id: str) -> "CoverGraph":
        ports = {k: p for k, p in self.ports.items() if p.piece != piece_id}
        gluings = [g for g in self.gluings if g.port_a in ports and g.port_b in ports]
        pieces = {k: p for k, p in self.pieces.items() if k != piece_id}
        return CoverGraph(pieces, ports, gluings, self.n, self.m)

    def with_gluing_replaced(self, index: int, gluing: Gluing) -> "CoverGraph":
        gluings = list(self.gluings)
        gluings[index] = gluing
        return CoverGraph(dict(self.pieces), dict(self.ports), gluings, self.n, self.m)

    def with_port(self, port: BoundaryPort) -> "CoverGraph":
        ports = dict(self.ports)
        ports[port.id] = port
        return CoverGraph(dict(self.pieces), ports, list(self.gluings), self.n, self.m)


def _port_id(piece: str, side: str, tag: str) -> str:
    return f"{piece}.{side}.{tag}"


def _add_half(pieces, ports, gluings, n: int, prefix: str, sphere_prefix: str) -> None:
    """M_S-cover plus T-covers 1..n; J and R_T gluings; outer plus ports left open."""
    census = boundary_census().degrees
    mirror = "mirror-" if prefix else ""
    first_sphere = f"{sphere_prefix}S(0)"
    for tag in COMPONENT_TAGS:
        cover = J_TABLE[tag]
        pid = prefix + {"S-plain": "MS", "Na": "Na", "Nb": "Nb"}[cover]
        pieces[pid] = Piece(pid, f"{mirror}M_S", cover, COVER_DEGREES[cover])
        port = BoundaryPort(_port_id(pid, "plus", tag), pid, "plus", tag, census[tag], first_sphere,
                            mutation_marker=MUTATION if tag == F0 else None)
        ports[port.id] = port
    for i in range(1, n + 1):
        pid = f"{prefix}T{i}"
        pieces[pid] = Piece(pid, f"{mirror}M_T({i})", "Ttilde", SHEETS)
        for side, sphere in (("minus", f"{sphere_prefix}S({i - 1})"), ("plus", f"{sphere_prefix}S({i})")):
            for tag in COMPONENT_TAGS:
                port = BoundaryPort(_port_id(pid, side, tag), pid, side, tag, census[tag], sphere,
                                    mutation_marker=MUTATION if tag == F0 else None)
                ports[port.id] = port
    ms_ids = {F0: prefix + "MS", GCOMP: prefix + "Na", GINVCOMP: prefix + "Nb"}
    for tag in COMPONENT_TAGS:
        gluings.append(Gluing(_port_id(ms_ids[tag], "plus", tag), _port_id(f"{prefix}T1", "minus", tag), "J"))
    for i in range(1, n):
        for tag in COMPONENT_TAGS:
            gluings.append(Gluing(_port_id(f"{prefix}T{i}", "plus", tag),
                                  _port_id(f"{prefix}T{i + 1}", "minus", TAG_CORRESPONDENCE["R_T"][tag]), "R_T"))


def build_N(n: int) -> CoverGraph:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"n must be a positive integer, got {n!r}")
    pieces, ports, gluings = {}, {}, []
    _add_half(pieces, ports, gluings, n, "", "")
    return CoverGraph(pieces, ports, gluings, n)


def build_closed(m: int, n: int) -> CoverGraph:
    """N_n glued along its outer boundary to a mirror copy of N_m."""
    for name, v in (("m", m), ("n", n)):
        if not isinstance(v, int) or v < 1:
            raise InvalidParameter(f"{name} must be a positive integer, got {v!r}")
    pieces, ports, gluings = {}, {}, []
    _add_half(pieces, ports, gluings, n, "", "")
    _add_half(pieces, ports, gluings, m, "m", "m")
    # the two outer spheres are one sphere of the closed base
    for pid, p in list(ports.items()):
        if p.piece == f"mT{m}" and p.side == "plus":
            ports[pid] = replace(p, sphere=f"S({n})")
    for tag in COMPONENT_TAGS:
        gluings.append(Gluing(_port_id(f"T{n}", "plus", tag),
                              _port_id(f"mT{m}", "plus", TAG_CORRESPONDENCE["mirror"][tag]), "mirror"))
    return CoverGraph(pieces, ports, gluings, n, m)


# audits ----------------------------------------------------------------------------

@dataclass
class AuditReport:
    ok: bool
    sums: dict[str, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)


def degree_audit(g: CoverGraph) -> AuditReport:
    """Degree over every base piece, and port degrees over each side of every base sphere."""
    sums: dict[str, int] = defaultdict(int)
    for p in g.pieces.values():
        sums[f"base {p.base}"] += p.degree
    for p in g.ports.values():
        sums[f"sphere {p.sphere} from {g.pieces[p.piece].base} {p.side}"] += p.degree
    violations = [f"{k}: {v} != {SHEETS}" for k, v in sorted(sums.items()) if v != SHEETS]
    return AuditReport(not violations, dict(sorted(sums.items())), violations)


def structure_audit(g: CoverGraph) -> AuditReport:
    """Ports used at most once, glued ports of equal degree, connectivity and open ports."""
    violations = []
    seen = defaultdict(int)
    for gl in g.gluings:
        for pid in (gl.port_a, gl.port_b):
            if pid not in g.ports:
                violations.append(f"gluing {gl} uses missing port {pid}")
            seen[pid] += 1
        if gl.port_a in g.ports and gl.port_b in g.ports:
            a, b = g.ports[gl.port_a], g.ports[gl.port_b]
            if a.degree != b.degree:
                violations.append(f"{gl.map_tag} gluing {a.id} <-> {b.id}: degrees {a.degree} != {b.degree}")
            if a.sphere != b.sphere:
                violations.append(f"{gl.map_tag} gluing {a.id} <-> {b.id}: different base spheres")
    violations += [f"port {pid} glued {k} times" for pid, k in seen.items() if k > 1]
    if g.pieces and not g.is_connected():
        violations.append("graph is not connected")
    open_ports = sorted(p.id for p in g.unglued_ports())
    if g.closed:
        expected_open = []
    else:
        expected_open = sorted(_port_id(f"T{g.n}", "plus", t) for t in COMPONENT_TAGS)
    if open_ports != expected_open:
        violations.append(f"unglued ports {open_ports}, expected {expected_open}")
    return AuditReport(not violations, {}, violations)


def psi_check(g: CoverGraph) -> AuditReport:
    """Combinatorial data of the piece-preserving extension.

    The extension fixes every piece and preserves every port; on each degree-1 F0
    port it induces (1 3)(2 4); every gluing joins ports whose tags correspond under
    its map and whose markers agree.
    """
    violations = []
    for p in g.ports.values():
        if not p.preserved:
            violations.append(f"port {p.id} is not preserved")
        if p.component_tag == F0:
            if p.degree != 1:
                violations.append(f"F0 port {p.id} has degree {p.degree}")
            if p.mutation_marker != MUTATION:
                violations.append(f"F0 port {p.id} carries marker {p.mutation_marker}, expected {MUTATION}")
    for i, gl in enumerate(g.gluings):
        a, b = g.ports.get(gl.port_a), g.ports.get(gl.port_b)
        if a is None or b is None:
            violations.append(f"gluing #{i} refers to a missing port")
            continue
        table = TAG_CORRESPONDENCE[gl.map_tag]
        if table.get(a.component_tag) != b.component_tag:
            violations.append(f"gluing #{i} ({gl.map_tag}) {a.id} <-> {b.id}: "
                              f"tag {a.component_tag} must meet {table.get(a.component_tag)}, got {b.component_tag}")
        if a.mutation_marker != b.mutation_marker:
            violations.append(f"gluing #{i} ({gl.map_tag}) {a.id} <-> {b.id}: markers disagree")
        if gl.map_tag == "J":
            s_piece = a if a.piece in _s_side(g) else b
            cover = g.pieces[s_piece.piece].cover_tag
            if J_TABLE.get(s_piece.component_tag) != cover:
                violations.append(f"gluing #{i} (J): {cover} piece meets {s_piece.component_tag}")
    structure = structure_audit(g)
    violations += structure.violations
    return AuditReport(not violations, {}, violations)


def _s_side(g: CoverGraph) -> set[str]:
    return {pid for pid, p in g.pieces.items() if p.cover_tag in ("S-plain", "Na", "Nb")}


# symmetry of closed builds ---------------------------------------------------------

def mirror_map(g: CoverGraph) -> dict[str, str]:
    """Piece bijection exchanging the halves of build_closed(n, n)."""
    if not g.closed or g.m != g.n:
        raise InvalidParameter("mirror map needs a closed build with m = n")
    return {pid: (pid[1:] if pid.startswith("m") and pid[1:] in g.pieces else "m" + pid) for pid in g.pieces}


def _node_label(base: str) -> str:
    return base.replace("mirror-", "")


def is_automorphism(g: CoverGraph, mapping: dict[str, str]) -> bool:
    """Whether ``mapping`` preserves cover tags, base labels (up to mirroring) and gluings with their tags."""
    G = g.to_networkx()
    for u, v in mapping.items():
        pu, pv = g.pieces[u], g.pieces[v]
        if pu.cover_tag != pv.cover_tag or _node_label(pu.base) != _node_label(pv.base):
            return False

    def edge_multiset(edges):
        out = defaultdict(int)
        for u, v, d in edges:
            ends = tuple(sorted([(u, d["tag_a"] if u == d["port_a"].split(".")[0] else d["tag_b"]),
                                 (v, d["tag_b"] if v == d["port_b"].split(".")[0] else d["tag_a"])]))
            out[(ends, d["map_tag"])] += 1
        return out

    original = edge_multiset(G.edges(data=True))
    image = edge_multiset((mapping[u], mapping[v], d) for u, v, d in G.edges(data=True))
    return original == image


def labeled_isomorphic(g1: CoverGraph, g2: CoverGraph) -> bool:
    """Isomorphism preserving piece bases and cover tags and gluing map tags."""
    nm = nx.algorithms.isomorphism.categorical_node_match(["base", "cover_tag"], [None, None])
    em = nx.algorithms.isomorphism.categorical_multiedge_match("map_tag", None)
    return nx.is_isomorphic(g1.to_networkx(), g2.to_networkx(), node_match=nm, edge_match=em)


# minimality -------------------------------------------------------------------------

def minimality_bound(normalized_order: Optional[int] = None) -> int:
    """|phi(Gamma_T0)| / |largest subgroup normalized by phi(m1)|."""
    G = closure([phi("h"), phi("f")])
    if normalized_order is None:
        normalized_order = largest_normalized(G, phi("m1")).order()
    if G.order() % normalized_order:
        raise ValueError(f"{normalized_order} does not divide {G.order()}")
    return G.order() // normalized_order


# export ---------------------------------------------------------------------------

def to_graphml(g: CoverGraph) -> str:
    return "\n".join(nx.generate_graphml(g.to_networkx()))


def to_dot(g: CoverGraph) -> str:
    lines = ["graph cover {"]
    for p in g.pieces.values():
        lines.append(f'  "{p.id}" [label="{p.id}\\n{p.base}\\n{p.cover_tag} ({p.degree})"];')
    for gl in g.gluings:
        a, b = g.ports[gl.port_a], g.ports[gl.port_b]
        lines.append(f'  "{a.piece}" -- "{b.piece}" [label="{gl.map_tag}: {a.component_tag}/{b.component_tag}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
