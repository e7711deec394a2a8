"""Path algebras of acyclic quivers and their semisimple envelopes.

For a representation-finite hereditary algebra (path algebra of an ADE
quiver) the envelope is a product of matrix algebras, one block per
positive root of the underlying diagram, of size the root's height (the
sum of its coordinates over the simple roots).  Roots are enumerated by
reflection closure from the Cartan matrix, so the envelope depends only
on the underlying graph, never on the orientation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter

from .algebra import Algebra, Subspace
from .errors import CyclicQuiver, InputError, NotADE
from .linalg import ONE, ZERO


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph: ``arrows`` is a list of (source, target)."""

    vertices: int
    arrows: tuple[tuple[int, int], ...]

    def __init__(self, vertices: int, arrows):
        if vertices < 0:
            raise InputError("vertex count must be nonnegative")
        arrows = tuple((int(s), int(t)) for s, t in arrows)
        for s, t in arrows:
            if not (0 <= s < vertices and 0 <= t < vertices):
                raise InputError(f"arrow ({s},{t}) out of range")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", arrows)

    def is_acyclic(self) -> bool:
        graph: dict[int, set[int]] = {v: set() for v in range(self.vertices)}
        for s, t in self.arrows:
            if s == t:
                return False
            graph[t].add(s)
        try:
            tuple(TopologicalSorter(graph).static_order())
        except CycleError:
            return False
        return True

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        try:
            return cls(data["vertices"], data["arrows"])
        except (TypeError, KeyError) as exc:
            raise InputError("quiver JSON needs 'vertices' and 'arrows'") from exc

    @classmethod
    def linear(cls, n: int) -> "Quiver":
        """The A_n quiver oriented left to right: 0 -> 1 -> ... -> n-1."""
        return cls(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class RootSystem:
    type: str  # "A", "D" or "E"
    simple_count: int
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"{self.type}{self.simple_count}"

    def heights(self) -> Counter:
        return Counter(sum(r) for r in self.positive_roots)

    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=sum)


@dataclass(frozen=True)
class EnvelopeReport:
    """Multiset of matrix block sizes: the envelope is prod M_k(Q)^(mult)."""

    type_name: str
    blocks: tuple[tuple[int, int], ...]  # (size, multiplicity), sizes ascending

    @property
    def block_count(self) -> int:
        return sum(m for _, m in self.blocks)

    def to_json(self) -> dict:
        return {
            "type": self.type_name,
            "blocks": [{"size": s, "mult": m} for s, m in self.blocks],
        }


# ---------------------------------------------------------------------------
# path algebras
# ---------------------------------------------------------------------------


def enumerate_paths(q: Quiver) -> list[tuple[int, tuple[int, ...]]]:
    """All paths as (start_vertex, arrow index sequence); trivial paths first.

    Ordered by length, then lexicographically by arrow indices; this is
    the basis order of the path algebra.
    """
    if not q.is_acyclic():
        raise CyclicQuiver("path algebra of a cyclic quiver is infinite dimensional")
    paths = [(v, ()) for v in range(q.vertices)]
    frontier = list(paths)
    while frontier:
        new_frontier = []
        for start, arrows in frontier:
            end = q.arrows[arrows[-1]][1] if arrows else start
            for idx, (s, t) in enumerate(q.arrows):
                if s == end:
                    new_frontier.append((start, arrows + (idx,)))
        new_frontier.sort()
        paths.extend(new_frontier)
        frontier = new_frontier
    return paths


def path_algebra(q: Quiver) -> Algebra:
    """Path algebra: basis all paths, product concatenation-or-zero.

    ``p * r`` is "r then p": nonzero iff r ends where p starts.  The unit
    is the sum of the length-zero paths at the vertices.
    """
    paths = enumerate_paths(q)
    index = {p: k for k, p in enumerate(paths)}
    d = len(paths)

    def path_ends(p: tuple[int, tuple[int, ...]]) -> tuple[int, int]:
        start, arrows = p
        end = q.arrows[arrows[-1]][1] if arrows else start
        return start, end

    table = []
    for i, p in enumerate(paths):
        p_start, p_end = path_ends(p)
        row = []
        for j, r in enumerate(paths):
            r_start, r_end = path_ends(r)
            out = [ZERO] * d
            if r_end == p_start:
                combined = (r_start, r[1] + p[1])
                out[index[combined]] = ONE
            row.append(tuple(out))
        table.append(row)
    unit = [ZERO] * d
    for v in range(q.vertices):
        unit[index[(v, ())]] = ONE
    return Algebra(d, unit, table)


def arrow_ideal(q: Quiver) -> Subspace:
    """Span of all paths of length >= 1 inside the path algebra basis."""
    paths = enumerate_paths(q)
    d = len(paths)
    vecs = []
    for k, (_, arrows) in enumerate(paths):
        if arrows:
            v = [ZERO] * d
            v[k] = ONE
            vecs.append(v)
    return Subspace(d, vecs)


def radical_is_arrow_ideal(q: Quiver) -> bool:
    """Cross-validation: the trace-form radical equals the arrow ideal."""
    return path_algebra(q).radical() == arrow_ideal(q)


# ---------------------------------------------------------------------------
# Dynkin classification
# ---------------------------------------------------------------------------


def dynkin_classify(q: Quiver) -> str | None:
    """Classify the underlying undirected graph as A_n, D_n, E6, E7 or E8.

    Returns e.g. "A4"; None when the graph is not a simply laced tree of
    ADE shape (multiple edges, loops, cycles, disconnected, bad branching).
    """
    n = q.vertices
    if n == 0:
        return None
    edges = set()
    for s, t in q.arrows:
        if s == t:
            return None
        e = (min(s, t), max(s, t))
        if e in edges:
            return None  # multiple edge
        edges.add(e)
    if len(edges) != n - 1:
        return None  # a tree has exactly n - 1 edges
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for s, t in edges:
        adj[s].append(t)
        adj[t].append(s)
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        return None
    degrees = sorted((len(adj[v]) for v in range(n)), reverse=True)
    if degrees[0] <= 2:
        return f"A{n}"
    if degrees[0] >= 4 or (len(degrees) > 1 and degrees[1] >= 3):
        return None
    # single degree-3 vertex: measure the three leg lengths in edges
    center = next(v for v in range(n) if len(adj[v]) == 3)
    legs = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while len(adj[cur]) == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    legs.sort()
    a, b, c = legs
    if a == 1 and b == 1:
        return f"D{n}"
    if (a, b, c) == (1, 2, 2):
        return "E6"
    if (a, b, c) == (1, 2, 3):
        return "E7"
    if (a, b, c) == (1, 2, 4):
        return "E8"
    return None


def cartan_matrix(type_letter: str, n: int) -> list[list[int]]:
    """Simply laced Cartan matrix in Bourbaki labeling.

    A_n: path 1-2-...-n.  D_n: path 1..n-2 with n-1 and n attached to
    n-2.  E_n: path 1-3-4-5-6(-7)(-8) with 2 attached to 4.
    """
    if type_letter == "A":
        if n < 1:
            raise InputError("A_n needs n >= 1")
        edges = [(i, i + 1) for i in range(1, n)]
    elif type_letter == "D":
        if n < 4:
            raise InputError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    elif type_letter == "E":
        if n not in (6, 7, 8):
            raise InputError("E_n needs n in {6, 7, 8}")
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if n >= 7:
            edges.append((6, 7))
        if n == 8:
            edges.append((7, 8))
    else:
        raise InputError(f"unknown type {type_letter!r}")
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        c[i - 1][j - 1] = -1
        c[j - 1][i - 1] = -1
    return c


def positive_roots(type_letter: str, n: int) -> RootSystem:
    """All positive roots by reflection closure from the simple roots.

    beta + alpha_i is a root iff the alpha_i string through beta extends
    upward: with p the largest k such that beta - k alpha_i is a root,
    the string extends iff p - <beta, alpha_i^vee> > 0.  Output sorted
    lexicographically.
    """
    c = cartan_matrix(type_letter, n)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    by_height: dict[int, list[tuple[int, ...]]] = {1: list(simple)}
    height = 1
    while by_height.get(height):
        nxt = []
        for beta in by_height[height]:
            for i in range(n):
                pairing = sum(c[i][j] * beta[j] for j in range(n))
                # p = how far the alpha_i string extends downward from beta
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    cand = list(beta)
                    cand[i] += 1
                    cand_t = tuple(cand)
                    if cand_t not in roots:
                        roots.add(cand_t)
                        nxt.append(cand_t)
        height += 1
        if nxt:
            by_height[height] = nxt
    return RootSystem(type_letter, n, tuple(sorted(roots)))


EXPECTED_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
}


def envelope(q: Quiver) -> EnvelopeReport:
    """Block sizes of the semisimple envelope of the path algebra.

    One matrix block per positive root of the underlying ADE diagram, of
    size the root's height.  Raises :class:`NotADE` when the quiver is
    not representation-finite (Gabriel boundary).
    """
    name = dynkin_classify(q)
    if name is None:
        raise NotADE("quiver is not of ADE type: not representation-finite")
    letter, rank_str = name[0], name[1:]
    rs = positive_roots(letter, int(rank_str))
    expected = EXPECTED_ROOT_COUNTS[letter](int(rank_str))
    if len(rs.positive_roots) != expected:
        raise InputError(f"root enumeration produced {len(rs.positive_roots)} roots, expected {expected}")
    heights = rs.heights()
    blocks = tuple(sorted(heights.items()))
    return EnvelopeReport(name, blocks)


def envelope_from_type(name: str) -> EnvelopeReport:
    letter, rank_str = name[0].upper(), name[1:]
    rs = positive_roots(letter, int(rank_str))
    return EnvelopeReport(f"{letter}{rank_str}", tuple(sorted(rs.heights().items())))
