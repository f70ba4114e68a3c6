"""Immutable simple graphs over dense integer vertex ids with bitset adjacency.

Vertex sets throughout this package are plain Python ints used as bitsets:
bit ``v`` is set iff vertex ``v`` is in the set.  All kernels (closures,
subset searches) work directly on these masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

MAX_VERTICES = 128
ISO_DEFAULT_LIMIT = 16


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class EmptyVertexSet(GraphError):
    """A graph must have at least one vertex."""


class SelfLoop(GraphError):
    """Loops are rejected rather than dropped; a loop indicates caller error."""


class EndpointOutOfRange(GraphError):
    """A vertex id fell outside ``0..n-1``."""


class CapacityExceeded(GraphError):
    """The construction would exceed the fixed vertex capacity."""


class EmptySet(GraphError):
    """An operation required a nonempty vertex set."""


class TooLarge(GraphError):
    """The instance exceeds the configured size limit for this operation."""


def mask_of(vertices) -> int:
    """Bitset mask for an iterable of vertex ids."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of vertex ids in a bitset mask."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def iter_vertices(mask: int):
    """Yield vertex ids of a mask in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitset of the open neighborhood N(v).  Instances are
    immutable and safe to share between workers.  ``labels`` are optional
    display strings and do not participate in equality.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise EmptyVertexSet("graph needs at least one vertex")
        if self.n > MAX_VERTICES:
            raise CapacityExceeded(f"{self.n} vertices exceeds capacity {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise SelfLoop(f"vertex {v} is adjacent to itself")
            if nb & ~full:
                raise EndpointOutOfRange(f"adjacency of {v} mentions ids >= {self.n}")
        for v, nb in enumerate(self.adj):
            for u in iter_vertices(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at ({u}, {v})")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match vertex count")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(nb.bit_count() for nb in self.adj))

    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            nb = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_vertices(nb):
                out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def new_graph(n: int, edges, labels=None) -> Graph:
    """Build a graph from an edge list, deduplicating repeated edges.

    Raises EmptyVertexSet for n < 1, SelfLoop for u == v, and
    EndpointOutOfRange for ids outside 0..n-1.
    """
    if n < 1:
        raise EmptyVertexSet("graph needs at least one vertex")
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"{n} vertices exceeds capacity {MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}) is a loop")
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def components(g: Graph) -> list[int]:
    """Masks of the connected components, ordered by minimum vertex id."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_vertices(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def induces_connected(g: Graph, s: int) -> bool:
    """True iff the subgraph induced on nonempty mask ``s`` is connected."""
    if not s:
        raise EmptySet("connectivity of the empty set is undefined")
    start = s & -s
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        for u in iter_vertices(frontier):
            nxt |= g.adj[u]
        frontier = nxt & s & ~reach
        reach |= frontier
    return reach == s


def is_connected_in_components(g: Graph, s: int) -> bool:
    """True iff ``s`` meets every component it touches in a connected set.

    Components with empty intersection do not veto.
    """
    if not s:
        raise EmptySet("the empty set is not connected in components")
    for comp in components(g):
        part = comp & s
        if part and not induces_connected(g, part):
            return False
    return True


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, list[int]]:
    """Subgraph induced on mask ``s``, relabeled to ``0..|s|-1``.

    Returns the new graph and the list mapping new ids to old ids.
    """
    if not s:
        raise EmptySet("cannot induce on the empty set")
    old = list(iter_vertices(s))
    pos = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        m = 0
        for u in iter_vertices(g.adj[v] & s):
            m |= 1 << pos[u]
        adj.append(m)
    labels = tuple(g.labels[v] for v in old) if g.labels is not None else None
    return Graph(len(old), tuple(adj), labels), old


def relabel(g: Graph, perm) -> Graph:
    """Image of ``g`` under the permutation ``perm`` (old id -> new id)."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise GraphError("not a permutation of the vertex ids")
    adj = [0] * g.n
    for v in range(g.n):
        m = 0
        for u in iter_vertices(g.adj[v]):
            m |= 1 << perm[u]
        adj[perm[v]] = m
    labels = None
    if g.labels is not None:
        labels = [""] * g.n
        for v in range(g.n):
            labels[perm[v]] = g.labels[v]
        labels = tuple(labels)
    return Graph(g.n, tuple(adj), labels)


def is_path_graph(g: Graph) -> bool:
    """True iff ``g`` is a path (P1 and P2 included)."""
    if not is_connected(g):
        return False
    if g.edge_count() != g.n - 1:
        return False
    return all(g.degree(v) <= 2 for v in range(g.n))


def _iso_signature(g: Graph, v: int) -> tuple:
    return (g.degree(v), tuple(sorted(g.degree(u) for u in iter_vertices(g.adj[v]))))


def are_isomorphic(g: Graph, h: Graph, limit: int = ISO_DEFAULT_LIMIT) -> bool:
    """Exact isomorphism test by backtracking, intended for small orders.

    Raises TooLarge when either graph exceeds ``limit`` vertices.
    """
    if g.n > limit or h.n > limit:
        raise TooLarge(f"isomorphism limited to {limit} vertices")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    n = g.n
    sig_g = [_iso_signature(g, v) for v in range(n)]
    sig_h = [_iso_signature(h, v) for v in range(n)]
    if sorted(sig_g) != sorted(sig_h):
        return False
    candidates = [[w for w in range(n) if sig_h[w] == sig_g[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(n):
                mu = mapping[u]
                if mu != -1 and (g.adj[v] >> u & 1) != (h.adj[w] >> mu & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return extend(0)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Optional header line ``n <N>``; one ``u v`` pair per subsequent line;
    ``#`` starts a comment; vertices are 0-indexed.  Without a header the
    order is inferred as the largest endpoint plus one.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None or edges:
                raise GraphError(f"line {lineno}: header must come first")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: malformed header")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: endpoints must be integers") from None
        if u < 0 or v < 0:
            raise EndpointOutOfRange(f"line {lineno}: negative vertex id")
        edges.append((u, v))
    if n is None:
        if not edges:
            raise EmptyVertexSet("no header and no edges")
        n = max(max(u, v) for u, v in edges) + 1
    return new_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def all_labeled_graphs(n: int):
    """Yield every labeled graph on ``n`` vertices, one per edge subset.

    Edge positions follow lexicographic pair order; for each ``code`` in
    ``0..2^C(n,2)-1`` bit ``i`` toggles the ``i``-th pair.
    """
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield new_graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])
