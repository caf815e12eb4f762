"""Graphs, spanning trees, and partial orientations.

Vertices are 0-based integers.  Undirected edges are normalized tuples
(u, v) with u < v.  A mixed graph keeps, for every edge of its underlying
simple graph, either no direction or an arc (tail, head); a partial
orientation is the special case where the undirected part is a spanning
tree and every cotree edge carries a direction.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DisconnectedError, GuardLimit, ParseError

Edge = tuple[int, int]

SPANNING_TREE_GUARD_N = 10


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not normalized inside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(norm_edge(u, v) for u, v in edges))

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = self._reach(0)
        return len(seen) == self.n

    def _reach(self, start: int) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def require_connected(self) -> None:
        if self.n == 0:
            raise DisconnectedError("graph has no vertices")
        seen = self._reach(0)
        if len(seen) != self.n:
            missing = min(set(range(self.n)) - seen)
            raise DisconnectedError(f"vertex {missing} is not reachable from vertex 0")

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True


@dataclass(frozen=True)
class SpanningTree:
    """Rooted spanning tree of a host graph.

    parent[root] == root; every other vertex points one step toward the
    root along a tree edge.
    """

    root: int
    parent: tuple[int, ...]
    tree_edges: frozenset[Edge]

    def __post_init__(self) -> None:
        n = len(self.parent)
        if not (0 <= self.root < n) or n == 0:
            raise ValueError("root outside vertex range")
        if self.parent[self.root] != self.root:
            raise ValueError("root must be its own parent")
        if len(self.tree_edges) != n - 1:
            raise ValueError("a spanning tree on n vertices has n-1 edges")
        derived = set()
        for v in range(n):
            if v == self.root:
                continue
            p = self.parent[v]
            if not (0 <= p < n):
                raise ValueError(f"parent of {v} out of range")
            derived.add(norm_edge(v, p))
        if derived != set(self.tree_edges):
            raise ValueError("parent map and tree edge set disagree")
        # parent chains must reach the root (no cycles)
        for v in range(n):
            seen = 0
            u = v
            while u != self.root:
                u = self.parent[u]
                seen += 1
                if seen > n:
                    raise ValueError("parent map contains a cycle")

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        out = [0] * self.n
        for v in range(self.n):
            d = 0
            u = v
            while u != self.root:
                u = self.parent[u]
                d += 1
            out[v] = d
        return tuple(out)

    def path_between(self, u: int, v: int) -> list[int]:
        """Vertex path from u to v inside the tree."""
        du, dv = self.depth[u], self.depth[v]
        left, right = u, v
        up_left: list[int] = [left]
        up_right: list[int] = [right]
        while du > dv:
            left = self.parent[left]
            up_left.append(left)
            du -= 1
        while dv > du:
            right = self.parent[right]
            up_right.append(right)
            dv -= 1
        while left != right:
            left = self.parent[left]
            right = self.parent[right]
            up_left.append(left)
            up_right.append(right)
        return up_left + up_right[-2::-1]


@dataclass(frozen=True)
class SignVector:
    """Signs attached to an ordered list of vertex pairs.

    For a partial orientation relative to a spanning tree the pairs are
    exactly the cotree edges in ascending order; sign +1 orients the edge
    from its smaller endpoint to its larger one, -1 the reverse.
    """

    edges: tuple[Edge, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.edges) != len(self.signs):
            raise ValueError("one sign per edge required")
        for s in self.signs:
            if s not in (-1, 1):
                raise ValueError("signs must be +1 or -1")
        for u, v in self.edges:
            if not u < v:
                raise ValueError("sign-vector edges must be normalized (u < v)")

    @classmethod
    def for_tree(cls, g: Graph, t: SpanningTree, signs: Sequence[int]) -> "SignVector":
        co = cotree_edges(g, t)
        if len(signs) != len(co):
            raise ValueError(f"expected {len(co)} signs for {len(co)} cotree edges, got {len(signs)}")
        return cls(co, tuple(int(s) for s in signs))

    def __len__(self) -> int:
        return len(self.signs)

    def arc(self, j: int) -> tuple[int, int]:
        u, v = self.edges[j]
        return (u, v) if self.signs[j] == 1 else (v, u)


@dataclass(frozen=True)
class MixedGraph:
    """A simple graph with an orientation state per edge.

    ``states`` holds one (edge, direction) pair per underlying edge in
    ascending edge order; direction is None for an undirected edge or the
    (tail, head) pair of an arc.
    """

    graph: Graph
    states: tuple[tuple[Edge, tuple[int, int] | None], ...]

    def __post_init__(self) -> None:
        listed = [e for e, _ in self.states]
        if listed != sorted(self.graph.edges):
            raise ValueError("states must list every underlying edge once, in order")
        for e, d in self.states:
            if d is not None and set(d) != set(e):
                raise ValueError(f"arc {d} does not match edge {e}")

    @classmethod
    def of(cls, graph: Graph, directions: Mapping[Edge, tuple[int, int] | None]) -> "MixedGraph":
        states = []
        for e in sorted(graph.edges):
            d = directions.get(e)
            states.append((e, None if d is None else (int(d[0]), int(d[1]))))
        extra = set(directions) - set(graph.edges)
        if extra:
            raise ValueError(f"directions given for non-edges: {sorted(extra)}")
        return cls(graph, tuple(states))

    @classmethod
    def undirected(cls, graph: Graph) -> "MixedGraph":
        return cls(graph, tuple((e, None) for e in sorted(graph.edges)))

    @cached_property
    def _state_map(self) -> dict[Edge, tuple[int, int] | None]:
        return dict(self.states)

    def direction(self, u: int, v: int) -> tuple[int, int] | None:
        e = norm_edge(u, v)
        if e not in self._state_map:
            raise KeyError(f"no edge {e}")
        return self._state_map[e]

    def phase(self, u: int, v: int) -> int:
        """Exponent e with H[u][v] = i**e for the ordered pair (u, v).

        0 for an undirected edge, 1 for an arc u -> v, 3 for an arc v -> u.
        """
        d = self.direction(u, v)
        if d is None:
            return 0
        return 1 if d == (u, v) else 3

    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(d for _, d in self.states if d is not None)

    def undirected_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e, d in self.states if d is None)

    def is_fully_oriented(self) -> bool:
        return all(d is not None for _, d in self.states)


# ---------------------------------------------------------------------------
# parsing and formatting
# ---------------------------------------------------------------------------


def _parse_header_and_lines(text: str) -> tuple[int | None, list[tuple[int, str]]]:
    declared = None
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if declared is not None or body:
                raise ParseError(f"line {lineno}: vertex-count header must come first")
            try:
                declared = int(line[2:])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {line[2:]!r}") from None
            if declared < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        body.append((lineno, line))
    return declared, body


def _close_graph(declared: int | None, edges: list[Edge], where: str) -> Graph:
    if declared is None:
        if not edges:
            raise ParseError(f"{where}: no edges and no n=<count> header")
        n = max(max(e) for e in edges) + 1
    else:
        n = declared
        for u, v in edges:
            if v >= n:
                raise ParseError(f"{where}: vertex {v} outside declared range n={n}")
    seen = set()
    for e in edges:
        if e in seen:
            raise ParseError(f"{where}: duplicate edge {e}")
        seen.add(e)
    return Graph(n, frozenset(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated vertex pairs, one edge per line.

    An optional first line ``n=<count>`` fixes the vertex count; otherwise
    it is the largest label plus one.  '#' starts a comment.
    """
    declared, body = _parse_header_and_lines(text)
    edges: list[Edge] = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex label")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        edges.append(norm_edge(u, v))
    return _close_graph(declared, edges, "edge list")


def parse_mixed(text: str) -> MixedGraph:
    """Parse mixed-graph text: lines ``u v`` (undirected) or ``u > v`` (arc)."""
    declared, body = _parse_header_and_lines(text)
    edges: list[Edge] = []
    directions: dict[Edge, tuple[int, int] | None] = {}
    for lineno, line in body:
        parts = line.split()
        if len(parts) == 3 and parts[1] == ">":
            tail, head = parts[0], parts[2]
            arc = True
        elif len(parts) == 2:
            tail, head = parts
            arc = False
        else:
            raise ParseError(f"line {lineno}: expected 'u v' or 'u > v', got {line!r}")
        try:
            u, v = int(tail), int(head)
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex label")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        e = norm_edge(u, v)
        edges.append(e)
        directions[e] = (u, v) if arc else None
    g = _close_graph(declared, edges, "mixed graph")
    return MixedGraph.of(g, directions)


def format_mixed(d: MixedGraph) -> str:
    """Inverse of parse_mixed, one state per line in ascending edge order."""
    lines = [f"n={d.graph.n}"]
    for e, direction in d.states:
        if direction is None:
            lines.append(f"{e[0]} {e[1]}")
        else:
            lines.append(f"{direction[0]} > {direction[1]}")
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62)."""
    s = text.strip()
    if not s:
        raise ParseError("empty graph6 string")
    if any(ord(ch) < 63 or ord(ch) > 126 for ch in s):
        raise ParseError("graph6 characters must be in the range 63..126")
    n = ord(s[0]) - 63
    if n > 62:
        raise ParseError("only short-form graph6 (n <= 62) is supported")
    need = (n * (n - 1) // 2 + 5) // 6
    data = s[1:]
    if len(data) != need:
        raise ParseError(f"graph6 body for n={n} needs {need} characters, got {len(data)}")
    bits: list[int] = []
    for ch in data:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    if any(bits[idx:]):
        raise ParseError("nonzero padding bits in graph6 string")
    return Graph(n, frozenset(edges))


def encode_graph6(g: Graph) -> str:
    """Encode as short-form graph6 (n <= 62)."""
    if g.n > 62:
        raise ValueError("only short-form graph6 (n <= 62) is supported")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# spanning trees
# ---------------------------------------------------------------------------


def bfs_spanning_tree(g: Graph, root: int = 0) -> SpanningTree:
    """Breadth-first spanning tree, neighbors visited in ascending order."""
    if not (0 <= root < g.n):
        raise ValueError(f"root {root} outside vertex range")
    parent = [-1] * g.n
    parent[root] = root
    order = deque([root])
    edges = set()
    while order:
        u = order.popleft()
        for w in g.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                edges.add(norm_edge(u, w))
                order.append(w)
    for v in range(g.n):
        if parent[v] < 0:
            raise DisconnectedError(f"vertex {v} is not reachable from vertex {root}")
    return SpanningTree(root, tuple(parent), frozenset(edges))


def tree_from_edges(g: Graph, edges: Iterable[tuple[int, int]], root: int = 0) -> SpanningTree:
    """Build a SpanningTree from an explicit edge set of the host graph."""
    es = frozenset(norm_edge(u, v) for u, v in edges)
    if not es <= g.edges:
        raise ValueError(f"tree edges {sorted(es - g.edges)} are not host edges")
    sub = Graph(g.n, es)
    if len(es) != g.n - 1:
        raise ValueError("a spanning tree on n vertices has n-1 edges")
    parent = [-1] * g.n
    parent[root] = root
    order = deque([root])
    while order:
        u = order.popleft()
        for w in sub.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    if any(p < 0 for p in parent):
        raise ValueError("edges do not form a spanning tree")
    return SpanningTree(root, tuple(parent), es)


def cotree_edges(g: Graph, t: SpanningTree) -> tuple[Edge, ...]:
    """Edges outside the tree, ascending."""
    if not t.tree_edges <= g.edges:
        raise ValueError("tree is not a subgraph of the host graph")
    return tuple(sorted(g.edges - t.tree_edges))


def enumerate_spanning_trees(g: Graph, guard: bool = True) -> list[SpanningTree]:
    """All spanning trees, as a deterministic list.

    Include/exclude recursion over the sorted edge list with a connectivity
    prune.  Exhaustive, so guarded to n <= 10 by default.
    """
    g.require_connected()
    if guard and g.n > SPANNING_TREE_GUARD_N:
        raise GuardLimit(
            f"spanning-tree enumeration is exhaustive; n={g.n} exceeds "
            f"{SPANNING_TREE_GUARD_N} (pass guard=False to override)"
        )
    edges = list(g.edge_list)
    m = len(edges)
    n = g.n
    out: list[SpanningTree] = []
    if n == 1:
        return [SpanningTree(0, (0,), frozenset())]

    def connected_using(allowed: list[bool], chosen: list[Edge]) -> bool:
        adj: list[list[int]] = [[] for _ in range(n)]
        for (u, v) in chosen:
            adj[u].append(v)
            adj[v].append(u)
        for k, ok in enumerate(allowed):
            if ok:
                u, v = edges[k]
                adj[u].append(v)
                adj[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == n

    comp = list(range(n))

    def find(x: int) -> int:
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    def rec(idx: int, chosen: list[Edge], allowed: list[bool]) -> None:
        if len(chosen) == n - 1:
            out.append(tree_from_edges(g, chosen))
            return
        if idx == m:
            return
        u, v = edges[idx]
        ru, rv = find(u), find(v)
        if ru != rv:
            # include edges[idx]
            comp[ru] = rv
            chosen.append(edges[idx])
            rec(idx + 1, chosen, allowed)
            chosen.pop()
            # undo union by rebuilding (cheap at desk scale)
            comp[:] = _rebuild_components(n, chosen)
        # exclude edges[idx] if the rest can still span
        allowed[idx] = False
        if connected_using(allowed, chosen):
            rec(idx + 1, chosen, allowed)
        allowed[idx] = True

    def _rebuild_components(n: int, chosen: list[Edge]) -> list[int]:
        c = list(range(n))

        def f(x: int) -> int:
            while c[x] != x:
                c[x] = c[c[x]]
                x = c[x]
            return x

        for (a, b) in chosen:
            ra, rb = f(a), f(b)
            if ra != rb:
                c[ra] = rb
        return c

    rec(0, [], [True] * m)
    return out


def tree_parity_bipartition(t: SpanningTree) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices at even and odd tree depth; the root sits in the first set."""
    evens = frozenset(v for v in range(t.n) if t.depth[v] % 2 == 0)
    odds = frozenset(v for v in range(t.n) if t.depth[v] % 2 == 1)
    return evens, odds


def fundamental_cycle(t: SpanningTree, e: tuple[int, int]) -> list[int]:
    """Closed vertex walk of the cycle that edge e closes through the tree.

    e must not be a tree edge.  The walk starts and ends at the smaller
    endpoint of e; its length (number of edges) is the tree distance between
    the endpoints plus one.
    """
    u, v = norm_edge(*e)
    if norm_edge(u, v) in t.tree_edges:
        raise ValueError(f"{(u, v)} is a tree edge")
    if not (0 <= u < t.n and 0 <= v < t.n):
        raise ValueError("edge endpoints outside vertex range")
    path = t.path_between(u, v)
    return path + [u]


def build_mixed(g: Graph, t: SpanningTree, s: SignVector) -> MixedGraph:
    """Partial orientation: tree edges undirected, cotree edges by sign."""
    co = cotree_edges(g, t)
    if s.edges != co:
        raise ValueError("sign vector does not match the cotree edges of (g, t)")
    directions: dict[Edge, tuple[int, int] | None] = {e: None for e in t.tree_edges}
    for j, e in enumerate(co):
        directions[e] = s.arc(j)
    return MixedGraph.of(g, directions)


def sign_vectors(count: int) -> Iterator[tuple[int, ...]]:
    """All sign tuples of the given length in ascending order (-1 < +1)."""
    return itertools.product((-1, 1), repeat=count)
