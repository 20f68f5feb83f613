"""Graphs and game instances.

Vertices are dense integer ids ``0..n-1``.  An undirected graph keeps both
orientations of every edge in ``arcs`` so a single propagation routine serves
directed and undirected games; the ``directed`` flag only matters for
serialization and for algorithms that require one kind or the other.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Sequence


class InstanceError(ValueError):
    """Raised for malformed graphs, instances or instance documents."""


@dataclass(frozen=True)
class Graph:
    n: int
    directed: bool
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not _is_int(self.n) or self.n < 0:
            raise InstanceError(f"vertex count must be a non-negative integer, got {self.n!r}")
        seen = set()
        for arc in self.arcs:
            u, v = arc
            if not (_is_int(u) and _is_int(v)):
                raise InstanceError(f"arc endpoints must be integers: {arc!r}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InstanceError(f"arc ({u},{v}) has an endpoint out of range 0..{self.n - 1}")
            if u == v:
                raise InstanceError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise InstanceError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
        if not self.directed:
            for u, v in seen:
                if (v, u) not in seen:
                    raise InstanceError(f"undirected graph misses the reverse of arc ({u},{v})")
        object.__setattr__(self, "arcs", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], directed: bool = False) -> "Graph":
        """Build a graph from a pair list; undirected pairs are mirrored.

        Repeated undirected edges (in either orientation) are an error.
        """
        arcs = []
        for u, v in edges:
            arcs.append((u, v))
            if not directed:
                arcs.append((v, u))
        return cls(n, directed, tuple(arcs))

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        inn = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(x) for x in inn)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Neighbors ignoring arc direction."""
        nb = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        """Out-neighborhoods as bit masks, used by the search code."""
        return tuple(sum(1 << v for v in vs) for vs in self.out_neighbors)

    def edges(self) -> list[tuple[int, int]]:
        """Arcs for directed graphs, each edge once (u < v) otherwise."""
        if self.directed:
            return list(self.arcs)
        return [(u, v) for u, v in self.arcs if u < v]

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class Instance:
    """Full game data: graph, per-vertex weights and the three budgets."""

    graph: Graph
    b: tuple[int, ...]
    c_vacc: tuple[int, ...]
    c_att: tuple[int, ...]
    c_prot: tuple[int, ...]
    omega: int = 0
    phi: int = 0
    lam: int = 0
    names: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        n = self.graph.n
        for label in ("b", "c_vacc", "c_att", "c_prot"):
            vec = tuple(getattr(self, label))
            if len(vec) != n:
                raise InstanceError(f"{label} has length {len(vec)}, expected {n}")
            for i, w in enumerate(vec):
                if not _is_int(w) or w < 0:
                    raise InstanceError(f"{label}[{i}] must be a non-negative integer, got {w!r}")
            object.__setattr__(self, label, vec)
        for label in ("omega", "phi", "lam"):
            w = getattr(self, label)
            if not _is_int(w) or w < 0:
                raise InstanceError(f"budget {label} must be a non-negative integer, got {w!r}")
        if self.names is not None:
            names = tuple(str(x) for x in self.names)
            if len(names) != n:
                raise InstanceError(f"names has length {len(names)}, expected {n}")
            if len(set(names)) != n:
                raise InstanceError("vertex names must be unique")
            object.__setattr__(self, "names", names)

    @classmethod
    def build(cls, graph: Graph, b=None, c_vacc=None, c_att=None, c_prot=None,
              omega=0, phi=0, lam=0, names=None) -> "Instance":
        """Convenience constructor; omitted weight vectors default to all ones."""
        ones = (1,) * graph.n
        return cls(graph,
                   tuple(b) if b is not None else ones,
                   tuple(c_vacc) if c_vacc is not None else ones,
                   tuple(c_att) if c_att is not None else ones,
                   tuple(c_prot) if c_prot is not None else ones,
                   omega, phi, lam,
                   tuple(names) if names is not None else None)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def unitary(self) -> bool:
        return all(w == 1 for vec in (self.b, self.c_vacc, self.c_att, self.c_prot) for w in vec)

    @property
    def total_benefit(self) -> int:
        return sum(self.b)

    def with_budgets(self, omega=None, phi=None, lam=None) -> "Instance":
        return replace(self,
                       omega=self.omega if omega is None else omega,
                       phi=self.phi if phi is None else phi,
                       lam=self.lam if lam is None else lam)

    def vertex_id(self, key) -> int:
        """Resolve a vertex given by id or by name."""
        if _is_int(key):
            if not 0 <= key < self.n:
                raise InstanceError(f"vertex {key} out of range")
            return key
        if self.names is not None and key in self.names:
            return self.names.index(key)
        text = str(key)
        if text.lstrip("-").isdigit():
            return self.vertex_id(int(text))
        raise InstanceError(f"unknown vertex {key!r}")

    def label(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


# ---------------------------------------------------------------- documents

_WEIGHT_KEYS = ("b", "c_vacc", "c_att", "c_prot")


def parse_instance(text: str) -> Instance:
    """Parse a JSON instance document into a validated :class:`Instance`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed instance document: {exc}") from None
    return instance_from_dict(doc)


def instance_from_dict(doc) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceError("instance document must be a JSON object")
    for key in ("directed", "n", "arcs", "omega", "phi", "lambda"):
        if key not in doc:
            raise InstanceError(f"instance document misses required key {key!r}")
    unknown = set(doc) - {"directed", "n", "arcs", "omega", "phi", "lambda", "names", *_WEIGHT_KEYS}
    if unknown:
        raise InstanceError(f"unknown keys in instance document: {sorted(unknown)}")
    directed = doc["directed"]
    if not isinstance(directed, bool):
        raise InstanceError("'directed' must be a boolean")
    n = doc["n"]
    arcs = doc["arcs"]
    if not isinstance(arcs, list) or not all(isinstance(a, list) and len(a) == 2 for a in arcs):
        raise InstanceError("'arcs' must be a list of [u, v] pairs")
    if not _is_int(n) or n < 0:
        raise InstanceError(f"'n' must be a non-negative integer, got {n!r}")
    for u, v in arcs:
        if not (_is_int(u) and _is_int(v)) or not (0 <= u < n and 0 <= v < n):
            raise InstanceError(f"arc ({u},{v}) has an endpoint out of range 0..{n - 1}")
    if directed:
        graph = Graph(n, True, tuple((u, v) for u, v in arcs))
    else:
        seen = set()
        for u, v in arcs:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InstanceError(f"duplicate edge {key}")
            seen.add(key)
        graph = Graph.from_edges(n, arcs, directed=False)
    weights = {}
    for key in _WEIGHT_KEYS:
        vec = doc.get(key)
        if vec is None:
            vec = [1] * n
        if not isinstance(vec, list):
            raise InstanceError(f"{key!r} must be a list")
        weights[key] = vec
    names = doc.get("names")
    if names is not None and not isinstance(names, list):
        raise InstanceError("'names' must be a list")
    return Instance(graph, weights["b"], weights["c_vacc"], weights["c_att"], weights["c_prot"],
                    doc["omega"], doc["phi"], doc["lambda"], names)


def instance_to_dict(inst: Instance) -> dict:
    doc = {
        "directed": inst.graph.directed,
        "n": inst.n,
        "arcs": [list(a) for a in inst.graph.edges()],
        "b": list(inst.b),
        "c_vacc": list(inst.c_vacc),
        "c_att": list(inst.c_att),
        "c_prot": list(inst.c_prot),
        "omega": inst.omega,
        "phi": inst.phi,
        "lambda": inst.lam,
    }
    if inst.names is not None:
        doc["names"] = list(inst.names)
    return doc


def serialize_instance(inst: Instance) -> str:
    """Canonical document text: parse(serialize(x)) == x and the text is stable."""
    return json.dumps(instance_to_dict(inst), separators=(",", ":"))


def instance_digest(inst: Instance) -> str:
    return hashlib.sha256(serialize_instance(inst).encode()).hexdigest()


# ---------------------------------------------------------------- structure

def induced_subgraph(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete ``removed`` and renumber the rest; returns the graph and old->new ids."""
    removed = set(removed)
    for v in removed:
        if not _is_int(v) or not 0 <= v < g.n:
            raise InstanceError(f"vertex {v!r} out of range")
    mapping = {}
    for v in range(g.n):
        if v not in removed:
            mapping[v] = len(mapping)
    arcs = tuple((mapping[u], mapping[v]) for u, v in g.arcs
                 if u in mapping and v in mapping)
    return Graph(len(mapping), g.directed, arcs), mapping


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Weak components, largest first, ties by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def reachable_set(g: Graph, sources: Iterable[int], blocked: Iterable[int] = ()) -> frozenset[int]:
    """Vertices reachable from ``sources`` along arcs, never entering ``blocked``.

    Sources themselves are included unless blocked.
    """
    blocked = set(blocked)
    out = g.out_neighbors
    seen = set()
    stack = []
    for s in sources:
        if not _is_int(s) or not 0 <= s < g.n:
            raise InstanceError(f"vertex {s!r} out of range")
        if s not in blocked and s not in seen:
            seen.add(s)
            stack.append(s)
    while stack:
        u = stack.pop()
        for w in out[u]:
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def is_forest(g: Graph) -> bool:
    """True for an undirected graph without cycles."""
    if g.directed:
        return False
    return len(g.arcs) // 2 == g.n - len(connected_components(g))


def is_acyclic(g: Graph) -> bool:
    indeg = [len(x) for x in g.in_neighbors]
    stack = [v for v in range(g.n) if indeg[v] == 0]
    count = 0
    while stack:
        u = stack.pop()
        count += 1
        for w in g.out_neighbors[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return count == g.n
