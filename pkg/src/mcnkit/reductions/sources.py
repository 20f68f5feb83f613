"""Source problems of the reductions and their file formats."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from ..graph import Graph, InstanceError, _is_int


class SourceError(ValueError):
    """Malformed or out-of-contract source instance."""


# ---------------------------------------------------------------- formulas

@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables 1..num_vars; literals are signed ints (DIMACS style).

    ``blocks`` optionally splits the variables into quantifier blocks:
    two blocks (X, Y) ask for an X with no satisfying Y, three blocks
    (X, Y, Z) ask for an X such that every Y has a satisfying Z.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, ...], ...] | None = None
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if not _is_int(self.num_vars) or self.num_vars < 0:
            raise SourceError("number of variables must be a non-negative integer")
        clauses = tuple(tuple(c) for c in self.clauses)
        for c in clauses:
            for lit in c:
                if not _is_int(lit) or lit == 0 or abs(lit) > self.num_vars:
                    raise SourceError(f"literal {lit!r} references an undeclared variable")
        object.__setattr__(self, "clauses", clauses)
        if self.blocks is not None:
            blocks = tuple(tuple(b) for b in self.blocks)
            flat = [v for b in blocks for v in b]
            if sorted(flat) != list(range(1, self.num_vars + 1)):
                raise SourceError("quantifier blocks must partition the variables")
            if len(blocks) not in (2, 3) or any(not b for b in blocks):
                raise SourceError("expected two or three non-empty quantifier blocks")
            object.__setattr__(self, "blocks", blocks)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.num_vars or len(set(names)) != len(names):
                raise SourceError("variable names must be unique, one per variable")
            object.__setattr__(self, "names", names)

    @property
    def kind(self) -> str:
        if self.blocks is None:
            return "sat"
        return "b2cnf" if len(self.blocks) == 2 else "b3cnf"

    def var_name(self, v: int) -> str:
        return self.names[v - 1] if self.names is not None else f"x{v}"

    def lit_name(self, lit: int) -> str:
        return ("~" if lit < 0 else "") + self.var_name(abs(lit))

    def satisfied_by(self, assignment) -> bool:
        """``assignment`` maps variable -> bool (or is indexable by variable)."""
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)

    def require_width(self, low: int, high: int) -> None:
        for i, c in enumerate(self.clauses):
            if not low <= len(c) <= high:
                want = str(low) if low == high else f"{low}..{high}"
                raise SourceError(f"clause {i + 1} has {len(c)} literals, expected {want}")


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF.  Extra comment lines understood:

    ``c blocks X: 1 2 / Y: 3 / Z: 4`` declares quantifier blocks and
    ``c names a b c d`` names the variables.
    """
    header = None
    blocks = None
    names = None
    literals: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            body = line[1:].strip()
            if body.startswith("blocks"):
                blocks = []
                for part in body[len("blocks"):].split("/"):
                    if ":" not in part:
                        raise SourceError(f"bad block declaration {part.strip()!r}")
                    _, vs = part.split(":", 1)
                    try:
                        blocks.append([int(x) for x in vs.split()])
                    except ValueError:
                        raise SourceError(f"bad block declaration {part.strip()!r}") from None
            elif body.startswith("names"):
                names = body[len("names"):].split()
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise SourceError(f"bad problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise SourceError(f"bad problem line {line!r}") from None
            continue
        if header is None:
            raise SourceError("clause before the problem line")
        try:
            literals.extend(int(x) for x in line.split())
        except ValueError:
            raise SourceError(f"bad clause line {line!r}") from None
    if header is None:
        raise SourceError("missing problem line")
    clauses, cur = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(lit)
    if cur:
        raise SourceError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise SourceError(f"problem line announces {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses), blocks, names)


def to_dimacs(f: CnfFormula) -> str:
    lines = []
    if f.names is not None:
        lines.append("c names " + " ".join(f.names))
    if f.blocks is not None:
        labels = "XYZ"
        lines.append("c blocks " + " / ".join(
            f"{labels[i]}: " + " ".join(str(v) for v in b) for i, b in enumerate(f.blocks)))
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    for c in f.clauses:
        lines.append(" ".join(str(l) for l in c) + " 0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- knapsacks

def _positive(label: str, values: Sequence[int]) -> tuple[int, ...]:
    values = tuple(values)
    for x in values:
        if not _is_int(x) or x <= 0:
            raise SourceError(f"{label} must be positive integers, got {x!r}")
    return values


@dataclass(frozen=True)
class KnapsackInstance:
    a: tuple[int, ...]
    p: tuple[int, ...]
    B: int
    Kbar: int

    def __post_init__(self):
        object.__setattr__(self, "a", _positive("weights", self.a))
        object.__setattr__(self, "p", _positive("profits", self.p))
        if len(self.a) != len(self.p):
            raise SourceError("weights and profits differ in length")
        _positive("capacity and goal", (self.B, self.Kbar))


@dataclass(frozen=True)
class BikInstance:
    """Leader removes items of weight <= A; follower then packs profit <= B."""

    a: tuple[int, ...]
    p: tuple[int, ...]
    A: int
    B: int
    Kbar: int

    def __post_init__(self):
        object.__setattr__(self, "a", _positive("weights", self.a))
        object.__setattr__(self, "p", _positive("profits", self.p))
        if len(self.a) != len(self.p):
            raise SourceError("weights and profits differ in length")
        _positive("capacities and goal", (self.A, self.B, self.Kbar))
        if self.Kbar > self.B:
            raise SourceError("goal must not exceed the maximum profit")

    @property
    def nontrivial(self) -> bool:
        return self.Kbar < sum(self.p) and self.B < sum(self.p)


@dataclass(frozen=True)
class TikInstance:
    """Two interdiction levels (weights a2 <= A2, then a <= A) above a packing level.

    ``a2`` and ``A2`` are the first leader's weights and capacity.
    """

    a2: tuple[int, ...]
    a: tuple[int, ...]
    p: tuple[int, ...]
    A2: int
    A: int
    B: int
    Kbar: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        for name in ("a2", "a", "p"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))
        if not len(self.a2) == len(self.a) == len(self.p):
            raise SourceError("item vectors differ in length")
        _positive("capacities and goal", (self.A2, self.A, self.B, self.Kbar))
        if self.Kbar > self.B:
            raise SourceError("goal must not exceed the maximum profit")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.p):
                raise SourceError("one label per item expected")


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SourceError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SourceError("expected a JSON object")
    return doc


def _items(doc, keys):
    try:
        items = doc["items"]
        return [[it[k] for it in items] for k in keys]
    except (KeyError, TypeError) as exc:
        raise SourceError(f"bad item list: missing {exc}") from None


def _field(doc, key):
    if key not in doc:
        raise SourceError(f"missing key {key!r}")
    return doc[key]


def parse_knapsack(text: str) -> KnapsackInstance:
    doc = _load(text)
    a, p = _items(doc, ("a", "p"))
    return KnapsackInstance(a, p, _field(doc, "B"), _field(doc, "Kbar"))


def parse_bik(text: str) -> BikInstance:
    doc = _load(text)
    a, p = _items(doc, ("a", "p"))
    return BikInstance(a, p, _field(doc, "A"), _field(doc, "B"), _field(doc, "Kbar"))


def parse_tik(text: str) -> TikInstance:
    doc = _load(text)
    a2, a, p = _items(doc, ("a2", "a", "p"))
    return TikInstance(a2, a, p, _field(doc, "A2"), _field(doc, "A"), _field(doc, "B"),
                       _field(doc, "Kbar"), doc.get("labels"))


def knapsack_to_json(kp) -> str:
    """JSON text for a knapsack, BIK or TIK instance."""
    if isinstance(kp, TikInstance):
        doc = {"items": [{"a2": x, "a": y, "p": z} for x, y, z in zip(kp.a2, kp.a, kp.p)],
               "A2": kp.A2, "A": kp.A, "B": kp.B, "Kbar": kp.Kbar}
        if kp.labels is not None:
            doc["labels"] = list(kp.labels)
    elif isinstance(kp, BikInstance):
        doc = {"items": [{"a": x, "p": z} for x, z in zip(kp.a, kp.p)],
               "A": kp.A, "B": kp.B, "Kbar": kp.Kbar}
    else:
        doc = {"items": [{"a": x, "p": z} for x, z in zip(kp.a, kp.p)],
               "B": kp.B, "Kbar": kp.Kbar}
    return json.dumps(doc, separators=(",", ":"))


# ---------------------------------------------------------------- graphs

@dataclass(frozen=True)
class DominatingSetInstance:
    n: int
    edges: tuple[tuple[int, int], ...]
    B: int

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted((min(e), max(e)) for e in self.edges)))
        try:
            self.graph()
        except InstanceError as exc:
            raise SourceError(str(exc)) from None
        if not _is_int(self.B) or self.B <= 0:
            raise SourceError("B must be a positive integer")

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


@dataclass(frozen=True)
class SplitGraphInstance:
    """Split graph with a declared clique/independent partition, for the CNP.

    ``edges`` lists every edge; the clique must be complete and the
    independent part edgeless.
    """

    clique: tuple[int, ...]
    independent: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    B: int
    Kbar: int

    def __post_init__(self):
        object.__setattr__(self, "clique", tuple(sorted(self.clique)))
        object.__setattr__(self, "independent", tuple(sorted(self.independent)))
        object.__setattr__(self, "edges", tuple(sorted((min(e), max(e)) for e in self.edges)))
        n = self.n
        if sorted(self.clique + self.independent) != list(range(n)):
            raise SourceError("clique and independent set must partition 0..n-1")
        try:
            self.graph()
        except InstanceError as exc:
            raise SourceError(str(exc)) from None
        es = set(self.edges)
        for i, u in enumerate(self.clique):
            for v in self.clique[i + 1:]:
                if (u, v) not in es:
                    raise SourceError(f"partition is not a valid split: clique misses edge ({u},{v})")
        ind = set(self.independent)
        for u, v in es:
            if u in ind and v in ind:
                raise SourceError(f"partition is not a valid split: edge ({u},{v}) inside the independent set")
        if not _is_int(self.B) or self.B < 0 or not _is_int(self.Kbar) or self.Kbar < 0:
            raise SourceError("B and Kbar must be non-negative integers")

    @property
    def n(self) -> int:
        return len(self.clique) + len(self.independent)

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def parse_split_graph(text: str) -> SplitGraphInstance:
    doc = _load(text)
    return SplitGraphInstance(_field(doc, "clique"), _field(doc, "independent"),
                              tuple(tuple(e) for e in _field(doc, "edges")),
                              _field(doc, "B"), _field(doc, "Kbar"))


def parse_dominating_set(text: str) -> DominatingSetInstance:
    doc = _load(text)
    return DominatingSetInstance(_field(doc, "n"), tuple(tuple(e) for e in _field(doc, "edges")),
                                 _field(doc, "B"))


def graph_source_to_json(src) -> str:
    if isinstance(src, SplitGraphInstance):
        doc = {"clique": list(src.clique), "independent": list(src.independent),
               "edges": [list(e) for e in src.edges], "B": src.B, "Kbar": src.Kbar}
    else:
        doc = {"n": src.n, "edges": [list(e) for e in src.edges], "B": src.B}
    return json.dumps(doc, separators=(",", ":"))
