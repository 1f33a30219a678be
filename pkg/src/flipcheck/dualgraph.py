"""Du Val dual graphs, their degeneration order, and germ elephants.

Graphs are the simply-laced Dynkin diagrams A_n (n >= 1), D_n (n >= 4),
E_n (n in {6, 7, 8}).  A disjoint union is a GraphSum; the empty sum is
rendered "smooth".

Degeneration is a partial order on single graphs: kinds are weighted
E > D > A, and G degenerates to H exactly when H's kind weight does not
exceed G's and rank(H) <= rank(G).  So E_7 -> D_5 holds, A_n -> A_n holds,
and nothing gains rank or climbs to a heavier kind.

Formal low-rank D graphs arising from germs of tiny axial weight are
recorded by their isomorphic standard forms: D_3 as A_3, and D_2 as the
disconnected A_1 + A_1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, TYPE_CHECKING

if TYPE_CHECKING:
    from .invariants import Configuration, TerminalPoint

from .invariants import SingType


class GraphKind(Enum):
    A = "A"
    D = "D"
    E = "E"


KIND_WEIGHT = {GraphKind.A: 0, GraphKind.D: 1, GraphKind.E: 2}

_LABEL_RE = re.compile(r"^([ADE])[ _]?(\d+)$")


@dataclass(frozen=True, slots=True)
class DuValGraph:
    kind: GraphKind
    rank: int

    def __post_init__(self) -> None:
        k, n = self.kind, self.rank
        if k is GraphKind.A and n < 1:
            raise ValueError(f"A-rank must be >= 1, got {n}")
        if k is GraphKind.D and n < 4:
            raise ValueError(f"D-rank must be >= 4, got {n}")
        if k is GraphKind.E and n not in (6, 7, 8):
            raise ValueError(f"E-rank must be 6, 7 or 8, got {n}")

    @property
    def label(self) -> str:
        return f"{self.kind.value}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "DuValGraph":
        m = _LABEL_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a Du Val graph label: {text!r}")
        return cls(GraphKind(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return self.label


def _graph_sort_key(g: DuValGraph) -> tuple[int, int]:
    return (KIND_WEIGHT[g.kind], g.rank)


@dataclass(frozen=True, slots=True)
class GraphSum:
    """Disjoint union of Du Val graphs, kept sorted; empty means smooth."""

    components: tuple[DuValGraph, ...] = ()

    def __post_init__(self) -> None:
        comps = tuple(sorted(self.components, key=_graph_sort_key))
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *graphs: DuValGraph) -> "GraphSum":
        return cls(tuple(graphs))

    @property
    def rank(self) -> int:
        return sum(g.rank for g in self.components)

    @property
    def label(self) -> str:
        if not self.components:
            return "smooth"
        return "+".join(g.label for g in self.components)

    @classmethod
    def parse(cls, text: str) -> "GraphSum":
        text = text.strip()
        if text in ("smooth", ""):
            return cls()
        return cls(tuple(DuValGraph.parse(part) for part in text.split("+")))

    def __iter__(self) -> Iterator[DuValGraph]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return self.label


SMOOTH = GraphSum()


def degenerates_to(source: DuValGraph, target: DuValGraph) -> bool:
    """Whether source admits target as a degeneration (non-strict)."""
    return (
        KIND_WEIGHT[target.kind] <= KIND_WEIGHT[source.kind]
        and target.rank <= source.rank
    )


def sum_dominated_by(s: GraphSum, g: DuValGraph, reserve: int) -> bool:
    """Every component of s degenerates from g, with rank headroom.

    Requires rank(s) <= rank(g) - reserve on top of componentwise
    degeneration.  reserve 0 is plain domination; reserve 1 leaves one
    rank of slack.
    """
    if not all(degenerates_to(g, comp) for comp in s):
        return False
    return s.rank <= g.rank - reserve


def formal_d_components(rank: int) -> tuple[DuValGraph, ...]:
    """The graph 'D_rank' for rank >= 2, degenerate cases normalized.

    D_2 and D_3 are not Dynkin diagrams proper; they stand for the rank-2
    and rank-3 diagrams with the same lattice, A_1 + A_1 and A_3.
    """
    if rank >= 4:
        return (DuValGraph(GraphKind.D, rank),)
    if rank == 3:
        return (DuValGraph(GraphKind.A, 3),)
    if rank == 2:
        return (DuValGraph(GraphKind.A, 1), DuValGraph(GraphKind.A, 1))
    raise ValueError(f"formal D-rank must be >= 2, got {rank}")


def elephant_components(p: "TerminalPoint") -> tuple[DuValGraph, ...]:
    """Dual graph of the germ's general hyperplane section, as components."""
    t = p.type
    if t is SingType.cA:
        return (DuValGraph(GraphKind.A, p.r * p.k - 1),)
    if t is SingType.cAx2:
        return (DuValGraph(GraphKind.D, 4),)
    if t is SingType.cAx4:
        return formal_d_components(2 * p.k + 1)
    if t is SingType.cD2:
        return formal_d_components(2 * p.k)
    if t is SingType.cD3:
        return (DuValGraph(GraphKind.E, 6),)
    if t is SingType.cE2:
        return (DuValGraph(GraphKind.E, 7),)
    raise AssertionError(t)


def elephant_graph(p: "TerminalPoint") -> DuValGraph:
    """Single-graph elephant accessor.

    Raises ValueError for the one disconnected case (cD2 with axial
    weight 1, whose section graph is A_1 + A_1); use elephant_components
    there.
    """
    comps = elephant_components(p)
    if len(comps) != 1:
        labels = "+".join(g.label for g in comps)
        raise ValueError(f"elephant of {p} is disconnected ({labels}); no single graph")
    return comps[0]


def config_graph_sum(c: "Configuration") -> GraphSum:
    """Union of the elephants of every germ in the configuration."""
    comps: list[DuValGraph] = []
    for p in c:
        comps.extend(elephant_components(p))
    return GraphSum(tuple(comps))


def all_graphs(max_rank: int) -> Iterator[DuValGraph]:
    """Every valid Du Val graph of rank <= max_rank, for exhaustive tests."""
    for n in range(1, max_rank + 1):
        yield DuValGraph(GraphKind.A, n)
    for n in range(4, max_rank + 1):
        yield DuValGraph(GraphKind.D, n)
    for n in (6, 7, 8):
        if n <= max_rank:
            yield DuValGraph(GraphKind.E, n)
