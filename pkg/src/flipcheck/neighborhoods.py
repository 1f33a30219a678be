"""Catalog of irreducible extremal neighborhoods.

Thirteen cases, named by their classification labels.  Each case fixes
the configuration of terminal germs on the source (up to the listed
integer parameters), the maximal index mu along the contracted curve,
and the dual graphs of the general section before (ex) and after (ey)
the transition.  Six of the thirteen also occur with flipping (isolated)
contractions; all thirteen occur divisorially.

    label      params              mu          source germs
    2.2.1.1    m >= 2, k >= 1      m           cA(m; k)
    2.2.1.2    -                   3           cD3
    2.2.1.3    k >= 1              4           cAx4(k)
    2.2.1'.1   -                   2           cAx2
    2.2.1'.2   k >= 1              2           cD2(k)
    2.2.1'.3   -                   2           cE2
    2.2.1'.4   k >= 1              4           cAx4(k)
    2.2.2      m odd >= 5          m           cA(m; 1)
    2.2.2'     -                   4           cAx4(2)
    2.2.3      m odd >= 3, k >= 1  m           cA(m; 1) + cD2(k)
    2.2.3'     m odd >= 3          m           cA(m; 1) + cA(2; 1)
    2.2.4      ri >= 2, ki >= 1    max(r1,r2)  cA(r1; k1) + cA(r2; k2)
    2.2.5      -                   1           (none)
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import lcm
from typing import Iterator

from .dualgraph import (
    DuValGraph,
    GraphKind,
    GraphSum,
    formal_d_components,
)
from .invariants import Configuration, TerminalPoint, make_point


class Kind(Enum):
    ISOLATED = "isolated"      # flipping contraction, no divisor contracted
    DIVISORIAL = "divisorial"  # divisor contracted to a curve


class Case(Enum):
    C2211 = "2.2.1.1"
    C2212 = "2.2.1.2"
    C2213 = "2.2.1.3"
    C221P1 = "2.2.1'.1"
    C221P2 = "2.2.1'.2"
    C221P3 = "2.2.1'.3"
    C221P4 = "2.2.1'.4"
    C222 = "2.2.2"
    C222P = "2.2.2'"
    C223 = "2.2.3"
    C223P = "2.2.3'"
    C224 = "2.2.4"
    C225 = "2.2.5"

    @property
    def label(self) -> str:
        return self.value


ALL_CASES: tuple[Case, ...] = tuple(Case)

# cases that occur with isolated (flipping) contractions
ISOLATED_CASES: frozenset[Case] = frozenset(
    {Case.C2211, Case.C2212, Case.C2213, Case.C222, Case.C223, Case.C224}
)

PARAM_NAMES: dict[Case, tuple[str, ...]] = {
    Case.C2211: ("m", "k"),
    Case.C2212: (),
    Case.C2213: ("k",),
    Case.C221P1: (),
    Case.C221P2: ("k",),
    Case.C221P3: (),
    Case.C221P4: ("k",),
    Case.C222: ("m",),
    Case.C222P: (),
    Case.C223: ("m", "k"),
    Case.C223P: ("m",),
    Case.C224: ("r1", "k1", "r2", "k2"),
    Case.C225: (),
}

_LABEL_TO_CASE = {c.value: c for c in Case}


def parse_case_label(text: str) -> Case:
    """Map a label to its case; the apostrophe may be written as 'p'.

    Accepts "2.2.1'.2" and the shell-friendly alias "2.2.1p.2".
    """
    text = text.strip()
    case = _LABEL_TO_CASE.get(text)
    if case is None:
        case = _LABEL_TO_CASE.get(text.replace("p", "'"))
    if case is None:
        known = ", ".join(c.value for c in Case)
        raise ValueError(f"unknown case label {text!r} (known: {known})")
    return case


@dataclass(frozen=True, slots=True)
class ExtremalNbhd:
    """One extremal neighborhood: a case, a contraction kind, parameters."""

    case: Case
    kind: Kind
    m: int | None = None
    k: int | None = None
    r1: int | None = None
    k1: int | None = None
    r2: int | None = None
    k2: int | None = None

    def __post_init__(self) -> None:
        if self.kind is Kind.ISOLATED and self.case not in ISOLATED_CASES:
            raise ValueError(f"case {self.case.value} has no isolated form")
        names = PARAM_NAMES[self.case]
        for field in ("m", "k", "r1", "k1", "r2", "k2"):
            val = getattr(self, field)
            if field in names:
                if val is None:
                    raise ValueError(f"case {self.case.value} requires parameter {field}")
            elif val is not None:
                raise ValueError(f"case {self.case.value} takes no parameter {field}")
        c = self.case
        if c is Case.C2211:
            if self.m < 2:
                raise ValueError("2.2.1.1 requires m >= 2")
            if self.k < 1:
                raise ValueError("2.2.1.1 requires k >= 1")
        elif c in (Case.C2213, Case.C221P2, Case.C221P4):
            if self.k < 1:
                raise ValueError(f"{c.value} requires k >= 1")
        elif c is Case.C222:
            if self.m < 5 or self.m % 2 == 0:
                raise ValueError("2.2.2 requires odd m >= 5")
        elif c is Case.C223:
            if self.m < 3 or self.m % 2 == 0:
                raise ValueError("2.2.3 requires odd m >= 3")
            if self.k < 1:
                raise ValueError("2.2.3 requires k >= 1")
        elif c is Case.C223P:
            if self.m < 3 or self.m % 2 == 0:
                raise ValueError("2.2.3' requires odd m >= 3")
        elif c is Case.C224:
            if self.r1 < 2 or self.r2 < 2:
                raise ValueError("2.2.4 requires r1, r2 >= 2")
            if self.k1 < 1 or self.k2 < 1:
                raise ValueError("2.2.4 requires k1, k2 >= 1")

    @property
    def params(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in PARAM_NAMES[self.case]}

    def __str__(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.case.value} {self.kind.value}" + (f" {ps}" if ps else "")


def make_neighborhood(case: Case, kind: Kind, **params: int) -> ExtremalNbhd:
    return ExtremalNbhd(case=case, kind=kind, **params)


def mu(n: ExtremalNbhd) -> int:
    """Maximal germ index along the contracted curve."""
    c = n.case
    if c is Case.C2211:
        return n.m
    if c is Case.C2212:
        return 3
    if c in (Case.C2213, Case.C221P4, Case.C222P):
        return 4
    if c in (Case.C221P1, Case.C221P2, Case.C221P3):
        return 2
    if c in (Case.C222, Case.C223, Case.C223P):
        return n.m
    if c is Case.C224:
        return max(n.r1, n.r2)
    return 1  # 2.2.5: no singular point on the curve


def source_config(n: ExtremalNbhd) -> Configuration:
    """The configuration of germs sitting on the source of the contraction."""
    c = n.case
    if c is Case.C2211:
        return Configuration.of(make_point("cA", n.m, n.k))
    if c is Case.C2212:
        return Configuration.of(make_point("cD3"))
    if c in (Case.C2213, Case.C221P4):
        return Configuration.of(make_point("cAx4", k=n.k))
    if c is Case.C221P1:
        return Configuration.of(make_point("cAx2"))
    if c is Case.C221P2:
        return Configuration.of(make_point("cD2", k=n.k))
    if c is Case.C221P3:
        return Configuration.of(make_point("cE2"))
    if c is Case.C222:
        return Configuration.of(make_point("cA", n.m, 1))
    if c is Case.C222P:
        return Configuration.of(make_point("cAx4", k=2))
    if c is Case.C223:
        return Configuration.of(make_point("cA", n.m, 1), make_point("cD2", k=n.k))
    if c is Case.C223P:
        return Configuration.of(make_point("cA", n.m, 1), make_point("cA", 2, 1))
    if c is Case.C224:
        return Configuration.of(make_point("cA", n.r1, n.k1), make_point("cA", n.r2, n.k2))
    return Configuration.of()  # 2.2.5


def _a(rank: int) -> DuValGraph:
    return DuValGraph(GraphKind.A, rank)


def graph_ex(n: ExtremalNbhd) -> GraphSum:
    """Dual graph of the general section of the source."""
    c = n.case
    if c is Case.C2211:
        return GraphSum.of(_a(n.m * n.k - 1))
    if c is Case.C2212:
        return GraphSum.of(DuValGraph(GraphKind.E, 6))
    if c in (Case.C2213, Case.C221P4):
        return GraphSum(formal_d_components(2 * n.k + 1))
    if c is Case.C221P1:
        return GraphSum.of(DuValGraph(GraphKind.D, 4))
    if c is Case.C221P2:
        return GraphSum(formal_d_components(2 * n.k))
    if c is Case.C221P3:
        return GraphSum.of(DuValGraph(GraphKind.E, 7))
    if c is Case.C222:
        return GraphSum.of(_a(n.m - 1))
    if c is Case.C222P:
        return GraphSum.of(DuValGraph(GraphKind.D, 5))
    if c is Case.C223:
        return GraphSum(( _a(n.m - 1),) + formal_d_components(2 * n.k))
    if c is Case.C223P:
        return GraphSum.of(_a(n.m - 1), _a(1))
    if c is Case.C224:
        return GraphSum.of(_a(n.r1 * n.k1 - 1), _a(n.r2 * n.k2 - 1))
    return GraphSum()  # 2.2.5


def graph_ey(n: ExtremalNbhd) -> GraphSum:
    """Dual graph of the general section after the transition.

    For flips this is the graph the target's section must degenerate
    from; for divisorial contractions it is the section of the image.
    Connected except for 2.2.1'.2 with k = 1 (the formal D_2) and the
    smooth case 2.2.5.
    """
    c = n.case
    if c is Case.C2211:
        return GraphSum.of(_a(n.m * n.k - 1))
    if c is Case.C2212:
        return GraphSum.of(DuValGraph(GraphKind.E, 6))
    if c in (Case.C2213, Case.C221P4):
        return GraphSum(formal_d_components(2 * n.k + 1))
    if c is Case.C221P1:
        return GraphSum.of(DuValGraph(GraphKind.D, 4))
    if c is Case.C221P2:
        return GraphSum(formal_d_components(2 * n.k))
    if c is Case.C221P3:
        return GraphSum.of(DuValGraph(GraphKind.E, 7))
    if c is Case.C222:
        return GraphSum(formal_d_components(n.m))
    if c is Case.C222P:
        return GraphSum.of(DuValGraph(GraphKind.E, 6))
    if c is Case.C223:
        return GraphSum(formal_d_components(2 * n.k + n.m))
    if c is Case.C223P:
        return GraphSum(formal_d_components(n.m + 2))
    if c is Case.C224:
        return GraphSum.of(_a(n.r1 * n.k1 + n.r2 * n.k2 - 1))
    return GraphSum()  # 2.2.5


def source_index_lcm(n: ExtremalNbhd) -> int:
    """lcm of the germ indices on the source (1 when Gorenstein)."""
    indices = [p.r for p in source_config(n)]
    return lcm(*indices) if indices else 1


# check_exclude return values
GORENSTEIN_ONLY = "target must be Gorenstein"
UNCONSTRAINED = "unconstrained"


def check_exclude(n: ExtremalNbhd) -> str:
    """Low-index exclusion: below the threshold only Gorenstein targets occur.

    Divisorial contractions with mu <= 3 and isolated ones with mu <= 2
    admit no singular point on the target side.
    """
    threshold = 3 if n.kind is Kind.DIVISORIAL else 2
    return GORENSTEIN_ONLY if mu(n) <= threshold else UNCONSTRAINED


def check_comp_d(r: int, n: ExtremalNbhd) -> bool:
    """Index test for the target germ of a divisorial contraction.

    A target of index r needs r dividing the lcm of the source indices
    and 2r <= mu.  r = 1 (Gorenstein) always passes.
    """
    if n.kind is not Kind.DIVISORIAL:
        raise ValueError("index test applies to divisorial contractions only")
    if r == 1:
        return True
    return 2 * r <= mu(n) and source_index_lcm(n) % r == 0


def iter_param_dicts(case: Case, bounds) -> Iterator[dict[str, int]]:
    """All parameter dictionaries for a case within the sweep bounds.

    For 2.2.4 the two (index, weight) slots are interchangeable, so only
    canonically ordered pairs (r1,k1) <= (r2,k2) are produced.
    """
    mi, ma = bounds.max_index, bounds.max_aw
    if case is Case.C2211:
        for m in range(2, mi + 1):
            for k in range(1, ma + 1):
                yield {"m": m, "k": k}
    elif case in (Case.C2213, Case.C221P2, Case.C221P4):
        for k in range(1, ma + 1):
            yield {"k": k}
    elif case is Case.C222:
        for m in range(5, mi + 1, 2):
            yield {"m": m}
    elif case is Case.C223:
        for m in range(3, mi + 1, 2):
            for k in range(1, ma + 1):
                yield {"m": m, "k": k}
    elif case is Case.C223P:
        for m in range(3, mi + 1, 2):
            yield {"m": m}
    elif case is Case.C224:
        for r1 in range(2, mi + 1):
            for k1 in range(1, ma + 1):
                for r2 in range(r1, mi + 1):
                    k2_lo = k1 if r2 == r1 else 1
                    for k2 in range(k2_lo, ma + 1):
                        yield {"r1": r1, "k1": k1, "r2": r2, "k2": k2}
    else:
        yield {}


def param_ranges(case: Case, bounds) -> dict[str, tuple[int, int]]:
    """The inclusive range swept for each parameter of a case."""
    mi, ma = bounds.max_index, bounds.max_aw
    ranges: dict[str, tuple[int, int]] = {}
    for name in PARAM_NAMES[case]:
        if name in ("m",):
            lo = {Case.C2211: 2, Case.C222: 5, Case.C223: 3, Case.C223P: 3}[case]
            ranges[name] = (lo, mi)
        elif name in ("r1", "r2"):
            ranges[name] = (2, mi)
        else:  # k, k1, k2
            ranges[name] = (1, ma)
    return ranges


# symbolic descriptors for the classify command
CATALOG: dict[Case, dict[str, str]] = {
    Case.C2211: dict(params="m>=2, k>=1", mu="m", source="cA(m,k)",
                     ex="A(mk-1)", ey="A(mk-1)"),
    Case.C2212: dict(params="", mu="3", source="cD3", ex="E6", ey="E6"),
    Case.C2213: dict(params="k>=1", mu="4", source="cAx4(k)",
                     ex="D(2k+1)", ey="D(2k+1)"),
    Case.C221P1: dict(params="", mu="2", source="cAx2", ex="D4", ey="D4"),
    Case.C221P2: dict(params="k>=1", mu="2", source="cD2(k)",
                      ex="D(2k)", ey="D(2k)"),
    Case.C221P3: dict(params="", mu="2", source="cE2", ex="E7", ey="E7"),
    Case.C221P4: dict(params="k>=1", mu="4", source="cAx4(k)",
                      ex="D(2k+1)", ey="D(2k+1)"),
    Case.C222: dict(params="m odd >=5", mu="m", source="cA(m,1)",
                    ex="A(m-1)", ey="D(m)"),
    Case.C222P: dict(params="", mu="4", source="cAx4(2)", ex="D5", ey="E6"),
    Case.C223: dict(params="m odd >=3, k>=1", mu="m", source="cA(m,1)+cD2(k)",
                    ex="A(m-1)+D(2k)", ey="D(2k+m)"),
    Case.C223P: dict(params="m odd >=3", mu="m", source="cA(m,1)+cA(2,1)",
                     ex="A(m-1)+A1", ey="D(m+2)"),
    Case.C224: dict(params="r1,r2>=2, k1,k2>=1", mu="max(r1,r2)",
                    source="cA(r1,k1)+cA(r2,k2)",
                    ex="A(r1k1-1)+A(r2k2-1)", ey="A(r1k1+r2k2-1)"),
    Case.C225: dict(params="", mu="1", source="(none)", ex="smooth", ey="smooth"),
}
