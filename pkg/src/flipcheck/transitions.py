"""Admissible target configurations across extremal transitions.

Given an extremal neighborhood, this module enumerates every germ
configuration that can sit on the other side of the contraction:

  * flips (isolated kind): at most two germs survive; their combined
    index-weight budget is capped by the source, excluded families never
    appear, and the union of their section graphs must degenerate from
    the source section graph with one rank to spare;

  * divisorial-to-curve contractions: at most one germ appears on the
    image curve; its index must divide the lcm of the source indices and
    satisfy twice-index <= mu, with per-case weight budgets.

The empty configuration (Gorenstein target) is always admissible and is
always emitted first.  Enumeration is exhaustive within explicit Bounds
and deterministic: results are sorted tuples.

The integer recursion attached to a flip is also here; it produces the
index pair of the target germs plus a monotone-chain certificate.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dualgraph import KIND_WEIGHT, elephant_components, GraphKind
from .invariants import (
    Configuration,
    PointKey,
    config_from_keys,
    key_xi,
    make_point,
)
from .neighborhoods import (
    Case,
    ExtremalNbhd,
    GORENSTEIN_ONLY,
    Kind,
    check_comp_d,
    check_exclude,
    graph_ey,
    mu,
)


@dataclass(frozen=True, slots=True)
class Bounds:
    """Inclusive caps for exhaustive sweeps: germ indices and axial weights."""

    max_index: int = 20
    max_aw: int = 20

    def __post_init__(self) -> None:
        if self.max_index < 1 or self.max_aw < 1:
            raise ValueError("bounds must be >= 1")


RawConfig = tuple[PointKey, ...]

_COMP_CACHE: dict[PointKey, tuple[tuple[int, int], ...]] = {}


def _point_components(pk: PointKey) -> tuple[tuple[int, int], ...]:
    comps = _COMP_CACHE.get(pk)
    if comps is None:
        pt = make_point(pk[0], pk[1], pk[2])
        comps = tuple((KIND_WEIGHT[g.kind], g.rank) for g in elephant_components(pt))
        _COMP_CACHE[pk] = comps
    return comps


def _fits_under(cfg: RawConfig, gw: int, grank: int, reserve: int) -> bool:
    # raw-level mirror of dualgraph.sum_dominated_by, on cached components
    total = 0
    for pk in cfg:
        for w, rank in _point_components(pk):
            if w > gw or rank > grank:
                return False
            total += rank
    return total <= grank - reserve


def _index2_singles(b: Bounds, ca_wmax: int, cd_wmax: int) -> list[PointKey]:
    """Candidate single index-2 germs under per-type weight caps."""
    pts: list[PointKey] = []
    if b.max_index < 2:
        return pts
    for w in range(1, min(b.max_aw, ca_wmax) + 1):
        pts.append(("cA", 2, w))
    if b.max_aw >= 2:
        pts.append(("cAx2", 2, 2))
    for w in range(1, min(b.max_aw, cd_wmax) + 1):
        pts.append(("cD2", 2, w))
    return pts


def _raw_flip_targets(n: ExtremalNbhd, b: Bounds) -> list[RawConfig]:
    if n.kind is not Kind.ISOLATED:
        raise ValueError("flip targets are defined for isolated neighborhoods only")
    empty: RawConfig = ()
    if check_exclude(n) == GORENSTEIN_ONLY:
        return [empty]
    mi, ma = b.max_index, b.max_aw
    case = n.case
    cand: set[RawConfig] = set()

    if case is Case.C2211:
        # budget: total index*weight of the targets never exceeds m*k
        m, k = n.m, n.k
        cap = m * k
        rmax = min(m, mi)
        for a1 in range(2, rmax + 1):
            for w1 in range(1, min(ma, cap // a1) + 1):
                p1: PointKey = ("cA", a1, w1)
                cand.add((p1,))
                s1 = a1 * w1
                for a2 in range(a1, rmax + 1):
                    w2lo = w1 if a2 == a1 else 1
                    for w2 in range(w2lo, min(ma, (cap - s1) // a2) + 1):
                        cand.add((p1, ("cA", a2, w2)))
    elif case is Case.C2212:
        for pk in _index2_singles(b, 3, 2):
            cand.add((pk,))
    elif case is Case.C2213:
        # one index-2 germ with weight <= k, optionally joined by an
        # index-3 germ of weight <= 2 under the shared xi budget 2k+1
        k = n.k
        budget = 2 * k + 1
        index2 = _index2_singles(b, k, k)
        for pk in index2:
            cand.add((pk,))
        if mi >= 3:
            for w2 in range(1, min(2, ma) + 1):
                p2: PointKey = ("cA", 3, w2)
                if 2 + 3 * w2 <= budget:
                    cand.add((p2,))
                for pk in index2:
                    if key_xi(pk) + 3 * w2 <= budget:
                        cand.add(tuple(sorted((pk, p2))))
    elif case is Case.C222:
        m = n.m
        for pk in _index2_singles(b, m // 2, (m - 1) // 2):
            cand.add((pk,))
    elif case is Case.C223:
        m, k = n.m, n.k
        for pk in _index2_singles(b, (m + 2 * k) // 2, (m + 2 * k - 1) // 2):
            cand.add((pk,))
    elif case is Case.C224:
        # Slotwise: each source slot (ri, ki) maps to a target slot whose
        # index can only drop and whose weight can only grow.  A slot whose
        # index drops to 1 becomes smooth but its weight still counts
        # against the budget sigma, so a lone survivor of slot i obeys
        # r'*w' <= sigma - k_other.  Both indices staying put is excluded.
        r1, k1, r2, k2 = n.r1, n.k1, n.r2, n.k2
        sigma = r1 * k1 + r2 * k2
        for a1 in range(2, min(r1, mi) + 1):
            for w1 in range(k1, ma + 1):
                s1 = a1 * w1
                if s1 + 2 * k2 > sigma:
                    break
                p1 = ("cA", a1, w1)
                for a2 in range(2, min(r2, mi) + 1):
                    if a1 == r1 and a2 == r2:
                        continue
                    for w2 in range(k2, min(ma, (sigma - s1) // a2) + 1):
                        cand.add(tuple(sorted((p1, ("cA", a2, w2)))))
        for a2 in range(2, min(r2, mi) + 1):
            for w2 in range(k2, min(ma, (sigma - k1) // a2) + 1):
                cand.add((("cA", a2, w2),))
        for a1 in range(2, min(r1, mi) + 1):
            for w1 in range(k1, min(ma, (sigma - k2) // a1) + 1):
                cand.add((("cA", a1, w1),))
    else:  # pragma: no cover - Kind.ISOLATED validation forbids the rest
        raise AssertionError(case)

    # section graph of the flipped side; connected for every isolated case
    # that survives the exclusion test
    g = graph_ey(n).components[0]
    gw, grank = KIND_WEIGHT[g.kind], g.rank
    out = [empty]
    out.extend(cfg for cfg in cand if _fits_under(cfg, gw, grank, 1))
    out.sort()
    return out


def enumerate_flip_targets(n: ExtremalNbhd, b: Bounds | None = None) -> tuple[Configuration, ...]:
    """Every admissible flip target configuration, empty one first."""
    return tuple(config_from_keys(raw) for raw in _raw_flip_targets(n, b or Bounds()))


# per-case weight cap for an index-2 cD germ on a divisorial image,
# stated as 2*k' <= cap(n)
def _divisorial_cd_cap(n: ExtremalNbhd) -> int | None:
    c = n.case
    if c in (Case.C2213, Case.C221P4):
        return 2 * n.k + 1
    if c is Case.C222:
        return n.m
    if c is Case.C222P:
        return 6
    if c is Case.C223:
        return n.m + 2 * n.k
    if c is Case.C223P:
        return n.m + 2
    return None


def _raw_divisorial_targets(n: ExtremalNbhd, b: Bounds) -> list[RawConfig]:
    if n.kind is not Kind.DIVISORIAL:
        raise ValueError("divisorial targets require a divisorial neighborhood")
    empty: RawConfig = ()
    if check_exclude(n) == GORENSTEIN_ONLY:
        return [empty]
    mi, ma = b.max_index, b.max_aw
    case = n.case
    cand: set[RawConfig] = set()

    if mu(n) >= 4 and check_comp_d(2, n) and mi >= 2 and ma >= 2:
        cand.add((("cAx2", 2, 2),))

    cd_cap = _divisorial_cd_cap(n)
    if cd_cap is not None and mi >= 2 and check_comp_d(2, n):
        for w in range(1, min(ma, cd_cap // 2) + 1):
            cand.add((("cD2", 2, w),))

    if case in (Case.C2213, Case.C221P4):
        if mi >= 2 and check_comp_d(2, n):
            for w in range(1, min(ma, n.k) + 1):
                cand.add((("cA", 2, w),))
    elif case is Case.C222:
        m = n.m
        for a in range(2, mi + 1):
            if check_comp_d(a, n):
                for w in range(1, min(ma, m // a) + 1):
                    cand.add((("cA", a, w),))
    elif case is Case.C222P:
        if mi >= 2 and check_comp_d(2, n):
            for w in range(1, min(ma, 3) + 1):
                cand.add((("cA", 2, w),))
    elif case is Case.C223:
        m, k = n.m, n.k
        if mi >= 2 and check_comp_d(2, n):
            for w in range(1, min(ma, (m + 2 * k) // 2) + 1):
                cand.add((("cA", 2, w),))
        for a in range(3, mi + 1, 2):
            if m % a == 0 and check_comp_d(a, n):
                for w in range(1, min(ma, (m + 2) // a) + 1):
                    cand.add((("cA", a, w),))
    elif case is Case.C223P:
        m = n.m
        for a in range(2, mi + 1):
            if check_comp_d(a, n):
                for w in range(1, min(ma, (m + 2) // a) + 1):
                    if a * w == m + 2 and a != 2:
                        continue
                    cand.add((("cA", a, w),))
    elif case is Case.C2211:
        m, k = n.m, n.k
        cap = m * k
        for a in range(2, mi + 1):
            if check_comp_d(a, n):
                for w in range(1, min(ma, cap // a) + 1):
                    cand.add((("cA", a, w),))
    elif case is Case.C224:
        from math import gcd

        r1, r2 = n.r1, n.r2
        if r1 != r2:
            a = gcd(r1, r2)
            if a >= 2 and a <= mi and check_comp_d(a, n):
                sigma = r1 * n.k1 + r2 * n.k2
                for w in range(1, min(ma, sigma // a) + 1):
                    cand.add((("cA", a, w),))
    # remaining cases have mu <= 3 and were handled by the exclusion test

    out = [empty]
    out.extend(cand)
    out.sort()
    return out


def enumerate_divisorial_targets(n: ExtremalNbhd, b: Bounds | None = None) -> tuple[Configuration, ...]:
    """Every admissible image-germ configuration, empty one first."""
    return tuple(config_from_keys(raw) for raw in _raw_divisorial_targets(n, b or Bounds()))


def enumerate_targets(n: ExtremalNbhd, b: Bounds | None = None) -> tuple[Configuration, ...]:
    if n.kind is Kind.ISOLATED:
        return enumerate_flip_targets(n, b)
    return enumerate_divisorial_targets(n, b)


# ---------------------------------------------------------------------------
# the integer recursion attached to a flip


@dataclass(frozen=True, slots=True)
class MoriRecursionInput:
    """Data driving the recursion d(n+1) = delta*rho_n*d(n) - d(n-1).

    rho is cycled when shorter than the number of steps.  alpha1, alpha2
    and e are carried along for the record; they do not enter the
    recursion itself.
    """

    delta: int
    rho: tuple[int, ...]
    d1: int
    d2: int
    alpha1: int | None = None
    alpha2: int | None = None
    e: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.delta < 1:
            raise ValueError("delta must be >= 1")
        if not self.rho or any(x < 1 for x in self.rho):
            raise ValueError("rho must be a non-empty tuple of positive integers")


@dataclass(frozen=True, slots=True)
class MoriRecursionResult:
    """The computed sequence plus the sign-change certificate.

    d holds d(1..steps).  kappa is the 1-based position of the first
    entry with d(kappa-1) > 0 > d(kappa), or None when no sign change
    occurs within the computed steps.  At a sign change the target index
    pair is (r1_prime, r2_prime) = (d(kappa-1), -d(kappa)).  chain1 and
    chain2 list d(kappa-1), d(kappa-3), ... and d(kappa-2), d(kappa-4),
    ...; chains_monotone records whether chain1 increases strictly and
    r2_prime < chain2 increases strictly, which is the certificate shape
    for sequences arising from actual flips (it can fail for arbitrary
    inputs).
    """

    d: tuple[int, ...]
    kappa: int | None
    r1_prime: int | None
    r2_prime: int | None
    chain1: tuple[int, ...]
    chain2: tuple[int, ...]
    chains_monotone: bool | None


def _strictly_increasing(xs: tuple[int, ...]) -> bool:
    return all(a < b for a, b in zip(xs, xs[1:]))


def run_mori_recursion(inp: MoriRecursionInput, steps: int = 32) -> MoriRecursionResult:
    """Run the recursion for d(1..steps) and locate the first sign change."""
    if steps < 3:
        raise ValueError("steps must be >= 3")
    d = [inp.d1, inp.d2]
    nrho = len(inp.rho)
    for i in range(2, steps):
        # d[i] is d(i+1); the multiplier indexed by n = i cycles through rho
        rho_n = inp.rho[(i - 2) % nrho]
        d.append(inp.delta * rho_n * d[i - 1] - d[i - 2])
    kappa = None
    for i in range(1, steps):
        if d[i - 1] > 0 and d[i] < 0:
            kappa = i + 1
            break
    if kappa is None:
        return MoriRecursionResult(tuple(d), None, None, None, (), (), None)
    r1p = d[kappa - 2]
    r2p = -d[kappa - 1]
    chain1 = tuple(d[j] for j in range(kappa - 2, -1, -2))
    chain2 = tuple(d[j] for j in range(kappa - 3, -1, -2))
    monotone = _strictly_increasing(chain1) and _strictly_increasing((r2p,) + chain2)
    return MoriRecursionResult(tuple(d), kappa, r1p, r2p, chain1, chain2, monotone)
