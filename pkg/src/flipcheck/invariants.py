"""Exact invariants of three-dimensional terminal singularity germs.

A germ is recorded by a type tag, its index r, and its axial weight k.
Six families occur:

    tag     index r    axial weight k   quotient basket
    cA      r >= 2     k >= 1           k copies of (b, r), b = 1 by default
    cAx2    2          2 (fixed)        (1,2) + (1,2)
    cAx4    4          k >= 1           (1,4) + (k-1) copies of (1,2)
    cD2     2          k >= 1           k copies of (1,2)
    cD3     3          2 (fixed)        (1,3) + (1,3)
    cE2     2          3 (fixed)        (1,2) + (1,2) + (1,2)

Two invariants are attached to a germ and extended additively to finite
configurations of germs:

    xi = sum of the basket indices                  (an integer)
    f  = sum of r - 1/r over the basket             (a rational)

Both have closed forms in (tag, r, k); this module implements the closed
forms and, as an independent route, the basket sums.  The two routes must
agree exactly; the verifier module sweeps that agreement.

All arithmetic is exact (fractions.Fraction).  No floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterator, Union


class SingType(Enum):
    """Type tag of a terminal germ."""

    cA = "cA"
    cAx2 = "cAx2"
    cAx4 = "cAx4"
    cD2 = "cD2"
    cD3 = "cD3"
    cE2 = "cE2"


# index is determined by the tag except for cA
FIXED_INDEX = {
    SingType.cAx2: 2,
    SingType.cAx4: 4,
    SingType.cD2: 2,
    SingType.cD3: 3,
    SingType.cE2: 2,
}

# axial weight is determined by the tag for these three
FIXED_WEIGHT = {
    SingType.cAx2: 2,
    SingType.cD3: 2,
    SingType.cE2: 3,
}

# (tag, index r, axial weight k) triples, as plain data.  Used as the raw
# currency of the enumeration code, where constructing dataclass instances
# per candidate would dominate the runtime.
PointKey = tuple[str, int, int]


@dataclass(frozen=True, slots=True)
class TerminalPoint:
    """A single terminal germ: type tag, index r, axial weight k."""

    type: SingType
    r: int
    k: int

    def __post_init__(self) -> None:
        t, r, k = self.type, self.r, self.k
        if not isinstance(r, int) or not isinstance(k, int):
            raise TypeError("index and axial weight must be integers")
        if t is SingType.cA:
            if r < 2:
                raise ValueError(f"cA index must be >= 2, got {r}")
            if k < 1:
                raise ValueError(f"cA axial weight must be >= 1, got {k}")
        else:
            if r != FIXED_INDEX[t]:
                raise ValueError(f"{t.value} has fixed index {FIXED_INDEX[t]}, got {r}")
            fixed_k = FIXED_WEIGHT.get(t)
            if fixed_k is not None:
                if k != fixed_k:
                    raise ValueError(f"{t.value} has fixed axial weight {fixed_k}, got {k}")
            elif k < 1:
                raise ValueError(f"{t.value} axial weight must be >= 1, got {k}")

    @property
    def sort_key(self) -> PointKey:
        return (self.type.value, self.r, self.k)

    @property
    def key(self) -> PointKey:
        return (self.type.value, self.r, self.k)

    def __str__(self) -> str:
        return point_label(self)


_POINT_CACHE: dict[PointKey, TerminalPoint] = {}


def make_point(type: Union[SingType, str], r: int | None = None, k: int | None = None) -> TerminalPoint:
    """Build a TerminalPoint, filling in type-determined index/weight.

    ``make_point("cD3")`` works; ``make_point("cA", 3, 2)`` works; supplying
    a value that contradicts a fixed one raises ValueError.
    """
    t = SingType(type) if not isinstance(type, SingType) else type
    if t is SingType.cA:
        if r is None or k is None:
            raise ValueError("cA requires explicit index r and axial weight k")
    else:
        fixed_r = FIXED_INDEX[t]
        if r is None:
            r = fixed_r
        elif r != fixed_r:
            raise ValueError(f"{t.value} has fixed index {fixed_r}, got {r}")
        fixed_k = FIXED_WEIGHT.get(t)
        if fixed_k is not None:
            if k is None:
                k = fixed_k
            elif k != fixed_k:
                raise ValueError(f"{t.value} has fixed axial weight {fixed_k}, got {k}")
        elif k is None:
            raise ValueError(f"{t.value} requires an explicit axial weight k")
    key = (t.value, r, k)
    pt = _POINT_CACHE.get(key)
    if pt is None:
        pt = TerminalPoint(t, r, k)
        _POINT_CACHE[key] = pt
    return pt


def point_from_key(key: PointKey) -> TerminalPoint:
    return make_point(key[0], key[1], key[2])


def point_label(p: TerminalPoint) -> str:
    """Short human-readable form, e.g. cA(3,2), cAx4(2), cD3."""
    t = p.type
    if t is SingType.cA:
        return f"cA({p.r},{p.k})"
    if t in FIXED_WEIGHT:
        return t.value
    return f"{t.value}({p.k})"


@dataclass(frozen=True, slots=True)
class Configuration:
    """A finite multiset of terminal germs, kept in canonical sorted order.

    The empty configuration stands for a Gorenstein (index 1) variety.
    """

    points: tuple[TerminalPoint, ...] = ()

    def __post_init__(self) -> None:
        pts = tuple(sorted(self.points, key=lambda p: p.sort_key))
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, *points: TerminalPoint) -> "Configuration":
        return cls(tuple(points))

    def __iter__(self) -> Iterator[TerminalPoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def is_gorenstein(self) -> bool:
        return not self.points

    def __str__(self) -> str:
        return config_label(self)


EMPTY_CONFIG = Configuration()


def config_label(c: Configuration) -> str:
    if not c.points:
        return "(none)"
    return "+".join(point_label(p) for p in c.points)


def config_from_keys(keys: tuple[PointKey, ...]) -> Configuration:
    return Configuration(tuple(point_from_key(key) for key in keys))


# ---------------------------------------------------------------------------
# baskets


@dataclass(frozen=True, slots=True)
class Basket:
    """Multiset of virtual quotient pairs (b, r), 1 <= b < r, gcd(b, r) = 1."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for b, r in self.pairs:
            if r < 2:
                raise ValueError(f"basket index must be >= 2, got {r}")
            if not (1 <= b < r):
                raise ValueError(f"basket residue must satisfy 1 <= b < r, got ({b},{r})")
            if gcd(b, r) != 1:
                raise ValueError(f"basket residue must be coprime to the index, got ({b},{r})")
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "Basket":
        return cls(tuple(pairs))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def basket_of(p: TerminalPoint, b: int | None = None) -> Basket:
    """The quotient basket of a germ.

    The optional residue ``b`` applies to cA germs only (default 1); the
    other five families have rigid baskets.
    """
    t = p.type
    if t is SingType.cA:
        res = 1 if b is None else b
        return Basket(((res, p.r),) * p.k)
    if b is not None:
        raise ValueError(f"{t.value} has a fixed basket; explicit residue not allowed")
    if t is SingType.cAx2:
        return Basket(((1, 2), (1, 2)))
    if t is SingType.cAx4:
        return Basket(((1, 4),) + ((1, 2),) * (p.k - 1))
    if t is SingType.cD2:
        return Basket(((1, 2),) * p.k)
    if t is SingType.cD3:
        return Basket(((1, 3), (1, 3)))
    if t is SingType.cE2:
        return Basket(((1, 2),) * 3)
    raise AssertionError(t)


# ---------------------------------------------------------------------------
# invariants, closed forms

PointOrConfig = Union[TerminalPoint, Configuration]


def _xi_point(t: str, r: int, k: int) -> int:
    if t == "cA":
        return r * k
    if t == "cAx2":
        return 4
    if t == "cAx4":
        return 2 * k + 2
    if t == "cD2":
        return 2 * k
    # cD3 and cE2
    return 6


def _f_point(t: str, r: int, k: int) -> tuple[int, int]:
    """f of a single germ, as an unreduced (numerator, denominator) pair."""
    if t == "cA":
        return (k * (r * r - 1), r)
    if t == "cAx2":
        return (3, 1)
    if t == "cAx4":
        return (6 * k + 9, 4)
    if t == "cD2":
        return (3 * k, 2)
    if t == "cD3":
        return (16, 3)
    if t == "cE2":
        return (9, 2)
    raise AssertionError(t)


def key_xi(key: PointKey) -> int:
    """xi of a raw (tag, r, k) triple; hot-loop form of xi()."""
    return _xi_point(key[0], key[1], key[2])


def key_f_parts(key: PointKey) -> tuple[int, int]:
    """f of a raw triple as an unreduced fraction; hot-loop form."""
    return _f_point(key[0], key[1], key[2])


def xi(obj: PointOrConfig) -> int:
    """The integer invariant: sum of basket indices (closed form)."""
    if isinstance(obj, TerminalPoint):
        return _xi_point(obj.type.value, obj.r, obj.k)
    return sum(_xi_point(p.type.value, p.r, p.k) for p in obj)


def f_invariant(obj: PointOrConfig) -> Fraction:
    """The rational invariant: sum of r - 1/r over the basket (closed form)."""
    if isinstance(obj, TerminalPoint):
        n, d = _f_point(obj.type.value, obj.r, obj.k)
        return Fraction(n, d)
    total = Fraction(0)
    for p in obj:
        n, d = _f_point(p.type.value, p.r, p.k)
        total += Fraction(n, d)
    return total


def f_from_basket(basket: Basket) -> Fraction:
    """f computed from the basket directly; independent of the closed forms."""
    total = Fraction(0)
    for _b, r in basket:
        total += r - Fraction(1, r)
    return total


def xi_from_basket(basket: Basket) -> int:
    return sum(r for _b, r in basket)


def xi_gt2(obj: PointOrConfig) -> int:
    """Sum of (index * axial weight) over germs of index strictly above 2."""
    if isinstance(obj, TerminalPoint):
        return obj.r * obj.k if obj.r > 2 else 0
    return sum(p.r * p.k for p in obj if p.r > 2)


def c1c2_from_chi(chi: Union[int, Fraction], c: Configuration) -> Fraction:
    """Chern-number combination determined by the Euler characteristic.

    c1.c2 = 24*chi - f(c); exact rational in, exact rational out.
    """
    return 24 * Fraction(chi) - f_invariant(c)


def fraction_str(q: Fraction) -> str:
    """Exact decimal-free rendering: '3' or '15/4'."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# JSON forms
#
# A point serializes as {"type": <tag>, "r": <int>, "k": <int>} with the
# type-determined fields omitted: cA keeps both, cAx4/cD2 keep only k,
# cAx2/cD3/cE2 keep neither.  A configuration is the sorted list of points.


def point_to_obj(p: TerminalPoint) -> dict:
    obj: dict = {"type": p.type.value}
    if p.type is SingType.cA:
        obj["r"] = p.r
        obj["k"] = p.k
    elif p.type not in FIXED_WEIGHT:
        obj["k"] = p.k
    return obj


def point_from_obj(obj: dict) -> TerminalPoint:
    if not isinstance(obj, dict):
        raise ValueError(f"expected a point object, got {type(obj).__name__}")
    unknown = set(obj) - {"type", "r", "k"}
    if unknown:
        raise ValueError(f"unknown point fields: {sorted(unknown)}")
    if "type" not in obj:
        raise ValueError("point object missing 'type'")
    try:
        t = SingType(obj["type"])
    except ValueError:
        raise ValueError(f"unknown germ type {obj['type']!r}") from None
    return make_point(t, obj.get("r"), obj.get("k"))


def config_to_obj(c: Configuration) -> list:
    return [point_to_obj(p) for p in c]


def config_from_obj(obj: list) -> Configuration:
    if not isinstance(obj, list):
        raise ValueError(f"expected a list of points, got {type(obj).__name__}")
    return Configuration(tuple(point_from_obj(x) for x in obj))
