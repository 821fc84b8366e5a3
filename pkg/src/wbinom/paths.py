"""Hybrid lattice paths, hybrid subsets and the sign-reversing involution.

A hybrid path to ``(k, m)`` uses

* north/east steps when ``k, m >= 0``,
* south steps and east-then-south combos when ``k >= 0 > m`` (first step south),
* west steps and north-then-west combos when ``k < 0 <= m`` (first step west).

Each combo contributes a factor ``-1``.  Summing path weights to
``(k, n - k)`` reproduces ``wbinom(n, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, combinations_with_replacement

from .core import sgn, parity_sign
from .laurent import Laurent
from .weights import ONE, ZERO, big_weight


class UnsupportedCaseError(ValueError):
    pass


class Step(str, Enum):
    N = "N"
    S = "S"
    E = "E"
    W = "W"
    ES = "ES"
    NW = "NW"

    @property
    def units(self) -> tuple:
        return tuple(Step(c) for c in self.value)

    @property
    def is_combo(self) -> bool:
        return len(self.value) == 2


_VEC = {"N": (0, 1), "S": (0, -1), "E": (1, 0), "W": (-1, 0)}


def _combine(units) -> tuple:
    """Group unit steps into hybrid steps: ``E S -> ES`` and ``N W -> NW``."""
    out, i = [], 0
    while i < len(units):
        pair = "".join(u.value for u in units[i:i + 2])
        if pair in ("ES", "NW"):
            out.append(Step(pair))
            i += 2
        else:
            out.append(Step(units[i]))
            i += 1
    return tuple(out)


@dataclass(frozen=True)
class HybridPath:
    steps: tuple

    @classmethod
    def parse(cls, text: str) -> HybridPath:
        return cls(tuple(Step(s) for s in text.replace(",", " ").split()))

    @classmethod
    def from_units(cls, units) -> HybridPath:
        return cls(_combine(tuple(Step(u) for u in units)))

    def units(self) -> tuple:
        return tuple(u for s in self.steps for u in s.units)

    def points(self, start=(0, 0)) -> list:
        x, y = start
        pts = [(x, y)]
        for u in self.units():
            dx, dy = _VEC[u.value]
            x, y = x + dx, y + dy
            pts.append((x, y))
        return pts

    @property
    def end(self) -> tuple:
        return self.points()[-1]

    @property
    def combos(self) -> int:
        return sum(s.is_combo for s in self.steps)

    def is_valid(self) -> bool:
        k, m = self.end
        kinds = set(self.steps)
        if not self.steps:
            return True
        if k >= 0 and m >= 0:
            return kinds <= {Step.N, Step.E}
        if k >= 0 > m:
            return kinds <= {Step.S, Step.ES} and self.steps[0] is Step.S
        if k < 0 <= m:
            return kinds <= {Step.W, Step.NW} and self.steps[0] is Step.W
        return False

    def __str__(self):
        return " ".join(s.value for s in self.steps)


def _arrangements(first, a, a_count, b, b_count):
    """All step tuples with the given counts, optionally forced to begin with ``first``."""
    total = a_count + b_count
    for pos in combinations(range(total), b_count):
        seq = [a] * total
        for p in pos:
            seq[p] = b
        yield HybridPath(tuple(first) + tuple(seq))


def enumerate_paths(k: int, m: int) -> list:
    """Every hybrid path from the origin to ``(k, m)``, in a fixed order."""
    if k >= 0 and m >= 0:
        return list(_arrangements((), Step.N, m, Step.E, k))
    if k >= 0 > m:
        plain = -m - k
        if plain < 1:
            return []
        return list(_arrangements((Step.S,), Step.S, plain - 1, Step.ES, k))
    if k < 0 <= m:
        plain = -k - m
        if plain < 1:
            return []
        return list(_arrangements((Step.W,), Step.W, plain - 1, Step.NW, m))
    return []


def _horizontal(path: HybridPath, start=(0, 0)):
    """``(column, height, direction)`` for every horizontal unit step."""
    out = []
    x, y = start
    for u in path.units():
        dx, dy = _VEC[u.value]
        if u is Step.E:
            out.append((x + 1, y, 1))
        elif u is Step.W:
            out.append((x, y, -1))
        x, y = x + dx, y + dy
    return out


def path_weight_steps(path: HybridPath, start=(0, 0)) -> Laurent:
    """Signed weight read step by step: east ``W(s,t)``, west ``W(s,t)^-1``."""
    out = ONE if path.combos % 2 == 0 else -ONE
    for s, t, d in _horizontal(path, start):
        out = out * big_weight(s, t) ** d
    return out


def _cells(path: HybridPath) -> set:
    """Unit cells (named by their north-east corner) between the path and the x-axis."""
    cells = set()
    for s, h, _ in _horizontal(path):
        rows = range(1, h + 1) if h > 0 else range(h + 1, 1)
        cells.update((s, j) for j in rows)
    return cells


def inner_corners(path: HybridPath) -> list:
    """Cells inside the region that the path touches on two consecutive sides."""
    cells = _cells(path)
    units = path.units()
    pts = path.points()
    out = []
    for i in range(1, len(units)):
        d1, d2 = _VEC[units[i - 1].value], _VEC[units[i].value]
        if d1[0] * d2[0] + d1[1] * d2[1]:
            continue
        vx, vy = pts[i]
        xs = (vx, vx - d1[0] + d2[0])
        ys = (vy, vy - d1[1] + d2[1])
        cell = (max(xs), max(ys))
        if cell in cells:
            out.append(cell)
    return out


def path_weight_area(path: HybridPath) -> Laurent:
    """Signed weight as a product over the cells between the path and the axis."""
    negative = sum(1 for s, t in inner_corners(path) if s <= 0 or t <= 0)
    factors = [(("w", s, t), sgn(s - 1) * sgn(t - 1)) for s, t in _cells(path)]
    return Laurent.monomial(factors, parity_sign(negative))


def path_sum(k: int, m: int) -> Laurent:
    out = ZERO
    for p in enumerate_paths(k, m):
        out = out + path_weight_steps(p)
    return out


# hybrid subsets


@dataclass(frozen=True)
class HybridSubset:
    """A ``k``-element hybrid subset of ``[n]`` in canonical order.

    For ``n >= 0`` the elements are increasing, for ``n < 0`` weakly
    decreasing; ``k < 0`` means the elements carry multiplicity ``-1``.
    """

    n: int
    k: int
    elements: tuple

    def __str__(self):
        body = ",".join(str(y) for y in self.elements)
        return "{" + (body + "|" if self.k >= 0 else "|" + body) + "}"

    def indexed(self):
        """``(i, y_i)`` pairs: ``i = 1..k`` or ``i = 0, -1, ..., k+1``."""
        if self.k >= 0:
            return list(zip(range(1, self.k + 1), self.elements))
        return list(zip(range(0, self.k, -1), self.elements))


def ground_set(n: int) -> tuple:
    return tuple(range(1, n + 1)) if n >= 0 else tuple(range(0, n, -1))


def subsets_of(n: int, k: int) -> list:
    base = ground_set(n)
    if n >= 0:
        if not 0 <= k <= n:
            return []
        return [HybridSubset(n, k, c) for c in combinations(base, k)]
    if k >= 0:
        return [HybridSubset(n, k, c) for c in combinations_with_replacement(base, k)]
    if k > n:
        return []
    out = []
    for extra in combinations_with_replacement(base, n - k):
        out.append(HybridSubset(n, k, tuple(sorted(base + extra, reverse=True))))
    return out


def subset_weight(y: HybridSubset) -> Laurent:
    sign = parity_sign(y.n) if y.k < 0 else 1
    sign *= parity_sign(y.k) if y.n < 0 else 1
    out = Laurent(sign)
    for i, yi in y.indexed():
        out = out * big_weight(i, yi - i) ** (1 if y.k >= 0 else -1)
    return out


def subset_to_path(y: HybridSubset) -> HybridPath:
    k, n = y.k, y.n
    units = []
    h = 0
    if k >= 0:
        for i, yi in y.indexed():
            target = yi - i
            units += ["N" if target > h else "S"] * abs(target - h)
            units.append("E")
            h = target
    else:
        for i, yi in y.indexed():
            target = yi - i
            units += ["N"] * (target - h)
            units.append("W")
            h = target
    units += ["N" if n - k > h else "S"] * abs(n - k - h)
    return HybridPath.from_units(units)


def path_to_subset(path: HybridPath) -> HybridSubset:
    k, m = path.end
    horizontal = _horizontal(path)
    elements = tuple(h + s for s, h, _ in horizontal)
    return HybridSubset(k + m, k, elements)


# pairs of paths and the involution


@dataclass(frozen=True)
class PathPair:
    """``first`` runs to ``(j, n-j)``; ``second`` continues from there to ``(k, n+m-k)``."""

    n: int
    m: int
    k: int
    j: int
    first: HybridPath
    second: HybridPath

    @property
    def combos(self) -> int:
        return self.first.combos + self.second.combos


def enumerate_pairs(n: int, m: int, k: int) -> list:
    """Pairs of paths meeting at ``(j, n-j)`` for ``0 <= j <= k``."""
    if k < 0:
        raise UnsupportedCaseError("pairs need k >= 0")
    out = []
    for j in range(0, k + 1):
        for p1 in enumerate_paths(j, n - j):
            for p2 in enumerate_paths(k - j, m - k + j):
                out.append(PathPair(n, m, k, j, p1, p2))
    return out


def pair_weight(pp: PathPair) -> Laurent:
    """Signed weight: one ``W(column, height)`` per east step, ``-1`` per combo."""
    out = ONE if pp.combos % 2 == 0 else -ONE
    for s, t, _ in _horizontal(pp.first):
        out = out * big_weight(s, t)
    for s, t, _ in _horizontal(pp.second, (pp.j, pp.n - pp.j)):
        out = out * big_weight(s, t)
    return out


def iota(pp: PathPair) -> PathPair:
    """Sign-reversing, weight-preserving involution; fixed points are returned as is."""
    n, m, k, j = pp.n, pp.m, pp.k, pp.j
    if not (m < 0 <= n):
        raise UnsupportedCaseError("the involution needs m < 0 <= n")
    s1 = [u.value for u in pp.first.units()]
    s2 = [u.value for u in pp.second.units()]
    e1 = max((i for i, u in enumerate(s1) if u == "E"), default=None)
    e2 = next((i for i, u in enumerate(s2) if u == "E"), None)
    a = s1[:e1].count("N") if e1 is not None else None
    b = n - j - s2[:e2].count("S") if e2 is not None else None

    if e2 is not None and (b >= a if e1 is not None else b >= 0):
        # move the first east step of the second path onto the first path
        h = a if e1 is not None else 0
        head = s1[:e1 + 1] if e1 is not None else []
        new1 = head + ["N"] * (b - h) + ["E"] + ["N"] * (n - j - 1 - b)
        new2 = ["S"] * (n - j - 1 - b) + s2[e2 + 1:]
        jj = j + 1
    elif e1 is not None and (a > b if e2 is not None else a >= n + m - k + 1):
        # move the last east step of the first path onto the second path
        new1 = s1[:e1] + ["N"] * (n - j + 1 - a)
        new2 = ["S"] * (n - j + 1 - a) + ["E"] + s2[n - j - a:]
        jj = j - 1
    else:
        return pp
    return PathPair(n, m, k, jj, HybridPath.from_units(new1), HybridPath.from_units(new2))


def in_fixed_set(pp: PathPair) -> bool:
    """Cancel the overlapping north/south run at the junction and test the remainder.

    The pair is a fixed point when one path disappears completely and what is
    left is a hybrid path from the origin to ``(k, n+m-k)``.
    """
    s1 = [u.value for u in pp.first.units()]
    s2 = [u.value for u in pp.second.units()]
    r1 = len(s1) - len("".join(s1).rstrip("N"))
    r2 = len(s2) - len("".join(s2).lstrip("S"))
    cut = min(r1, r2)
    rest1, rest2 = s1[:len(s1) - cut], s2[cut:]
    if rest1 and rest2:
        return False
    path = HybridPath.from_units(rest1 + rest2)
    return path.end == (pp.k, pp.n + pp.m - pp.k) and path.is_valid()
