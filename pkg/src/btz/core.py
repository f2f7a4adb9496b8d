"""Exact combinatorial primitives for vanishing sets in the Weyl chamber.

Vertices of the standard apartment are integer vectors of length ``r`` whose
last coordinate is zero.  Membership in the vanishing set ``W(d, k)`` is
decided by the d-characteristic sequence, the sorted multiset
``{x_i + s : 1 <= i <= r, 0 <= s < d}``: a point is a member exactly when its
k-th and (k+1)-th entries coincide.

A horizon of ``None`` stands for the infinite horizon (``d = infinity``),
which governs the sets ``W(k)``.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

COORD_BOUND = 2**30

Horizon = Optional[int]


class BTZError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"

    def __str__(self) -> str:
        return f"{self.code}: {super().__str__()}"


class InvalidRank(BTZError):
    code = "invalid-rank"


class InvalidHorizon(BTZError):
    code = "invalid-horizon"


class InvalidWeight(BTZError):
    code = "invalid-weight"


class InvalidIndex(BTZError):
    code = "invalid-index"


class DomainError(BTZError):
    code = "domain-error"


class UndefinedCriticalIndex(BTZError):
    code = "undefined-critical-index"


class PreconditionViolation(BTZError):
    code = "precondition-violation"


class InvalidArgument(BTZError):
    code = "invalid-argument"


class UnsupportedRank(BTZError):
    code = "unsupported-rank"


class SchemaError(BTZError):
    code = "schema-error"


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True, order=True)
class Vertex:
    """Integer apartment vertex ``(n_1, ..., n_{r-1}, 0)``."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.coords)
        if len(c) < 2:
            raise InvalidRank(f"rank must be at least 2, got {len(c)}")
        for x in c:
            if isinstance(x, bool) or not isinstance(x, int):
                raise DomainError(f"vertex coordinates must be integers, got {x!r}")
            if abs(x) > COORD_BOUND:
                raise DomainError(f"coordinate {x} exceeds the bound 2**30")
        if c[-1] != 0:
            raise DomainError(f"vertex {c} is not normalized (last entry must be 0)")
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, *coords: int) -> "Vertex":
        """Build a vertex from raw coordinates, normalizing first."""
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        return normalize(coords)

    @property
    def r(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other: "Vertex") -> "Vertex":
        return normalize([a + b for a, b in zip(self.coords, _coords_of(other))])

    def __sub__(self, other: "Vertex") -> "Vertex":
        return normalize([a - b for a, b in zip(self.coords, _coords_of(other))])

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.coords) + ")"


@dataclass(frozen=True)
class RationalPoint:
    """Exact rational point ``(x_1, ..., x_{r-1}, 0)`` of the apartment."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        c = tuple(Fraction(x) for x in self.coords)
        if len(c) < 2:
            raise InvalidRank(f"rank must be at least 2, got {len(c)}")
        if c[-1] != 0:
            raise DomainError(f"point {c} is not normalized (last entry must be 0)")
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, *coords) -> "RationalPoint":
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
            coords = tuple(coords[0])
        c = [Fraction(x) for x in coords]
        return cls(tuple(x - c[-1] for x in c))

    @property
    def r(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def to_vertex(self) -> Vertex:
        if not self.is_integral():
            raise DomainError(f"point {self} has non-integral coordinates")
        return Vertex(tuple(int(x) for x in self.coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.coords) + ")"


Point = Union[Vertex, RationalPoint]


def _coords_of(x) -> tuple:
    if isinstance(x, (Vertex, RationalPoint)):
        return x.coords
    return tuple(x)


def as_point(x) -> Point:
    """Coerce a vertex, rational point or raw coordinate sequence."""
    if isinstance(x, (Vertex, RationalPoint)):
        return x
    c = tuple(x)
    if all(isinstance(t, int) and not isinstance(t, bool) for t in c):
        return normalize(c)
    p = RationalPoint.of(c)
    return p.to_vertex() if p.is_integral() else p


def normalize(coords: Sequence[int]) -> Vertex:
    """Subtract the last coordinate from every entry."""
    c = tuple(coords)
    if len(c) < 2:
        raise InvalidRank(f"rank must be at least 2, got {len(c)}")
    last = c[-1]
    return Vertex(tuple(int(x - last) for x in c))


def is_weyl(x) -> bool:
    c = _coords_of(x)
    return c[-1] == 0 and all(c[i] >= c[i + 1] for i in range(len(c) - 1))


def fundamental_weight(r: int, j: int) -> Vertex:
    """``n_j = (1, ..., 1, 0, ..., 0)`` with ``j`` leading ones."""
    if r < 2:
        raise InvalidRank(f"rank must be at least 2, got {r}")
    if not 0 <= j < r:
        raise InvalidIndex(f"fundamental weight index must lie in 0..{r - 1}, got {j}")
    return Vertex((1,) * j + (0,) * (r - j))


def unit_vector(r: int, j: int) -> Vertex:
    """``e_j`` for ``1 <= j <= r - 1``."""
    if not 1 <= j < r:
        raise InvalidIndex(f"index must lie in 1..{r - 1}, got {j}")
    return Vertex(tuple(1 if t == j - 1 else 0 for t in range(r)))


# ---------------------------------------------------------------------------
# sequences and diagrams


class Box(NamedTuple):
    """A box ``(index, value)``; ``sort_key`` realizes the box order."""

    index: int
    value: int

    def sort_key(self) -> tuple:
        return (self.value, -self.index)


def box_le(a: Box, b: Box) -> bool:
    return a.value < b.value or (a.value == b.value and a.index >= b.index)


@dataclass(frozen=True)
class DSequence:
    values: tuple
    origin: Point
    d: int

    def v(self, k: int):
        """1-based access ``v_k``."""
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DDiagram:
    vertex: Vertex
    d: Horizon
    boxes: tuple[Box, ...]

    def box(self, k: int) -> Box:
        """1-based access ``B_k``."""
        return self.boxes[k - 1]


def _check_horizon(d) -> None:
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise InvalidHorizon(f"horizon must be a positive integer or infinite, got {d!r}")


def _effective_horizon(d: Horizon, k: int) -> int:
    # d = k + 1 reproduces v_1..v_{k+1} and B_1..B_{k+1} of the infinite diagram
    return k + 1 if d is None else d


def d_sequence(x, d: int) -> DSequence:
    """Sorted multiset ``{x_i + s : 0 <= s < d}`` as an exact sequence."""
    _check_horizon(d)
    p = as_point(x)
    rows = [[c + s for s in range(d)] for c in p.coords]
    return DSequence(tuple(heapq.merge(*rows)), p, d)


def _values(x, d: Horizon, k: int) -> tuple:
    return d_sequence(x, _effective_horizon(d, k)).values


def _check_weight(p: Point, d: Horizon, k) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise InvalidWeight(f"weight must be an integer, got {k!r}")
    if d is None:
        if k < 1:
            raise InvalidWeight(f"weight must be at least 1, got {k}")
        return
    _check_horizon(d)
    top = p.r * d - 1
    if not 1 <= k <= top:
        raise InvalidWeight(f"weight must lie in 1..{top} for r={p.r}, d={d}; got {k}")


def member_W_dk(x, d: Horizon, k: int) -> bool:
    """True iff ``v_k == v_{k+1}`` for the d-characteristic sequence of ``x``."""
    p = as_point(x)
    _check_weight(p, d, k)
    vals = _values(p, d, k)
    return vals[k - 1] == vals[k]


def member_W_k(x, k: int) -> bool:
    return member_W_dk(x, None, k)


def member_A_dk(x, d: Horizon, k: int) -> bool:
    # the sequence depends on the coordinate multiset only, so the same test
    # applies verbatim to apartment points
    return member_W_dk(x, d, k)


def member_A_k(x, k: int) -> bool:
    return member_W_dk(x, None, k)


member = member_W_dk


def d_diagram(n, d: Horizon, length: Optional[int] = None) -> DDiagram:
    """Boxes of the d-diagram in numbering order.

    With ``d=None`` the infinite diagram is returned as a prefix of
    ``length`` boxes.
    """
    v = as_point(n)
    if not isinstance(v, Vertex):
        raise DomainError("diagrams are defined for integer vertices only")
    if d is None:
        if length is None or length < 1:
            raise InvalidArgument("the infinite diagram needs a positive prefix length")
        eff = length
    else:
        _check_horizon(d)
        eff = d
    boxes = sorted(
        (Box(i + 1, c + s) for i, c in enumerate(v.coords) for s in range(eff)),
        key=Box.sort_key,
    )
    if length is not None:
        boxes = boxes[:length]
    return DDiagram(v, d, tuple(boxes))


def critical_index(n, d: Horizon, k: int) -> int:
    """Row index of box ``B_{k+1}`` for a member ``n`` of the Weyl chamber."""
    v = as_point(n)
    if not isinstance(v, Vertex) or not is_weyl(v):
        raise DomainError(f"critical index needs a Weyl vertex, got {v}")
    if not member_W_dk(v, d, k):
        raise UndefinedCriticalIndex(f"{v} is not a member at d={_fmt_d(d)}, k={k}")
    diag = d_diagram(v, _effective_horizon(d, k), length=k + 1)
    return diag.box(k + 1).index


def _fmt_d(d: Horizon) -> str:
    return "inf" if d is None else str(d)


# ---------------------------------------------------------------------------
# Weyl action and the hat involution


def weyl_apply(w: Sequence[int], n) -> Vertex:
    """Send coordinate ``i`` to position ``w[i-1]`` (one-line notation), then normalize."""
    v = as_point(n)
    r = v.r
    w = tuple(w)
    if sorted(w) != list(range(1, r + 1)):
        raise InvalidArgument(f"{w} is not a permutation of 1..{r}")
    out = [0] * r
    for i, target in enumerate(w):
        out[target - 1] = v.coords[i]
    return normalize(out) if isinstance(v, Vertex) else RationalPoint.of(out)


def weyl_sort(n) -> Point:
    """Representative of the Weyl orbit inside the chamber."""
    v = as_point(n)
    c = sorted(v.coords, reverse=True)
    if isinstance(v, Vertex):
        return normalize(c)
    return RationalPoint.of(c)


def hat(x) -> Point:
    """``(x_1 - x_r, x_1 - x_{r-1}, ..., x_1 - x_1)`` on the Weyl chamber."""
    p = as_point(x)
    if not is_weyl(p):
        raise DomainError(f"hat is defined on the Weyl chamber only, got {p}")
    c = p.coords
    out = tuple(c[0] - t for t in reversed(c))
    return Vertex(out) if isinstance(p, Vertex) else RationalPoint(out)


def delta_box(box: Box, r: int, n1: int, d: int) -> Box:
    """Box bijection ``(i, v) -> (r + 1 - i, n_1 + d - 1 - v)``."""
    return Box(r + 1 - box.index, n1 + d - 1 - box.value)


# ---------------------------------------------------------------------------
# update laws


@dataclass(frozen=True)
class AddWeightPrediction:
    member: bool
    value: Optional[int]
    rho: Optional[int] = None


def _require_member(n: Vertex, d: Horizon, k: int) -> None:
    if not is_weyl(n):
        raise DomainError(f"{n} is not in the Weyl chamber")
    if not member_W_dk(n, d, k):
        raise PreconditionViolation(f"{n} is not a member at d={_fmt_d(d)}, k={k}")


def predict_add_weight(n, i: int, d: Horizon, k: int) -> AddWeightPrediction:
    """Predict membership and ``v_k`` of ``n + n_i`` from data of ``n`` alone."""
    v = as_point(n)
    if not 1 <= i < v.r:
        raise InvalidIndex(f"index must lie in 1..{v.r - 1}, got {i}")
    _require_member(v, d, k)
    rho = critical_index(v, d, k)
    if rho == i:
        return AddWeightPrediction(False, None)
    val = _values(v, d, k)[k - 1]
    return AddWeightPrediction(True, val if i < rho else val + 1)


@dataclass(frozen=True)
class DownShiftPrediction:
    """Relations between ``n`` and ``n' = n - y``.

    ``v_{value_index}(n') == value`` and, when ``equivalent_weight`` is set,
    ``n in W(d,k)  <=>  n' in A(d, equivalent_weight)``.  ``drop`` holds
    ``(i, n - n_i, value)`` with ``v_k(n - n_i) == value`` when that law applies.
    """

    shifted: Vertex
    value_index: int
    value: int
    member: bool
    equivalent_weight: Optional[int]
    drop: Optional[tuple] = None


def predict_down_shift(n, d: Horizon, k: int) -> DownShiftPrediction:
    v = as_point(n)
    if not isinstance(v, Vertex) or not is_weyl(v):
        raise DomainError(f"down shift needs a Weyl vertex, got {v}")
    if k < 2:
        raise InvalidWeight(f"down shift needs k >= 2, got {k}")
    _check_weight(v, d, k)
    r = v.r
    y = fundamental_weight(r, r - 1)
    vals = _values(v, d, k)
    vk, vk1 = vals[k - 1], vals[k]
    infinite = d is None
    low = infinite or vk < d
    value_index = k - 1 if low else k
    if infinite or vk1 < d:
        equiv: Optional[int] = k - 1
    elif vk >= d:
        equiv = k
    else:
        equiv = None
    drop = None
    if not infinite and vk >= d:
        last = max((i for i in range(1, r) if v.coords[i - 1] > 0), default=None)
        if last is not None:
            drop = (last, v - fundamental_weight(r, last), vk - 1)
    return DownShiftPrediction(v - y, value_index, vk - 1, vk == vk1, equiv, drop)


def admissible(m, j: int) -> bool:
    """``j == 1`` or ``m_j < m_{j-1}``; equivalently ``m + e_j`` stays Weyl."""
    v = as_point(m)
    if not 1 <= j < v.r:
        raise InvalidIndex(f"index must lie in 1..{v.r - 1}, got {j}")
    if not is_weyl(v):
        raise DomainError(f"{v} is not in the Weyl chamber")
    return j == 1 or v.coords[j - 1] < v.coords[j - 2]


def k_capped(m, d: Horizon, k: int) -> bool:
    """No box of the diagram sits directly above ``B_{k+1}`` in its row."""
    v = as_point(m)
    _require_member(v, d, k)
    rho = critical_index(v, d, k)
    value = _values(v, d, k)[k - 1]
    return rho == 1 or v.coords[rho - 2] > value


@dataclass(frozen=True)
class SumPrediction:
    member: bool
    value: Optional[int] = None
    rho: Optional[int] = None


def predict_unit_step(m, j: int, d: Horizon, k: int) -> SumPrediction:
    """Predict membership, ``v_k`` and critical index of ``m + e_j``."""
    v = as_point(m)
    _require_member(v, d, k)
    if not admissible(v, j):
        raise PreconditionViolation(f"index {j} is not admissible for {v}")
    rho = critical_index(v, d, k)
    val = _values(v, d, k)[k - 1]
    capped = k_capped(v, d, k)
    mj = v.coords[j - 1]
    window = d if d is not None else k + 1
    if j != rho and (mj <= val - window or mj >= val):
        return SumPrediction(True, val, rho)
    if capped:
        return SumPrediction(False)
    return SumPrediction(True, val, rho - 1)


def predict_double_step(m, j: int, j2: int, d: Horizon, k: int) -> bool:
    """Membership of ``m + e_j + e_j2`` when ``m + e_j`` has left the set."""
    v = as_point(m)
    _require_member(v, d, k)
    first = v + unit_vector(v.r, j)
    if member_W_dk(first, d, k):
        raise PreconditionViolation(f"{first} is still a member")
    if j2 == j or not admissible(first, j2):
        raise PreconditionViolation(f"index {j2} is not admissible for {first}")
    rho = critical_index(v, d, k)
    val = _values(v, d, k)[k - 1]
    window = d if d is not None else k + 1
    if j2 < rho:
        return False
    if j2 < j:
        return True
    return val - window < v.coords[j2 - 1]


def fundamental_law(r: int, j: int, k: int) -> bool:
    """Closed form for membership of ``n_j``: true iff ``k + j`` is not divisible by ``r``."""
    return (k + j) % r != 0


def weyl_vertices(r: int, N: int) -> list[Vertex]:
    """Weyl vertices with ``n_1 <= N`` in lexicographic order."""
    combos = itertools.combinations_with_replacement(range(N, -1, -1), r - 1)
    return sorted(Vertex(c + (0,)) for c in combos)
