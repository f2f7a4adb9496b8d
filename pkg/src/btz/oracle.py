"""Brute-force baselines for differential and property tests.

Nothing here shares code paths with the fast implementations it checks,
apart from the value types.  Randomness always flows through an explicit
``random.Random`` (Mersenne Twister), whose output is stable across
platforms for a given seed.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from btz.core import (
    DSequence,
    Horizon,
    InvalidArgument,
    InvalidHorizon,
    RationalPoint,
    Vertex,
    as_point,
    normalize,
)


@dataclass(frozen=True)
class OracleConfig:
    seed: int = 20240601
    sample_count: int = 1000
    denominator_bound: int = 7

    def __post_init__(self) -> None:
        if self.denominator_bound < 2:
            raise InvalidArgument("denominator_bound must be at least 2")

    def rng(self, stream: int = 0) -> random.Random:
        """Independent generator for sub-stream ``stream``."""
        digest = hashlib.sha256(f"{self.seed}:{stream}".encode()).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))


def oracle_sequence(x, d: int) -> DSequence:
    """Materialize every ``x_i + s`` and sort by repeated minimum extraction."""
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise InvalidHorizon(f"horizon must be a positive integer, got {d!r}")
    p = as_point(x)
    pool = []
    for c in p.coords:
        for s in range(d):
            pool.append(c + s)
    out = []
    while pool:
        i = min(range(len(pool)), key=pool.__getitem__)
        out.append(pool.pop(i))
    return DSequence(tuple(out), p, d)


def oracle_member(x, d: Horizon, k: int) -> bool:
    """Membership recomputed from ``oracle_sequence``; ``d=None`` uses a long horizon."""
    p = as_point(x)
    if d is None:
        spread = max(p.coords) - min(p.coords)
        d = k + int(spread) + 2
    vals = oracle_sequence(p, d).values
    return vals[k - 1] == vals[k]


# ---------------------------------------------------------------------------
# random objects


def random_weyl_vertex(rng: random.Random, r: int, bound: int) -> Vertex:
    c = sorted((rng.randint(0, bound) for _ in range(r - 1)), reverse=True)
    return Vertex(tuple(c) + (0,))


def random_vertex(rng: random.Random, r: int, bound: int) -> Vertex:
    return normalize([rng.randint(-bound, bound) for _ in range(r - 1)] + [0])


def random_rational_point(rng: random.Random, r: int, bound: int, denominator_bound: int = 7) -> RationalPoint:
    c = [Fraction(rng.randint(0, bound * denominator_bound), rng.randint(1, denominator_bound)) for _ in range(r - 1)]
    return RationalPoint(tuple(sorted(c, reverse=True)) + (Fraction(0),))


def random_maximal_chain(rng: random.Random, base: Vertex) -> list[Vertex]:
    """``base < base + e_w(1) < ... < base + y`` for a random order ``w``."""
    r = base.r
    order = list(range(r - 1))
    rng.shuffle(order)
    chain = [base]
    c = list(base.coords)
    for i in order:
        c[i] += 1
        chain.append(Vertex(tuple(c)))
    return chain


def random_chain(rng: random.Random, base: Vertex, size: Optional[int] = None) -> list[Vertex]:
    """Random sub-chain of a random maximal chain through ``base``."""
    full = random_maximal_chain(rng, base)
    if size is None:
        size = rng.randint(1, len(full))
    picked = sorted(rng.sample(range(len(full)), size))
    return [full[i] for i in picked]


def sample_interior_point(chain: Iterable[Vertex], cfg: OracleConfig, rng: Optional[random.Random] = None) -> RationalPoint:
    """Rational point of the open simplex spanned by ``chain``.

    Barycentric weights are ``a_j / q`` with positive integers ``a_j`` and
    ``q <= denominator_bound`` when the chain is short enough; otherwise ``q``
    equals the number of vertices.
    """
    vs = [as_point(v) for v in chain]
    if not vs:
        raise InvalidArgument("chain must be non-empty")
    rng = rng or cfg.rng()
    size = len(vs)
    q = rng.randint(size, max(size, cfg.denominator_bound))
    cuts = sorted(rng.sample(range(1, q), size - 1)) if size > 1 else []
    weights = [b - a for a, b in zip([0] + cuts, cuts + [q])]
    r = vs[0].r
    coords = [Fraction(0)] * r
    for w, v in zip(weights, vs):
        for i in range(r):
            coords[i] += Fraction(w, q) * v.coords[i]
    return RationalPoint(tuple(coords))


# ---------------------------------------------------------------------------
# exhaustive search

DIRECTIONS = ("up", "down", "inside", "any")


def _le(a: Vertex, b: Vertex) -> bool:
    return all(x <= y for x, y in zip(a.coords, b.coords))


def _joinable(u: Vertex, chain: list[Vertex]) -> bool:
    for w in chain:
        diff = [a - b for a, b in zip(u.coords, w.coords)]
        if not any(diff):
            return False
        if not (all(x in (0, 1) for x in diff) or all(x in (0, -1) for x in diff)):
            return False
    return True


def extension_candidates(sigma: Iterable[Vertex], direction: str = "any") -> list[Vertex]:
    """Apartment vertices ``u`` in ``[min - y, max + y]`` with ``sigma + {u}`` a simplex."""
    if direction not in DIRECTIONS:
        raise InvalidArgument(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    chain = sorted((as_point(v) for v in sigma), key=lambda v: sum(v.coords))
    lo, hi = chain[0], chain[-1]
    out = []
    ranges = [range(a - 1, b + 2) for a, b in zip(lo.coords[:-1], hi.coords[:-1])]
    for c in itertools.product(*ranges):
        u = Vertex(tuple(c) + (0,))
        if u in chain or not _joinable(u, chain):
            continue
        above, below = _le(hi, u), _le(u, lo)
        if direction == "up" and not above:
            continue
        if direction == "down" and not below:
            continue
        if direction == "inside" and (above or below):
            continue
        out.append(u)
    return sorted(out)


def exhaustive_extension_search(
    sigma: Iterable[Vertex],
    d: Horizon,
    k: int,
    direction: str = "any",
    weyl_only: bool = False,
    require_member: bool = True,
) -> Optional[Vertex]:
    """First vertex extending ``sigma`` in the given direction, or ``None``.

    ``up`` keeps the minimum and raises the maximum, ``down`` the reverse,
    ``inside`` inserts between them.  With ``require_member`` the new vertex
    must belong to the vanishing set; ``weyl_only`` restricts to the chamber.
    """
    for u in extension_candidates(sigma, direction):
        if weyl_only and any(u.coords[i] < u.coords[i + 1] for i in range(u.r - 1)):
            continue
        if require_member and not oracle_member(u, d, k):
            continue
        return u
    return None


def barycenter(chain: Iterable[Vertex]) -> RationalPoint:
    vs = [as_point(v) for v in chain]
    if not vs:
        raise InvalidArgument("chain must be non-empty")
    w = Fraction(1, len(vs))
    return RationalPoint(tuple(sum((w * v.coords[i] for v in vs), Fraction(0)) for i in range(vs[0].r)))
