"""Finite windows of the vanishing complexes and verifiers for their global shape.

A window of kind ``"W"`` holds the Weyl vertices with ``n_1 <= N``.  A window
of kind ``"A"`` holds the apartment vertices whose coordinate spread
(``max - min``) is at most ``N``.  Simplices are chains ``m_0 < ... < m_c``
in the product order with ``m_c - m_0 <= y = (1, ..., 1, 0)``.  Every
simplex of the apartment is of that form, so the complex is a flag complex on
the neighbour graph.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from btz.core import (
    DomainError,
    Horizon,
    InvalidArgument,
    InvalidHorizon,
    PreconditionViolation,
    Vertex,
    _check_weight,
    as_point,
    critical_index,
    d_sequence,
    fundamental_weight,
    hat,
    is_weyl,
    member_W_dk,
    normalize,
    unit_vector,
    weyl_vertices,
)

KINDS = ("W", "A")


def spread(v: Vertex) -> int:
    return max(v.coords) - min(v.coords)


def _diff(a: Vertex, b: Vertex) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a.coords, b.coords))


def is_below(a: Vertex, b: Vertex) -> bool:
    """``a < b`` as neighbours: ``b - a`` is a non-zero 0/1 vector."""
    diff = _diff(b, a)
    return any(diff) and all(x in (0, 1) for x in diff)


def are_neighbors(a: Vertex, b: Vertex) -> bool:
    return is_below(a, b) or is_below(b, a)


def distance(a: Vertex, b: Vertex) -> int:
    """Combinatorial distance in the apartment: spread of ``a - b``."""
    diff = _diff(a, b)
    return max(diff) - min(diff)


@dataclass(frozen=True)
class SimplexChain:
    """A simplex of the apartment, stored as an increasing chain."""

    vertices: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        vs = tuple(sorted(self.vertices, key=lambda v: (sum(v.coords), v.coords)))
        if not vs:
            raise InvalidArgument("a simplex needs at least one vertex")
        r = vs[0].r
        if any(v.r != r for v in vs):
            raise InvalidArgument("all vertices of a simplex must have the same rank")
        for a, b in zip(vs, vs[1:]):
            if not is_below(a, b):
                raise InvalidArgument(f"{a} and {b} are not an increasing neighbour pair")
        if len(vs) > 1 and not is_below(vs[0], vs[-1]):
            raise InvalidArgument("max - min of a simplex must be a 0/1 vector")
        object.__setattr__(self, "vertices", vs)

    @classmethod
    def of(cls, vertices: Iterable) -> "SimplexChain":
        return cls(tuple(as_point(v) for v in vertices))

    @property
    def r(self) -> int:
        return self.vertices[0].r

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def min(self) -> Vertex:
        return self.vertices[0]

    @property
    def max(self) -> Vertex:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertices


def is_simplex(vertices: Iterable[Vertex]) -> bool:
    vs = list(vertices)
    return bool(vs) and all(are_neighbors(a, b) for a, b in itertools.combinations(vs, 2))


# ---------------------------------------------------------------------------
# windows


def enumerate_window(r: int, N: int, kind: str = "W") -> list[Vertex]:
    """All normalized vertices of the window in lexicographic order."""
    if kind not in KINDS:
        raise InvalidArgument(f"kind must be one of {KINDS}, got {kind!r}")
    if r < 2:
        from btz.core import InvalidRank

        raise InvalidRank(f"rank must be at least 2, got {r}")
    if N < 0:
        return []
    if kind == "W":
        return weyl_vertices(r, N)
    out = []
    for c in itertools.product(range(-N, N + 1), repeat=r - 1):
        lo, hi = min(min(c), 0), max(max(c), 0)
        if hi - lo <= N:
            out.append(Vertex(tuple(c) + (0,)))
    return out


def neighbors(v, weyl_only: bool = False) -> list[Vertex]:
    """The ``2**r - 2`` apartment neighbours of ``v``, sorted lexicographically."""
    v = as_point(v)
    r = v.r
    out = set()
    for eps in itertools.product((0, 1), repeat=r - 1):
        if not any(eps):
            continue
        e = eps + (0,)
        out.add(normalize([a + b for a, b in zip(v.coords, e)]))
        out.add(normalize([a - b for a, b in zip(v.coords, e)]))
    if weyl_only:
        out = {u for u in out if is_weyl(u)}
    return sorted(out)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BTZ_THREADS", "1")))
    except ValueError:
        return 1


def _member_chunk(args) -> list[bool]:
    coords, d, k = args
    return [member_W_dk(Vertex(c), d, k) for c in coords]


def member_mask(vertices: Sequence[Vertex], d: Horizon, k: int) -> list[bool]:
    """Membership of each vertex; uses up to ``BTZ_THREADS`` worker processes."""
    workers = _threads()
    if workers == 1 or len(vertices) < 2000:
        return [member_W_dk(v, d, k) for v in vertices]
    size = -(-len(vertices) // workers)
    chunks = [
        ([v.coords for v in vertices[i : i + size]], d, k)
        for i in range(0, len(vertices), size)
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [flag for part in pool.map(_member_chunk, chunks) for flag in part]


@dataclass(frozen=True)
class ComplexWindow:
    r: int
    d: Horizon
    k: int
    kind: str
    N: int
    margin: int
    vertices: tuple[Vertex, ...]
    maximal_simplices: tuple[SimplexChain, ...]
    vertex_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertex_set", frozenset(self.vertices))

    @classmethod
    def from_vertices(
        cls,
        r: int,
        d: Horizon,
        k: int,
        kind: str,
        N: int,
        margin: int,
        vertices: Iterable[Vertex],
    ) -> "ComplexWindow":
        vs = tuple(sorted(set(vertices)))
        return cls(r, d, k, kind, N, margin, vs, maximal_chains(vs))

    def contains(self, v: Vertex) -> bool:
        return v in self.vertex_set

    def is_interior(self, v: Vertex, margin: Optional[int] = None) -> bool:
        m = self.margin if margin is None else margin
        size = v.coords[0] if self.kind == "W" else spread(v)
        return size + m <= self.N

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        out = []
        for v in self.vertices:
            for u in neighbors(v):
                if u in self.vertex_set and is_below(v, u):
                    out.append((v, u))
        return sorted(out)

    @property
    def dimension(self) -> int:
        return max((s.dim for s in self.maximal_simplices), default=-1)


def maximal_chains(vertices: Iterable[Vertex]) -> tuple[SimplexChain, ...]:
    """Maximal simplices of the flag complex spanned by ``vertices``."""
    vset = set(vertices)
    near = {v: {u for u in neighbors(v) if u in vset} for v in vset}
    up: dict[Vertex, list[Vertex]] = {}
    for v in vset:
        up[v] = sorted(u for u in near[v] if is_below(v, u))
    found = set()
    for m in vset:
        top = up[m]

        def extend(chain: list[Vertex]) -> None:
            last = chain[-1]
            nxt = [u for u in top if is_below(last, u)]
            if not nxt:
                found.add(tuple(chain))
                return
            for u in nxt:
                extend(chain + [u])

        extend([m])
    out = []
    for chain in found:
        cands = near[chain[0]].difference(chain)
        if any(all(u in near[w] for w in chain[1:]) for u in cands):
            continue
        out.append(SimplexChain(chain))
    return tuple(sorted(out, key=lambda s: tuple(v.coords for v in s.vertices)))


def build_complex(
    r: int,
    d: Horizon,
    k: int,
    N: int,
    kind: str = "W",
    margin: int = 1,
) -> ComplexWindow:
    """Members of the window together with the maximal simplices they span."""
    if kind not in KINDS:
        raise InvalidArgument(f"kind must be one of {KINDS}, got {kind!r}")
    _check_weight(Vertex((0,) * r), d, k)
    weyl = weyl_vertices(r, N)
    members = [v for v, ok in zip(weyl, member_mask(weyl, d, k)) if ok]
    if kind == "A":
        orbit = set()
        for v in members:
            for perm in set(itertools.permutations(v.coords)):
                orbit.add(normalize(perm))
        members = orbit
    return ComplexWindow.from_vertices(r, d, k, kind, N, margin, members)


# ---------------------------------------------------------------------------
# components


class UnionFind:
    def __init__(self, items: Iterable) -> None:
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def unite(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True)
class Components:
    count: int
    representatives: tuple[Vertex, ...]
    labels: dict

    def component_of(self, v: Vertex) -> Vertex:
        return self.labels[v]


def connected_components(cw: ComplexWindow, margin: Optional[int] = None) -> Components:
    """Union-find over the window's edges.

    With ``margin`` set, only components meeting the interior (vertices at
    least ``margin`` steps away from the window edge) are counted; edges of
    the whole window are still used.
    """
    uf = UnionFind(cw.vertices)
    for a, b in cw.edges():
        uf.unite(a, b)
    labels = {}
    firsts: dict = {}
    for v in cw.vertices:
        root = uf.find(v)
        firsts.setdefault(root, v)
    for v in cw.vertices:
        labels[v] = firsts[uf.find(v)]
    if margin is None:
        reps = sorted(set(labels.values()))
    else:
        reps = sorted({labels[v] for v in cw.vertices if cw.is_interior(v, margin)})
    return Components(len(reps), tuple(reps), labels)


def first_betti_number(cw: ComplexWindow) -> int:
    """Cycle rank ``E - V + C`` of the window's 1-skeleton."""
    return len(cw.edges()) - len(cw.vertices) + connected_components(cw).count


# ---------------------------------------------------------------------------
# equidimensionality and boundarylessness


@dataclass
class Violation:
    simplex: tuple[Vertex, ...]
    reason: str

    def as_dict(self) -> dict:
        return {"simplex": [list(v.coords) for v in self.simplex], "reason": self.reason}


@dataclass
class VerificationReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "violations": [v.as_dict() for v in self.violations],
            "notes": self.notes,
        }


def _interior_simplex(cw: ComplexWindow, simplex: Iterable[Vertex], margin: int) -> bool:
    return all(cw.is_interior(v, margin) for v in simplex)


def verify_strong_equidimensionality(cw: ComplexWindow, margin: Optional[int] = None) -> VerificationReport:
    """Every interior maximal simplex must have exactly ``r - 1`` vertices."""
    m = cw.margin if margin is None else margin
    if m < 1:
        raise InvalidArgument("margin must be at least 1")
    rep = VerificationReport("strong-equidimensionality")
    target = cw.r - 1
    for s in cw.maximal_simplices:
        if not _interior_simplex(cw, s, m):
            continue
        rep.checked += 1
        if len(s) != target:
            rep.violations.append(
                Violation(s.vertices, f"maximal simplex with {len(s)} vertices, expected {target}")
            )
    return rep


def on_chamber_boundary(simplex: Iterable[Vertex]) -> bool:
    """True iff all vertices lie on one common wall ``n_i = n_{i+1}``."""
    vs = list(simplex)
    r = vs[0].r
    return any(all(v.coords[i - 1] == v.coords[i] for v in vs) for i in range(1, r))


def verify_boundaryless(
    cw: ComplexWindow,
    margin: Optional[int] = None,
    report_only: bool = False,
) -> VerificationReport:
    """Every interior ``(r-3)``-simplex must be a face of at least two ``(r-2)``-simplices."""
    if cw.kind == "W" and not report_only:
        raise InvalidArgument(
            "boundarylessness is only guaranteed for kind A; the W complex may have "
            "boundary on the walls of the chamber (pass report_only=True to inspect it)"
        )
    m = 2 if margin is None else margin
    if m < 1:
        raise InvalidArgument("margin must be at least 1")
    rep = VerificationReport("boundaryless")
    r = cw.r
    if r < 3:
        rep.notes["skipped"] = "condition is empty for r = 2"
        return rep
    top: set = set()
    for s in cw.maximal_simplices:
        for face in itertools.combinations(s.vertices, r - 1):
            top.add(face)
    counts: dict = {}
    for face in top:
        for ridge in itertools.combinations(face, r - 2):
            counts[ridge] = counts.get(ridge, 0) + 1
    ridges = set()
    for s in cw.maximal_simplices:
        for ridge in itertools.combinations(s.vertices, r - 2):
            ridges.add(ridge)
    boundary = 0
    for ridge in sorted(ridges, key=lambda t: tuple(v.coords for v in t)):
        if not _interior_simplex(cw, ridge, m):
            continue
        rep.checked += 1
        c = counts.get(ridge, 0)
        if c < 2:
            rep.violations.append(Violation(ridge, f"face of {c} top-dimensional simplices"))
            boundary += on_chamber_boundary(ridge)
    if cw.kind == "W":
        rep.notes["on_chamber_boundary"] = boundary
        rep.notes["off_chamber_boundary"] = len(rep.violations) - boundary
    return rep


# ---------------------------------------------------------------------------
# strata


STRATA = ("S1", "S2", "S3", "S4")


def _require_finite(d: Horizon) -> int:
    if d is None:
        raise InvalidHorizon("strata are defined for a finite horizon")
    return d


def _require_member(n: Vertex, d: Horizon, k: int) -> None:
    if not is_weyl(n):
        raise DomainError(f"{n} is not in the Weyl chamber")
    if not member_W_dk(n, d, k):
        raise PreconditionViolation(f"{n} is not a member at d={d}, k={k}")


def classify_stratum(n, d: int, k: int) -> str:
    """Tag a Weyl member as S1, S2, S3 or S4.

    S3 takes precedence (members at ``k-1`` and ``k`` with ``v_k = d - 1``),
    then S4 (``n_{r-1} = 0`` and ``v_k >= d``); the rest split by ``v_k < d``.
    """
    n = as_point(n)
    d = _require_finite(d)
    _require_member(n, d, k)
    v = d_sequence(n, d).v(k)
    if k >= 2 and v == d - 1 and member_W_dk(n, d, k - 1):
        return "S3"
    if n.coords[-2] == 0 and v >= d:
        return "S4"
    return "S1" if v < d else "S2"


def in_fifth_stratum(n: Vertex, d: int, k: int) -> bool:
    """``n`` lies on a ray ``s + j y`` with ``s`` in S3 or S4 and ``j >= 0``."""
    r = n.r
    y = fundamental_weight(r, r - 1)
    cur = n
    while True:
        if is_weyl(cur) and member_W_dk(cur, d, k) and classify_stratum(cur, d, k) in ("S3", "S4"):
            return True
        if cur.coords[-2] <= 0:
            return False
        cur = cur - y


def check_stratification(r: int, d: int, k: int, N: int, ray_length: int = 3) -> VerificationReport:
    """Decomposition into S1 and the rays over S3 and S4, with the ray law."""
    rep = VerificationReport("stratification")
    y = fundamental_weight(r, r - 1)
    cw = build_complex(r, d, k, N, "W")
    tags = {n: classify_stratum(n, d, k) for n in cw.vertices}
    s1 = {n for n, t in tags.items() if t in ("S1", "S3")}
    s5 = {n for n in cw.vertices if in_fifth_stratum(n, d, k)}
    s3 = {n for n, t in tags.items() if t == "S3"}
    rep.notes["counts"] = {t: sum(1 for x in tags.values() if x == t) for t in STRATA}
    for n in cw.vertices:
        rep.checked += 1
        if n not in s1 and n not in s5:
            rep.violations.append(Violation((n,), "member outside S1 and S5"))
        if (n in s1 and n in s5) != (n in s3):
            rep.violations.append(Violation((n,), "S1 and S5 intersection differs from S3"))
    s2_empty = all(t in ("S1", "S3") for t in tags.values())
    if N >= 1 and s2_empty != (k <= d):
        # a finite window cannot certify non-emptiness, so only flag the provable side
        if k <= d:
            rep.violations.append(Violation((), "S2 non-empty although k <= d"))
        else:
            rep.notes["s2_empty_in_window"] = True
    for n, t in tags.items():
        if t not in ("S3", "S4"):
            continue
        v = d_sequence(n, d).v(k)
        rho = critical_index(n, d, k)
        if t == "S3":
            rho_prev = critical_index(n, d, k - 1)
            if not (rho + 1 == rho_prev < r):
                rep.violations.append(Violation((n,), "critical index relation fails on S3"))
        for j in range(1, ray_length + 1):
            m = Vertex(tuple(a + j * b for a, b in zip(n.coords, y.coords)))
            if not member_W_dk(m, d, k):
                rep.violations.append(Violation((n, m), "ray leaves the complex"))
                break
            if d_sequence(m, d).v(k) != v + j or critical_index(m, d, k) != rho:
                rep.violations.append(Violation((n, m), "ray changes value or critical index"))
                break
    return rep


# ---------------------------------------------------------------------------
# reduction paths


class ReductionStuck(PreconditionViolation):
    code = "reduction-stuck"


@dataclass(frozen=True)
class EdgePath:
    vertices: tuple[Vertex, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]


def fundamental_index(n: Vertex) -> Optional[int]:
    """``j`` if ``n == n_j`` else ``None``."""
    c = n.coords
    j = sum(c)
    if all(x in (0, 1) for x in c) and c == (1,) * j + (0,) * (len(c) - j):
        return j
    return None


def _detour(n: Vertex, rho: int) -> Optional[Vertex]:
    r = n.r
    t = n.coords[0]
    if t <= 1 or n != Vertex((t,) * (r - rho) + (0,) * rho):
        return None
    if rho <= r - rho:
        return Vertex((t,) * (r - rho - 1) + (t - 1,) + (0,) * rho)
    return Vertex((t,) * (r - rho) + (1,) + (0,) * (rho - 1))


def reduce_to_fundamental(n, d: Horizon, k: int, max_steps: int = 100_000) -> EdgePath:
    """Edge path inside the complex from ``n`` to some fundamental weight.

    Large values (``v_k >= d``) are lowered by removing the last non-zero
    row.  Otherwise the smallest ``i`` whose removal ``n - n_i`` stays a
    member is used; a multiple ``t * n_{r - rho}`` first steps sideways.
    """
    n = as_point(n)
    _require_member(n, d, k)
    r = n.r
    path = [n]
    seen = {n}
    cur = n
    for _ in range(max_steps):
        if fundamental_index(cur) is not None:
            return EdgePath(tuple(path))
        v = d_sequence(cur, d if d is not None else k + 1).v(k)
        nxt = None
        if d is not None and v >= d:
            last = max(i for i in range(1, r) if cur.coords[i - 1] > 0)
            cand = cur - fundamental_weight(r, last)
            if member_W_dk(cand, d, k):
                nxt = cand
        if nxt is None:
            for i in range(1, r):
                if cur.coords[i - 1] > cur.coords[i]:
                    cand = cur - fundamental_weight(r, i)
                    if member_W_dk(cand, d, k) and cand not in seen:
                        nxt = cand
                        break
        if nxt is None:
            cand = _detour(cur, critical_index(cur, d, k))
            if cand is not None and member_W_dk(cand, d, k) and cand not in seen:
                nxt = cand
        if nxt is None:
            raise ReductionStuck(f"no reduction step from {cur} at d={d}, k={k}")
        path.append(nxt)
        seen.add(nxt)
        cur = nxt
    raise ReductionStuck(f"reduction from {n} did not terminate within {max_steps} steps")


def validate_path(path: EdgePath, d: Horizon, k: int) -> list[str]:
    """Problems with a reduction path; empty when it is a valid certificate."""
    problems = []
    for v in path.vertices:
        if not is_weyl(v) or not member_W_dk(v, d, k):
            problems.append(f"{v} is not a member")
    for a, b in zip(path.vertices, path.vertices[1:]):
        if not are_neighbors(a, b):
            problems.append(f"{a} and {b} are not neighbours")
    if fundamental_index(path.end) is None:
        problems.append(f"path ends at {path.end}, not at a fundamental weight")
    return problems


# ---------------------------------------------------------------------------
# local constructions


def reflect_in_facet(tau: SimplexChain, n) -> Vertex:
    """Vertex opposite ``n`` across the facet ``tau - {n}`` of a maximal apartment simplex."""
    n = as_point(n)
    vs = tau.vertices
    r = tau.r
    if len(vs) != r:
        raise InvalidArgument(f"a maximal simplex has {r} vertices, got {len(vs)}")
    y = fundamental_weight(r, r - 1)
    if vs[-1] != vs[0] + y:
        raise InvalidArgument("the simplex does not span min .. min + y")
    if n not in vs:
        raise InvalidArgument(f"{n} is not a vertex of the simplex")
    j = vs.index(n)
    if j == 0:
        return vs[1] + y
    if j == r - 1:
        return vs[r - 2] - y
    return normalize([a + b - c for a, b, c in zip(vs[j - 1].coords, vs[j + 1].coords, vs[j].coords)])


@dataclass(frozen=True)
class RefinedEdge:
    chain: tuple[Vertex, ...]
    steps: tuple[int, ...]
    exception: Optional[int]
    nonmembers: tuple[int, ...]
    values_k: tuple[int, ...]
    values_k1: tuple[int, ...]

    def expected_values(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Pattern of ``(v_k, v_{k+1})`` along the chain implied by ``exception``."""
        v = self.values_k[0]
        size = len(self.chain)
        t = self.exception
        if t is None:
            return (v,) * size, (v,) * size
        vk = tuple(v if j <= t else v + 1 for j in range(size))
        vk1 = tuple(v if j < t else v + 1 for j in range(size))
        return vk, vk1


def refine_edge(m, n, d: Horizon, k: int) -> RefinedEdge:
    """Split an edge ``m < n`` of Weyl members into unit steps ``e_j`` with increasing ``j``."""
    m, n = as_point(m), as_point(n)
    for v in (m, n):
        if not is_weyl(v) or not member_W_dk(v, d, k):
            raise InvalidArgument(f"{v} is not a Weyl member at d={d}, k={k}")
    if not is_below(m, n):
        raise InvalidArgument(f"{m} < {n} is not an edge")
    steps = tuple(j for j in range(1, m.r) if n.coords[j - 1] > m.coords[j - 1])
    chain = [m]
    for j in steps:
        chain.append(chain[-1] + unit_vector(m.r, j))
    eff = d if d is not None else k + 1
    seqs = [d_sequence(c, eff) for c in chain]
    vk = tuple(s.v(k) for s in seqs)
    vk1 = tuple(s.v(k + 1) for s in seqs)
    nonmembers = tuple(i for i, (a, b) in enumerate(zip(vk, vk1)) if a != b)
    exception = None
    if vk[0] < vk[-1]:
        exception = next((i for i, b in enumerate(vk1) if b == vk[0] + 1), None)
    return RefinedEdge(tuple(chain), steps, exception, nonmembers, vk, vk1)


def vertices_between(a: Vertex, b: Vertex) -> list[Vertex]:
    """Apartment vertices strictly between ``a < b``."""
    diff = _diff(b, a)
    free = [i for i, x in enumerate(diff) if x]
    out = []
    for bits in itertools.product((0, 1), repeat=len(free)):
        if not any(bits) or all(bits):
            continue
        c = list(a.coords)
        for i, bit in zip(free, bits):
            c[i] += bit
        out.append(Vertex(tuple(c)))
    return sorted(out)


# ---------------------------------------------------------------------------
# involution


def check_involution_symmetry(r: int, d: int, k: int, N: int) -> VerificationReport:
    """Compare ``hat(W(d,k))`` with ``W(d, rd - k)`` on the window ``n_1 <= N``.

    ``hat`` preserves ``n_1``, so the window maps onto itself.
    """
    _check_weight(Vertex((0,) * r), d, k)
    rep = VerificationReport("involution-symmetry")
    dual = r * d - k
    left = {hat(v) for v in build_complex(r, d, k, N, "W").vertices}
    right = set(build_complex(r, d, dual, N, "W").vertices)
    rep.checked = len(left | right)
    for v in sorted(left - right):
        rep.violations.append(Violation((v,), f"image of a k={k} member is missing at k={dual}"))
    for v in sorted(right - left):
        rep.violations.append(Violation((v,), f"k={dual} member is not an image of k={k}"))
    rep.notes["pair"] = [k, dual]
    return rep
