"""Random-instance drivers comparing update-law predictions with recomputation."""

from __future__ import annotations

import random

from btz import core
from btz.complex import is_below, refine_edge
from btz.core import Vertex, fundamental_weight, unit_vector
from btz.oracle import oracle_member, oracle_sequence, random_weyl_vertex


def _value(x, d, k):
    eff = d if d is not None else k + int(max(x.coords)) + 2
    return oracle_sequence(x, eff).v(k)


def _random_setting(rng: random.Random, min_r=2, min_d=1, allow_infinite=True):
    r = rng.randint(min_r, 5)
    d = None if allow_infinite and rng.random() < 0.15 else rng.randint(min_d, 4)
    top = r * d - 1 if d is not None else r * 4
    return r, d, top


def _random_member(rng: random.Random, min_r=2, min_d=1, min_k=1, allow_infinite=True, bound=6):
    while True:
        r, d, top = _random_setting(rng, min_r, min_d, allow_infinite)
        if top < min_k:
            continue
        k = rng.randint(min_k, top)
        n = random_weyl_vertex(rng, r, bound)
        if oracle_member(n, d, k):
            return n, r, d, k


def check_add_weight(count: int, seed: int) -> list:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        n, r, d, k = _random_member(rng)
        i = rng.randint(1, r - 1)
        pred = core.predict_add_weight(n, i, d, k)
        m = n + fundamental_weight(r, i)
        actual = oracle_member(m, d, k)
        if actual != pred.member or (actual and _value(m, d, k) != pred.value):
            failures.append((n.coords, i, d, k))
    return failures


def check_down_shift(count: int, seed: int) -> list:
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < count:
        r, d, top = _random_setting(rng)
        if top < 2:
            continue
        k = rng.randint(2, top)
        n = random_weyl_vertex(rng, r, 6)
        done += 1
        p = core.predict_down_shift(n, d, k)
        sh = p.shifted
        if _value(sh, d, p.value_index) != p.value:
            failures.append(("value", n.coords, d, k))
        if p.member != oracle_member(n, d, k):
            failures.append(("member", n.coords, d, k))
        if p.equivalent_weight is not None and oracle_member(sh, d, p.equivalent_weight) != p.member:
            failures.append(("equivalence", n.coords, d, k))
        if p.equivalent_weight is None and p.member:
            failures.append(("mixed case member", n.coords, d, k))
        if p.drop is not None:
            _, lowered, value = p.drop
            if _value(lowered, d, k) != value:
                failures.append(("drop", n.coords, d, k))
    return failures


def check_unit_step(count: int, seed: int) -> list:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        m, r, d, k = _random_member(rng)
        j = rng.choice([j for j in range(1, r) if core.admissible(m, j)])
        pred = core.predict_unit_step(m, j, d, k)
        m2 = m + unit_vector(r, j)
        actual = oracle_member(m2, d, k)
        if actual != pred.member:
            failures.append((m.coords, j, d, k))
        elif actual and (_value(m2, d, k) != pred.value or core.critical_index(m2, d, k) != pred.rho):
            failures.append((m.coords, j, d, k))
    return failures


def check_double_step(count: int, seed: int) -> list:
    """Instances need ``m + e_j`` to have left the set, so sampling retries."""
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < count:
        m, r, d, k = _random_member(rng, min_r=3)
        r = m.r
        exits = [j for j in range(1, r) if core.admissible(m, j) and not oracle_member(m + unit_vector(r, j), d, k)]
        if not exits:
            continue
        j = rng.choice(exits)
        m1 = m + unit_vector(r, j)
        nexts = [j2 for j2 in range(1, r) if j2 != j and core.admissible(m1, j2)]
        if not nexts:
            continue
        j2 = rng.choice(nexts)
        done += 1
        pred = core.predict_double_step(m, j, j2, d, k)
        m2 = m1 + unit_vector(r, j2)
        actual = oracle_member(m2, d, k)
        if pred != actual:
            failures.append((m.coords, j, j2, d, k))
        elif actual and _value(m2, d, k) != _value(m, d, k) + 1:
            failures.append(("value", m.coords, j, j2, d, k))
    return failures


def check_refine_edge(count: int, seed: int) -> list:
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < count:
        m, r, d, k = _random_member(rng)
        bits = [rng.randint(0, 1) for _ in range(r - 1)]
        if not any(bits):
            continue
        n = Vertex(tuple(a + b for a, b in zip(m.coords[:-1], bits)) + (0,))
        if not core.is_weyl(n) or not oracle_member(n, d, k) or not is_below(m, n):
            continue
        done += 1
        e = refine_edge(m, n, d, k)
        v, w = _value(m, d, k), _value(n, d, k)
        if len(e.nonmembers) > 1:
            failures.append(("several exceptions", m.coords, n.coords, d, k))
            continue
        if (len(e.nonmembers) == 1) != (v < w):
            failures.append(("exception iff", m.coords, n.coords, d, k))
            continue
        if e.nonmembers and e.nonmembers[0] != e.exception:
            failures.append(("exception position", m.coords, n.coords, d, k))
            continue
        if (e.values_k, e.values_k1) != e.expected_values():
            failures.append(("value pattern", m.coords, n.coords, d, k))
    return failures
