"""Acceptance criteria 1 to 10.

Each criterion prints one ``PASS``/``FAIL`` line with its measured runtime.
Run directly with ``python tests/test_acceptance.py`` or through pytest.
All comparisons are exact; a criterion also fails if it exceeds its time
budget.
"""

from __future__ import annotations

import os
import random
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import laws  # noqa: E402
from btz import complex as cx  # noqa: E402
from btz.core import (  # noqa: E402
    Vertex,
    critical_index,
    d_diagram,
    delta_box,
    fundamental_weight,
    hat,
    member_W_dk,
    member_W_k,
    weyl_vertices,
)
from btz.oracle import (  # noqa: E402
    OracleConfig,
    random_chain,
    random_maximal_chain,
    random_vertex,
    sample_interior_point,
)


def criterion_1():
    n = Vertex.of(4, 3, 1, 0)
    inf_boxes = [
        (4, 0), (4, 1), (3, 1), (4, 2), (3, 2), (4, 3), (3, 3), (2, 3),
        (4, 4), (3, 4), (2, 4), (1, 4), (4, 5), (3, 5), (2, 5), (1, 5),
    ]
    d3_boxes = [(4, 0), (4, 1), (3, 1), (4, 2), (3, 2), (3, 3), (2, 3), (2, 4), (1, 4), (2, 5), (1, 5), (1, 6)]
    checks = {
        "infinite numbering": [tuple(b) for b in d_diagram(n, None, length=16).boxes] == inf_boxes,
        "d=3 numbering": [tuple(b) for b in d_diagram(n, 3).boxes] == d3_boxes,
        "W(7), rho=2": member_W_k(n, 7) and critical_index(n, None, 7) == 2,
        "W(3,6), rho=2": member_W_dk(n, 3, 6) and critical_index(n, 3, 6) == 2,
        "W(3,8), rho=1": member_W_dk(n, 3, 8) and critical_index(n, 3, 8) == 1,
    }
    bad = [name for name, ok in checks.items() if not ok]
    return not bad, "worked example (4,3,1,0)" + (f"; wrong: {bad}" if bad else "")


def criterion_2():
    count = 0
    wrong = []
    for r in range(2, 7):
        for d in range(1, 5):
            for k in range(1, r * d):
                for j in range(r):
                    count += 1
                    if member_W_dk(fundamental_weight(r, j), d, k) != ((k + j) % r != 0):
                        wrong.append((r, d, k, j))
    return not wrong, f"fundamental-weight law on {count} cases, {len(wrong)} mismatches"


def criterion_3():
    wrong = []
    count = 0
    for r in (3, 4, 5):
        for d in (2, 3, 4):
            for k in range(1, d + 1):
                count += 1
                a = set(cx.build_complex(r, d, k, 8).vertices)
                b = set(cx.build_complex(r, None, k, 8).vertices)
                if a != b:
                    wrong.append((r, d, k))
    return not wrong, f"W(d,k) = W(k) for k <= d on {count} windows N=8, mismatches {wrong}"


def criterion_4():
    wrong = []
    for d in (2, 3, 4):
        for k in range(1, 3 * d):
            if not cx.check_involution_symmetry(3, d, k, 6).ok:
                wrong.append((d, k))
    rng = random.Random(20240601)
    delta_bad = 0
    for _ in range(10_000):
        r = rng.randint(2, 6)
        n = Vertex(tuple(sorted((rng.randint(0, 9) for _ in range(r - 1)), reverse=True)) + (0,))
        d = rng.randint(1, 5)
        boxes = d_diagram(n, d).boxes
        dual = d_diagram(hat(n), d).boxes
        size = r * d
        if any(delta_box(boxes[i], r, n.coords[0], d) != dual[size - 1 - i] for i in range(size)):
            delta_bad += 1
    ok = not wrong and delta_bad == 0
    return ok, f"hat pairs W(d,k) with W(d,3d-k) on N=6 (mismatches {wrong}); delta bijection failures {delta_bad}/10000"


def criterion_5():
    a_viol = 0
    windows = 0
    for r in (3, 4):
        for d in (2, 3):
            for k in range(1, r * d):
                cw = cx.build_complex(r, d, k, 5, "A")
                windows += 1
                a_viol += len(cx.verify_strong_equidimensionality(cw, 1).violations)
                a_viol += len(cx.verify_boundaryless(cw).violations)
    off = 0
    on = 0
    for r in (3, 4):
        for d in (2, 3):
            for k in range(1, r * d):
                rep = cx.verify_boundaryless(cx.build_complex(r, d, k, 5, "W"), report_only=True)
                off += rep.notes.get("off_chamber_boundary", 0)
                on += rep.notes.get("on_chamber_boundary", 0)
    ok = a_viol == 0 and off == 0
    return ok, f"kind A: {a_viol} violations on {windows} windows; kind W: {on} boundary faces on walls, {off} off walls"


def criterion_6():
    paths = 0
    bad_paths = []
    longest = 0
    for r in (3, 4):
        for d in (2, 3):
            for k in range(1, r * d):
                for n in weyl_vertices(r, 6):
                    if not member_W_dk(n, d, k):
                        continue
                    paths += 1
                    try:
                        path = cx.reduce_to_fundamental(n, d, k)
                        problems = cx.validate_path(path, d, k)
                        longest = max(longest, len(path))
                    except cx.ReductionStuck as exc:
                        problems = [str(exc)]
                    if problems:
                        bad_paths.append((n.coords, d, k))
    comps = []
    for r in (3, 4):
        for d in (2, 3):
            for k in range(1, r * d):
                c = cx.connected_components(cx.build_complex(r, d, k, 6, "A"), margin=1).count
                if c != 1:
                    comps.append((r, d, k, c))
    ok = not bad_paths and not comps
    return ok, (
        f"{paths} reduction paths valid except {len(bad_paths)} (longest {longest}); "
        f"A windows N=6 with other than one component: {comps}"
    )


def criterion_7():
    w21 = cx.build_complex(3, 2, 1, 5).vertices
    w25 = cx.build_complex(3, 2, 5, 5).vertices
    betti = cx.first_betti_number(cx.build_complex(3, 4, 6, 5))
    checks = {
        "W(2,1) is the wall n2 = 0": w21 == tuple(Vertex.of(t, 0, 0) for t in range(6)),
        "W(2,5) is the wall n1 = n2": w25 == tuple(Vertex.of(t, t, 0) for t in range(6)),
        "W(4,6) has a cycle": betti >= 1,
    }
    bad = [name for name, ok in checks.items() if not ok]
    return not bad, f"rank-3 figures, first Betti number of W(4,6) = {betti}" + (f"; wrong: {bad}" if bad else "")


def criterion_8():
    count = 10_000
    results = {
        "add weight": laws.check_add_weight(count, 1),
        "down shift": laws.check_down_shift(count, 2),
        "boxes of sums": laws.check_unit_step(count, 3),
        "membership of sums": laws.check_double_step(count, 4),
        "ordered vertices": laws.check_refine_edge(count, 5),
    }
    summary = ", ".join(f"{name} {len(f)}" for name, f in results.items())
    return all(not f for f in results.values()), f"{count} instances per law; failures: {summary}"


def criterion_9():
    cfg = OracleConfig()
    rng = cfg.rng(9)
    members = 0
    for _ in range(1000):
        r = rng.randint(2, 5)
        d = rng.randint(1, 4)
        chain = random_maximal_chain(rng, random_vertex(rng, r, 6))
        p = sample_interior_point(chain, cfg, rng)
        members += sum(member_W_dk(p, d, k) for k in range(1, r * d))
    rng = cfg.rng(10)
    mismatches = 0
    for _ in range(1000):
        r = rng.randint(2, 5)
        d = rng.randint(1, 4)
        k = rng.randint(1, r * d - 1)
        chain = random_chain(rng, random_vertex(rng, r, 6))
        p = sample_interior_point(chain, cfg, rng)
        if member_W_dk(p, d, k) != all(member_W_dk(v, d, k) for v in chain):
            mismatches += 1
    ok = members == 0 and mismatches == 0
    return ok, f"(a) {members} member hits among 1000 maximal-simplex interiors; (b) {mismatches}/1000 chain mismatches"


def criterion_10():
    bad = []
    checked = 0
    for r in (3, 4):
        for d in (2, 3):
            for k in range(1, r * d):
                rep = cx.check_stratification(r, d, k, 6)
                checked += rep.checked
                if not rep.ok:
                    bad.append((r, d, k, len(rep.violations)))
    return not bad, f"stratification on {checked} members in N=6 windows, failing windows {bad}"


CRITERIA = [
    (1, criterion_1, 1),
    (2, criterion_2, 5),
    (3, criterion_3, 10),
    (4, criterion_4, 10),
    (5, criterion_5, 60),
    (6, criterion_6, 60),
    (7, criterion_7, 5),
    (8, criterion_8, 120),
    (9, criterion_9, 60),
    (10, criterion_10, 30),
]


def evaluate(number, func, budget):
    start = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - start
    in_time = elapsed < budget
    status = "PASS" if ok and in_time else "FAIL"
    timing = f"{elapsed:.2f}s of {budget}s" + ("" if in_time else " (over budget)")
    return ok and in_time, f"{status} criterion {number}: {detail} [{timing}]"


@pytest.mark.parametrize("number, func, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, func, budget, capsys):
    ok, line = evaluate(number, func, budget)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
