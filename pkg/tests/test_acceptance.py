"""Acceptance suite: one test per criterion, one PASS line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines and the
measured numbers.  Everything here is exact arithmetic; the only
tolerances are the two wall-clock budgets and the scaling-exponent window,
which are part of the criteria themselves.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from symilp.cli import bench_rows
from symilp.corepoint import core_points, solve_core_point
from symilp.instances import (
    HtcParams,
    gen_hypertruncated_cube,
    gen_wild,
    htc_r,
)
from symilp.layers import coprime_direction, layer_number, layer_witness, solve_by_layers
from symilp.lpcore import solve_lp, solve_lp_on_line
from symilp.model import brute_force_ilp, normalize
from symilp.reduction import build_reduced, solve_symmetric_lp
from symilp.symdetect import build_reduced_graph, detect
from symilp.symmetry import GroupSpec, sym_generators
from symilp.ratlin import dot

from test_symdetect import brute_symmetry_order


def ok(line):
    print(f"PASS {line}")


def test_criterion_1_wild_count():
    t0 = time.perf_counter()
    inst = gen_wild(10)
    elapsed = time.perf_counter() - t0
    assert inst.m == 885768
    assert len(set(inst.rows)) == 885768
    assert elapsed < 300.0
    ok(f"criterion 1: wild d=10 has exactly 885768 inequalities ({elapsed:.1f}s)")


def test_criterion_2_htc_scaling():
    sizes = [500, 1000, 1500, 2000]
    reports = bench_rows("htc", sizes)
    again = bench_rows("htc", sizes)  # min-of-two damps scheduler noise
    times = []
    for rep, rep2, n in zip(reports, again, sizes):
        r = htc_r(n)
        assert rep.status == "optimal"
        assert rep.value == r  # r < n/2 throughout
        assert rep.point == (1,) * r + (0,) * (n - r)
        times.append(min(rep.ip_s, rep2.ip_s))
    assert times[-1] <= 600.0
    # least-squares slope of log t against log n
    xs = [math.log(n) for n in sizes]
    ys = [math.log(t) for t in times]
    xbar, ybar = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sum(
        (x - xbar) ** 2 for x in xs
    )
    assert 1.6 <= slope <= 2.4, (slope, times)
    # exact cross-check against brute force in low dimension
    for n in range(6, 11):
        r = htc_r(n)
        inst = gen_hypertruncated_cube(HtcParams(n, r, Fraction(1, 2)))
        assert solve_core_point(inst).value == r
        assert brute_force_ilp(inst, box=[(0, 1)] * n).value == r
    ok(
        "criterion 2: htc bench to n=2000 "
        f"(ip times {['%.2f' % t for t in times]}, exponent {slope:.2f}, "
        "value = floor(n/e); brute-force agreement for n in 6..10)"
    )


def test_criterion_3_solver_equivalence(corpus):
    assert len(corpus) >= 100
    statuses = {"optimal": 0, "infeasible": 0}
    for inst in corpus:
        a = solve_core_point(inst)
        b = solve_by_layers(inst)
        c = brute_force_ilp(inst)
        assert a.status == b.status == c.status, inst.name
        if a.status == "optimal":
            assert a.value == b.value == c.value, inst.name
            assert inst.is_feasible(a.point) and inst.is_feasible(b.point)
        statuses[a.status] += 1
    assert statuses["optimal"] >= 10 and statuses["infeasible"] >= 10
    ok(
        f"criterion 3: corepoint = layers = brute force on {len(corpus)} "
        f"instances ({statuses['optimal']} optimal, "
        f"{statuses['infeasible']} infeasible)"
    )


def test_criterion_4_reduction_equivalence(corpus):
    for inst in corpus:
        G = GroupSpec(inst.n, sym_generators(inst.n))
        full = solve_lp(inst)
        red = solve_symmetric_lp(inst, G)
        assert full.status == red.status, inst.name
        if full.status != "optimal":
            continue
        assert full.value == red.value, inst.name
        rp = build_reduced(inst, G)
        assert inst.is_feasible(red.point)
        for e in rp.fixing:
            assert dot(e, red.point) == 0
    ok(
        f"criterion 4: reduced-LP value equals LP value on {len(corpus)} "
        "instances, points fixed and feasible"
    )


def test_criterion_5_detection(ex61):
    det = detect(ex61, "full")
    brute = brute_symmetry_order(ex61)
    assert det.order == 3 == brute
    inst5 = gen_hypertruncated_cube(HtcParams(5, 2, Fraction(1, 2)))
    det5 = detect(inst5, "full")
    brute5 = brute_symmetry_order(inst5)
    assert det5.order == 120 == brute5
    ok("criterion 5: full-graph detection orders 3 (cyclic) and 120 (Sym(5)) match brute force")


def test_criterion_6_graph_counts():
    rng = random.Random(20260810)
    for trial in range(50):
        n = rng.randint(1, 5)
        rows = set()
        for _ in range(rng.randint(1, 6)):
            row = tuple(rng.randint(-4, 4) for _ in range(n))
            if any(row):
                rows.add(row + (rng.randint(-3, 5),))
        if not rows:
            continue
        c = [Fraction(rng.randint(-2, 3), rng.randint(1, 2)) for _ in range(n)]
        inst = normalize(rows, c, name=f"acc6-{trial}")
        g = build_reduced_graph(inst)
        m = inst.m
        n_a = len({row[j] for row in inst.rows for j in range(n)})
        n_b = len({row[-1] for row in inst.rows})
        n_c = len(set(inst.c))
        assert g.n_nodes == m * n + m + n + n_a + n_b + n_c
        assert g.n_edges == 3 * m * n + m + n
    ok("criterion 6: reduced-graph node/edge count formulas hold on 50 random instances")


def test_criterion_7_layer_partition():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(2, 6)
        while True:
            vec = tuple(rng.randint(-9, 9) for _ in range(n))
            if any(vec):
                break
        d = coprime_direction(vec)
        for k in range(-10, 11):
            w = layer_witness(d, k)
            assert layer_number(d, w) == k
    d = coprime_direction((3, -5, 7))
    count = 0
    for _ in range(1000):
        x = tuple(rng.randint(-50, 50) for _ in range(3))
        k = layer_number(d, x)
        assert dot(d.direction, x) == k  # on layer k and, by linearity, no other
        count += 1
    assert count == 1000
    ok("criterion 7: layers partition Z^n (1000 points) and witnesses hit k in [-10,10] for 20 directions")


def test_criterion_8_core_geometry(corpus):
    from test_corepoint import brute_minimum_distance_set

    for n in range(2, 8):
        for k in range(n):
            pts = core_points(n, k)
            assert len(pts) == math.comb(n, k)
            assert set(pts) == brute_minimum_distance_set(n, k)
    layers_checked = 0
    for inst in corpus:
        status, zeta = solve_lp_on_line(inst)
        if status != "optimal":
            continue
        n = inst.n
        for k in range(n * math.floor(zeta), math.floor(n * zeta) + 1):
            feas = [inst.is_feasible(x) for x in core_points(n, k)]
            assert all(feas) or not any(feas), (inst.name, k)
            layers_checked += 1
    assert layers_checked >= 100
    ok(
        "criterion 8: core point sets match brute argmin for n <= 7 and "
        f"feasibility is all-or-nothing on {layers_checked} corpus layers"
    )
