from fractions import Fraction
from itertools import permutations, product
from math import comb

import pytest

from symilp.corepoint import (
    CoreRepresentative,
    core_distance_check,
    core_points,
    representative_oracle,
    solve_core_point,
)
from symilp.errors import (
    ObjectiveNotOnes,
    TransitivityNotEstablished,
    UnboundedRelaxation,
)
from symilp.layers import solve_by_layers
from symilp.model import brute_force_ilp, normalize


def test_core_points_examples():
    pts = core_points(3, 4)
    assert set(pts) == {(2, 1, 1), (1, 2, 1), (1, 1, 2)}
    assert len(pts) == comb(3, 1)
    assert len(core_points(6, 8)) == 15  # q=1, r=2
    assert core_points(4, 0) == [(0, 0, 0, 0)]


def test_core_points_negative_layer():
    pts = core_points(3, -2)  # q=-1, r=1
    assert set(pts) == {(0, -1, -1), (-1, 0, -1), (-1, -1, 0)}


def test_core_representative():
    rep = CoreRepresentative(q=1, d=2, n=6)
    assert rep.point() == (2, 2, 1, 1, 1, 1)
    assert rep.layer == 8


def test_core_distance_check():
    assert core_distance_check(3, 4, (2, 1, 1))
    assert not core_distance_check(3, 4, (4, 0, 0))
    assert core_distance_check(2, 2, (1, 1))  # the center itself
    with pytest.raises(ValueError):
        core_distance_check(3, 4, (1, 1, 1))


def brute_minimum_distance_set(n, k):
    """Exhaustive argmin-distance points of the layer, as an oracle.

    The box {q-1,...,q+2}^n suffices: moving any coordinate further from
    the center strictly increases the distance coordinate-wise.
    """
    q = k // n
    center = Fraction(k, n)
    best = None
    argmin = []
    for x in product(range(q - 1, q + 3), repeat=n):
        if sum(x) != k:
            continue
        d2 = sum((Fraction(v) - center) ** 2 for v in x)
        if best is None or d2 < best:
            best, argmin = d2, [x]
        elif d2 == best:
            argmin.append(x)
    return set(argmin)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_core_points_match_brute_argmin(n):
    for k in range(n):
        pts = core_points(n, k)
        assert len(pts) == comb(n, k % n)
        assert set(pts) == brute_minimum_distance_set(n, k)
        for x in pts:
            assert core_distance_check(n, k, x)


def test_orbit_transitivity_on_core_points():
    for n, k in ((4, 2), (5, 7), (6, 3)):
        pts = core_points(n, k)
        one = pts[0]
        orbit = {tuple(one[p] for p in perm) for perm in permutations(range(n))}
        assert orbit == set(pts)


def test_solve_core_point_htc6(htc6):
    stats = {}
    out = solve_core_point(htc6, stats=stats)
    assert out.status == "optimal"
    assert out.value == 2
    assert out.point == (1, 1, 0, 0, 0, 0)
    assert stats["feasibility_checks"] == 2  # d scans 3, 2


def test_solve_core_point_ex61_needs_override(ex61):
    with pytest.raises(TransitivityNotEstablished):
        solve_core_point(ex61)
    out = solve_core_point(ex61, assume_transitive=True)
    assert out.status == "optimal" and out.value == 3 and out.point == (1, 1, 1)


def test_solve_core_point_refusals(htc6):
    other = normalize(htc6.rows, [2] + [1] * 5)
    with pytest.raises(ObjectiveNotOnes):
        solve_core_point(other, assume_transitive=True)
    unb = normalize([(-1, -1, 0)], [1, 1])
    with pytest.raises(UnboundedRelaxation):
        solve_core_point(unb, assume_transitive=True)
    with pytest.raises(ValueError):
        solve_core_point(normalize([(1, 1)], [1]), assume_transitive=True)


def test_solve_core_point_infeasible_band():
    rows = [(2, 2, 3), (-2, -2, -3), (1, 0, 2), (0, 1, 2), (-1, 0, 2), (0, -1, 2)]
    inst = normalize(rows, [1, 1], name="halfband")
    stats = {}
    out = solve_core_point(inst, stats=stats)
    assert out.status == "infeasible"
    assert stats["feasibility_checks"] == 2


def test_solve_core_point_lp_infeasible():
    inst = normalize([(1, 1, -3), (-1, -1, 0), (1, 0, 1), (0, 1, 1)], [1, 1])
    assert solve_core_point(inst, assume_transitive=True).status == "infeasible"


def test_representative_oracle_bridges_layers(htc6):
    out = solve_by_layers(htc6, oracle=representative_oracle)
    assert out.status == "optimal" and out.value == 2
    assert out.point == (1, 1, 0, 0, 0, 0)


def test_negative_zeta_scan():
    # box -3 <= x_i <= -1: the scan runs at negative q
    rows = [(1, 0, -1), (0, 1, -1), (-1, 0, 3), (0, -1, 3)]
    inst = normalize(rows, [1, 1], name="negbox")
    out = solve_core_point(inst)
    assert out.status == "optimal" and out.value == -2
    assert out.point == (-1, -1)
    assert brute_force_ilp(inst).value == -2


def test_midpoint_contraction_toward_center(corpus):
    """A moved feasible point and its image average to a feasible point
    strictly closer to the layer center (the isosceles-triangle step)."""
    from symilp.symmetry import transposition

    checked = 0
    for inst in corpus:
        n = inst.n
        out = brute_force_ilp(inst)
        if out.status != "optimal":
            continue
        x = out.point
        g = transposition(n, 1, 2)
        gx = g.apply(x)
        if gx == x:
            continue
        k = sum(x)
        center = (Fraction(k, n),) * n
        mid = tuple(Fraction(a + b, 2) for a, b in zip(x, gx))
        assert inst.is_feasible(mid)
        d2 = lambda p: sum((pi - ci) ** 2 for pi, ci in zip(p, center))
        assert d2(mid) < d2(x)
        checked += 1
        if checked >= 10:
            break
    assert checked >= 5


def test_wild_d10_scan():
    """The 13-dimensional wild instance: at most 13 representative checks,
    and the hit layer is the highest one with a feasible representative."""
    from math import floor

    from symilp.corepoint import representative_oracle
    from symilp.instances import gen_wild
    from symilp.lpcore import solve_lp_on_line

    inst = gen_wild(10)
    stats = {}
    out = solve_core_point(inst, stats=stats)
    assert out.status == "optimal"
    assert stats["feasibility_checks"] <= 13
    assert inst.is_feasible(out.point)
    _, zeta = solve_lp_on_line(inst)
    k_star = int(out.value)
    for k in range(k_star + 1, floor(inst.n * zeta) + 1):
        assert representative_oracle(inst, k) is None


def test_all_or_nothing_per_layer(corpus):
    from math import floor

    from symilp.lpcore import solve_lp_on_line

    checked = 0
    for inst in corpus:
        if inst.n > 5:
            continue
        status, zeta = solve_lp_on_line(inst)
        if status != "optimal":
            continue
        n = inst.n
        for k in range(n * floor(zeta), floor(n * zeta) + 1):
            feas = [inst.is_feasible(x) for x in core_points(n, k)]
            assert all(feas) or not any(feas)
        checked += 1
        if checked >= 25:
            break
    assert checked >= 10
