"""Layers of integer points orthogonal to the objective direction.

For a projectively rational objective c with coprime integer direction d,
the affine hyperplanes {x : d^t x = k} partition Z^n.  The layer scan
solves ILP(A, b, 1) by walking k downward from the relaxation optimum and
asking a per-layer feasibility oracle for an integral point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .errors import (
    BoxTooLarge,
    InfeasibleRegion,
    ObjectiveNotOnes,
    TransitivityNotEstablished,
    UnboundedRelaxation,
    ZeroObjective,
)
from .lpcore import coordinate_bounds, solve_lp_on_line
from .model import (
    ILPInstance,
    ILPOutcome,
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    explicit_box,
    normalize,
)
from .ratlin import scale_coprime
from .symmetry import NONE as LEVEL_NONE
from .symmetry import verify_symmetric_group_invariance


@dataclass(frozen=True)
class CoprimeDirection:
    direction: tuple

    @property
    def norm_sq(self) -> int:
        return sum(v * v for v in self.direction)


@dataclass(frozen=True)
class Layer:
    dir: CoprimeDirection
    k: int


def coprime_direction(c) -> CoprimeDirection:
    """The unique coprime integer vector that is a positive multiple of c."""
    if not any(c):
        raise ZeroObjective("zero vector has no direction")
    return CoprimeDirection(scale_coprime(tuple(Fraction(v) for v in c)))


def layer_number(d: CoprimeDirection, x) -> int:
    return sum(dv * xv for dv, xv in zip(d.direction, x))


def layer_center(layer: Layer) -> tuple:
    q = Fraction(layer.k, layer.dir.norm_sq)
    return tuple(q * v for v in layer.dir.direction)


def _xgcd(a: int, b: int):
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def layer_witness(d: CoprimeDirection, k: int) -> tuple:
    """An integral point on layer k, from an iterated Bezout identity."""
    g = 0
    coeffs = []
    for v in d.direction:
        g, u, w = _xgcd(g, v)
        coeffs = [u * c for c in coeffs]
        coeffs.append(w)
    assert g == 1, "direction entries must be coprime"
    return tuple(k * c for c in coeffs)


def _layer_box(inst: ILPInstance, k: int):
    """Integer coordinate bounds valid on P(A,b) /\\ {sum x = k}.

    Explicit single-variable rows are used when they bound every
    coordinate; otherwise exact LP bounds are computed on the slice (the
    slice is often bounded even when P is not).
    """
    box = explicit_box(inst)
    if box is not None:
        return box
    ones = (1,) * inst.n
    sliced = normalize(
        list(inst.rows) + [ones + (k,), tuple(-1 for _ in ones) + (-k,)],
        inst.c,
        name=f"{inst.name}#layer{k}",
    )
    try:
        bounds = coordinate_bounds(sliced)
    except InfeasibleRegion:
        return None  # the slice misses P entirely
    out = []
    for lo, hi in bounds:
        if lo is None or hi is None:
            raise BoxTooLarge(f"layer {k} slice is unbounded; cannot enumerate")
        out.append((ceil(lo), floor(hi)))
    return out


def enumeration_oracle(inst: ILPInstance, k: int, max_points: int = 10**7):
    """Default per-layer oracle: search integral points of P with sum k.

    Depth-first over coordinates inside per-layer bounds, pruning on the
    reachable range of the remaining partial sum; the first feasible point
    in lexicographic order is returned, else None.
    """
    n = inst.n
    box = _layer_box(inst, k)
    if box is None:
        return None
    suffix_lo = [0] * (n + 1)
    suffix_hi = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix_lo[j] = suffix_lo[j + 1] + box[j][0]
        suffix_hi[j] = suffix_hi[j + 1] + box[j][1]
    rows = inst.rows
    x = [0] * n
    visited = 0

    def dfs(j: int, remaining: int):
        nonlocal visited
        if j == n:
            if remaining != 0:
                return None
            for row in rows:
                s = 0
                for t in range(n):
                    s += row[t] * x[t]
                if s > row[-1]:
                    return None
            return tuple(x)
        lo = max(box[j][0], remaining - suffix_hi[j + 1])
        hi = min(box[j][1], remaining - suffix_lo[j + 1])
        for v in range(lo, hi + 1):
            visited += 1
            if visited > max_points:
                raise BoxTooLarge(f"layer enumeration exceeded {max_points} nodes")
            x[j] = v
            hit = dfs(j + 1, remaining - v)
            if hit is not None:
                return hit
        return None

    return dfs(0, k)


def solve_by_layers(
    inst: ILPInstance,
    oracle=None,
    assume_transitive: bool = False,
    stats: dict | None = None,
) -> ILPOutcome:
    """Layer-scan solver for ILP(A, b, 1) under a transitive symmetry group.

    Scans k from floor(n*zeta) down to n*floor(zeta): the first layer with
    a feasible integral point is optimal, and an exhausted scan certifies
    infeasibility.
    """
    n = inst.n
    if any(cj != 1 for cj in inst.c):
        raise ObjectiveNotOnes("layer scan is defined for c = 1")
    if not assume_transitive:
        if verify_symmetric_group_invariance(inst) == LEVEL_NONE:
            raise TransitivityNotEstablished(
                "no transitivity certificate; pass assume_transitive to override"
            )
    status, zeta = solve_lp_on_line(inst)
    if status == UNBOUNDED:
        raise UnboundedRelaxation(inst.name or "relaxation unbounded along 1")
    if status == INFEASIBLE:
        return ILPOutcome(INFEASIBLE)
    if oracle is None:
        oracle = enumeration_oracle
    hi = floor(n * zeta)
    lo = n * floor(zeta)
    scanned = 0
    for k in range(hi, lo - 1, -1):
        scanned += 1
        point = oracle(inst, k)
        if point is not None:
            assert sum(point) == k and inst.is_feasible(point)
            if stats is not None:
                stats["layers_scanned"] = scanned
            return ILPOutcome(OPTIMAL, point=tuple(point), value=Fraction(k))
    if stats is not None:
        stats["layers_scanned"] = scanned
    return ILPOutcome(INFEASIBLE)
