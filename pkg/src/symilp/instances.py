"""Benchmark instance generators.

Hypertruncated cubes: conv([0,1]^n truncated at sum x <= r, plus the apex
lambda*1) described by exactly 4n facets in four coordinate-orbit families.

Wild input: the distorted join of a hexagon (circumradius 56/6) with a
scaled cross polytope (73/10), lifted to heights 1 and -11/12, every vertex
coordinate rounded to three decimals (half away from zero, exactly), its
6 + 2^d facet hyperplanes fitted through their vertex sets, and the row set
closed under the full symmetric group.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import isqrt

from .errors import BadParams, DegenerateFacet
from .model import ILPInstance, from_canonical, normalize
from .ratlin import kernel_basis

ONE = Fraction(1)

# Euler's number to 30 decimal places; enough that floor(n/e) is exact for
# any dimension this toolkit will ever see.
EULER_E = Fraction(2718281828459045235360287471352662, 10**33)


def htc_r(n: int) -> int:
    """The benchmark truncation parameter r = floor(n/e)."""
    q = Fraction(n) / EULER_E
    return q.numerator // q.denominator


@dataclass(frozen=True)
class HtcParams:
    n: int
    r: int
    lam: Fraction

    def __post_init__(self):
        if self.n < 3 or not 2 <= self.r <= self.n - 1:
            raise BadParams(f"need r in {{2,...,n-1}}, got n={self.n}, r={self.r}")
        lam = Fraction(self.lam)
        object.__setattr__(self, "lam", lam)
        if not Fraction(self.r, self.n) < lam < 1:
            raise BadParams(f"need r/n < lambda < 1, got lambda={lam}")


@dataclass(frozen=True)
class VRep:
    vertices: tuple


def gen_hypertruncated_cube(p: HtcParams) -> ILPInstance:
    """The 4n facet rows, oriented so every vertex satisfies them.

    Families (for each coordinate i): 0 <= x_i, x_i <= 1, the deletion
    inequality (1-n+r/lambda) x_i + sum_{k!=i} x_k <= r and the contraction
    inequality (1-r+lambda(n-1)) x_i + (1-lambda) sum_{k!=i} x_k <=
    lambda(n-r).  Objective all-ones.
    """
    n, r = p.n, p.r
    num, den = p.lam.numerator, p.lam.denominator
    rows = []
    for i in range(n):
        row = [0] * (n + 1)
        row[i] = 1
        row[n] = 1
        rows.append(tuple(row))
        row = [0] * (n + 1)
        row[i] = -1
        rows.append(tuple(row))
    # deletion family, cleared by lambda's numerator
    special = num * (1 - n) + r * den
    for i in range(n):
        row = [num] * (n + 1)
        row[i] = special
        row[n] = r * num
        rows.append(tuple(row))
    # contraction family, cleared by lambda's denominator
    special = den * (1 - r) + num * (n - 1)
    other = den - num
    for i in range(n):
        row = [other] * (n + 1)
        row[i] = special
        row[n] = num * (n - r)
        rows.append(tuple(row))
    return normalize(rows, [ONE] * n, name=f"htc-n{n}-r{r}-l{num}_{den}")


def htc_vertices(p: HtcParams):
    """Vertex inventory: e_S for |S| <= r, plus lambda*1."""
    n = p.n
    verts = []
    for size in range(p.r + 1):
        for S in combinations(range(n), size):
            v = [Fraction(0)] * n
            for i in S:
                v[i] = ONE
            verts.append(tuple(v))
    verts.append((p.lam,) * n)
    return verts


def round3(x: Fraction) -> Fraction:
    """Round an exact rational to 3 decimals, half away from zero."""
    if x < 0:
        return -round3(-x)
    t = x * 1000
    q, rem = divmod(t.numerator, t.denominator)
    twice = 2 * rem
    if twice == t.denominator:
        raise DegenerateFacet(f"rounding tie at {x}")
    return Fraction(q + 1 if twice > t.denominator else q, 1000)


def round3_sqrt3(a: Fraction) -> Fraction:
    """Round a*sqrt(3) to 3 decimals exactly, half away from zero.

    Comparisons are squared out to integers; sqrt(3) being irrational rules
    out ties.
    """
    if a < 0:
        return -round3_sqrt3(-a)
    if a == 0:
        return Fraction(0)
    num, den = (1000 * a).numerator, (1000 * a).denominator
    u = isqrt((3 * num * num) // (den * den))
    # is 1000*a*sqrt(3) >= u + 1/2, i.e. 3*(2*num)^2 >= ((2u+1)*den)^2?
    lhs = 3 * (2 * num) ** 2
    rhs = ((2 * u + 1) * den) ** 2
    assert lhs != rhs
    return Fraction(u + 1 if lhs > rhs else u, 1000)


_HEX_COS = (ONE, Fraction(1, 2), Fraction(-1, 2), -ONE, Fraction(-1, 2), Fraction(1, 2))
_HEX_SIN_SIGN = (0, 1, 1, 0, -1, -1)  # sign of sin(k*pi/3); magnitude sqrt(3)/2


def hexagon_vrep() -> VRep:
    """Regular hexagon with circumradius 56/6, coordinates pre-rounded."""
    radius = Fraction(56, 6)
    verts = []
    for k in range(6):
        x = round3(radius * _HEX_COS[k])
        s = _HEX_SIN_SIGN[k]
        y = round3_sqrt3(s * radius / 2) if s else Fraction(0)
        verts.append((x, y))
    return VRep(tuple(verts))


def cross_polytope_vrep(d: int) -> VRep:
    scale = round3(Fraction(73, 10))
    verts = []
    for i in range(d):
        for s in (1, -1):
            v = [Fraction(0)] * d
            v[i] = s * scale
            verts.append(tuple(v))
    return VRep(tuple(verts))


def distorted_join_vrep(d: int) -> VRep:
    """J(d) embedded in R^(d+3) with rounded coordinates.

    Hexagon vertices sit at lifted height 1, cross polytope vertices at
    -11/12 which rounds to -0.917.
    """
    hexv = hexagon_vrep().vertices
    crossv = cross_polytope_vrep(d).vertices
    top = round3(ONE)
    bottom = round3(Fraction(-11, 12))
    zeros_d = (Fraction(0),) * d
    verts = [hv + zeros_d + (top,) for hv in hexv]
    verts += [(Fraction(0), Fraction(0)) + cv + (bottom,) for cv in crossv]
    return VRep(tuple(verts))


def _join_facet_vertex_sets(d: int):
    """Index sets of the 6 + 2^d facets of the join, combinatorially.

    A facet is (hexagon edge) * (whole cross polytope) or (whole hexagon) *
    (cross polytope facet); cross polytope facets are the 2^d sign
    patterns.
    """
    hex_idx = list(range(6))
    cross_idx = {}
    pos = 6
    for i in range(d):
        for s in (1, -1):
            cross_idx[(i, s)] = pos
            pos += 1
    sets = []
    for k in range(6):
        sets.append([hex_idx[k], hex_idx[(k + 1) % 6]] + list(range(6, 6 + 2 * d)))
    for signs in product((1, -1), repeat=d):
        sets.append(hex_idx + [cross_idx[(i, signs[i])] for i in range(d)])
    return sets


def _fit_facet(vertices, idx_set, barycenter):
    """Unique hyperplane a.x = beta through the vertex subset, as a valid
    coprime-integer row oriented so the barycenter is feasible."""
    rows = [tuple(vertices[i]) + (Fraction(-1),) for i in idx_set]
    n = len(vertices[0])
    kb = kernel_basis(rows, ncols=n + 1)
    if len(kb) != 1:
        raise DegenerateFacet(
            f"facet vertex set spans kernel of dimension {len(kb)}, expected 1"
        )
    row = kb[0]
    a, beta = row[:-1], row[-1]
    side = sum(av * bv for av, bv in zip(a, barycenter))
    if side == beta:
        raise DegenerateFacet("barycenter lies on a facet hyperplane")
    if side > beta:
        row = tuple(-v for v in row)
    return row


def _next_perm(a: list) -> bool:
    """Advance to the next distinct permutation in lexicographic order."""
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1 :] = a[i + 1 :][::-1]
    return True


def multiset_permutations(values):
    """All distinct orderings of a multiset, lexicographically."""
    a = sorted(values)
    yield tuple(a)
    while _next_perm(a):
        yield tuple(a)


def symmetrize(inst: ILPInstance) -> ILPInstance:
    """Close the row set under all coefficient permutations of Sym(n).

    Rows are grouped by (coefficient multiset, rhs) first so each orbit is
    expanded exactly once; the result is canonical, deduplicated and
    Sym(n)-invariant.
    """
    classes = {}
    for row in inst.rows:
        classes.setdefault((tuple(sorted(row[:-1])), row[-1]), True)
    rows = []
    for ms, rhs in classes:
        for perm in multiset_permutations(ms):
            rows.append(perm + (rhs,))
    return from_canonical(rows, inst.c, name=f"{inst.name}#sym")


def gen_wild(d: int) -> ILPInstance:
    """Symmetrized distorted join in dimension n = d + 3, objective 1."""
    if d < 3:
        raise BadParams(f"wild construction needs d >= 3, got d={d}")
    n = d + 3
    verts = distorted_join_vrep(d).vertices
    k = len(verts)
    barycenter = tuple(sum(v[t] for v in verts) / k for t in range(n))
    facet_rows = []
    for idx_set in _join_facet_vertex_sets(d):
        row = _fit_facet(verts, idx_set, barycenter)
        for v in verts:
            if sum(av * xv for av, xv in zip(row, v)) > row[-1]:
                raise DegenerateFacet("rounding broke the join's convex position")
        facet_rows.append(row)
    base = from_canonical(facet_rows, [ONE] * n, name=f"wild-d{d}-facets")
    out = symmetrize(base)
    return ILPInstance(out.rows, out.c, name=f"wild-d{d}")
