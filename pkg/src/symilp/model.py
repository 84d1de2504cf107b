"""Instance data model: max c^t x subject to Ax <= b.

Rows are stored canonically: each (a | b) row is scaled by the unique
positive rational making its entries coprime integers, duplicates are
removed, and the rows are kept in lexicographic order.  A row is a flat
``(a_1, ..., a_n, b)`` tuple of ints; the objective c is a tuple of exact
rationals.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor, gcd, lcm

from .errors import BoxTooLarge, EmptySystem, InfeasibleZeroRow
from .ratlin import parse_rational

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

DEFAULT_POINT_CAP = 10**8


@dataclass(frozen=True)
class LPOutcome:
    status: str
    point: tuple | None = None
    value: Fraction | None = None


@dataclass(frozen=True)
class ILPOutcome:
    status: str
    point: tuple | None = None
    value: Fraction | None = None


class ILPInstance:
    """Normalized inequality system with a maximization objective."""

    __slots__ = ("name", "n", "rows", "c", "_rowset")

    def __init__(self, rows, c, name=""):
        rows = tuple(rows)
        if not rows:
            raise EmptySystem("instance has no rows")
        self.n = len(rows[0]) - 1
        if self.n < 1:
            raise ValueError("need at least one variable")
        for r in rows:
            if len(r) != self.n + 1:
                raise ValueError("ragged row")
        self.rows = rows
        self.c = tuple(Fraction(x) for x in c)
        if len(self.c) != self.n:
            raise ValueError("objective length mismatch")
        self.name = name
        self._rowset = None

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def row_set(self) -> frozenset:
        if self._rowset is None:
            self._rowset = frozenset(self.rows)
        return self._rowset

    @property
    def A(self) -> tuple:
        return tuple(r[:-1] for r in self.rows)

    @property
    def b(self) -> tuple:
        return tuple(r[-1] for r in self.rows)

    def is_feasible(self, x) -> bool:
        """Exact check of Ax <= b; O(mn)."""
        if len(x) != self.n:
            raise ValueError("point length mismatch")
        n = self.n
        for row in self.rows:
            s = 0
            for j in range(n):
                s += row[j] * x[j]
            if s > row[-1]:
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, ILPInstance)
            and self.rows == other.rows
            and self.c == other.c
        )

    def __hash__(self):
        return hash((self.rows, self.c))

    def __repr__(self):
        return f"ILPInstance({self.name or '?'}: m={self.m}, n={self.n})"


def canonical_row(row) -> tuple:
    """Scale one raw (a | b) row onto coprime integers.

    Uses the (small) set of distinct entries for the gcd/lcm bookkeeping so
    rows with few distinct values, the common case for the generators, are
    canonicalized in O(n) integer work.
    """
    values = set(row)
    den = 1
    for v in values:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    if den != 1:
        row = tuple(int(v * den) for v in row)
        values = set(row)
    else:
        if any(isinstance(v, Fraction) for v in values):
            row = tuple(int(v) for v in row)
            values = set(row)
    g = gcd(*values)
    if g > 1:
        row = tuple(v // g for v in row)
    return row


def normalize(raw_rows, c, name="") -> ILPInstance:
    """Build an ILPInstance from raw rational (a | b) rows.

    Scales every row to coprime integers, drops zero rows with nonnegative
    right hand side, rejects zero rows with negative right hand side, and
    sorts the distinct rows lexicographically.
    """
    seen = set()
    for raw in raw_rows:
        row = canonical_row(tuple(raw))
        if not any(row[:-1]):
            if row[-1] < 0:
                raise InfeasibleZeroRow(f"0 <= {row[-1]} in {name or 'system'}")
            continue
        seen.add(row)
    if not seen:
        raise EmptySystem(f"no nontrivial rows in {name or 'system'}")
    return ILPInstance(sorted(seen), c, name=name)


def from_canonical(rows, c, name="") -> ILPInstance:
    """Trusted constructor for rows already in canonical coprime-int form.

    Sorts and checks pairwise distinctness; skips the per-row scaling.
    """
    rows = sorted(rows)
    for r, s in zip(rows, rows[1:]):
        if r == s:
            raise ValueError("duplicate canonical row")
    return ILPInstance(rows, c, name=name)


def explicit_box(inst: ILPInstance):
    """Integer bounds implied by single-variable rows, if complete.

    A row with exactly one nonzero coefficient bounds one coordinate; when
    every coordinate ends up with both a lower and an upper bound the full
    box is returned, otherwise None.
    """
    lo = [None] * inst.n
    hi = [None] * inst.n
    for row in inst.rows:
        nz = [j for j in range(inst.n) if row[j]]
        if len(nz) != 1:
            continue
        j = nz[0]
        a, b = row[j], row[-1]
        if a > 0:
            u = b // a  # floor(b/a)
            hi[j] = u if hi[j] is None else min(hi[j], u)
        else:
            l = ceil(Fraction(b, a))
            lo[j] = l if lo[j] is None else max(lo[j], l)
    if any(v is None for v in lo) or any(v is None for v in hi):
        return None
    return list(zip(lo, hi))


def _default_box(inst: ILPInstance):
    box = explicit_box(inst)
    if box is not None:
        return box
    from .lpcore import coordinate_bounds  # deferred: lpcore imports model

    bounds = coordinate_bounds(inst)
    box = []
    for lo, hi in bounds:
        if lo is None or hi is None:
            raise BoxTooLarge("feasible region unbounded; supply an explicit box")
        box.append((ceil(lo), floor(hi)))
    return box


def brute_force_ilp(inst: ILPInstance, box=None, max_points: int = DEFAULT_POINT_CAP) -> ILPOutcome:
    """Exhaustive integral optimum over a finite box; the global test oracle.

    Ties are broken toward the lexicographically smallest point.  The box
    defaults to the bounds implied by single-variable rows, else to exact
    per-coordinate LP bounds.
    """
    if box is None:
        box = _default_box(inst)
    if len(box) != inst.n:
        raise ValueError("box length mismatch")
    volume = 1
    for lo, hi in box:
        volume *= max(0, hi - lo + 1)
        if volume > max_points:
            raise BoxTooLarge(f"box volume exceeds cap {max_points}")
    best = None
    best_val = None
    rows = inst.rows
    c = inst.c
    n = inst.n
    for x in product(*(range(lo, hi + 1) for lo, hi in box)):
        ok = True
        for row in rows:
            s = 0
            for j in range(n):
                s += row[j] * x[j]
            if s > row[-1]:
                ok = False
                break
        if not ok:
            continue
        val = sum(cj * xj for cj, xj in zip(c, x))
        if best_val is None or val > best_val:
            best_val = val
            best = x
    if best is None:
        return ILPOutcome(INFEASIBLE)
    return ILPOutcome(OPTIMAL, point=best, value=Fraction(best_val))


def write_instance(inst: ILPInstance, path) -> None:
    with open(path, "w") as fh:
        fh.write("ILP v1\n")
        if inst.name:
            fh.write(f"# {inst.name}\n")
        fh.write(f"vars {inst.n}\n")
        fh.write("obj " + " ".join(str(x) for x in inst.c) + "\n")
        for row in inst.rows:
            fh.write(" ".join(str(v) for v in row[:-1]) + f" <= {row[-1]}\n")


def read_instance(path, name=None) -> ILPInstance:
    """Parse the `ILP v1` text format; numbers are exact rationals."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != "ILP v1":
        raise ValueError(f"{path}: missing 'ILP v1' header")
    if not lines[1].startswith("vars "):
        raise ValueError(f"{path}: expected 'vars n'")
    n = int(lines[1].split()[1])
    if not lines[2].startswith("obj "):
        raise ValueError(f"{path}: expected 'obj c1 ... cn'")
    c = [parse_rational(t) for t in lines[2].split()[1:]]
    if len(c) != n:
        raise ValueError(f"{path}: objective length != {n}")
    rows = []
    for ln in lines[3:]:
        left, _, right = ln.partition("<=")
        if not _:
            raise ValueError(f"{path}: row without '<=': {ln!r}")
        coeffs = [parse_rational(t) for t in left.split()]
        if len(coeffs) != n:
            raise ValueError(f"{path}: row length != {n}: {ln!r}")
        rows.append(tuple(coeffs) + (parse_rational(right),))
    return normalize(rows, c, name=name if name is not None else str(path))
