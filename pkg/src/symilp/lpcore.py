"""Exact rational linear programming over Ax <= b with free variables.

Two-phase dictionary simplex: free variables are split into differences of
nonnegatives, infeasibility is handled with a single auxiliary variable, and
Bland's smallest-index rule is used in both phases so termination is
guaranteed on the heavily degenerate symmetric instances this toolkit
produces.  Everything is a Fraction; there are no tolerances.
"""

from fractions import Fraction

from .errors import InfeasibleRegion, ObjectiveNotOnes
from .model import ILPInstance, INFEASIBLE, LPOutcome, OPTIMAL, UNBOUNDED

_ZERO = Fraction(0)


class _Dictionary:
    """Simplex dictionary for max sum(c~_v y_v), A~y <= b, y >= 0.

    Variable ids: 0..2n-1 split structurals (x_j = y_2j - y_2j+1),
    2n..2n+m-1 slacks, 2n+m the phase-1 auxiliary.
    """

    def __init__(self, inst: ILPInstance):
        m, n = inst.m, inst.n
        self.m, self.n = m, n
        self.aux = 2 * n + m
        self.nonbasic = list(range(2 * n))
        self.basis = [2 * n + i for i in range(m)]
        self.const = [Fraction(row[-1]) for row in inst.rows]
        self.coef = []
        for row in inst.rows:
            r = []
            for j in range(n):
                a = Fraction(row[j])
                r.append(-a)
                r.append(a)
            self.coef.append(r)
        self.obj_coef = [_ZERO] * len(self.nonbasic)
        self.obj_const = _ZERO

    def pivot(self, e: int, l: int) -> None:
        """Enter nonbasic position e, leave basic row l."""
        coef, const = self.coef, self.const
        a = coef[l][e]
        inv = Fraction(-1) / a
        row = coef[l]
        for k in range(len(row)):
            row[k] *= inv
        row[e] = -inv  # coefficient of the leaving variable
        const[l] *= inv
        for i in range(self.m):
            if i == l:
                continue
            f = coef[i][e]
            if f:
                ri = coef[i]
                ri[e] = _ZERO
                for k, v in enumerate(row):
                    if v:
                        ri[k] += f * v
                const[i] += f * const[l]
        f = self.obj_coef[e]
        if f:
            self.obj_coef[e] = _ZERO
            for k, v in enumerate(row):
                if v:
                    self.obj_coef[k] += f * v
            self.obj_const += f * const[l]
        self.nonbasic[e], self.basis[l] = self.basis[l], self.nonbasic[e]

    def bland_entering(self):
        best = None
        best_var = None
        for k, w in enumerate(self.obj_coef):
            if w > 0:
                v = self.nonbasic[k]
                if best_var is None or v < best_var:
                    best, best_var = k, v
        return best

    def bland_leaving(self, e: int):
        best_limit = None
        best_row = None
        for i in range(self.m):
            a = self.coef[i][e]
            if a < 0:
                limit = -self.const[i] / a
                if (
                    best_limit is None
                    or limit < best_limit
                    or (limit == best_limit and self.basis[i] < self.basis[best_row])
                ):
                    best_limit, best_row = limit, i
        return best_row

    def run(self) -> str:
        while True:
            e = self.bland_entering()
            if e is None:
                return OPTIMAL
            l = self.bland_leaving(e)
            if l is None:
                return UNBOUNDED
            self.pivot(e, l)

    def var_value(self, v: int) -> Fraction:
        for i, bv in enumerate(self.basis):
            if bv == v:
                return self.const[i]
        return _ZERO


def _phase1(d: _Dictionary) -> bool:
    """Drive the dictionary to feasibility; False means infeasible."""
    worst = min(range(d.m), key=lambda i: (d.const[i], d.basis[i]))
    if d.const[worst] >= 0:
        return True
    pos = len(d.nonbasic)
    d.nonbasic.append(d.aux)
    for r in d.coef:
        r.append(Fraction(1))
    d.obj_coef = [_ZERO] * len(d.nonbasic)
    d.obj_coef[pos] = Fraction(-1)
    d.obj_const = _ZERO
    d.pivot(pos, worst)
    status = d.run()
    assert status == OPTIMAL  # w = -aux <= 0 is bounded
    if d.obj_const < 0:
        return False
    if d.aux in d.basis:
        l = d.basis.index(d.aux)  # degenerate at zero
        e = next((k for k, v in enumerate(d.coef[l]) if v), None)
        if e is None:
            del d.basis[l], d.const[l], d.coef[l]
            d.m -= 1
        else:
            d.pivot(e, l)
    p = d.nonbasic.index(d.aux)
    del d.nonbasic[p]
    for r in d.coef:
        del r[p]
    return True


def _install_objective(d: _Dictionary, c) -> None:
    """Express max c^t x over the current dictionary's nonbasic variables."""
    d.obj_coef = [_ZERO] * len(d.nonbasic)
    d.obj_const = _ZERO
    pos = {v: k for k, v in enumerate(d.nonbasic)}
    row_of = {v: i for i, v in enumerate(d.basis)}
    for j, cj in enumerate(c):
        if not cj:
            continue
        for v, w in ((2 * j, Fraction(cj)), (2 * j + 1, -Fraction(cj))):
            if v in pos:
                d.obj_coef[pos[v]] += w
            else:
                i = row_of[v]
                d.obj_const += w * d.const[i]
                ri = d.coef[i]
                for k in range(len(d.nonbasic)):
                    if ri[k]:
                        d.obj_coef[k] += w * ri[k]


def _simplex(inst: ILPInstance, c) -> LPOutcome:
    d = _Dictionary(inst)
    if not _phase1(d):
        return LPOutcome(INFEASIBLE)
    _install_objective(d, c)
    status = d.run()
    if status == UNBOUNDED:
        return LPOutcome(UNBOUNDED)
    vals = {v: d.const[i] for i, v in enumerate(d.basis)}
    point = tuple(
        vals.get(2 * j, _ZERO) - vals.get(2 * j + 1, _ZERO) for j in range(inst.n)
    )
    return LPOutcome(OPTIMAL, point=point, value=d.obj_const)


def solve_lp(inst: ILPInstance) -> LPOutcome:
    """Exact optimum of the relaxation max c^t x, Ax <= b."""
    out = _simplex(inst, inst.c)
    if out.status == OPTIMAL:
        assert inst.is_feasible(out.point)
        assert sum(cj * xj for cj, xj in zip(inst.c, out.point)) == out.value
    return out


def solve_lp_on_line(inst: ILPInstance):
    """Largest zeta with zeta*1 feasible; the LP restricted to the fixed line.

    Requires the all-ones objective.  Returns (status, zeta) where zeta is
    None unless status is "optimal".  O(m) row-sum work.
    """
    if any(cj != 1 for cj in inst.c):
        raise ObjectiveNotOnes("solve_lp_on_line needs c = 1")
    lo = None
    hi = None
    for row in inst.rows:
        b = row[-1]
        s = sum(row[:-1])
        if s > 0:
            q = Fraction(b, s)
            if hi is None or q < hi:
                hi = q
        elif s < 0:
            q = Fraction(b, s)
            if lo is None or q > lo:
                lo = q
        elif b < 0:
            return (INFEASIBLE, None)
    if lo is not None and hi is not None and lo > hi:
        return (INFEASIBLE, None)
    if hi is None:
        return (UNBOUNDED, None)
    return (OPTIMAL, hi)


def coordinate_bounds(inst: ILPInstance):
    """Exact [min x_i, max x_i] over the feasible region, via 2n LP solves.

    Unbounded directions are reported as None.  Raises InfeasibleRegion on
    an empty feasible set.
    """
    n = inst.n
    out = []
    for j in range(n):
        e = [_ZERO] * n
        e[j] = Fraction(1)
        up = _simplex(inst, e)
        if up.status == INFEASIBLE:
            raise InfeasibleRegion(inst.name or "empty feasible region")
        e[j] = Fraction(-1)
        down = _simplex(inst, e)
        hi = up.value if up.status == OPTIMAL else None
        lo = -down.value if down.status == OPTIMAL else None
        out.append((lo, hi))
    return out
