"""Symmetric LP reduction: orbit-summed rows plus fixed-space equations.

Solving the reduced program A'x <= b', Ex = 0 (the equations encoded as
paired inequalities) recovers an optimal solution of the original LP with
the same objective value.
"""

from dataclasses import dataclass

from .errors import InfeasibleZeroRow, NotASymmetry
from .lpcore import solve_lp
from .model import ILPInstance, INFEASIBLE, LPOutcome, OPTIMAL, normalize
from .symmetry import GroupSpec, fixing_equations, is_symmetry


@dataclass(frozen=True)
class ReducedProgram:
    summed_rows: tuple  # (a_1, ..., a_n, b) exact orbit sums
    fixing: tuple  # rows of E
    objective: tuple
    origin: ILPInstance


def _check_group(inst: ILPInstance, G: GroupSpec) -> None:
    for g in G.generators:
        if not is_symmetry(inst, g):
            raise NotASymmetry(f"generator {g.image} does not fix {inst.name or 'instance'}")


def orbit_sum_rows(inst: ILPInstance, G: GroupSpec) -> tuple:
    """One summed (a | b) row per orbit of rows under a -> a*gamma."""
    _check_group(inst, G)
    n = inst.n
    done = set()
    summed = []
    for row in inst.rows:
        if row in done:
            continue
        orbit = {row}
        frontier = [row]
        while frontier:
            new = []
            for r in frontier:
                for g in G.generators:
                    s = g.apply_to_row(r[:-1]) + (r[-1],)
                    if s not in orbit:
                        orbit.add(s)
                        new.append(s)
            frontier = new
        done |= orbit
        total = [0] * (n + 1)
        for r in sorted(orbit):
            for j in range(n + 1):
                total[j] += r[j]
        summed.append(tuple(total))
    return tuple(summed)


def build_reduced(inst: ILPInstance, G: GroupSpec) -> ReducedProgram:
    return ReducedProgram(
        summed_rows=orbit_sum_rows(inst, G),
        fixing=fixing_equations(G),
        objective=inst.c,
        origin=inst,
    )


def reduced_instance(rp: ReducedProgram, name=None) -> ILPInstance:
    """Reduced program as a plain instance; Ex = 0 becomes paired rows."""
    rows = list(rp.summed_rows)
    for e in rp.fixing:
        rows.append(tuple(e) + (0,))
        rows.append(tuple(-v for v in e) + (0,))
    return normalize(rows, rp.objective, name=name or f"{rp.origin.name}#reduced")


def solve_symmetric_lp(inst: ILPInstance, G: GroupSpec) -> LPOutcome:
    """Solve the reduced LP; the answer is optimal for the original LP."""
    rp = build_reduced(inst, G)
    try:
        red = reduced_instance(rp)
    except InfeasibleZeroRow:
        # A zero orbit sum with negative right hand side certifies emptiness.
        return LPOutcome(INFEASIBLE)
    out = solve_lp(red)
    if out.status == OPTIMAL:
        assert inst.is_feasible(out.point)
        for e in rp.fixing:
            assert sum(ev * xv for ev, xv in zip(e, out.point)) == 0
    return out
