"""Exact rational vectors and matrices.

Scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator); vectors and matrices are plain tuples.  Elimination runs
fraction-free (Bareiss) on integer-scaled rows so intermediate entries stay
polynomially bounded, which matters for systems in dimension up to a few
thousand.
"""

from fractions import Fraction
from math import gcd, lcm

Rational = Fraction
QVector = tuple  # tuple of Fraction | int
QMatrix = tuple  # tuple of QVector, uniform length


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a finite decimal string, exactly."""
    return Fraction(text.strip())


def format_rational(x) -> str:
    return str(x)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def scale_coprime(vec, positive_leading: bool = False) -> tuple:
    """Scale a rational vector by a nonzero rational onto coprime integers.

    The scalar is positive, so signs are preserved, unless
    ``positive_leading`` asks for the leading nonzero entry to be made
    positive (used to canonicalize kernel basis vectors).  The zero vector
    is returned unchanged.
    """
    den = 1
    for e in vec:
        if isinstance(e, Fraction):
            den = lcm(den, e.denominator)
    ints = [int(e * den) for e in vec] if den != 1 else [int(e) for e in vec]
    g = gcd(*ints) if ints else 0
    if g == 0:
        return tuple(ints)
    if g > 1:
        ints = [e // g for e in ints]
    if positive_leading:
        lead = next(e for e in ints if e)
        if lead < 0:
            ints = [-e for e in ints]
    return tuple(ints)


def _integer_rows(M) -> list:
    """Row-wise integer scaling; preserves kernel, rank and row space."""
    out = []
    for row in M:
        den = 1
        for e in row:
            if isinstance(e, Fraction):
                den = lcm(den, e.denominator)
        out.append([int(e * den) for e in row] if den != 1 else [int(e) for e in row])
    return out


def _echelon(rows: list, ncols: int):
    """In-place fraction-free forward elimination.

    Returns the pivot positions [(row, col), ...].  Only columns < ncols are
    eligible as pivots; trailing columns (e.g. an augmented right hand side)
    are carried along.
    """
    m = len(rows)
    width = len(rows[0]) if m else ncols
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        pr = next((i for i in range(r, m) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            f = rows[i][c]
            ri, rr = rows[i], rows[r]
            for j in range(c, width):
                ri[j] = (piv * ri[j] - f * rr[j]) // prev
        prev = piv
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    return pivots


def rank(M) -> int:
    rows = _integer_rows(M)
    if not rows:
        return 0
    return len(_echelon(rows, len(rows[0])))


def kernel_basis(M, ncols: int | None = None) -> list:
    """Basis of {x : Mx = 0}, one coprime integer vector per free column.

    Vectors have a positive leading nonzero entry; their count is
    ncols - rank(M).  A matrix with no rows (or only zero rows) yields the
    standard basis.
    """
    rows = _integer_rows(M)
    if ncols is None:
        if not rows:
            raise ValueError("column count required for a matrix with no rows")
        ncols = len(rows[0])
    pivots = _echelon(rows, ncols) if rows else []
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in reversed(pivots):
            s = sum(rows[r][j] * v[j] for j in range(c + 1, ncols))
            v[c] = Fraction(-s, rows[r][c])
        basis.append(scale_coprime(v, positive_leading=True))
    return basis


def solve_linear(M, rhs):
    """One exact solution of Mx = rhs, or None when inconsistent.

    Free variables are set to zero.
    """
    rows = []
    for row, b in zip(M, rhs):
        den = 1
        for e in list(row) + [b]:
            if isinstance(e, Fraction):
                den = lcm(den, e.denominator)
        rows.append([int(e * den) for e in row] + [int(b * den)])
    if not rows:
        raise ValueError("empty system")
    ncols = len(rows[0]) - 1
    pivots = _echelon(rows, ncols)
    nrank = len(pivots)
    for i in range(nrank, len(rows)):
        if rows[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for r, c in reversed(pivots):
        s = sum(rows[r][j] * x[j] for j in range(c + 1, ncols))
        x[c] = Fraction(rows[r][ncols] - s, rows[r][c])
    return tuple(x)
