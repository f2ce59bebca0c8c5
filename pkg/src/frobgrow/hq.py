"""Separating polynomials h_q(t) from minors of coefficient matrices.

For a ring k[t, x_1..x_n]/(f_1..f_r) with homogeneous relations, the
matrix M_d relates multiplier coefficients to the graded piece of degree
d; the lcm of all nonzero minors of all M_d (1 <= d <= n(q-1)) separates
the isolated component of (x_1^q..x_n^q, f_1..f_r).  The Cramer-lift
solver rewrites fraction-field solutions with base-ring ones and serves
as the internal verification oracle for that construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import orders
from .budgets import DEFAULT as DEFAULT_BUDGETS
from .errors import InputError, VerificationError
from .fpoly import (
    NON_HOMOGENEOUS,
    FactorList,
    PrimePower,
    RingSpec,
    UniPoly,
    format_unipoly,
    uni_factor,
    uni_gcd,
    uni_lcm,
    weighted_degree,
)


# ---------------------------------------------------------------------------
# determinants over k[t]


def bareiss_det(matrix) -> UniPoly:
    """Fraction-free determinant of a square UniPoly matrix; cofactor
    expansion for dimension <= 3."""
    n = len(matrix)
    if n == 0:
        raise InputError("determinant of an empty matrix")
    p = matrix[0][0].p
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if n == 3:
        a, b, c = matrix[0]
        d, e, f = matrix[1]
        g, h, i = matrix[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    A = [list(row) for row in matrix]
    zero = UniPoly.zero(p)
    prev = UniPoly.one(p)
    sign = 1
    for k in range(n - 1):
        if A[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not A[i][k].is_zero), None)
            if pivot is None:
                return zero
            A[k], A[pivot] = A[pivot], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]).exact_div(prev)
            A[i][k] = zero
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign == 1 else -det


# ---------------------------------------------------------------------------
# the matrices M_d


@dataclass(frozen=True)
class MinorMatrix:
    """Coefficient matrix of the degree-d graded piece.

    Rows are exponent vectors u over the weight-1 variables with |u| = d
    and every entry < q; columns are (relation index, multiplier
    exponent vector w) with |w| = d - deg(f_i); the (u, (i, w)) entry is
    the k[t] coefficient of x^(u-w) in f_i when u - w is componentwise
    non-negative, else zero.
    """

    p: "PrimeModulus"
    d: int
    rows: tuple  # exponent vectors over the weight-1 variables
    cols: tuple  # (relation index, exponent vector)
    entries: dict  # (row index, col index) -> nonzero UniPoly

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def entry(self, r: int, c: int) -> UniPoly | None:
        return self.entries.get((r, c))


def _exps_summing_to(n: int, total: int, cap: int | None = None):
    """All exponent vectors of length n with given sum (optionally capped
    per entry), in descending grevlex order."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n - 1:
            if cap is None or remaining <= cap:
                out.append(tuple(prefix) + (remaining,))
            return
        top = remaining if cap is None else min(remaining, cap)
        for e in range(top + 1):
            rec(prefix + [e], remaining - e)

    if n == 0:
        return [()] if total == 0 else []
    rec([], total)
    key = orders._grevlex_key
    prec = tuple(range(n))
    out.sort(key=lambda e: key(e, prec), reverse=True)
    return out


def _relation_coefficients(ring: RingSpec, rel) -> dict:
    """Map weight-1 exponent vector v -> its k[t] coefficient in `rel`."""
    w1 = ring.weight1_indices()
    w0 = ring.weight0_indices()
    if len(w0) != 1:
        raise InputError("separating polynomials need exactly one weight-0 variable")
    ti = w0[0]
    coeffs: dict[tuple, dict[int, int]] = {}
    for m, c in rel._terms.items():
        v = tuple(m[i] for i in w1)
        coeffs.setdefault(v, {})[m[ti]] = c
    p = ring.p
    return {
        v: UniPoly(p, [d.get(k, 0) for k in range(max(d) + 1)])
        for v, d in coeffs.items()
    }


def build_Md(ring: RingSpec, q: PrimePower, d: int) -> MinorMatrix:
    """The matrix M_d, rows and columns in a fixed grevlex order."""
    w1 = ring.weight1_indices()
    n = len(w1)
    if n == 0:
        raise InputError("no weight-1 variables")
    if not 1 <= d <= n * (q.q - 1):
        raise InputError(f"degree {d} outside 1..{n * (q.q - 1)}")
    degs = []
    for rel in ring.relations:
        dd = weighted_degree(rel, ring)
        if dd is NON_HOMOGENEOUS or dd <= 0:
            raise InputError(f"relation not homogeneous of positive degree: {rel}")
        degs.append(dd)
    rows = tuple(_exps_summing_to(n, d, cap=q.q - 1))
    cols = []
    col_coeffs = []
    for i, rel in enumerate(ring.relations):
        if d - degs[i] < 0:
            continue
        rel_coeffs = _relation_coefficients(ring, rel)
        for w in _exps_summing_to(n, d - degs[i]):
            cols.append((i, w))
            col_coeffs.append(rel_coeffs)
    entries = {}
    for ri, u in enumerate(rows):
        for ci, (i, w) in enumerate(cols):
            v = tuple(a - b for a, b in zip(u, w))
            if any(e < 0 for e in v):
                continue
            a = col_coeffs[ci].get(v)
            if a is not None and not a.is_zero:
                entries[(ri, ci)] = a
    return MinorMatrix(p=ring.p, d=d, rows=rows, cols=tuple(cols), entries=entries)


# ---------------------------------------------------------------------------
# minor enumeration


@dataclass(frozen=True)
class MinorScan:
    """Result of enumerating the nonzero minors of one matrix."""

    lcm: UniPoly
    examined: int
    partial: bool


def minors_lcm(M: MinorMatrix, budget: int = DEFAULT_BUDGETS.minor_subsets) -> MinorScan:
    """Monic lcm of all nonzero minors of all sizes, enumerated by
    increasing size in a fixed order with incremental gcd-dedup.  The
    empty matrix contributes 1.  Exhausting the budget flags the scan
    PARTIAL instead of failing."""
    nr, nc = M.shape
    p_mod = M.p
    acc = None  # lazily typed accumulator; None means 1 so far
    examined = 0
    partial = False
    row_mask = [0] * nr
    col_mask = [0] * nc
    for (r, c) in M.entries:
        row_mask[r] |= 1 << c
        col_mask[c] |= 1 << r
    zero = UniPoly.zero(p_mod)
    done = False
    for size in range(1, min(nr, nc) + 1):
        if done:
            break
        for rows in itertools.combinations(range(nr), size):
            if done:
                break
            rbits = 0
            for r in rows:
                rbits |= 1 << r
            if any(not (row_mask[r]) for r in rows):
                continue
            for cols in itertools.combinations(range(nc), size):
                examined += 1
                if examined > budget:
                    partial = True
                    done = True
                    break
                # a fully zero row or column inside the submatrix: det 0
                cbits = 0
                for c in cols:
                    cbits |= 1 << c
                if any(not (row_mask[r] & cbits) for r in rows):
                    continue
                if any(not (col_mask[c] & rbits) for c in cols):
                    continue
                sub = [
                    [M.entries.get((r, c), zero) for c in cols] for r in rows
                ]
                det = bareiss_det(sub)
                if det.is_zero:
                    continue
                det = det.monic()
                if acc is None:
                    acc = det
                elif not (acc % det).is_zero:
                    acc = uni_lcm(acc, det)
    if acc is None:
        acc = UniPoly.one(p_mod)
    return MinorScan(lcm=acc, examined=examined, partial=partial)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class HqCertificate:
    """The separating polynomial for one prime power, with provenance."""

    q: PrimePower
    h: UniPoly
    factorization: FactorList
    s_max: int
    bound_constant: Fraction
    minors_examined: int
    budget_exhausted: bool

    @property
    def partial(self) -> bool:
        return self.budget_exhausted

    def to_json_dict(self) -> dict:
        return {
            "p": self.q.p.p,
            "e": self.q.e,
            "q": self.q.q,
            "h_coefficients": list(self.h.coeffs),
            "h_text": format_unipoly(self.h),
            "factors": [
                {"poly": format_unipoly(f), "coefficients": list(f.coeffs), "multiplicity": m}
                for f, m in self.factorization
            ],
            "s_max": self.s_max,
            "bound_constant": str(self.bound_constant),
            "minors_examined": self.minors_examined,
            "partial": self.budget_exhausted,
        }


def h_q(
    ring: RingSpec,
    q: PrimePower,
    budget: int = DEFAULT_BUDGETS.minor_subsets,
    seed: int = 0,
) -> HqCertificate:
    """lcm of the minor-lcms of every M_d, factored and bounded."""
    n = len(ring.weight1_indices())
    acc = UniPoly.one(ring.p)
    examined = 0
    partial = False
    for d in range(1, n * (q.q - 1) + 1):
        M = build_Md(ring, q, d)
        scan = minors_lcm(M, budget)
        examined += scan.examined
        partial = partial or scan.partial
        if scan.lcm.degree > 0:
            acc = uni_lcm(acc, scan.lcm)
    acc = acc.monic()
    factorization = uni_factor(acc, seed)
    s_max = factorization.max_multiplicity
    return HqCertificate(
        q=q,
        h=acc,
        factorization=factorization,
        s_max=s_max,
        bound_constant=Fraction(s_max, q.q ** (n - 1)),
        minors_examined=examined,
        budget_exhausted=partial,
    )


# ---------------------------------------------------------------------------
# the Cramer lift


def minor_lift(A, sums):
    """Given a k x l matrix over k[t] and right-hand sides divisible by
    every nonzero minor, produce base-ring multipliers b' with A b' = sums.

    Selects a maximal nonsingular square submatrix, appends identity rows
    for the free columns with zero right-hand side, and solves by
    Cramer's rule with exact division.
    """
    if not A or not A[0]:
        raise InputError("matrix must be nonempty")
    k, l = len(A), len(A[0])
    if any(len(row) != l for row in A):
        raise InputError("ragged matrix")
    if len(sums) != k:
        raise InputError("right-hand side length must match the row count")
    p = A[0][0].p
    zero = UniPoly.zero(p)
    one = UniPoly.one(p)

    # greedy maximal nonsingular submatrix
    sel_rows: list[int] = []
    sel_cols: list[int] = []
    for c in range(l):
        for r in range(k):
            if r in sel_rows:
                continue
            trial_rows = sel_rows + [r]
            trial_cols = sel_cols + [c]
            sub = [[A[i][j] for j in trial_cols] for i in trial_rows]
            if not bareiss_det(sub).is_zero:
                sel_rows, sel_cols = trial_rows, trial_cols
                break

    free_cols = [c for c in range(l) if c not in sel_cols]
    # bordered l x l system: selected rows of A, then identity rows
    rows = [[A[r][c] for c in range(l)] for r in sel_rows]
    rhs = [sums[r] for r in sel_rows]
    for c in free_cols:
        rows.append([one if j == c else zero for j in range(l)])
        rhs.append(zero)
    det = bareiss_det(rows) if rows else one
    if det.is_zero:
        raise VerificationError("bordered system is singular")
    solution = []
    for j in range(l):
        numer_rows = [
            [rhs[i] if jj == j else rows[i][jj] for jj in range(l)]
            for i in range(l)
        ]
        numer = bareiss_det(numer_rows)
        quot, rem = divmod(numer, det)
        if not rem.is_zero:
            raise VerificationError(
                "right-hand side not divisible by the selected minor",
                witness=format_unipoly(det),
            )
        solution.append(quot)
    # the lift must reproduce every equation, including unselected rows
    for r in range(k):
        acc = zero
        for j in range(l):
            acc = acc + A[r][j] * solution[j]
        if acc != sums[r]:
            raise VerificationError(
                f"inconsistent system at row {r}",
                witness=format_unipoly(sums[r] - acc),
            )
    return solution
