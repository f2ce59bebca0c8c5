"""The three-term polynomial sequence machinery.

P_0 = 1, P_1 = r1, P_{n+1} = r1*P_n - r0*r2*P_{n-1} for coefficient
polynomials r0, r1, r2 in k[t], together with the tridiagonal-determinant
cross-check, the lcm polynomials L_n, and irreducible-factor censuses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, ModulusMismatch
from .fpoly import FactorList, PrimeModulus, UniPoly, uni_factor, uni_lcm


@dataclass(frozen=True)
class SequenceSpec:
    r0: UniPoly
    r1: UniPoly
    r2: UniPoly

    def __post_init__(self):
        if not (self.r0.p == self.r1.p == self.r2.p):
            raise ModulusMismatch("r0, r1, r2 must share a modulus")
        if self.r1.is_zero:
            raise InputError("r1 must be nonzero")

    @property
    def p(self) -> PrimeModulus:
        return self.r1.p

    @property
    def degree_condition(self) -> bool:
        """2 deg r1 > deg r0 + deg r2; guarantees every P_n is nonzero of
        degree n*deg r1."""
        if self.r0.is_zero or self.r2.is_zero:
            return False
        return 2 * self.r1.degree > self.r0.degree + self.r2.degree

    @classmethod
    def parse(cls, p: PrimeModulus, r0: str, r1: str, r2: str) -> "SequenceSpec":
        from .fpoly import parse_unipoly

        return cls(parse_unipoly(r0, p), parse_unipoly(r1, p), parse_unipoly(r2, p))


def p_seq(spec: SequenceSpec, n: int) -> UniPoly:
    """P_n by the recurrence."""
    if n < 0:
        raise InputError("sequence index must be non-negative")
    prev = UniPoly.one(spec.p)
    if n == 0:
        return prev
    cur = spec.r1
    r0r2 = spec.r0 * spec.r2
    for _ in range(n - 1):
        prev, cur = cur, spec.r1 * cur - r0r2 * prev
    return cur


def tridiag_matrix(spec: SequenceSpec, n: int):
    """The n x n tridiagonal matrix with diagonal r1, superdiagonal r0,
    subdiagonal r2."""
    zero = UniPoly.zero(spec.p)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(spec.r1)
            elif j == i + 1:
                row.append(spec.r0)
            elif j == i - 1:
                row.append(spec.r2)
            else:
                row.append(zero)
        rows.append(row)
    return rows


def cofactor_det(matrix) -> UniPoly:
    """Determinant by cofactor expansion along the first row, memoized on
    the surviving column set.  Zero entries prune the recursion, so
    banded matrices stay cheap; kept independent of the scalar
    recurrence on purpose."""
    if not matrix or any(len(row) != len(matrix) for row in matrix):
        raise InputError("determinant needs a nonempty square matrix")
    p = matrix[0][0].p
    one = UniPoly.one(p)
    zero = UniPoly.zero(p)
    memo: dict[tuple, UniPoly] = {}

    def expand(cols: tuple) -> UniPoly:
        if not cols:
            return one
        got = memo.get(cols)
        if got is not None:
            return got
        row = len(matrix) - len(cols)
        acc = zero
        for pos, j in enumerate(cols):
            entry = matrix[row][j]
            if entry.is_zero:
                continue
            minor = expand(cols[:pos] + cols[pos + 1 :])
            term = entry * minor
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return expand(tuple(range(len(matrix))))


def tridiag_det(spec: SequenceSpec, n: int) -> UniPoly:
    """Determinant of the n x n tridiagonal matrix; equals p_seq(spec, n)."""
    if n < 1:
        raise InputError("matrix size must be at least 1")
    return cofactor_det(tridiag_matrix(spec, n))


def big_L(spec: SequenceSpec, n: int) -> UniPoly:
    """Monic lcm of P_1 .. P_{n-1}; the empty lcm (n = 1) is 1."""
    if n < 1:
        raise InputError("index must be at least 1")
    acc = UniPoly.one(spec.p)
    prev = UniPoly.one(spec.p)
    cur = spec.r1
    r0r2 = spec.r0 * spec.r2
    for i in range(1, n):
        if cur.is_zero:
            raise InputError(
                f"P_{i} vanishes; the degree condition 2 deg r1 > deg r0 + deg r2 fails"
            )
        acc = uni_lcm(acc, cur)
        prev, cur = cur, spec.r1 * cur - r0r2 * prev
    return acc.monic()


@dataclass(frozen=True)
class Census:
    """Factorizations of a family of labelled polynomials plus the union
    of their irreducible supports."""

    entries: tuple  # of (label, FactorList)
    distinct_irreducibles: tuple  # monic irreducible UniPoly, sorted
    max_multiplicity: int


def factor_census(polys, seed: int) -> Census:
    """Factor every (label, polynomial) pair and merge the supports."""
    entries = []
    support = set()
    max_mult = 0
    modulus = None
    for label, poly in polys:
        if poly.is_zero:
            raise InputError(f"cannot census the zero polynomial ({label})")
        if modulus is None:
            modulus = poly.p
        elif poly.p != modulus:
            raise ModulusMismatch("census polynomials must share a modulus")
        fl: FactorList = uni_factor(poly, seed)
        entries.append((str(label), fl))
        for irr, mult in fl:
            support.add(irr)
            max_mult = max(max_mult, mult)
    distinct = tuple(sorted(support, key=UniPoly.sort_key))
    return Census(tuple(entries), distinct, max_mult)
