"""Ideal arithmetic engine.

Reduced Groebner bases via Buchberger (sugar strategy, both classical
pair criteria), normal forms, membership, equality, elimination,
intersection, colon, saturation, and an independent bounded-degree
linear-algebra membership oracle.

Quotient rings never get a separate arithmetic layer: every IdealHandle
silently carries its ring's relations, so all computations happen in the
ambient polynomial ring.
"""

from __future__ import annotations

import heapq
import itertools
import threading
from dataclasses import dataclass

import numpy as np

from . import budgets as budgets_mod
from . import orders
from .errors import BudgetExceeded, InputError, RingMismatch
from .fpoly import MultiPoly, RingSpec

DEFAULT_BUDGETS = budgets_mod.DEFAULT

_FIELD_BITS = 24
_FIELD_MAX = (1 << _FIELD_BITS) - 1


# ---------------------------------------------------------------------------
# packed monomial contexts
#
# Monomials are packed into Python ints so that plain integer comparison
# realizes the monomial order and monomial multiplication is key addition
# (up to the constant key of the unit monomial).


class _Ctx:
    __slots__ = ("nvars", "order", "fields", "key_one")

    def __init__(self, nvars: int, order: orders.MonomialOrder):
        self.nvars = nvars
        self.order = order
        # fields, most significant first: ("deg", indices) | ("comp", i) | ("plain", i)
        fields = []
        if order.kind == "lex":
            for i in order.precedence:
                fields.append(("plain", i))
        elif order.kind == "grevlex":
            fields.append(("deg", order.precedence))
            for i in reversed(order.precedence):
                fields.append(("comp", i))
        else:  # block: two grevlex blocks
            front = order.precedence[: order.front_size]
            back = order.precedence[order.front_size :]
            for blk in (front, back):
                fields.append(("deg", blk))
                for i in reversed(blk):
                    fields.append(("comp", i))
        self.fields = tuple(fields)
        self.key_one = self.encode((0,) * nvars)

    def encode(self, exps) -> int:
        key = 0
        for kind, arg in self.fields:
            if kind == "deg":
                v = sum(exps[i] for i in arg)
            elif kind == "comp":
                v = _FIELD_MAX - exps[arg]
            else:
                v = exps[arg]
            key = (key << _FIELD_BITS) | v
        return key

    def decode(self, key: int):
        exps = [0] * self.nvars
        for kind, arg in reversed(self.fields):
            v = key & _FIELD_MAX
            key >>= _FIELD_BITS
            if kind == "comp":
                exps[arg] = _FIELD_MAX - v
            elif kind == "plain":
                exps[arg] = v
        return tuple(exps)

    def to_raw(self, f: MultiPoly):
        """Sorted term list, leading term first."""
        raw = [(self.encode(m), c) for m, c in f._terms.items()]
        raw.sort(reverse=True)
        return raw

    def from_raw(self, ring: RingSpec, raw) -> MultiPoly:
        return MultiPoly(ring, {self.decode(k): c for k, c in raw})


def _divides(lead_exps, exps) -> bool:
    for a, b in zip(lead_exps, exps):
        if a > b:
            return False
    return True


class _BasisElt:
    __slots__ = ("lead_key", "lead_exps", "terms", "sugar")

    def __init__(self, ctx: _Ctx, raw, sugar=None):
        self.lead_key = raw[0][0]
        self.lead_exps = ctx.decode(self.lead_key)
        self.terms = raw
        self.sugar = sugar if sugar is not None else sum(self.lead_exps)


def _make_monic(raw, p):
    lc = raw[0][1]
    if lc == 1:
        return raw
    inv = pow(lc, p - 2, p)
    return [(k, (c * inv) % p) for k, c in raw]


def _nf_raw(fraw, basis, ctx: _Ctx, p: int):
    """Full normal form of a raw polynomial against monic basis elements."""
    D: dict[int, int] = {}
    heap: list[int] = []
    for k, c in fraw:
        prev = D.get(k, 0)
        nc = (prev + c) % p
        if nc:
            if not prev:
                heapq.heappush(heap, -k)
            D[k] = nc
        else:
            D.pop(k, None)
    out = []
    last = None
    while heap:
        k = -heapq.heappop(heap)
        if k == last:
            continue
        last = k
        c = D.get(k)
        if not c:
            continue
        exps = ctx.decode(k)
        reducer = None
        for g in basis:
            if _divides(g.lead_exps, exps):
                reducer = g
                break
        if reducer is None:
            out.append((k, c))
            del D[k]
            continue
        shift = k - reducer.lead_key
        for k2, c2 in reducer.terms:
            kk = k2 + shift
            prev = D.get(kk, 0)
            nc = (prev - c * c2) % p
            if nc:
                if not prev:
                    heapq.heappush(heap, -kk)
                D[kk] = nc
            else:
                D.pop(kk, None)
    return out


def _divmod_raw(fraw, basis, ctx: _Ctx, p: int):
    """Division with quotients: f = sum q_i g_i + r.  Returns (quotients
    as raw dicts, remainder raw list)."""
    D: dict[int, int] = {}
    heap: list[int] = []
    for k, c in fraw:
        D[k] = c
        heapq.heappush(heap, -k)
    quotients = [dict() for _ in basis]
    out = []
    last = None
    while heap:
        k = -heapq.heappop(heap)
        if k == last:
            continue
        last = k
        c = D.get(k)
        if not c:
            continue
        exps = ctx.decode(k)
        reducer = None
        for gi, g in enumerate(basis):
            if _divides(g.lead_exps, exps):
                reducer = gi
                break
        if reducer is None:
            out.append((k, c))
            del D[k]
            continue
        g = basis[reducer]
        shift = k - g.lead_key
        kq = shift + ctx.key_one
        qd = quotients[reducer]
        qd[kq] = (qd.get(kq, 0) + c) % p
        for k2, c2 in g.terms:
            kk = k2 + shift
            prev = D.get(kk, 0)
            nc = (prev - c * c2) % p
            if nc:
                if not prev:
                    heapq.heappush(heap, -kk)
                D[kk] = nc
            else:
                D.pop(kk, None)
    return quotients, out


def _spoly_raw(f: _BasisElt, g: _BasisElt, ctx: _Ctx, p: int):
    lcm_exps = tuple(max(a, b) for a, b in zip(f.lead_exps, g.lead_exps))
    kl = ctx.encode(lcm_exps)
    D: dict[int, int] = {}
    shift_f = kl - f.lead_key
    for k, c in f.terms:
        kk = k + shift_f
        D[kk] = (D.get(kk, 0) + c) % p
    shift_g = kl - g.lead_key
    for k, c in g.terms:
        kk = k + shift_g
        D[kk] = (D.get(kk, 0) - c) % p
    raw = [(k, c) for k, c in D.items() if c]
    raw.sort(reverse=True)
    return raw


def _buchberger(gens_raw, ctx: _Ctx, p: int, budgets) -> list[_BasisElt]:
    """Reduced Groebner basis from raw generators, deterministic."""
    G: list[_BasisElt] = []
    for raw in sorted(gens_raw, reverse=True):
        if raw:
            G.append(_BasisElt(ctx, _make_monic(raw, p)))

    def lcm_exps(i, j):
        return tuple(max(a, b) for a, b in zip(G[i].lead_exps, G[j].lead_exps))

    pending = set()
    for i, j in itertools.combinations(range(len(G)), 2):
        pending.add((i, j))

    def pair_sugar(i, j):
        L = lcm_exps(i, j)
        d = sum(L)
        return max(
            G[i].sugar + d - sum(G[i].lead_exps),
            G[j].sugar + d - sum(G[j].lead_exps),
        )

    reductions = 0
    while pending:
        # sugar selection with deterministic tie-breaks
        best = min(
            pending, key=lambda ij: (pair_sugar(*ij), ctx.encode(lcm_exps(*ij)), ij)
        )
        pending.discard(best)
        i, j = best
        L = lcm_exps(i, j)
        # product criterion: coprime leading monomials
        if all(
            a + b == l for a, b, l in zip(G[i].lead_exps, G[j].lead_exps, L)
        ):
            continue
        # chain criterion
        skip = False
        for h in range(len(G)):
            if h in (i, j):
                continue
            if _divides(G[h].lead_exps, L):
                pih = (min(i, h), max(i, h))
                pjh = (min(j, h), max(j, h))
                if pih not in pending and pjh not in pending:
                    skip = True
                    break
        if skip:
            continue
        reductions += 1
        if reductions > budgets.gb_pairs:
            raise BudgetExceeded("gb_pairs", budgets.gb_pairs)
        s = _spoly_raw(G[i], G[j], ctx, p)
        r = _nf_raw(s, G, ctx, p)
        if not r:
            continue
        elt = _BasisElt(ctx, _make_monic(r, p), sugar=pair_sugar(i, j))
        new_index = len(G)
        G.append(elt)
        if len(G) > budgets.gb_basis:
            raise BudgetExceeded("gb_basis", budgets.gb_basis)
        for k in range(new_index):
            pending.add((k, new_index))

    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for i, g in enumerate(G):
        if any(
            _divides(G[j].lead_exps, g.lead_exps)
            and (G[j].lead_key != g.lead_key or j < i)
            for j in range(len(G))
            if j != i
        ):
            continue
        keep.append(g)
    # interreduce tails
    reduced = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1 :]
        r = _nf_raw(g.terms, others, ctx, p)
        if r:
            reduced.append(_BasisElt(ctx, _make_monic(r, p)))
    reduced.sort(key=lambda g: g.lead_key, reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# public handles and operations


class IdealHandle:
    """An ideal given by generators in a RingSpec, with cached reduced
    Groebner bases per monomial order.  The ring's quotient relations are
    appended to the generators in every computation."""

    __slots__ = ("ring", "generators", "_cache", "_lock")

    def __init__(self, ring: RingSpec, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, str):
                from .fpoly import parse_poly

                g = parse_poly(g, ring)
            if not ring.same_ambient(g.ring):
                raise RingMismatch("generator lives in a different ring")
            gens.append(g)
        self.generators = tuple(gens)
        self._cache: dict[orders.MonomialOrder, tuple] = {}
        self._lock = threading.Lock()

    def effective_generators(self):
        return self.generators + self.ring.relations

    def groebner_basis(self, order=None, budgets=DEFAULT_BUDGETS):
        order = order or self.ring.default_order
        cached = self._cache.get(order)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._cache.get(order)
            if cached is not None:
                return cached
            ctx = _Ctx(self.ring.nvars, order)
            raws = [ctx.to_raw(g) for g in self.effective_generators() if not g.is_zero]
            basis = _buchberger(raws, ctx, self.ring.p.p, budgets)
            gb = tuple(ctx.from_raw(self.ring, g.terms) for g in basis)
            self._cache[order] = gb
            return gb

    def contains(self, f: MultiPoly, budgets=DEFAULT_BUDGETS) -> bool:
        return normal_form(f, self, budgets=budgets).is_zero

    def is_unit_ideal(self, budgets=DEFAULT_BUDGETS) -> bool:
        gb = self.groebner_basis(budgets=budgets)
        return len(gb) == 1 and gb[0].constant_value() == 1

    def __repr__(self):
        return f"IdealHandle({len(self.generators)} generators in {self.ring!r})"


@dataclass(frozen=True)
class SaturationResult:
    ideal: IdealHandle
    stabilization_exponent: int


def groebner_basis(I: IdealHandle, order=None, budgets=DEFAULT_BUDGETS):
    return I.groebner_basis(order, budgets)


def _basis_for(I: IdealHandle, order, budgets):
    order = order or I.ring.default_order
    gb = I.groebner_basis(order, budgets)
    ctx = _Ctx(I.ring.nvars, order)
    return ctx, [_BasisElt(ctx, ctx.to_raw(g)) for g in gb]


def normal_form(f: MultiPoly, I: IdealHandle, order=None, budgets=DEFAULT_BUDGETS):
    """Remainder of f under full division by the reduced basis; zero iff
    f is in the ideal."""
    ctx, basis = _basis_for(I, order, budgets)
    raw = _nf_raw(ctx.to_raw(f), basis, ctx, I.ring.p.p)
    return ctx.from_raw(I.ring, raw)


def ideal_equal(I: IdealHandle, J: IdealHandle, budgets=DEFAULT_BUDGETS) -> bool:
    if not I.ring.same_ambient(J.ring):
        raise RingMismatch("cannot compare ideals in different rings")
    return I.groebner_basis(budgets=budgets) == J.groebner_basis(budgets=budgets)


_AUX_NAME = "_w"


def _intersect_gens(ring: RingSpec, gens_a, gens_b, budgets):
    """Generators of (gens_a) intersect (gens_b) via the single auxiliary
    variable construction: eliminate w from w*A + (1-w)*B."""
    aux = _AUX_NAME
    while aux in ring.names:
        aux += "_"
    ext = ring.extend(((aux, 1),))
    wi = ext.nvars - 1
    w = ext.variable(wi)
    one_minus_w = MultiPoly.const(ext, 1) - w

    def lift(f: MultiPoly) -> MultiPoly:
        return MultiPoly(ext, {m + (0,): c for m, c in f._terms.items()})

    ext_gens = [w * lift(g) for g in gens_a if not g.is_zero]
    ext_gens += [one_minus_w * lift(g) for g in gens_b if not g.is_zero]
    order = orders.block(ext.weights, (wi,))
    ctx = _Ctx(ext.nvars, order)
    basis = _buchberger([ctx.to_raw(g) for g in ext_gens], ctx, ring.p.p, budgets)
    out = []
    for g in basis:
        mp = ctx.from_raw(ext, g.terms)
        if not mp.uses_variable(wi):
            out.append(MultiPoly(ring, {m[:-1]: c for m, c in mp._terms.items()}))
    return out


def intersect(I: IdealHandle, J: IdealHandle, budgets=DEFAULT_BUDGETS) -> IdealHandle:
    if not I.ring.same_ambient(J.ring):
        raise RingMismatch("cannot intersect ideals in different rings")
    gens = _intersect_gens(
        I.ring, I.effective_generators(), J.effective_generators(), budgets
    )
    return IdealHandle(I.ring, gens)


def _exact_div_multi(g: MultiPoly, f: MultiPoly, budgets) -> MultiPoly:
    """Exact division g / f in the ambient polynomial ring."""
    ring = g.ring
    ctx = _Ctx(ring.nvars, ring.default_order)
    p = ring.p.p
    basis = [_BasisElt(ctx, _make_monic(ctx.to_raw(f), p))]
    quotients, rem = _divmod_raw(ctx.to_raw(g), basis, ctx, p)
    if rem:
        raise InputError("inexact multivariate division")
    lc = ctx.to_raw(f)[0][1]
    q = ctx.from_raw(ring, sorted(quotients[0].items(), reverse=True))
    if lc != 1:
        q = q * pow(lc, p - 2, p)
    return q


def colon(I: IdealHandle, f: MultiPoly, budgets=DEFAULT_BUDGETS) -> IdealHandle:
    """I : f, computed as (I intersect (f)) with every generator divided
    exactly by f.  The principal side deliberately omits the quotient
    relations: for ideals containing the relations, the colon of the
    preimage is the preimage of the colon."""
    if f.is_zero:
        raise InputError("colon by zero")
    if f.constant_value() is not None:
        return IdealHandle(I.ring, I.generators)
    gens = _intersect_gens(I.ring, I.effective_generators(), [f], budgets)
    quotients = [_exact_div_multi(g, f, budgets) for g in gens]
    return IdealHandle(I.ring, quotients)


def colon_ideal(I: IdealHandle, J: IdealHandle, budgets=DEFAULT_BUDGETS) -> IdealHandle:
    """I : J as the intersection of I : g over the listed generators of J."""
    gens = [g for g in J.generators if not g.is_zero]
    if not gens:
        raise InputError("colon by an ideal with no nonzero generators")
    result = colon(I, gens[0], budgets)
    for g in gens[1:]:
        result = intersect(result, colon(I, g, budgets), budgets)
    return result


def saturate(I: IdealHandle, f: MultiPoly, budgets=DEFAULT_BUDGETS) -> SaturationResult:
    """Iterated colon until stabilization; the exponent N satisfies
    I : f^N = I : f^(N+1) = I : f^infinity."""
    if f.is_zero:
        raise InputError("saturation by zero")
    current = I
    for n in range(budgets.saturation_steps):
        nxt = colon(current, f, budgets)
        if ideal_equal(nxt, current, budgets):
            return SaturationResult(current, n)
        current = nxt
    raise BudgetExceeded("saturation_steps", budgets.saturation_steps)


def eliminate(I: IdealHandle, front, budgets=DEFAULT_BUDGETS) -> IdealHandle:
    """Generators of I intersected with the subring on the kept
    variables, via a block order eliminating `front`."""
    ring = I.ring
    front_idx = tuple(
        v if isinstance(v, int) else ring.index_of(v) for v in front
    )
    for i in front_idx:
        if not 0 <= i < ring.nvars:
            raise InputError(f"variable index {i} out of range")
    order = orders.block(ring.weights, front_idx)
    ctx = _Ctx(ring.nvars, order)
    raws = [ctx.to_raw(g) for g in I.effective_generators() if not g.is_zero]
    basis = _buchberger(raws, ctx, ring.p.p, budgets)
    out = []
    front_set = set(front_idx)
    for g in basis:
        mp = ctx.from_raw(ring, g.terms)
        if not any(mp.uses_variable(i) for i in front_set):
            out.append(mp)
    return IdealHandle(ring, out)


def power_containment(
    P: IdealHandle, k: int, Q: IdealHandle, budgets=DEFAULT_BUDGETS
) -> bool:
    """True iff every degree-k product of P's generators reduces to zero
    modulo Q.  Products are enumerated combinatorially with subtree
    pruning by the monomial part of Q's basis; intended for generator
    sets that are monomials or univariate polynomials in the t-block."""
    if k < 0:
        raise InputError("power must be non-negative")
    gens = [g for g in P.generators if not g.is_zero]
    ring = P.ring
    ctx, basis = _basis_for(Q, None, budgets)
    mono_leads = [
        b.lead_exps for b in basis if len(b.terms) == 1
    ]
    if k == 0:
        one = MultiPoly.const(ring, 1)
        return not _nf_raw(ctx.to_raw(one), basis, ctx, ring.p.p)
    if not gens:
        return True
    # monomial generators first so pruning bites early
    gens.sort(key=lambda g: (len(g._terms), ctx.to_raw(g)[0][0]))
    p = ring.p.p
    count = 0

    def monomial_covered(f: MultiPoly) -> bool:
        if len(f._terms) != 1:
            return False
        (m,) = f._terms
        return any(_divides(lead, m) for lead in mono_leads)

    pow_cache: dict[tuple[int, int], MultiPoly] = {}

    def gen_power(i: int, e: int) -> MultiPoly:
        got = pow_cache.get((i, e))
        if got is None:
            got = gens[i] ** e
            pow_cache[(i, e)] = got
        return got

    def rec(idx: int, remaining: int, current: MultiPoly) -> bool:
        nonlocal count
        if monomial_covered(current):
            return True
        if idx == len(gens) - 1:
            count += 1
            if count > budgets.power_products:
                raise BudgetExceeded("power_products", budgets.power_products)
            prod = current * gen_power(idx, remaining)
            return not _nf_raw(ctx.to_raw(prod), basis, ctx, p)
        cur = current
        for a in range(remaining + 1):
            if a > 0:
                cur = cur * gens[idx]
                if monomial_covered(cur):
                    return True
            if not rec(idx + 1, remaining - a, cur):
                return False
        return True

    return rec(0, k, MultiPoly.const(ring, 1))


def _solve_consistent_mod_p(A: np.ndarray, b: np.ndarray, p: int) -> bool:
    """Whether A x = b has a solution over F_p (dense Gaussian elimination)."""
    M = np.concatenate([A, b.reshape(-1, 1)], axis=1).astype(np.int64) % p
    rows, cols = M.shape
    pivot_row = 0
    for col in range(cols - 1):
        sub = M[pivot_row:, col]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        r = pivot_row + int(nz[0])
        if r != pivot_row:
            M[[pivot_row, r]] = M[[r, pivot_row]]
        inv = pow(int(M[pivot_row, col]), p - 2, p)
        M[pivot_row] = (M[pivot_row] * inv) % p
        other = np.nonzero(M[:, col])[0]
        other = other[other != pivot_row]
        if other.size:
            M[other] = (M[other] - np.outer(M[other, col], M[pivot_row])) % p
        pivot_row += 1
        if pivot_row == rows:
            break
    # inconsistent iff a row is zero in A but nonzero in b
    zero_a = ~M[:, :-1].any(axis=1)
    return not bool((M[zero_a, -1] % p).any())


def member_bounded_oracle(
    f: MultiPoly,
    I: IdealHandle,
    t_bound: int,
    x_bound: int,
    budgets=DEFAULT_BUDGETS,
) -> bool:
    """Decide whether f = sum c_i g_i with multipliers of t-degree at most
    t_bound and weighted x-degree at most x_bound, by solving one F_p
    linear system over the monomial basis.  Monotone in both bounds; a
    True is definitive, a False only means "not within bounds"."""
    if t_bound < 0 or x_bound < 0:
        raise InputError("oracle bounds must be non-negative")
    ring = I.ring
    p = ring.p.p
    w1 = ring.weight1_indices()
    w0 = ring.weight0_indices()

    def bounded_monomials():
        xs = _exps_summing_at_most(len(w1), x_bound)
        ts = _exps_summing_at_most(len(w0), t_bound)
        for xe in xs:
            for te in ts:
                m = [0] * ring.nvars
                for i, e in zip(w1, xe):
                    m[i] = e
                for i, e in zip(w0, te):
                    m[i] = e
                yield tuple(m)

    support = list(bounded_monomials())
    gens = [g for g in I.effective_generators() if not g.is_zero]
    cols = []
    row_index: dict[tuple, int] = {}
    entries = []  # (row, col, coeff)
    for gi, g in enumerate(gens):
        for m in support:
            col = len(cols)
            cols.append((gi, m))
            if len(cols) > budgets.oracle_dim:
                raise BudgetExceeded("oracle_dim", budgets.oracle_dim)
            for gm, gc in g._terms.items():
                prod = tuple(a + b for a, b in zip(m, gm))
                r = row_index.setdefault(prod, len(row_index))
                if len(row_index) > budgets.oracle_dim:
                    raise BudgetExceeded("oracle_dim", budgets.oracle_dim)
                entries.append((r, col, gc))
    for m in f._terms:
        row_index.setdefault(m, len(row_index))
    A = np.zeros((len(row_index), len(cols)), dtype=np.int64)
    for r, c, v in entries:
        A[r, c] = (A[r, c] + v) % p
    b = np.zeros(len(row_index), dtype=np.int64)
    for m, c in f._terms.items():
        b[row_index[m]] = c % p
    return _solve_consistent_mod_p(A, b, p)


def _exps_summing_at_most(n: int, bound: int):
    if n == 0:
        return [()]
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n - 1:
            for e in range(remaining + 1):
                out.append(tuple(prefix) + (e,))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)

    rec([], bound)
    return out
