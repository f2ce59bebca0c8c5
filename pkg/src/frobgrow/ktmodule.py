"""Degree-by-degree exact linear algebra over k[t].

A homogeneous ideal in k[t][x_1..x_n] (t of weight zero, the x_i of
weight one) meets the degree-d slice S_d in a k[t]-submodule of the free
module on the degree-d monomials.  Because k[t] is a principal ideal
domain, colon, membership, and contraction questions about such slices
reduce to column echelon forms of matrices of univariate polynomials,
which is far cheaper than an elimination-order Groebner basis when the
t-degrees are large.

Generator columns only touch the monomials in their support, so every
computation is restricted to the support-connectivity component of the
target; for multigraded relations this recovers the grading decomposition
automatically.
"""

from __future__ import annotations

from .errors import InputError
from .fpoly import MultiPoly, RingSpec, UniPoly


def _single_t_index(ring: RingSpec) -> int:
    w0 = ring.weight0_indices()
    if len(w0) != 1:
        raise InputError(
            "degreewise linear algebra needs exactly one weight-zero variable"
        )
    return w0[0]


def x_degree(f: MultiPoly) -> int:
    """Common weight of all terms of f, ignoring weight-zero variables;
    raises if f is zero or inhomogeneous."""
    if f.is_zero:
        raise InputError("the zero polynomial has no x-degree")
    w1 = f.ring.weight1_indices()
    degs = {sum(exps[i] for i in w1) for exps in f.term_dict()}
    if len(degs) != 1:
        raise InputError("polynomial is not homogeneous in the weighted variables")
    return degs.pop()


def _columns_of(f: MultiPoly, ti: int, w1, shift) -> dict:
    """f * x^shift as a vector {x-monomial exps: UniPoly} over k[t]."""
    p = f.ring.p
    out = {}
    for exps, c in f.term_dict().items():
        row = tuple(exps[i] + s for i, s in zip(w1, shift))
        coeffs = out.setdefault(row, {})
        coeffs[exps[ti]] = (coeffs.get(exps[ti], 0) + c) % p.p
    vec = {}
    for row, coeffs in out.items():
        u = UniPoly(p, [coeffs.get(i, 0) for i in range(max(coeffs) + 1)])
        if not u.is_zero:
            vec[row] = u
    return vec


def _supports(f: MultiPoly, w1):
    return sorted({tuple(exps[i] for i in w1) for exps in f.term_dict()})


class DegreeSlice:
    """The component of the degree-d slice of an ideal containing the
    given seed monomials, held in column echelon form over k[t]."""

    def __init__(self, ideal, degree: int, seeds, extra: UniPoly | None = None):
        ring = ideal.ring
        ti = _single_t_index(ring)
        w1 = ring.weight1_indices()
        gens = [g for g in ideal.effective_generators() if not g.is_zero]
        gen_data = []
        for g in gens:
            d = x_degree(g)
            if d <= degree:
                gen_data.append((g, d, _supports(g, w1)))
        self.ring = ring
        self.p = ring.p
        self.degree = degree
        self._ti = ti
        self._w1 = w1
        rows, columns = self._collect(gen_data, seeds, degree)
        if extra is not None and not extra.is_zero:
            for row in sorted(rows):
                columns.append({row: extra})
        self.rows = rows
        self._echelon_pivots = _echelon(columns, sorted(rows, reverse=True))

    def _collect(self, gen_data, seeds, degree):
        seen = set()
        work = []
        for s in seeds:
            if sum(s) != degree:
                raise InputError("seed monomial has the wrong degree")
            if s not in seen:
                seen.add(s)
                work.append(s)
        placed = set()
        columns = []
        while work:
            mono = work.pop()
            for gi, (g, gd, sup) in enumerate(gen_data):
                for s in sup:
                    shift = tuple(m - e for m, e in zip(mono, s))
                    if any(e < 0 for e in shift):
                        continue
                    if (gi, shift) in placed:
                        continue
                    placed.add((gi, shift))
                    columns.append(_columns_of(g, self._ti, self._w1, shift))
                    for s2 in sup:
                        other = tuple(a + b for a, b in zip(shift, s2))
                        if other not in seen:
                            seen.add(other)
                            work.append(other)
        return seen, columns

    def contains(self, vec: dict) -> bool:
        """Membership of a vector {x-exps: UniPoly} by exact-division
        reduction against the echelon."""
        v = {r: u for r, u in vec.items() if not u.is_zero}
        if any(row not in self.rows for row in v):
            return False
        for row, piv in self._echelon_pivots:
            u = v.get(row)
            if u is None or u.is_zero:
                continue
            q, rem = divmod(u, piv[row])
            if not rem.is_zero:
                return False
            for r2, entry in piv.items():
                w = v.get(r2, UniPoly.zero(self.p)) - q * entry
                if w.is_zero:
                    v.pop(r2, None)
                else:
                    v[r2] = w
        return all(u.is_zero for u in v.values())

    def contains_poly(self, f: MultiPoly) -> bool:
        if f.is_zero:
            return True
        if x_degree(f) != self.degree:
            raise InputError("degree of the polynomial differs from the slice")
        return self.contains(_columns_of(f, self._ti, self._w1, (0,) * len(self._w1)))

    def colon_is_trivial(self, g: UniPoly) -> bool:
        """Whether {v : g*v in M} == M for this slice's module M, decided
        by a tracked kernel computation of [columns | g*identity]."""
        if g.is_zero:
            raise InputError("colon by zero is undefined")
        # the torsion of the quotient divides the product of the pivot
        # entries, so coprimality with every pivot settles it at once
        from .fpoly import uni_gcd

        if all(uni_gcd(g, piv[row]).degree == 0 for row, piv in self._echelon_pivots):
            return True
        columns = [dict(piv) for _, piv in self._echelon_pivots]
        tracked: list[dict] = [{} for _ in columns]
        one = UniPoly.one(self.p)
        for row in sorted(self.rows, reverse=True):
            columns.append({row: g})
            tracked.append({row: one})
        for v in _echelon_tracked(columns, tracked, sorted(self.rows, reverse=True)):
            if v and not self.contains(v):
                return False
        return True


def _echelon(columns, row_order):
    """In-place column echelon over k[t]; returns [(pivot_row, column)] in
    processing order.  After processing a row, every unprocessed column is
    zero there, so reduction by exact division decides membership."""
    remaining = [c for c in columns if c]
    pivots = []
    for row in row_order:
        active = [c for c in remaining if row in c]
        if not active:
            continue
        while len(active) > 1:
            active.sort(key=lambda c: c[row].degree)
            piv = active[0]
            for c in active[1:]:
                _axpy(c, -(c[row] // piv[row]), piv)
            active = [c for c in active if row in c]
        piv = active[0]
        remaining = [c for c in remaining if c is not piv]
        pivots.append((row, piv))
    return pivots


def _axpy(target: dict, a: UniPoly, source: dict):
    """target += a * source on sparse k[t]-vectors."""
    for row, entry in source.items():
        w = target.get(row)
        w = a * entry if w is None else w + a * entry
        if w.is_zero:
            target.pop(row, None)
        else:
            target[row] = w


class SliceCache:
    """Membership oracle for one x-homogeneous ideal, building each
    degree/component slice at most once."""

    def __init__(self, ideal):
        self.ideal = ideal
        self._w1 = ideal.ring.weight1_indices()
        self._by_row: dict = {}  # x-monomial -> its component's slice

    def member(self, f: MultiPoly) -> bool:
        if f.is_zero:
            return True
        sup = _supports(f, self._w1)
        sl = self._by_row.get(sup[0])
        if sl is None or not all(m in sl.rows for m in sup):
            sl = DegreeSlice(self.ideal, x_degree(f), sup)
            for row in sl.rows:
                self._by_row[row] = sl
        return sl.contains_poly(f)


def slice_membership(ideal, polys) -> list[bool]:
    """Membership of each x-homogeneous poly in the ideal, reusing one
    slice per degree/component."""
    cache = SliceCache(ideal)
    return [cache.member(f) for f in polys]


def slice_power_containment(radical_gens, k: int, cache: SliceCache) -> bool:
    """True iff every degree-k product of the radical generators lies in
    the cache's ideal; same subtree pruning by plain monomial generators
    as groebner.power_containment, with slice membership at the leaves."""
    if k < 0:
        raise InputError("power must be non-negative")
    ring = cache.ideal.ring
    gens = [g for g in radical_gens if not g.is_zero]
    covers = [
        next(iter(g.term_dict()))
        for g in cache.ideal.effective_generators()
        if len(g.term_dict()) == 1
    ]
    one = MultiPoly.const(ring, 1)
    if k == 0:
        return cache.member(one)
    if not gens:
        return True

    def covered(f: MultiPoly) -> bool:
        td = f.term_dict()
        if len(td) != 1:
            return False
        (m,) = td
        return any(all(a >= b for a, b in zip(m, c)) for c in covers)

    gens.sort(key=lambda g: (len(g.term_dict()), min(g.term_dict())))
    pow_cache: dict[tuple[int, int], MultiPoly] = {}

    def gen_power(i: int, e: int) -> MultiPoly:
        got = pow_cache.get((i, e))
        if got is None:
            got = gens[i] ** e
            pow_cache[(i, e)] = got
        return got

    def rec(idx: int, remaining: int, current: MultiPoly) -> bool:
        if covered(current):
            return True
        if idx == len(gens) - 1:
            return cache.member(current * gen_power(idx, remaining))
        cur = current
        for a in range(remaining + 1):
            if a > 0:
                cur = cur * gens[idx]
                if covered(cur):
                    return True
            if not rec(idx + 1, remaining - a, cur):
                return False
        return True

    return rec(0, k, one)


def monomials_of_degree(nvars: int, total: int):
    """Exponent tuples over nvars variables summing to total."""
    if nvars == 0:
        return [()] if total == 0 else []
    return [
        (e,) + rest
        for e in range(total, -1, -1)
        for rest in monomials_of_degree(nvars - 1, total - e)
    ]


def univariate_colon_trivial_panel(ideal, gs, max_degree: int) -> list[bool]:
    """(I : g) == I in every x-degree below max_degree, for each g in the
    panel, building every slice exactly once.  When the caller knows I
    contains every monomial of degree >= max_degree, this decides
    (I : g) == I outright."""
    nx = len(ideal.ring.weight1_indices())
    results = [True] * len(gs)
    for d in range(max_degree):
        todo = set(monomials_of_degree(nx, d))
        while todo:
            seed = todo.pop()
            sl = DegreeSlice(ideal, d, [seed])
            todo -= sl.rows
            for i, g in enumerate(gs):
                if results[i] and not sl.colon_is_trivial(g):
                    results[i] = False
            if not any(results):
                return results
    return results


def univariate_colon_trivial(ideal, g: UniPoly, max_degree: int) -> bool:
    return univariate_colon_trivial_panel(ideal, [g], max_degree)[0]


def _echelon_tracked(columns, tracked, row_order):
    """Column echelon like _echelon, carrying one tracked univariate per
    column through the same operations.  Returns the tracked values of the
    columns that reduced to zero; with unimodular column operations those
    columns generate the kernel of the original matrix."""
    holders = [[c, t] for c, t in zip(columns, tracked)]
    remaining = [h for h in holders if h[0]]
    zero_tracked = [h[1] for h in holders if not h[0]]
    for row in row_order:
        active = [h for h in remaining if row in h[0]]
        if not active:
            continue
        while len(active) > 1:
            active.sort(key=lambda h: h[0][row].degree)
            piv = active[0]
            for h in active[1:]:
                q = -(h[0][row] // piv[0][row])
                _axpy(h[0], q, piv[0])
                _axpy(h[1], q, piv[1])
            active = [h for h in active if row in h[0]]
        piv = active[0]
        remaining.remove(piv)
        zero_tracked.extend(h[1] for h in remaining if not h[0])
        remaining = [h for h in remaining if h[0]]
    zero_tracked.extend(h[1] for h in remaining if not h[0])
    return zero_tracked


def contraction_colon(ideal, witness: MultiPoly) -> UniPoly:
    """Monic generator of {g in k[t] : g * witness in ideal}, for a
    witness that is a single x-monomial.

    Column-reduces [e_w | generator columns] while tracking each column's
    coefficient on e_w; the columns that reduce to zero generate the
    kernel, and the gcd of their tracked coefficients generates the
    contraction ideal.
    """
    ring = ideal.ring
    ti = _single_t_index(ring)
    w1 = ring.weight1_indices()
    terms = witness.term_dict()
    if len(terms) != 1:
        raise InputError("contraction witness must be a single monomial")
    ((exps, c),) = terms.items()
    if exps[ti] != 0:
        raise InputError("contraction witness must not involve the t-variable")
    seed = tuple(exps[i] for i in w1)
    sl = DegreeSlice(ideal, sum(seed), [seed])
    p = ring.p
    columns = [{seed: UniPoly.const(p, c)}]
    tracked = [{None: UniPoly.one(p)}]
    for row, piv in sl._echelon_pivots:
        columns.append(dict(piv))
        tracked.append({})
    from .fpoly import uni_gcd

    gen = UniPoly.zero(p)
    for tr in _echelon_tracked(columns, tracked, sorted(sl.rows, reverse=True)):
        gen = uni_gcd(gen, tr.get(None, UniPoly.zero(p)))
    return gen.monic() if not gen.is_zero else gen
