"""Independent brute-force oracles used to cross-check the kernel.

Everything here is deliberately dumb: degree-bounded exact linear algebra
over Fraction, and lattice-point counting for semigroup rings.  No code is
shared with the library under test beyond the Polynomial container.
"""

from fractions import Fraction
from itertools import product

from limclose.polycore import Polynomial


def monomials_up_to(nvars, max_deg):
    """All exponent tuples of total degree <= max_deg, in a fixed order."""
    out = []
    for exps in product(range(max_deg + 1), repeat=nvars):
        if sum(exps) <= max_deg:
            out.append(exps)
    out.sort()
    return out


def solve_exact(rows, rhs):
    """Solve rows . c = rhs over Fraction; returns a solution list or None.

    rows is a list of equations (dense lists); free variables are set to 0.
    """
    m = [list(map(Fraction, r)) + [Fraction(v)] for r, v in zip(rows, rhs)]
    nrows = len(m)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = m[i][ncols]
    return sol


def rank_exact(vectors):
    """Rank of a list of Fraction vectors by one forward elimination."""
    rows = [list(map(Fraction, v)) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0),
                     None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def in_span(vectors, target):
    """Exact membership of target in the Fraction-span of vectors."""
    if not vectors:
        return all(v == 0 for v in target)
    rows = list(zip(*vectors))
    return solve_exact([list(r) for r in rows], list(target)) is not None


def _poly_vector(p, monos):
    index = {m: i for i, m in enumerate(monos)}
    vec = [Fraction(0)] * len(monos)
    for e, c in p.terms.items():
        if e not in index:
            return None   # degree overflow: caller chose the bound too small
        vec[index[e]] = Fraction(c)
    return vec


def member_oracle(f, gens, cof_deg):
    """Global membership by brute force: is f = sum h_i g_i solvable with
    deg h_i <= cof_deg?  Sound for 'yes'; a 'no' only rules out bounded
    cofactors."""
    if f.is_zero():
        return True
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    nvars = len(f.vars)
    shifts = monomials_up_to(nvars, cof_deg)
    row_deg = cof_deg + max(g.total_degree() for g in gens)
    row_deg = max(row_deg, f.total_degree())
    monos = monomials_up_to(nvars, row_deg)
    columns = []
    for g in gens:
        for s in shifts:
            columns.append(_poly_vector(g.term_mul(s, 1), monos))
    target = _poly_vector(f, monos)
    return in_span(columns, target)


def local_member_oracle(f, gens, trunc_deg):
    """Local membership at the origin via Krull truncation: f lies in the
    localized ideal iff f is in (gens) + m^N for every N.

    Membership in (gens) + m^N is exact linear algebra in the truncated
    polynomial ring.  Returns the verdict at N = trunc_deg: False is a
    certificate of local non-membership; True at a generous N is the
    membership verdict.
    """
    nvars = len(f.vars)
    monos = [m for m in monomials_up_to(nvars, trunc_deg - 1)]

    def truncate_vec(p):
        index = {m: i for i, m in enumerate(monos)}
        vec = [Fraction(0)] * len(monos)
        for e, c in p.terms.items():
            if sum(e) < trunc_deg:
                vec[index[e]] = Fraction(c)
        return vec

    columns = []
    shifts = monomials_up_to(nvars, trunc_deg - 1)
    for g in gens:
        if g.is_zero():
            continue
        for s in shifts:
            columns.append(truncate_vec(g.term_mul(s, 1)))
    return in_span(columns, truncate_vec(f))


# ---------------------------------------------------------------------------
# semigroup counting for monomial-curve / Veronese fixtures
# ---------------------------------------------------------------------------

def semigroup_elements(generators, bound):
    """All lattice points of the semigroup generated by `generators`
    (tuples), with every coordinate < bound.  Includes the origin."""
    gens = [tuple(g) for g in generators]
    seen = {tuple([0] * len(gens[0]))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(a + b for a, b in zip(p, g))
                if all(c < bound for c in q) and q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def quotient_count(ring_gens, ideal_shifts, bound):
    """Length of (semigroup ring)/(monomial ideal): count ring semigroup
    points not reachable as shift + ring point, coordinates < bound.

    ideal_shifts are the exponent vectors of the ideal generators.
    """
    ring_pts = semigroup_elements(ring_gens, bound)
    ideal_pts = set()
    for s in ideal_shifts:
        for p in ring_pts:
            q = tuple(a + b for a, b in zip(s, p))
            if all(c < bound for c in q):
                ideal_pts.add(q)
    return len([p for p in ring_pts if p not in ideal_pts])


def contracted_quotient_count(ring_gens, big_gens, ideal_shifts, bound):
    """Length of R/(I S cap R) for semigroup rings R inside S: count points
    of R's semigroup that are NOT of the form shift + (point of S's
    semigroup), coordinates < bound."""
    ring_pts = semigroup_elements(ring_gens, bound)
    big_pts = semigroup_elements(big_gens, bound)
    contracted = set()
    for s in ideal_shifts:
        for p in big_pts:
            q = tuple(a + b for a, b in zip(s, p))
            if all(c < bound for c in q) and q in ring_pts:
                contracted.add(q)
    return len([p for p in ring_pts if p not in contracted])
