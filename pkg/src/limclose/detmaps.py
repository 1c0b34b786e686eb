"""Determinantal maps between quotients by limit closures: recover the
coefficient matrix expressing one parameter sequence in terms of another,
take its determinant exactly, test injectivity of the multiplication map
det(A) : R/(x)^lim -> R/(y)^lim, and run the sop-equivalence harness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polycore import Polynomial
from .groebner import ideal_member
from .idealops import Ideal, poly_divide_exact
from .localring import (
    SequenceInR, local_member, local_contains, is_local_unit_ideal, is_sop,
    contained_in_m_power,
)
from .limitclosure import limit_closure, DEFAULT_N_MAX


@dataclass
class DetMapProblem:
    """y = A.x modulo the defining ideal, with the determinant attached.

    Construction verifies both the expression (each y_i - sum A_ij x_j lies
    in the defining ideal) and the Cramer containment det(A)*(x) inside
    (y) + J.
    """
    x: SequenceInR
    y: SequenceInR
    matrix: list           # rows of Polynomial
    det: Polynomial = None

    def __post_init__(self):
        ctx = self.x.ctx
        if self.y.ctx is not ctx and self.y.ctx.vars != ctx.vars:
            raise ValueError("sequences live in different rings")
        r = len(self.x)
        if len(self.y) != r or len(self.matrix) != r \
                or any(len(row) != r for row in self.matrix):
            raise ValueError("matrix must be square of size len(x)")
        J = ctx.defining
        for yi, row in zip(self.y.entries, self.matrix):
            diff = yi
            for a, xj in zip(row, self.x.entries):
                diff = diff - a * xj
            if not (diff.is_zero() or J.contains_poly(diff)):
                raise ValueError(f"row does not express its entry: {diff}")
        if self.det is None:
            self.det = determinant(self.matrix, ctx.vars)
        K = ctx.adjoin(self.y.ideal())
        for xj in self.x.entries:
            p = self.det * xj
            if not (p.is_zero() or K.contains_poly(p)):
                raise ValueError("Cramer containment det(A)*(x) in (y)+J fails")


def determinant(matrix, vars):
    """Exact determinant of a square matrix of polynomials: cofactor
    expansion for size <= 4, fraction-free (Bareiss) elimination above."""
    n = len(matrix)
    if n == 0:
        return Polynomial.constant(1, vars)
    if n <= 4:
        return _det_cofactor(matrix, vars)
    return _det_bareiss([list(row) for row in matrix], vars)


def _det_cofactor(matrix, vars):
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    acc = Polynomial.zero(vars)
    for j, a in enumerate(matrix[0]):
        if a.is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in matrix[1:]]
        term = a * _det_cofactor(minor, vars)
        acc = acc - term if j % 2 else acc + term
    return acc


def _det_bareiss(m, vars):
    n = len(m)
    sign = 1
    prev = Polynomial.constant(1, vars)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(vars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = poly_divide_exact(num, prev) if not prev.is_constant() \
                    else num * _inv_const(prev)
            m[i][k] = Polynomial.zero(vars)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def _inv_const(p):
    from fractions import Fraction
    return Fraction(1) / Fraction(p.constant_term)


def express_in_terms(y, x):
    """Recover a matrix A with y = A.x mod J from tracked membership
    cofactors in (x) + J; cofactors on the defining generators are
    discarded (they vanish in R)."""
    ctx = x.ctx
    gens = list(x.entries) + list(ctx.defining.gens)
    K = Ideal(ctx.vars, gens)
    gb = K.groebner(track=True)
    rows = []
    for yi in y.entries:
        ok, cert = ideal_member(yi, gb)
        if not ok:
            raise ValueError(f"{yi} is not in (x) + J")
        rows.append(list(cert.coefficients[:len(x)]))
    return DetMapProblem(x=x, y=y, matrix=rows)


def detmap_injective(problem, n_max=DEFAULT_N_MAX):
    """Injectivity of det(A) : R/(x)^lim -> R/(y)^lim.

    The kernel is ((y)^lim : det)/(x)^lim, so the map is injective iff the
    colon is locally inside (x)^lim.  A determinant that vanishes in R gives
    the zero map, injective only from the zero module.
    """
    ctx = problem.x.ctx
    clo_x = limit_closure(problem.x, n_max=n_max).closure
    clo_y = limit_closure(problem.y, n_max=n_max).closure
    if local_member(problem.det, ctx.zero_ideal(), ctx):
        return is_local_unit_ideal(clo_x, ctx)
    from .idealops import ideal_colon
    kernel = ideal_colon(ctx.adjoin(clo_y), problem.det)
    return local_contains(kernel, clo_x, ctx)


@dataclass
class TheoremCReport:
    problem: DetMapProblem
    y_is_sop: bool
    injective: bool
    agree: bool
    ell: int
    x_deep_enough: bool    # (x) inside m^ell
    warnings: list = field(default_factory=list)


def theoremC_check(x, y, ell=1, equidimensional=False, n_max=DEFAULT_N_MAX):
    """Compare the two verdicts the sop-equivalence theorem ties together:
    is y a sop, and is the determinantal map injective.

    Disagreement with small ell is data, not an error: the equivalence is
    only guaranteed for parameters deep enough in m (the required depth is
    not effective).  Equidimensionality of the ring is a user-asserted
    hypothesis, recorded in the report when absent.
    """
    ctx = x.ctx
    if not is_sop(x):
        raise ValueError("x is not a system of parameters")
    problem = express_in_terms(y, x)
    verdict_sop = is_sop(y)
    verdict_inj = detmap_injective(problem, n_max=n_max)
    warnings = []
    if not equidimensional:
        warnings.append("equidimensionality not asserted")
    deep = contained_in_m_power(x.ideal(), ell, ctx)
    if not deep:
        warnings.append(f"(x) not contained in m^{ell}")
    return TheoremCReport(
        problem=problem,
        y_is_sop=verdict_sop,
        injective=verdict_inj,
        agree=verdict_sop == verdict_inj,
        ell=ell,
        x_deep_enough=deep,
        warnings=warnings,
    )
