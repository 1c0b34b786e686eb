"""Exact sparse multivariate polynomials, monomial orders, Catalan utilities.

Coefficients are exact rationals (python ints, promoted to Fraction on
division).  Monomials are plain exponent tuples, one slot per ring variable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class VariableMismatch(ValueError):
    """Operands live over different variable sets."""


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)
# ---------------------------------------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if a | b, i.e. a[i] <= b[i] for all i."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MonomialOrder:
    """Total, multiplicative well-order on exponent tuples.

    kind is one of 'lex', 'grevlex', 'block'.  A block order compares the
    first `elim` variables by grevlex, then the rest by grevlex; it
    eliminates the leading block.  `perm` optionally permutes variables
    before comparison (perm[i] = position of variable i in the comparison
    tuple).
    """

    __slots__ = ("kind", "elim", "perm")

    def __init__(self, kind, elim=0, perm=None):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown order kind {kind!r}")
        if kind == "block" and elim < 1:
            raise ValueError("block order needs at least one eliminated variable")
        self.kind = kind
        self.elim = elim
        self.perm = tuple(perm) if perm is not None else None

    @classmethod
    def lex(cls, perm=None):
        return cls("lex", perm=perm)

    @classmethod
    def grevlex(cls, perm=None):
        return cls("grevlex", perm=perm)

    @classmethod
    def block(cls, elim, perm=None):
        return cls("block", elim=elim, perm=perm)

    @property
    def degree_compatible(self):
        return self.kind == "grevlex"

    def _apply_perm(self, exps):
        if self.perm is None:
            return exps
        out = [0] * len(exps)
        for i, p in enumerate(self.perm):
            out[p] = exps[i]
        return tuple(out)

    @staticmethod
    def _grevlex_key(exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def key(self, exps):
        """Sort key; ascending key order is ascending monomial order."""
        exps = self._apply_perm(exps)
        if self.kind == "lex":
            return exps
        if self.kind == "grevlex":
            return self._grevlex_key(exps)
        head, tail = exps[: self.elim], exps[self.elim:]
        return (self._grevlex_key(head), self._grevlex_key(tail))

    def negkey(self, exps):
        """Key reversing the order: min-heaps keyed by negkey pop the
        leading monomial first.  Valid because keys of monomials over a
        fixed ring share their tuple shape, so componentwise negation
        reverses the lexicographic comparison."""
        return _neg_key(self.key(exps))

    def eliminates(self, nvars_dropped):
        """True if leading monomials free of the first `nvars_dropped`
        variables certify membership in the subring without them."""
        if self.kind == "lex" and self.perm is None:
            return True
        return self.kind == "block" and self.elim >= nvars_dropped and self.perm is None

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and (self.kind, self.elim, self.perm) == (other.kind, other.elim, other.perm))

    def __hash__(self):
        return hash((self.kind, self.elim, self.perm))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder.block({self.elim})"
        return f"MonomialOrder.{self.kind}()"


def _neg_key(k):
    if isinstance(k, tuple):
        return tuple(_neg_key(x) for x in k)
    return -k


GREVLEX = MonomialOrder.grevlex()
LEX = MonomialOrder.lex()


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    """Sparse polynomial over Q: dict from exponent tuple to coefficient.

    Zero coefficients are never stored; the zero polynomial has an empty
    term dict.  Instances are immutable by convention.
    """

    __slots__ = ("vars", "terms", "_lead_cache")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        clean = {}
        for exps, c in terms.items():
            if c:
                clean[tuple(exps)] = _normalize_coeff(c)
        self.terms = clean
        self._lead_cache = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def constant(cls, c, vars):
        vars = tuple(vars)
        if not c:
            return cls.zero(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, name, vars):
        vars = tuple(vars)
        i = vars.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(vars, {exps: 1})

    @classmethod
    def monomial(cls, exps, vars, coeff=1):
        return cls(vars, {tuple(exps): coeff})

    # -- predicates / accessors ---------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(mono_degree(e) == 0 for e in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    @property
    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def total_degree(self):
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(mono_degree(e) for e in self.terms)

    def degree_in(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def lead(self, order):
        """(exponents, coefficient) of the leading term under `order`."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        cache = self._lead_cache
        if cache is None:
            cache = self._lead_cache = {}
        m = cache.get(order)
        if m is None:
            m = cache[order] = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars:
            raise VariableMismatch(f"{self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, Rational):
            other = Polynomial.constant(other, self.vars)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = Polynomial.constant(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return Polynomial.zero(self.vars)
            return Polynomial(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        terms = {}
        for e2, c2 in small.items():
            for e1, c1 in big.items():
                e = mono_mul(e1, e2)
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def scale(self, c):
        return self * c

    def term_mul(self, exps, coeff):
        """Multiply by a single term (fast path used by division)."""
        return Polynomial(self.vars, {mono_mul(e, exps): c * coeff
                                      for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Rational):
            return self.terms == Polynomial.constant(other, self.vars).terms
        return isinstance(other, Polynomial) and self.vars == other.vars \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- normalization -------------------------------------------------------

    def monic(self, order):
        if not self.terms:
            return self
        _, c = self.lead(order)
        if c == 1:
            return self
        inv = Fraction(1, 1) / Fraction(c)
        return self * inv

    def primitive(self):
        """Integer-primitive scalar multiple with positive leading content.

        Clears denominators and divides by the integer content; keeps GB
        internals in integer arithmetic.
        """
        if not self.terms:
            return self
        from math import gcd, lcm
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c * den))
        return Polynomial(self.vars, {e: int(c * den) // g for e, c in self.terms.items()})

    # -- structural helpers ---------------------------------------------------

    def extend_vars(self, new_vars):
        """Re-express over a superset of variables (order of shared names kept)."""
        new_vars = tuple(new_vars)
        idx = [new_vars.index(v) for v in self.vars]
        n = len(new_vars)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for j, exp in zip(idx, e):
                ne[j] = exp
            terms[tuple(ne)] = c
        return Polynomial(new_vars, terms)

    def restrict_vars(self, sub_vars):
        """Project onto a variable subset; fails if any term involves a
        dropped variable."""
        sub_vars = tuple(sub_vars)
        drop = [i for i, v in enumerate(self.vars) if v not in sub_vars]
        idx = [self.vars.index(v) for v in sub_vars]
        terms = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise VariableMismatch(f"term uses dropped variable: {e}")
            terms[tuple(e[i] for i in idx)] = c
        return Polynomial(sub_vars, terms)

    def involves(self, names):
        """True if any term has positive exponent in one of `names`."""
        idx = [self.vars.index(v) for v in names]
        return any(any(e[i] for i in idx) for e in self.terms)

    def substitute(self, images):
        """Map each variable to a polynomial; all images over a common ring."""
        target = None
        for v in self.vars:
            if v not in images:
                raise VariableMismatch(f"no image for variable {v}")
            target = images[v].vars
        out = Polynomial.zero(target)
        for e, c in self.terms.items():
            term = Polynomial.constant(c, target)
            for i, exp in enumerate(e):
                if exp:
                    term = term * images[self.vars[i]] ** exp
            out = out + term
        return out

    # -- rendering -------------------------------------------------------------

    def __str__(self):
        return self.to_str(GREVLEX)

    def to_str(self, order):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e) if k
            )
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
            if parts and not body.startswith("-"):
                parts.append(f" + {body}")
            elif parts:
                parts.append(f" - {body[1:]}")
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def mod_monomial_power(p, names, n):
    """Reduce modulo the ideal of pure n-th powers of the listed variables:
    drop every term whose exponent in some listed variable is >= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = []
    for name in names:
        if name not in p.vars:
            raise VariableMismatch(f"unknown variable {name!r}")
        idx.append(p.vars.index(name))
    terms = {e: c for e, c in p.terms.items() if all(e[i] < n for i in idx)}
    return Polynomial(p.vars, terms)


# ---------------------------------------------------------------------------
# Catalan numbers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _catalan_tuple(k):
    if k == 0:
        return (1,)
    prev = _catalan_tuple(k - 1)
    n = k - 1
    return prev + (sum(prev[i] * prev[n - i] for i in range(n + 1)),)


def catalan(k):
    """C_0 .. C_k via the convolution recurrence."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return list(_catalan_tuple(k))


def catalan_truncated_generating_poly(u, v, k, vars):
    """Sum_{i=0..k} C_i (u*v)^i as a polynomial in the given ring."""
    if u == v:
        raise ValueError("need two distinct variables")
    cs = catalan(k)
    iu, iv = vars.index(u), vars.index(v)
    terms = {}
    for i, c in enumerate(cs):
        e = [0] * len(vars)
        e[iu] = i
        e[iv] = i
        terms[tuple(e)] = c
    return Polynomial(vars, terms)
