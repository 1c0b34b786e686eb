"""Ideal-level algebra over the ambient polynomial ring: sum, product,
power, intersection, colon, saturation, elimination, contraction along
ring maps, Krull dimension, vector-space dimension of Artinian quotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .polycore import Polynomial, MonomialOrder, GREVLEX, VariableMismatch, \
    mono_divides
from .groebner import buchberger, reduce_basis, normal_form, ideal_member, \
    ideal_equal, GroebnerBasis


class AmbientMismatch(ValueError):
    pass


class NotZeroDimensional(ValueError):
    pass


@dataclass
class Ideal:
    vars: tuple
    gens: list
    _gb_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.vars = tuple(self.vars)
        self.gens = [g for g in self.gens if not g.is_zero()]
        for g in self.gens:
            if g.vars != self.vars:
                raise AmbientMismatch(f"{g.vars} vs {self.vars}")

    def groebner(self, order=GREVLEX, track=False):
        key = (order, track)
        if key not in self._gb_cache:
            self._gb_cache[key] = buchberger(self.gens, order, track=track)
        return self._gb_cache[key]

    def reduced_gens(self, order=GREVLEX):
        return self.groebner(order).generators

    def contains_poly(self, f, order=GREVLEX):
        gb = self.groebner(order)
        if not gb.generators:
            return f.is_zero()
        return normal_form(f, gb.generators, order).remainder.is_zero()

    def is_unit_ideal(self):
        gens = self.reduced_gens()
        return len(gens) == 1 and gens[0].is_constant() and not gens[0].is_zero()

    def is_zero_ideal(self):
        return not self.reduced_gens()

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def _check_same_ambient(I, J):
    if I.vars != J.vars:
        raise AmbientMismatch(f"{I.vars} vs {J.vars}")


def ideal_sum(I, J):
    _check_same_ambient(I, J)
    return Ideal(I.vars, I.gens + J.gens)


def ideal_product(I, J):
    _check_same_ambient(I, J)
    return Ideal(I.vars, [g * h for g in I.gens for h in J.gens])


def ideal_power(I, k):
    """I^k, one generator per degree-k multiset of the generators of I."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return Ideal(I.vars, list(I.gens))
    from itertools import combinations_with_replacement
    gens = []
    for combo in combinations_with_replacement(I.gens, k):
        p = combo[0]
        for g in combo[1:]:
            p = p * g
        gens.append(p)
    return Ideal(I.vars, gens)


def _fresh_tag_var(vars):
    name = "@t"
    while name in vars:
        name += "_"
    return name


def ideal_intersect(I, J):
    """I cap J via one tag variable t: eliminate t from t*I + (1-t)*J."""
    _check_same_ambient(I, J)
    if not I.gens or not J.gens:
        return Ideal(I.vars, [])
    t_name = _fresh_tag_var(I.vars)
    big_vars = (t_name,) + I.vars
    t = Polynomial.variable(t_name, big_vars)
    one_minus_t = Polynomial.constant(1, big_vars) - t
    gens = [t * g.extend_vars(big_vars) for g in I.gens]
    gens += [one_minus_t * h.extend_vars(big_vars) for h in J.gens]
    elim = eliminate(Ideal(big_vars, gens), [t_name])
    return Ideal(I.vars, [g.restrict_vars(I.vars) for g in elim.gens])


def poly_divide_exact(p, g, order=GREVLEX):
    """p / g when g | p; raises if the division leaves a remainder."""
    nf = normal_form(p, [g], order, track=True)
    if not nf.remainder.is_zero():
        raise ValueError("not exactly divisible")
    return nf.coefficients[0]


def ideal_colon(I, g):
    """I : g = (I cap (g)) / g."""
    if g.is_zero():
        raise ZeroDivisionError("colon by zero")
    if g.vars != I.vars:
        raise AmbientMismatch(f"{g.vars} vs {I.vars}")
    if g.is_constant():
        return Ideal(I.vars, list(I.gens))
    inter = ideal_intersect(I, Ideal(I.vars, [g]))
    return Ideal(I.vars, [poly_divide_exact(p, g) for p in inter.gens])


def ideal_colon_ideal(I, J):
    """I : J as the intersection of the colons by J's generators."""
    _check_same_ambient(I, J)
    if not J.gens:
        return Ideal(I.vars, [Polynomial.constant(1, I.vars)])
    out = None
    for g in J.gens:
        c = ideal_colon(I, g)
        out = c if out is None else ideal_intersect(out, c)
    return out


def ideals_equal(I, J, order=GREVLEX):
    _check_same_ambient(I, J)
    return ideal_equal(I.groebner(order), J.groebner(order))


def ideal_saturate(I, g):
    """Stabilized colon chain I : g^infinity; returns (ideal, exponent).

    The exponent is the first k with I : g^k = I : g^(k+1); for k = 0 the
    ideal is already saturated.
    """
    if g.is_zero():
        raise ZeroDivisionError("saturation by zero")
    current = I
    k = 0
    while True:
        nxt = ideal_colon(current, g)
        if ideals_equal(current, nxt):
            return current, k
        current = nxt
        k += 1


def eliminate(I, drop_names):
    """Generators of I cap K[remaining vars], via a block elimination order.

    The dropped variables are moved to the front of a fresh variable order.
    """
    drop_names = [n for n in drop_names]
    for n in drop_names:
        if n not in I.vars:
            raise VariableMismatch(f"unknown variable {n!r}")
    if not drop_names:
        return Ideal(I.vars, list(I.gens))
    keep = [v for v in I.vars if v not in drop_names]
    new_vars = tuple(drop_names) + tuple(keep)
    perm = tuple(new_vars.index(v) for v in I.vars)
    order = MonomialOrder.block(len(drop_names), perm=perm)
    gb = buchberger(I.gens, order)
    kept = [g for g in gb.generators if not g.involves(drop_names)]
    return Ideal(I.vars, kept)


@dataclass
class RingMapPresentation:
    """A ring map between two finitely presented rings.

    images[v] is the target polynomial the source variable v maps to.
    Construction verifies the map is well defined: images of the source
    defining ideal must land in the target defining ideal.
    """
    source_vars: tuple
    source_ideal: Ideal
    target_vars: tuple
    target_ideal: Ideal
    images: dict

    def __post_init__(self):
        self.source_vars = tuple(self.source_vars)
        self.target_vars = tuple(self.target_vars)
        for v in self.source_vars:
            if v not in self.images:
                raise ValueError(f"no image for source variable {v!r}")
        for g in self.source_ideal.gens:
            img = g.substitute(self.images)
            if not self.target_ideal.contains_poly(img):
                raise ValueError(
                    f"map not well defined: image of {g} not in target ideal")

    def apply(self, f):
        return f.substitute(self.images)


def contract(ring_map, ideal_in_target):
    """Preimage of an ideal along a ring map, via the graph ideal.

    Works in K[target vars + source vars] with the target presentation
    relations adjoined, so this is a ring-map preimage.
    """
    src = ring_map.source_vars
    tgt = ring_map.target_vars
    clash = set(src) & set(tgt)
    ren = {v: (f"{v}__src" if v in clash else v) for v in src}
    big_vars = tuple(tgt) + tuple(ren[v] for v in src)

    gens = [g.extend_vars(big_vars) for g in ring_map.target_ideal.gens]
    gens += [g.extend_vars(big_vars) for g in ideal_in_target.gens]
    for v in src:
        sv = Polynomial.variable(ren[v], big_vars)
        gens.append(sv - ring_map.images[v].extend_vars(big_vars))
    elim = eliminate(Ideal(big_vars, gens), list(tgt))
    sub_vars = tuple(ren[v] for v in src)
    out = []
    for g in elim.gens:
        h = g.restrict_vars(sub_vars)
        out.append(Polynomial(src, h.terms))
    return Ideal(src, out)


def krull_dim(I, order=GREVLEX):
    """dim K[vars]/I as the maximal cardinality of a variable subset
    independent modulo the lead-term ideal of I."""
    if I.is_unit_ideal():
        raise ValueError("unit ideal has no dimension")
    gb = I.groebner(order)
    leads = [m for m in gb.leads() if any(m)]
    n = len(I.vars)
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if not any(_supported_in(m, sset) for m in leads):
                return size
    raise AssertionError("unreachable")


def _supported_in(m, sset):
    return all(e == 0 or i in sset for i, e in enumerate(m))


def standard_monomials(I, order=GREVLEX, leads=None):
    """Monomials outside the lead-term ideal; raises unless the quotient is
    a finite-dimensional vector space."""
    if leads is None:
        leads = I.groebner(order).leads()
        nvars = len(I.vars)
    else:
        nvars = len(I.vars)
    caps = [None] * nvars
    for m in leads:
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            i = nz[0]
            if caps[i] is None or m[i] < caps[i]:
                caps[i] = m[i]
    if any(c is None for c in caps):
        if leads and all(e == 0 for e in leads[0]):
            return []  # unit ideal
        raise NotZeroDimensional("lead ideal lacks a pure power of some variable")
    out = []
    mono = [0] * nvars

    def rec(i):
        if i == nvars:
            t = tuple(mono)
            if not any(mono_divides(m, t) for m in leads):
                out.append(t)
            return
        for e in range(caps[i]):
            mono[i] = e
            rec(i + 1)
        mono[i] = 0

    rec(0)
    return out


def vecspace_dim(I, order=GREVLEX):
    """Number of standard monomials of a zero-dimensional ideal."""
    return len(standard_monomials(I, order))
