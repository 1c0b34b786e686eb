"""Limit closures: stabilization of the colon chain, mixed-power closures,
and the monomial-property test.

The closure of x_1, ..., x_r is the increasing union over n of
(x_1^{n+1}, ..., x_r^{n+1}) : (x_1 ... x_r)^n, taken in the local ring.
Stabilization is detected by a window of consecutive locally-equal chain
terms; Noetherianity guarantees termination but gives no bound, so the
window is a heuristic and callers cross-check stable values independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .idealops import Ideal, ideal_colon


def colon_by_product(I, factors):
    """I : (f_1 ... f_k) as a chain of single colons: I : (gh) = (I:g):h.

    Much cheaper than coloning by the expanded product when the factors are
    simple (variable powers, single parameters)."""
    out = I
    for f in factors:
        if f.is_constant():
            continue
        out = ideal_colon(out, f)
    return out
from .localring import (
    LocalRingContext, SequenceInR, local_equal, local_contains, local_member,
    is_sop, NotStabilized,
)


DEFAULT_N_MAX = 12


@dataclass
class LimitClosureResult:
    closure: Ideal            # ambient representative, defining ideal adjoined
    stabilization_index: int  # first n with chain[n] == chain[n+1] == ...
    chain: list               # chain[k] is the colon at step k+1
    sequence: SequenceInR
    is_proper: bool           # closure != R locally


@dataclass
class MixedClosureSpec:
    head: SequenceInR
    head_power: int
    tail: SequenceInR
    tail_power: int

    def __post_init__(self):
        if len(self.head) < 1:
            raise ValueError("head must be non-empty")
        if self.head_power < 1 or self.tail_power < 1:
            raise ValueError("powers must be >= 1")
        if self.tail.entries and self.tail.ctx is not self.head.ctx:
            if self.tail.ctx.vars != self.head.ctx.vars:
                raise ValueError("head and tail live in different rings")


def colon_step(seq, n):
    """One term of the union: ((x^[n+1]) + J) : (x_1...x_r)^n, ambient.

    For a sequence known to be y = x^[m], the cofinal direct system over the
    base sequence is used instead: (y^[n+1]) : (y_1...y_r)^n is replaced by
    ((x^[m+n]) + J) : (x_1...x_r)^n, which has the same union (both compute
    the kernel of R/(y) -> H^r, the systems being linked by multiplication
    by powers of x_1...x_r) and much smaller exponents.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = seq.ctx
    if any(e.is_zero() for e in seq.entries):
        # a zero entry: the colon by 0^n is the whole ring
        return Ideal(ctx.vars, [ctx.one()])
    if seq.base is not None and seq.exponent > 1:
        base, m = seq.base, seq.exponent
        powered = ctx.adjoin(Ideal(ctx.vars,
                                   [e ** (m + n) for e in base.entries]))
        return colon_by_product(powered,
                                [e for e in base.entries for _ in range(n)])
    powered = ctx.adjoin(seq.powers(n + 1).ideal())
    return colon_by_product(powered, [e ** n for e in seq.entries])


def limit_closure(seq, n_max=DEFAULT_N_MAX, window=2):
    """Iterate colon_step until `window` consecutive chain terms are locally
    equal; raises NotStabilized (carrying the partial chain) otherwise."""
    ctx = seq.ctx
    chain = []
    stable_at = None
    for n in range(1, n_max + 1):
        chain.append(colon_step(seq, n))
        if len(chain) >= window:
            if all(local_equal(chain[-1], chain[-k - 1], ctx)
                   for k in range(1, window)):
                stable_at = n - window + 1
                break
    if stable_at is None:
        err = NotStabilized(
            f"colon chain did not stabilize within n_max={n_max}")
        err.partial_chain = chain
        raise err
    closure = chain[stable_at - 1]
    proper = not local_member(ctx.one(), closure, ctx)
    return LimitClosureResult(
        closure=closure,
        stabilization_index=stable_at,
        chain=chain,
        sequence=seq,
        is_proper=proper,
    )


def mixed_colon_step(spec, k):
    """One term of the mixed union:
    ((head^[n(k+1)], tail^[m]) + J) : (head product)^{nk}."""
    ctx = spec.head.ctx
    n, m = spec.head_power, spec.tail_power
    gens = [e ** (n * (k + 1)) for e in spec.head.entries]
    gens += [e ** m for e in spec.tail.entries]
    powered = ctx.adjoin(Ideal(ctx.vars, gens))
    if any(e.is_zero() for e in spec.head.entries):
        return Ideal(ctx.vars, [ctx.one()])
    return colon_by_product(powered, [e ** (n * k) for e in spec.head.entries])


def limit_closure_mixed(spec, n_max=DEFAULT_N_MAX, window=2):
    """Stabilized union over k of the mixed colon chain; a degenerate spec
    with empty tail is the plain limit closure of the powered head."""
    ctx = spec.head.ctx
    if not spec.tail.entries:
        return limit_closure(spec.head.powers(spec.head_power),
                             n_max=n_max, window=window).closure
    chain = []
    for k in range(1, n_max + 1):
        chain.append(mixed_colon_step(spec, k))
        if len(chain) >= window:
            if all(local_equal(chain[-1], chain[-j - 1], ctx)
                   for j in range(1, window)):
                return chain[-1]
    err = NotStabilized(
        f"mixed colon chain did not stabilize within n_max={n_max}")
    err.partial_chain = chain
    raise err


def monomial_property(seq, n_max=DEFAULT_N_MAX):
    """True iff the closure of the sop is proper, i.e. 1 not in (x)^lim."""
    if not is_sop(seq):
        raise ValueError("sequence is not a system of parameters")
    return limit_closure(seq, n_max=n_max).is_proper
