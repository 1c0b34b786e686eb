"""Closure contraction along a finite extension, on the pinched 4-Veronese.

R = Q[x^4, x^3y, xy^3, y^4] sits inside the full 4-Veronese
S = Q[x^4, x^3y, x^2y^2, xy^3, y^4] (its S2-ification, Cohen-Macaulay).
For the sop (a, d) = (x^4, y^4) of R the limit closure contracts from the
extension: (a,d)^lim = (a,d)S cap R.  The script prints the three lengths
l(R/(a,d)) = 5, l(R/(a,d)^lim) = 3, l(closure/(a,d)) = 2 and confirms the
first two by counting lattice points in the underlying semigroups.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from limclose.polycore import Polynomial
from limclose.idealops import Ideal, RingMapPresentation, contract
from limclose.localring import LocalRingContext, SequenceInR
from limclose.structure import cyclic_cover_closure_check

from oracles import quotient_count, contracted_quotient_count


def toric(src_names, exponents):
    tgt = ("x", "y")
    x, y = (Polynomial.variable(n, tgt) for n in tgt)
    images = {name: x ** a * y ** b
              for name, (a, b) in zip(src_names, exponents)}
    free = RingMapPresentation(
        source_vars=tuple(src_names), source_ideal=Ideal(tuple(src_names), []),
        target_vars=tgt, target_ideal=Ideal(tgt, []), images=images)
    return contract(free, Ideal(tgt, []))


def main():
    R_exps = [(4, 0), (3, 1), (1, 3), (0, 4)]
    S_exps = [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]
    VR = ("a", "b", "c", "d")
    VS = ("p0", "p1", "p2", "p3", "p4")
    ctxR = LocalRingContext(VR, toric(VR, R_exps))
    ctxS = LocalRingContext(VS, toric(VS, S_exps))
    inclusion = RingMapPresentation(
        source_vars=VR, source_ideal=ctxR.defining,
        target_vars=VS, target_ideal=ctxS.defining,
        images={"a": Polynomial.variable("p0", VS),
                "b": Polynomial.variable("p1", VS),
                "c": Polynomial.variable("p3", VS),
                "d": Polynomial.variable("p4", VS)})
    sop = SequenceInR([Polynomial.variable("a", VR),
                       Polynomial.variable("d", VR)], ctxR)

    bound, shifts = 40, [(4, 0), (0, 4)]
    print("semigroup oracle: l(R/(a,d)) =",
          quotient_count(R_exps, shifts, bound))
    print("semigroup oracle: l(R/((a,d)S cap R)) =",
          contracted_quotient_count(R_exps, S_exps, shifts, bound))

    rep = cyclic_cover_closure_check(inclusion, sop)
    print("closure equals contraction:", rep.equal)
    print("l(R/(a,d))        =", rep.length_mod_ideal)
    print("l(R/(a,d)^lim)    =", rep.length_mod_closure)
    print("l((a,d)^lim/(a,d)) =", rep.closure_excess)
    return 0


if __name__ == "__main__":
    sys.exit(main())
