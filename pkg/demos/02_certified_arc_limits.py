"""Certified limits of the regularity ratios along monomial arcs.

A monomial arc x = sigma u^p, z = lambda u^q (with y solved from the surface
equation as a Puiseux series) pulls each regularity ratio back to a
one-variable quantity whose order of vanishing is certified exactly:
positive order means the ratio tends to 0, order zero with a nonzero
leading coefficient means a finite nonzero limit, negative order means
blow-up.

Run:  python demos/02_certified_arc_limits.py
"""

from fractions import Fraction as Fr

from stratreg import (MonomialArc, QuantityId, SurfaceParams, limit_along_arc,
                      substitute, surface_residual)


def main():
    p = SurfaceParams(2, 4, 1, 3)
    arc = MonomialArc(3, 1, 1, Fr(1))

    print(f"Surface y^2 = z^4 x + x^3, arc x = u^3, z = u.")
    x, y, z = substitute(p, arc)
    print(f"  y(u) = {y}")
    res = surface_residual(p, arc)
    print(f"  residual y^a - z^b x^c - x^d: {res}  (certified zero to O(u^{res.trunc}))")

    print("\nThe Kuo-Verdier ratio along three arcs of this surface:")
    for pq in [(1, 1), (2, 1), (3, 1)]:
        b = limit_along_arc(p, QuantityId.W, MonomialArc(pq[0], pq[1], 1, Fr(1)))
        lead = f", leading ~ {float(b.leading.mid):.4f}" if b.leading else ""
        print(f"  x = u^{pq[0]}, z = u^{pq[1]}:  {b.klass.value:16s} "
              f"order {b.order_str()}{lead}")
    print("The third arc certifies a (w)-fault: the ratio grows like u^(-1/2).")

    print("\nA secant-ratio limit with an exact closed-form value:")
    q = SurfaceParams(2, 2, 1, 3)
    b = limit_along_arc(q, QuantityId.BPI, MonomialArc(2, 1, 1, Fr(1)))
    print(f"  y^2 = z^2 x + x^3 along x = u^2, z = u: limit "
          f"{float(b.leading.mid):.10f} (= 1/sqrt(10); nonzero, so (b) fails)")

    print("\nPair quantities for the Lipschitz conditions run over a base arc")
    print("plus a multiplicatively perturbed copy x' = x (1 + delta u^e):")
    from stratreg import ArcPair
    pair = ArcPair(MonomialArc(2, 1, 1, Fr(1)), Fr(1), Fr(1))
    s = SurfaceParams(2, 2, 2, 6)
    for qid in (QuantityId.L2, QuantityId.L3):
        b = limit_along_arc(s, qid, pair)
        print(f"  {qid.value} on y^2 = z^2 x^2 + x^6: {b.klass.value} "
              f"order {b.order_str()}")


if __name__ == "__main__":
    main()
