"""Fault search and the adjudication of a printed-diagram boundary defect.

The printed Kuo-Verdier tree declares (w) to hold whenever
a(d-c) <= b|d-a| (inside the parity guards).  Direct verification shows the
"<=" leaf cannot be trusted outside the region where Whitney (b) holds:
the tuple (2,4,1,3) sits exactly on the equality boundary, is classified
Holds, and yet carries a certified blow-up of order -1/2.  The harness
flags every such tuple instead of silently editing the diagram.

Run:  python demos/03_fault_search_and_boundary.py
"""

from stratreg import (Condition, Field, GridSpec, QuantityId, SearchBudget,
                      SurfaceParams, boundary_flagged, classify, find_fault,
                      sample_grid)


def adjudicate(tup):
    p = SurfaceParams(*tup)
    verdict, _ = classify(p, Field.REAL, Condition.KUO_VERDIER_W)
    flagged = boundary_flagged(p)
    result = find_fault(p, Field.REAL, Condition.KUO_VERDIER_W,
                        SearchBudget(max_height=24, per_tuple_seconds=2.0))
    found = not hasattr(result, "stopped")
    print(f"\n{p}: printed verdict = {verdict.value}"
          f"{' [flagged boundary]' if flagged else ''}")
    if found:
        j = result.to_json()
        print(f"  witness: arc {j['arc']} -> {j['class']} of order {j['order']}")
        status = "DISCREPANCY" if verdict.value == "holds" else "consistent"
        print(f"  adjudication: {status}")
    else:
        print(f"  no witness at budget ({result.stopped}): evidence the "
              f"printed verdict stands")


def main():
    print("Three tuples on or near the a(d-c) = b|d-a| equality boundary:")
    adjudicate((2, 4, 1, 3))   # equality, d > a: the printed leaf is wrong
    adjudicate((6, 4, 1, 3))   # equality, d < a: survives verification
    adjudicate((2, 2, 2, 6))   # equality, d >= 2a: survives verification

    print("\nIndependent floating cross-check at (2,4,1,3): suprema of the")
    print("two-sup ratio over shrinking dyadic shells:")
    rep = sample_grid(SurfaceParams(2, 4, 1, 3), QuantityId.W,
                      GridSpec(k_min=6, k_max=22, k_step=4))
    for k, v in rep.shell_maxima:
        print(f"  shell 2^-{k:2d}: max = {v:10.3f}")
    print(f"  fitted growth exponent: {rep.fitted_exponent:.2f} "
          f"(negative = blow-up)")

    print("\nAnd one strict-inequality defect: (2,6,1,3) has 4 < 6, the")
    print("printed tree says Holds, but Whitney (b) fails there and so must (w):")
    adjudicate((2, 6, 1, 3))


if __name__ == "__main__":
    main()
