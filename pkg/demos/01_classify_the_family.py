"""Tour of the diagram classifier.

The surfaces y^a = z^b x^c + x^d, stratified by (V - Oz, Oz), are classified
for Whitney (a), Whitney (b), Kuo-Verdier (w) and Mostowski (L) regularity
over R and C by eight printed decision trees.  This script walks a few
landmark parameter tuples through them.

Run:  python demos/01_classify_the_family.py
"""

from stratreg import Condition, Field, SurfaceParams, classify, profile

HISTORIC = [(3, 2, 3, 5), (4, 2, 5, 7), (4, 4, 1, 3)]


def show_profile(tup):
    p = SurfaceParams(*tup)
    prof = profile(p)
    print(f"\n{p}:")
    for field in (Field.REAL, Field.COMPLEX):
        row = "  ".join(f"({c.value}) {prof.verdict(field, c).value:9s}"
                        for c in Condition)
        print(f"  {field.value:8s} {row}")


def main():
    print("The three historically known real-algebraic examples where")
    print("Whitney (b) holds but Kuo-Verdier (w) fails:")
    for tup in HISTORIC:
        show_profile(tup)

    print("\nEvery verdict carries the path taken through the printed tree:")
    _, trace = classify(SurfaceParams(3, 2, 3, 5), Field.REAL,
                        Condition.KUO_VERDIER_W)
    print(f"  {trace}")

    print("\nA genuinely undecided Lipschitz case (a '?' leaf of the")
    print("two-page (L)-tree):")
    verdict, trace = classify(SurfaceParams(3, 2, 5, 7), Field.REAL,
                              Condition.MOSTOWSKI_L)
    print(f"  verdict: {verdict.value}")
    print(f"  {trace}")

    print("\nOver C the (b), (w), (L) verdicts always coincide, and a = 1 or")
    print("d <= c trivializes everything:")
    show_profile((1, 9, 4, 100))
    show_profile((5, 3, 7, 2))


if __name__ == "__main__":
    main()
