"""Decision-tree transcription of the eight classification diagrams.

Each diagram is frozen as a data table: an ordered case list whose guards
are evaluated in the diagram's own printed order with exact integer
arithmetic (thresholds like d < ac/(a-b) are cross-multiplied).  The
classifier reproduces the printed leaves verbatim, including leaves whose
printed verdict is contested by direct verification; adjudication of those
is the harness's job, not the transcription's.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence, Union

from .model import (AnnotatedVerdict, Condition, Field, RegularityProfile,
                    SurfaceParams, Verdict, CONDITIONS, FIELDS)

Guard = Callable[[SurfaceParams], bool]


@dataclass(frozen=True)
class Leaf:
    verdict: Verdict


@dataclass(frozen=True)
class Case:
    branches: tuple[tuple[str, Guard, Union["Case", Leaf]], ...]


def _case(*branches: tuple[str, Guard, Union[Case, Leaf]]) -> Case:
    return Case(tuple(branches))


H, F, U = Leaf(Verdict.HOLDS), Leaf(Verdict.FAILS), Leaf(Verdict.UNDECIDED)


def _below_threshold(p: SurfaceParams) -> bool:
    # d < a*c/(a-b), evaluated as d*(a-b) < a*c; callers guarantee a > b
    return p.d * (p.a - p.b) < p.a * p.c


# Diagram 1: Whitney (a), complex
DIAGRAM_A_COMPLEX = _case(
    ("a = 1", lambda p: p.a == 1, H),
    ("a > 1", lambda p: True, _case(
        ("d <= c", lambda p: p.d <= p.c, H),
        ("d > c", lambda p: True, _case(
            ("d >= b+c", lambda p: p.d >= p.b + p.c, F),
            ("d < b+c", lambda p: True, _case(
                ("a <= b", lambda p: p.a <= p.b, H),
                ("a > b", lambda p: True, _case(
                    ("d < ac/(a-b)", _below_threshold, H),
                    ("d >= ac/(a-b)", lambda p: True, F),
                )),
            )),
        )),
    )),
)

# Diagram 2: Whitney (a), real
DIAGRAM_A_REAL = _case(
    ("a = 1", lambda p: p.a == 1, H),
    ("a > 1", lambda p: True, _case(
        ("d <= c", lambda p: p.d <= p.c, H),
        ("c < d < b+c", lambda p: p.d < p.b + p.c, _case(
            ("a <= b", lambda p: p.a <= p.b, H),
            ("b < a", lambda p: True, _case(
                ("d < ac/(a-b)", _below_threshold, H),
                ("d >= ac/(a-b)", lambda p: True, _case(
                    ("b even", lambda p: p.b % 2 == 0, _case(
                        ("d = c (mod 2)", lambda p: (p.d - p.c) % 2 == 0, H),
                        ("d = c+1 (mod 2)", lambda p: True, F),
                    )),
                    ("b odd", lambda p: True, F),
                )),
            )),
        )),
        ("b+c <= d", lambda p: True, _case(
            ("b odd", lambda p: p.b % 2 == 1, F),
            ("b even", lambda p: True, _case(
                ("d = c+1 (mod 2)", lambda p: (p.d - p.c) % 2 == 1, F),
                ("d = c (mod 2)", lambda p: True, _case(
                    ("a <= b", lambda p: p.a <= p.b, H),
                    ("b < a < b+c", lambda p: p.a < p.b + p.c, _case(
                        ("d < ac/(a-b)", _below_threshold, H),
                        ("d >= ac/(a-b)", lambda p: True, F),
                    )),
                    ("b+c <= a", lambda p: True, F),
                )),
            )),
        )),
    )),
)

# Diagrams 3, 5, 7: (b), (w), (L) in the complex case share one tree
DIAGRAM_BWL_COMPLEX = _case(
    ("a = 1", lambda p: p.a == 1, H),
    ("a > 1", lambda p: True, _case(
        ("d <= c", lambda p: p.d <= p.c, H),
        ("d > c", lambda p: True, F),
    )),
)

# Diagram 4: Whitney (b), real
DIAGRAM_B_REAL = _case(
    ("a = 1", lambda p: p.a == 1, H),
    ("a > 1", lambda p: True, _case(
        ("d <= c", lambda p: p.d <= p.c, H),
        ("d > c", lambda p: True, _case(
            ("b odd", lambda p: p.b % 2 == 1, F),
            ("b even", lambda p: True, _case(
                ("d = c+1 (mod 2)", lambda p: (p.d - p.c) % 2 == 1, F),
                ("d = c (mod 2)", lambda p: True, _case(
                    ("d < a", lambda p: p.d < p.a, _case(
                        ("d < b+c", lambda p: p.d < p.b + p.c, H),
                        ("d >= b+c", lambda p: True, F),
                    )),
                    ("a <= d", lambda p: True, _case(
                        ("a > c", lambda p: p.a > p.c, F),
                        ("a <= c", lambda p: True, _case(
                            ("d < b+c", lambda p: p.d < p.b + p.c, F),
                            ("d >= b+c", lambda p: True, _case(
                                ("a <= b", lambda p: p.a <= p.b, H),
                                ("a > b", lambda p: True, _case(
                                    ("d < ac/(a-b)", _below_threshold, H),
                                    ("d >= ac/(a-b)", lambda p: True, F),
                                )),
                            )),
                        )),
                    )),
                )),
            )),
        )),
    )),
)

# Diagram 6: Kuo-Verdier (w), real
DIAGRAM_W_REAL = _case(
    ("a = 1", lambda p: p.a == 1, H),
    ("a > 1", lambda p: True, _case(
        ("d <= c", lambda p: p.d <= p.c, H),
        ("d > c", lambda p: True, _case(
            ("b odd", lambda p: p.b % 2 == 1, F),
            ("b even", lambda p: True, _case(
                ("d = c+1 (mod 2)", lambda p: (p.d - p.c) % 2 == 1, F),
                ("d = c (mod 2)", lambda p: True, _case(
                    ("a(d-c) <= b|d-a|", lambda p: p.a * (p.d - p.c) <= p.b * abs(p.d - p.a), H),
                    ("a(d-c) > b|d-a|", lambda p: True, F),
                )),
            )),
        )),
    )),
)

# Diagram 8: Mostowski (L), real; the printed two-page tree, fused
DIAGRAM_L_REAL = _case(
    ("a = 1", lambda p: p.a == 1, H),
    ("a > 1", lambda p: True, _case(
        ("d <= c", lambda p: p.d <= p.c, H),
        ("d > c", lambda p: True, _case(
            ("b odd", lambda p: p.b % 2 == 1, F),
            ("b even", lambda p: True, _case(
                ("d = c+1 (mod 2)", lambda p: (p.d - p.c) % 2 == 1, F),
                ("d = c (mod 2)", lambda p: True, _case(
                    ("a(d-c) <= b|d-a|",
                     lambda p: p.a * (p.d - p.c) <= p.b * abs(p.d - p.a), _case(
                        ("d >= a", lambda p: p.d >= p.a, _case(
                            ("a even", lambda p: p.a % 2 == 0, F),
                            ("a odd", lambda p: True, _case(
                                ("c < a", lambda p: p.c < p.a, F),
                                ("c >= a", lambda p: True, _case(
                                    ("b < a", lambda p: p.b < p.a, _case(
                                        ("a(d-c) <= d-a",
                                         lambda p: p.a * (p.d - p.c) <= p.d - p.a, H),
                                        ("a(d-c) > d-a", lambda p: True, _case(
                                            ("2a(d-c) > db",
                                             lambda p: 2 * p.a * (p.d - p.c) > p.d * p.b, F),
                                            ("2a(d-c) <= db", lambda p: True, U),
                                        )),
                                    )),
                                    ("b >= a", lambda p: True, _case(
                                        ("b >= 2a", lambda p: p.b >= 2 * p.a, H),
                                        ("b < 2a", lambda p: True, _case(
                                            ("a(d-c) <= d",
                                             lambda p: p.a * (p.d - p.c) <= p.d, H),
                                            ("a(d-c) > d", lambda p: True, _case(
                                                ("2a(d-c) > db",
                                                 lambda p: 2 * p.a * (p.d - p.c) > p.d * p.b, F),
                                                ("2a(d-c) <= db", lambda p: True, U),
                                            )),
                                        )),
                                    )),
                                )),
                            )),
                        )),
                        ("d < a", lambda p: True, _case(
                            ("d,c even", lambda p: p.d % 2 == 0, F),
                            ("d,c odd", lambda p: True, _case(
                                ("b < 2(d-c)", lambda p: p.b < 2 * (p.d - p.c), F),
                                ("b >= 2(d-c)", lambda p: True, U),
                            )),
                        )),
                    )),
                    ("a(d-c) > b|d-a|", lambda p: True, F),
                )),
            )),
        )),
    )),
)

DIAGRAMS: dict[tuple[Field, Condition], tuple[str, Case]] = {
    (Field.COMPLEX, Condition.WHITNEY_A): ("diagram-1", DIAGRAM_A_COMPLEX),
    (Field.REAL, Condition.WHITNEY_A): ("diagram-2", DIAGRAM_A_REAL),
    (Field.COMPLEX, Condition.WHITNEY_B): ("diagram-3", DIAGRAM_BWL_COMPLEX),
    (Field.REAL, Condition.WHITNEY_B): ("diagram-4", DIAGRAM_B_REAL),
    (Field.COMPLEX, Condition.KUO_VERDIER_W): ("diagram-5", DIAGRAM_BWL_COMPLEX),
    (Field.REAL, Condition.KUO_VERDIER_W): ("diagram-6", DIAGRAM_W_REAL),
    (Field.COMPLEX, Condition.MOSTOWSKI_L): ("diagram-7", DIAGRAM_BWL_COMPLEX),
    (Field.REAL, Condition.MOSTOWSKI_L): ("diagram-8", DIAGRAM_L_REAL),
}


@dataclass(frozen=True)
class LeafTrace:
    """Guards taken from root to leaf; the last entry names the verdict."""

    diagram: str
    steps: tuple[str, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("leaf trace cannot be empty")

    @property
    def leaf_id(self) -> str:
        return self.diagram + ":" + "/".join(self.steps[:-1])

    def __str__(self) -> str:
        return f"{self.diagram}: " + " -> ".join(self.steps)


def classify(params: SurfaceParams, field: Field,
             condition: Condition) -> tuple[Verdict, LeafTrace]:
    """Evaluate the printed diagram for (field, condition) on params."""
    name, tree = DIAGRAMS[(field, condition)]
    steps: list[str] = []
    node: Union[Case, Leaf] = tree
    while isinstance(node, Case):
        for label, guard, child in node.branches:
            if guard(params):
                steps.append(label)
                node = child
                break
        else:  # pragma: no cover - the printed trees are total
            raise AssertionError(f"no branch matched in {name} at {params}")
    steps.append(node.verdict.value)
    return node.verdict, LeafTrace(name, tuple(steps))


def profile(params: SurfaceParams) -> RegularityProfile:
    verdicts = {}
    for f in FIELDS:
        for c in CONDITIONS:
            v, trace = classify(params, f, c)
            verdicts[(f, c)] = AnnotatedVerdict(v, str(trace))
    return RegularityProfile(params, verdicts)


def c1_smooth(params: SurfaceParams) -> bool:
    """Whether the graph is C1-smooth per the characterization for d > c.

    For d <= c or a = 1 the trivial branches apply.  The a <= b case is
    treated as satisfying the d < ac/(a-b) clause (the threshold is vacuous
    there and the (a)-diagram holds on that branch).
    """
    a, b, c, d = params.as_tuple()
    if a == 1 or d <= c:
        return True
    return (a <= c and b % 2 == 0 and (d - c) % 2 == 0
            and (a <= b or d * (a - b) < a * c))


@dataclass(frozen=True)
class QuasiWeights:
    w_x: Fraction
    w_y: Fraction
    w_z: Fraction
    quasi_degree: Fraction

    def __post_init__(self):
        if not (self.w_x > 0 and self.w_y > 0 and self.w_z > 0 and self.quasi_degree > 0):
            raise ValueError("weights must be positive")


def quasi_weights(params: SurfaceParams) -> QuasiWeights:
    """Weights making y**a = z**b x**c + x**d quasi-homogeneous (needs c < d).

    The unique solution with quasi-degree a*d: each of the three monomials
    then has weighted degree w_y*a = w_x*d = w_z*b + w_x*c.
    """
    a, b, c, d = params.as_tuple()
    if c >= d:
        raise ValueError(f"quasi-homogeneous weights need c < d, got c={c}, d={d}")
    w_x = Fraction(a)
    w_y = Fraction(d)
    w_z = Fraction(a * (d - c), b)
    return QuasiWeights(w_x, w_y, w_z, Fraction(a * d))


# --- leaf enumeration (test and report support) -----------------------------


def iter_leaves(diagram_key: tuple[Field, Condition]) -> Iterator[tuple[str, Verdict]]:
    """Yield (leaf_id, printed verdict) for every leaf of a diagram."""
    name, tree = DIAGRAMS[diagram_key]

    def walk(node: Union[Case, Leaf], path: tuple[str, ...]) -> Iterator[tuple[str, Verdict]]:
        if isinstance(node, Leaf):
            yield name + ":" + "/".join(path), node.verdict
            return
        for label, _, child in node.branches:
            yield from walk(child, path + (label,))

    yield from walk(tree, ())


def all_leaves() -> list[tuple[tuple[Field, Condition], str, Verdict]]:
    out = []
    for key in DIAGRAMS:
        for leaf_id, verdict in iter_leaves(key):
            out.append((key, leaf_id, verdict))
    return out


def find_tuple_reaching(diagram_key: tuple[Field, Condition], leaf_id: str,
                        bound: int = 16) -> Optional[SurfaceParams]:
    """Lexicographically first tuple in [1, bound]^4 whose path hits leaf_id."""
    field, condition = diagram_key
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            for c in range(1, bound + 1):
                for d in range(1, bound + 1):
                    p = SurfaceParams(a, b, c, d)
                    _, trace = classify(p, field, condition)
                    if trace.leaf_id == leaf_id:
                        return p
    return None
