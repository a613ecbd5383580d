"""Regularity classification and certified verification for the surface
family y**a = z**b x**c + x**d stratified by (V - Oz, Oz)."""

from ._version import __version__

from .model import (Condition, Field, ParameterError, RegularityProfile,
                    SurfaceParams, Verdict, make_params)
from .classifier import (LeafTrace, QuasiWeights, c1_smooth, classify,
                         profile, quasi_weights)
from .arcs import (ArcPair, BehaviorClass, LimitBehavior, MonomialArc,
                   QuantityId, critical_lambdas, limit_along_arc, substitute,
                   surface_residual)
from .search import (FaultWitness, GridSpec, NoneFound, SearchBudget,
                     enumerate_arcs, find_fault, sample_grid)
from .harness import (SweepReport, Violation, boundary_flagged,
                      consistency_check, gap_scan, sweep)

__all__ = [
    "ArcPair", "BehaviorClass", "Condition", "FaultWitness", "Field",
    "GridSpec", "LeafTrace", "LimitBehavior", "MonomialArc", "NoneFound",
    "ParameterError", "QuantityId", "QuasiWeights", "RegularityProfile",
    "SearchBudget", "SurfaceParams", "SweepReport", "Verdict", "Violation",
    "boundary_flagged", "c1_smooth", "classify", "consistency_check",
    "critical_lambdas", "enumerate_arcs", "find_fault", "gap_scan",
    "limit_along_arc", "make_params", "profile", "quasi_weights",
    "sample_grid", "substitute", "surface_residual", "sweep",
]
