"""Domain entities package."""

from .cone import Cone, DualCone, DualVector, Face, LatticeVector
from .elements import (
    CupResult,
    ElementHomology,
    ScanEntry,
    ScanResult,
    SpanComplexResult,
    T1Element,
    T1Piece,
    T2Element,
    T2Label,
    T2Piece,
)
from .hilbert import HilbertBasis, Relation
from .polygon import GorensteinContext, LatticePolygon, SummandSpace
from .report import (
    CheckOutcome,
    CrossValidationReport,
    CupComparison,
    DimensionComparison,
    GorensteinReport,
    RunReport,
    VerificationReport,
    VersalEquation,
    VersalReport,
)

__all__ = [
    "CheckOutcome",
    "Cone",
    "CrossValidationReport",
    "CupComparison",
    "CupResult",
    "DimensionComparison",
    "DualCone",
    "DualVector",
    "ElementHomology",
    "Face",
    "GorensteinContext",
    "GorensteinReport",
    "HilbertBasis",
    "LatticePolygon",
    "LatticeVector",
    "Relation",
    "RunReport",
    "ScanEntry",
    "ScanResult",
    "SpanComplexResult",
    "SummandSpace",
    "T1Element",
    "T1Piece",
    "T2Element",
    "T2Label",
    "T2Piece",
    "VerificationReport",
    "VersalEquation",
    "VersalReport",
]
