"""API schemas package."""

from .common import ErrorResponse, FixturesResponse, HealthResponse
from .cone import (
    ConeResponse,
    CupRequest,
    CupResponse,
    DegreeRequest,
    HilbertRequest,
    HilbertResponse,
    ScanRequest,
    ScanResponse,
    T1Response,
    T2Response,
)
from .gorenstein import GorensteinRequest, GorensteinResponse
from .verification import VerificationResponse

__all__ = [
    "ConeResponse",
    "CupRequest",
    "CupResponse",
    "DegreeRequest",
    "ErrorResponse",
    "FixturesResponse",
    "GorensteinRequest",
    "GorensteinResponse",
    "HealthResponse",
    "HilbertRequest",
    "HilbertResponse",
    "ScanRequest",
    "ScanResponse",
    "T1Response",
    "T2Response",
    "VerificationResponse",
]
