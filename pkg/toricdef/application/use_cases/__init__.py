"""Application use cases package."""

from .deformation import DeformationUseCases
from .gorenstein import GorensteinUseCases
from .verification import VerificationUseCases

__all__ = ["DeformationUseCases", "GorensteinUseCases", "VerificationUseCases"]
