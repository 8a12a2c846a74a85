"""Domain services package."""

from .cup_product import CupProductService
from .gorenstein import GorensteinService
from .hilbert_basis import SectionPhi

__all__ = ["CupProductService", "GorensteinService", "SectionPhi"]
