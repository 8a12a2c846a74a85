"""Input repository interface."""

from abc import ABC, abstractmethod

from toricdef.domain.entities.cone import Cone
from toricdef.domain.entities.polygon import LatticePolygon


class InputRepository(ABC):
    """Source of cones and polygons, addressed by a key."""

    @abstractmethod
    async def get_cone(self, key: str) -> Cone:
        """Load and validate a cone."""
        pass

    @abstractmethod
    async def get_polygon(self, key: str) -> LatticePolygon:
        """Load and validate a polygon."""
        pass

    @abstractmethod
    async def list_keys(self) -> dict[str, list[str]]:
        """Available cone and polygon keys."""
        pass
