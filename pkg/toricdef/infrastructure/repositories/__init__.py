"""Infrastructure repositories package."""

from .fixtures import FixtureRepository
from .json_input import JsonInputRepository

__all__ = ["FixtureRepository", "JsonInputRepository"]
