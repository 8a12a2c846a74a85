"""Repository dependencies."""

from functools import lru_cache

from toricdef.domain.repositories.input import InputRepository
from toricdef.infrastructure.repositories.fixtures import FixtureRepository
from toricdef.infrastructure.repositories.json_input import JsonInputRepository


@lru_cache
def get_fixture_repository() -> InputRepository:
    """Built-in inputs; the only source the HTTP API reads from."""
    return FixtureRepository()


def get_input_repository() -> InputRepository:
    """File paths plus ``fixture:<name>`` references, for the command line."""
    return JsonInputRepository(get_fixture_repository())
