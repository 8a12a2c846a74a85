"""Test configuration and fixtures."""

import os
from collections.abc import AsyncGenerator

import pytest
import pytest_asyncio
from httpx import ASGITransport, AsyncClient

# Set test environment variables before importing app modules
os.environ["ALLOWED_HOSTS"] = '["localhost", "127.0.0.1", "test", "testserver"]'
os.environ["LOG_LEVEL"] = "WARNING"
os.environ["LOG_FORMAT"] = "text"
os.environ.pop("FIXTURES_DIR", None)

from toricdef.domain.entities.cone import Cone
from toricdef.domain.entities.hilbert import HilbertBasis
from toricdef.domain.entities.polygon import LatticePolygon
from toricdef.domain.services.cone_geometry import dual_cone
from toricdef.domain.services.gorenstein import GorensteinService
from toricdef.domain.services.hilbert_basis import hilbert_basis
from toricdef.infrastructure.repositories.fixtures import (
    FIXTURE_CONES,
    FIXTURE_POLYGONS,
    FixtureRepository,
)
from toricdef.infrastructure.repositories.json_input import (
    cone_from_payload,
    polygon_from_payload,
)
from toricdef.main import create_app


def _cone(name: str) -> Cone:
    return cone_from_payload(FIXTURE_CONES[name])


def _basis(cone: Cone) -> HilbertBasis:
    return hilbert_basis(dual_cone(cone))


@pytest.fixture(scope="session")
def octant() -> Cone:
    """The positive octant in Z^3."""
    return _cone("octant")


@pytest.fixture(scope="session")
def square_cone() -> Cone:
    """Cone over the unit square; the cone over P1 x P1."""
    return _cone("square")


@pytest.fixture(scope="session")
def hexagon_cone() -> Cone:
    """Cone over the hexagon with vertices (0,0), (1,0), (2,1), (2,2), (1,2), (0,1)."""
    return _cone("hexagon")


@pytest.fixture(scope="session")
def a3_cone() -> Cone:
    """The plane cone of xy = z^4."""
    return _cone("a3")


@pytest.fixture(scope="session")
def octant_basis(octant: Cone) -> HilbertBasis:
    return _basis(octant)


@pytest.fixture(scope="session")
def square_basis(square_cone: Cone) -> HilbertBasis:
    return _basis(square_cone)


@pytest.fixture(scope="session")
def hexagon_basis(hexagon_cone: Cone) -> HilbertBasis:
    return _basis(hexagon_cone)


@pytest.fixture(scope="session")
def a3_basis(a3_cone: Cone) -> HilbertBasis:
    return _basis(a3_cone)


@pytest.fixture(scope="session")
def hexagon() -> LatticePolygon:
    return polygon_from_payload(FIXTURE_POLYGONS["hexagon"])


@pytest.fixture(scope="session")
def elongated_hexagon() -> LatticePolygon:
    return polygon_from_payload(FIXTURE_POLYGONS["elongated_hexagon"])


@pytest.fixture(scope="session")
def hexagon_service(hexagon: LatticePolygon) -> GorensteinService:
    """Gorenstein service for the hexagon; caches its cup service."""
    return GorensteinService(hexagon)


@pytest.fixture
def fixture_repository() -> FixtureRepository:
    """Built-in fixtures only."""
    return FixtureRepository(directory=None)


@pytest.fixture
def app():
    """Create a test FastAPI application."""
    return create_app()


@pytest_asyncio.fixture
async def client(app) -> AsyncGenerator[AsyncClient, None]:
    """Create a test HTTP client."""
    async with AsyncClient(
        transport=ASGITransport(app=app), base_url="http://test"
    ) as ac:
        yield ac
