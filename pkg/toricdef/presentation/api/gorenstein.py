"""Gorenstein polygon API endpoints."""

from fastapi import APIRouter, Depends, HTTPException

from toricdef.application.use_cases.gorenstein import GorensteinUseCases
from toricdef.core.exceptions import ToricError
from toricdef.domain.repositories.input import InputRepository
from toricdef.presentation.dependencies.repositories import get_fixture_repository
from toricdef.presentation.schemas.gorenstein import (
    GorensteinRequest,
    GorensteinResponse,
)

router = APIRouter()


async def get_gorenstein_use_cases(
    repository: InputRepository = Depends(get_fixture_repository),
) -> GorensteinUseCases:
    """Get Gorenstein use cases dependency."""
    return GorensteinUseCases(repository)


@router.post("", response_model=GorensteinResponse)
async def analyze_polygon(
    request: GorensteinRequest,
    use_cases: GorensteinUseCases = Depends(get_gorenstein_use_cases),
):
    """
    Closed forms for the cone over a lattice polygon.

    With ``verify`` the dimensions and cup products are recomputed by the
    general machinery and compared.
    """
    try:
        if request.fixture is not None:
            polygon = await use_cases.load_polygon(request.fixture)
        else:
            polygon = await use_cases.polygon_from_vertices(request.vertices or [])
        report = await use_cases.analyze(polygon, request.kmax, request.verify)
        return GorensteinResponse.from_domain(report)
    except ToricError as e:
        raise HTTPException(status_code=e.status_code, detail=e.to_dict())
