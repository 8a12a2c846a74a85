"""Verification and fixture listing endpoints."""

from fastapi import APIRouter, Depends, Query

from toricdef.application.use_cases.verification import VerificationUseCases
from toricdef.domain.repositories.input import InputRepository
from toricdef.presentation.dependencies.repositories import get_fixture_repository
from toricdef.presentation.schemas.common import FixturesResponse
from toricdef.presentation.schemas.verification import VerificationResponse

router = APIRouter()


async def get_verification_use_cases(
    repository: InputRepository = Depends(get_fixture_repository),
) -> VerificationUseCases:
    """Get verification use cases dependency."""
    return VerificationUseCases(repository)


@router.get("/verification", response_model=VerificationResponse)
async def verify_all(
    seed: int | None = Query(None, description="Seed of the randomized checks"),
    use_cases: VerificationUseCases = Depends(get_verification_use_cases),
):
    """Run the acceptance suite on the built-in fixtures."""
    report = await use_cases.verify_all(seed)
    return VerificationResponse.from_domain(report)


@router.get("/fixtures", response_model=FixturesResponse)
async def list_fixtures(
    repository: InputRepository = Depends(get_fixture_repository),
):
    """Names of the built-in cones and polygons."""
    keys = await repository.list_keys()
    return FixturesResponse(cones=keys["cones"], polygons=keys["polygons"])
