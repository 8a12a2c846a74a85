"""Cone API endpoints."""

from fastapi import APIRouter, Depends, HTTPException

from toricdef.application.use_cases.deformation import DeformationUseCases
from toricdef.core.exceptions import ToricError
from toricdef.domain.entities.cone import Cone
from toricdef.domain.repositories.input import InputRepository
from toricdef.presentation.dependencies.repositories import get_fixture_repository
from toricdef.presentation.schemas.cone import (
    ConeSource,
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

router = APIRouter()


async def get_deformation_use_cases(
    repository: InputRepository = Depends(get_fixture_repository),
) -> DeformationUseCases:
    """Get deformation use cases dependency."""
    return DeformationUseCases(repository)


async def _load(source: ConeSource, use_cases: DeformationUseCases) -> Cone:
    if source.fixture is not None:
        return await use_cases.load_cone(source.fixture)
    return await use_cases.cone_from_generators(source.generators or [])


@router.post("/hilbert", response_model=HilbertResponse)
async def hilbert(
    request: HilbertRequest,
    use_cases: DeformationUseCases = Depends(get_deformation_use_cases),
):
    """Hilbert basis E of the dual cone."""
    try:
        cone = await _load(request, use_cases)
        basis = await use_cases.hilbert(cone)
        return HilbertResponse.from_domain(cone, basis)
    except ToricError as e:
        raise HTTPException(status_code=e.status_code, detail=e.to_dict())


@router.post("/t1", response_model=T1Response)
async def t1(
    request: DegreeRequest,
    use_cases: DeformationUseCases = Depends(get_deformation_use_cases),
):
    """T1(-R) with a basis."""
    try:
        cone = await _load(request, use_cases)
        return T1Response.from_domain(await use_cases.t1(cone, request.degree))
    except ToricError as e:
        raise HTTPException(status_code=e.status_code, detail=e.to_dict())


@router.post("/t2", response_model=T2Response)
async def t2(
    request: DegreeRequest,
    use_cases: DeformationUseCases = Depends(get_deformation_use_cases),
):
    """
    T2(-R) with a canonical basis.

    Exact for cones smooth in codimension 2; otherwise a subspace.
    """
    try:
        cone = await _load(request, use_cases)
        piece, span = await use_cases.t2(cone, request.degree)
        return T2Response.from_domain(piece, span)
    except ToricError as e:
        raise HTTPException(status_code=e.status_code, detail=e.to_dict())


@router.post("/scan", response_model=ScanResponse)
async def scan(
    request: ScanRequest,
    use_cases: DeformationUseCases = Depends(get_deformation_use_cases),
):
    """Nonzero graded pieces inside the heuristic scan box."""
    try:
        cone = await _load(request, use_cases)
        return ScanResponse.from_domain(await use_cases.scan(cone, request.bound))
    except ToricError as e:
        raise HTTPException(status_code=e.status_code, detail=e.to_dict())


@router.post("/cup", response_model=CupResponse)
async def cup(
    request: CupRequest,
    use_cases: DeformationUseCases = Depends(get_deformation_use_cases),
):
    """Cup product of two T1 basis elements."""
    try:
        cone = await _load(request, use_cases)
        result = await use_cases.cup(
            cone,
            request.degree_r,
            request.degree_s,
            request.phi_index,
            request.psi_index,
            request.anchor_policy,
        )
        return CupResponse.from_domain(result)
    except ToricError as e:
        raise HTTPException(status_code=e.status_code, detail=e.to_dict())
