"""Deformation use cases for a single cone."""

from collections.abc import Sequence

from toricdef.core.exceptions import IsoCheckFailedError, SchemaError
from toricdef.core.logging import get_logger
from toricdef.core.metrics import COMPUTATIONS
from toricdef.domain.entities.cone import Cone
from toricdef.domain.entities.elements import (
    CupResult,
    ScanResult,
    SpanComplexResult,
    T1Element,
    T1Piece,
    T2Piece,
)
from toricdef.domain.entities.hilbert import HilbertBasis
from toricdef.domain.repositories.input import InputRepository
from toricdef.domain.services.cone_geometry import build_cone, dual_cone
from toricdef.domain.services.cup_product import AnchorPolicy, CupProductService
from toricdef.domain.services.graded_complex import (
    degree_data,
    degree_scan,
    t1_piece,
    t2_piece,
)
from toricdef.domain.services.hilbert_basis import hilbert_basis
from toricdef.domain.services.span_complex import (
    cycle_vector,
    t1_t2_via_span_complex,
    zigzag_bridge,
)

logger = get_logger(__name__)


def _pick(piece: T1Piece, index: int, name: str) -> T1Element:
    if not 0 <= index < piece.dimension:
        raise SchemaError(
            f"{name} {index} is out of range; T1({list(piece.degree)}) has "
            f"dimension {piece.dimension}"
        )
    return piece.basis[index]


def is_polygon_cone(cone: Cone) -> bool:
    """3-dimensional with every generator at height one."""
    return cone.rank == 3 and all(g[2] == 1 for g in cone.generators)


class DeformationUseCases:
    """Hilbert basis, graded T1/T2, degree scans and cup products."""

    def __init__(self, input_repository: InputRepository):
        self.input_repository = input_repository

    async def load_cone(self, key: str) -> Cone:
        return await self.input_repository.get_cone(key)

    async def cone_from_generators(self, generators: Sequence[Sequence[int]]) -> Cone:
        return build_cone(generators)

    async def hilbert(self, cone: Cone) -> HilbertBasis:
        COMPUTATIONS.labels(command="hilbert").inc()
        basis = hilbert_basis(dual_cone(cone))
        logger.info("Computed Hilbert basis", rank=cone.rank, size=basis.size)
        return basis

    async def t1(self, cone: Cone, degree: Sequence[int]) -> T1Piece:
        COMPUTATIONS.labels(command="t1").inc()
        basis = hilbert_basis(dual_cone(cone))
        piece = t1_piece(degree_data(cone, basis, degree))
        logger.info("Computed T1", degree=piece.degree, dimension=piece.dimension)
        return piece

    async def t2(
        self, cone: Cone, degree: Sequence[int]
    ) -> tuple[T2Piece, SpanComplexResult]:
        """T2(-R) from the relation complex, with the span-complex dimensions."""
        COMPUTATIONS.labels(command="t2").inc()
        basis = hilbert_basis(dual_cone(cone))
        dd = degree_data(cone, basis, degree)
        piece = t2_piece(dd)
        span = t1_t2_via_span_complex(dd)
        logger.info(
            "Computed T2",
            degree=piece.degree,
            dimension=piece.dimension,
            label=piece.label.value,
        )
        return piece, span

    async def scan(self, cone: Cone, bound: int | None = None) -> ScanResult:
        COMPUTATIONS.labels(command="scan").inc()
        basis = hilbert_basis(dual_cone(cone))
        return degree_scan(cone, basis, bound)

    async def cup(
        self,
        cone: Cone,
        degree_r: Sequence[int],
        degree_s: Sequence[int],
        phi_index: int = 0,
        psi_index: int = 0,
        anchor_policy: AnchorPolicy = "min",
    ) -> CupResult:
        """Cup product of two T1 basis elements.

        For cones over height-one polygons the product is also bridged to a
        vector in N_Q when every 2-face span is all of M.
        """
        COMPUTATIONS.labels(command="cup").inc()
        basis = hilbert_basis(dual_cone(cone))
        service = CupProductService(cone, basis, anchor_policy=anchor_policy)
        phi = _pick(t1_piece(degree_data(cone, basis, degree_r)), phi_index, "phi")
        psi = _pick(t1_piece(degree_data(cone, basis, degree_s)), psi_index, "psi")
        product = service.cup(phi, psi)

        bridged = None
        if is_polygon_cone(cone):
            target = degree_data(cone, basis, product.degree)
            try:
                bridged = cycle_vector(target, zigzag_bridge(product, target))
            except IsoCheckFailedError as e:
                logger.debug("No bridged vector", reason=e.message)
        logger.info(
            "Computed cup product", degree=product.degree, zero=product.is_zero()
        )
        return CupResult(
            degree_r=phi.degree,
            degree_s=psi.degree,
            phi_index=phi_index,
            psi_index=psi_index,
            product=product,
            bridged_vector=bridged,
        )
