"""Gorenstein polygon use cases."""

from collections.abc import Sequence

from toricdef.core.logging import get_logger
from toricdef.core.metrics import COMPUTATIONS
from toricdef.domain.entities.polygon import LatticePolygon
from toricdef.domain.entities.report import GorensteinReport
from toricdef.domain.repositories.input import InputRepository
from toricdef.domain.services.gorenstein import (
    GorensteinService,
    check_t1_iso,
    k_thresholds,
    t2_dims_closed_form,
    versal_equations,
)
from toricdef.domain.services.graded_complex import t1_dimension


class GorensteinUseCases:
    """Closed forms for cones over lattice polygons."""

    def __init__(self, input_repository: InputRepository):
        self.input_repository = input_repository
        self.logger = get_logger(__name__)

    async def load_polygon(self, key: str) -> LatticePolygon:
        return await self.input_repository.get_polygon(key)

    async def polygon_from_vertices(
        self, vertices: Sequence[Sequence[int]]
    ) -> LatticePolygon:
        return LatticePolygon(vertices=tuple((int(x), int(y)) for x, y in vertices))

    async def analyze(
        self, polygon: LatticePolygon, kmax: int = 4, verify: bool = False
    ) -> GorensteinReport:
        """T1, thresholds, T2 dimensions, cup table and versal equations.

        ``verify`` adds the comparison with the relation-complex machinery
        and the check of the T1 isomorphism.
        """
        COMPUTATIONS.labels(command="gorenstein").inc()
        service = GorensteinService(polygon)
        context = service.context
        t1_dim = t1_dimension(service.degree_data(1))
        k1, k2 = k_thresholds(context.polygon)
        verification = None
        if verify:
            check_t1_iso(context, service.space)
            verification = service.cross_validate(kmax)
        report = GorensteinReport(
            vertices=polygon.vertices,
            size=polygon.size,
            t1_dim=t1_dim,
            summand_dim=service.space.dimension,
            k1=k1,
            k2=k2,
            t2_dims={
                k: t2_dims_closed_form(context.polygon, k) for k in range(2, kmax + 1)
            },
            r_star_in_basis=context.r_star_in_basis,
            cup_table=(
                verification.cups if verification else service.cup_table(False)
            ),
            versal=versal_equations(context.polygon, kmax),
            verification=verification,
        )
        self.logger.info(
            "Analyzed polygon",
            vertices=polygon.size,
            t1_dim=t1_dim,
            k1=k1,
            k2=k2,
            verified=verification.all_match if verification else None,
        )
        return report
