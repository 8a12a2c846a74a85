"""Deformation use case tests."""

import pytest

from toricdef.application.use_cases import deformation
from toricdef.application.use_cases.deformation import DeformationUseCases
from toricdef.core.exceptions import CocycleViolationError, IsoCheckFailedError


@pytest.fixture
def use_cases(fixture_repository) -> DeformationUseCases:
    return DeformationUseCases(fixture_repository)


class TestCupBridge:
    """Bridging cup products to the span complex."""

    @pytest.mark.asyncio
    async def test_cocycle_violation_propagates(
        self, use_cases, hexagon_cone, monkeypatch
    ):
        """Test a broken bridge is reported instead of dropped."""

        def broken(*args, **kwargs):
            raise CocycleViolationError("bridged cochain is not closed")

        monkeypatch.setattr(deformation, "zigzag_bridge", broken)
        with pytest.raises(CocycleViolationError):
            await use_cases.cup(hexagon_cone, (0, 0, 1), (0, 0, 1), 0, 1)

    @pytest.mark.asyncio
    async def test_missing_vector_leaves_bridge_empty(
        self, use_cases, hexagon_cone, monkeypatch
    ):
        """Test a 2-face span smaller than M only drops the bridged vector."""

        def no_vector(*args, **kwargs):
            raise IsoCheckFailedError("2-face span is not all of M")

        monkeypatch.setattr(deformation, "cycle_vector", no_vector)
        result = await use_cases.cup(hexagon_cone, (0, 0, 1), (0, 0, 1), 0, 1)
        assert result.bridged_vector is None
        assert result.product.degree == (0, 0, 2)

