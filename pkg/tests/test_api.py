"""HTTP API tests."""

import pytest
from httpx import AsyncClient


class TestHealthAPI:
    """Health and listing test cases."""

    @pytest.mark.asyncio
    async def test_health(self, client: AsyncClient) -> None:
        """Test the health check."""
        response = await client.get("/health")
        assert response.status_code == 200
        assert response.json()["status"] == "healthy"

    @pytest.mark.asyncio
    async def test_fixtures(self, client: AsyncClient) -> None:
        """Test the built-in input names."""
        response = await client.get("/api/v1/fixtures")
        assert response.status_code == 200

        data = response.json()
        assert "square" in data["cones"]
        assert "hexagon" in data["polygons"]


class TestConesAPI:
    """Cone endpoint test cases."""

    @pytest.mark.asyncio
    async def test_hilbert_fixture(self, client: AsyncClient) -> None:
        """Test the Hilbert basis of a built-in cone."""
        response = await client.post(
            "/api/v1/cones/hilbert", json={"fixture": "square"}
        )
        assert response.status_code == 200

        data = response.json()
        assert data["count"] == 4
        assert sorted(data["E"]) == [[-1, 0, 1], [0, -1, 1], [0, 1, 0], [1, 0, 0]]
        assert data["cone"]["smooth_in_codim2"] is True

    @pytest.mark.asyncio
    async def test_hilbert_generators(self, client: AsyncClient) -> None:
        """Test a cone given by its generators."""
        response = await client.post(
            "/api/v1/cones/hilbert", json={"generators": [[1, 0], [1, 4]]}
        )
        assert response.status_code == 200

        data = response.json()
        assert data["E"] == [[0, 1], [1, 0], [4, -1]]
        assert data["cone"]["smooth_in_codim2"] is False

    @pytest.mark.asyncio
    async def test_t1(self, client: AsyncClient) -> None:
        """Test T1(-R*) of the hexagon cone."""
        response = await client.post(
            "/api/v1/cones/t1", json={"fixture": "hexagon", "degree": [0, 0, 1]}
        )
        assert response.status_code == 200
        assert response.json()["t1_dim"] == 3

    @pytest.mark.asyncio
    async def test_t2(self, client: AsyncClient) -> None:
        """Test T2(-2R*) of the hexagon cone."""
        response = await client.post(
            "/api/v1/cones/t2", json={"fixture": "hexagon", "degree": [0, 0, 2]}
        )
        assert response.status_code == 200

        data = response.json()
        assert data["t2_dim"] == 2
        assert data["t2_label"] == "T2"
        assert len(data["basis"]) == 2

    @pytest.mark.asyncio
    async def test_cup(self, client: AsyncClient) -> None:
        """Test the cup square of the quadric cone vanishes."""
        response = await client.post(
            "/api/v1/cones/cup",
            json={"fixture": "square", "degree_r": [0, 0, 1], "degree_s": [0, 0, 1]},
        )
        assert response.status_code == 200

        data = response.json()
        assert data["degree"] == [0, 0, 2]
        assert data["is_zero"] is True

    @pytest.mark.asyncio
    async def test_cup_refused(self, client: AsyncClient) -> None:
        """Test the cup product needs smoothness in codimension 2."""
        response = await client.post(
            "/api/v1/cones/cup",
            json={"fixture": "a3", "degree_r": [1, 0], "degree_s": [1, 0]},
        )
        assert response.status_code == 400
        assert response.json()["detail"]["error"] == "not_smooth_in_codim_2"

    @pytest.mark.asyncio
    async def test_unknown_fixture(self, client: AsyncClient) -> None:
        """Test an unknown fixture name."""
        response = await client.post("/api/v1/cones/hilbert", json={"fixture": "nope"})
        assert response.status_code == 400
        assert response.json()["detail"]["error"] == "schema_error"

    @pytest.mark.asyncio
    async def test_not_pointed(self, client: AsyncClient) -> None:
        """Test a cone containing a line."""
        response = await client.post(
            "/api/v1/cones/hilbert", json={"generators": [[1, 0], [-1, 0], [0, 1]]}
        )
        assert response.status_code == 400
        assert response.json()["detail"]["error"] == "not_pointed"

    @pytest.mark.asyncio
    async def test_source_required(self, client: AsyncClient) -> None:
        """Test exactly one of fixture and generators."""
        neither = await client.post("/api/v1/cones/hilbert", json={})
        assert neither.status_code == 422

        both = await client.post(
            "/api/v1/cones/hilbert",
            json={"fixture": "square", "generators": [[1, 0], [0, 1]]},
        )
        assert both.status_code == 422


class TestGorensteinAPI:
    """Gorenstein endpoint test cases."""

    @pytest.mark.asyncio
    async def test_hexagon(self, client: AsyncClient) -> None:
        """Test the closed forms of the hexagon."""
        response = await client.post(
            "/api/v1/gorenstein", json={"fixture": "hexagon", "kmax": 3}
        )
        assert response.status_code == 200

        data = response.json()
        assert data["N"] == 6
        assert data["t1_dim"] == 3
        assert data["summand_dim"] == 4
        assert data["t2_dims"] == {"2": 2, "3": 0}
        assert data["verify"] is None

    @pytest.mark.asyncio
    async def test_vertices(self, client: AsyncClient) -> None:
        """Test a polygon given by its vertices."""
        response = await client.post(
            "/api/v1/gorenstein",
            json={"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]], "kmax": 2},
        )
        assert response.status_code == 200

        data = response.json()
        assert (data["k1"], data["k2"]) == (1, 1)
        assert data["r_star_in_E"] is False

    @pytest.mark.asyncio
    async def test_rejected_polygon(self, client: AsyncClient) -> None:
        """Test the 1 x 3 rectangle is rejected."""
        response = await client.post(
            "/api/v1/gorenstein", json={"fixture": "rectangle_1x3"}
        )
        assert response.status_code == 400
        assert response.json()["detail"] == {
            "error": "invalid_polygon",
            "message": "edge 1 is not primitive",
        }

    @pytest.mark.asyncio
    async def test_kmax_range(self, client: AsyncClient) -> None:
        """Test kmax below 2 is a validation error."""
        response = await client.post(
            "/api/v1/gorenstein", json={"fixture": "hexagon", "kmax": 1}
        )
        assert response.status_code == 422


class TestVerificationAPI:
    """Acceptance suite endpoint test cases."""

    @pytest.mark.slow
    @pytest.mark.asyncio
    async def test_verification(self, client: AsyncClient) -> None:
        """Test the acceptance suite passes."""
        response = await client.get("/api/v1/verification", params={"seed": 7})
        assert response.status_code == 200

        data = response.json()
        assert data["seed"] == 7
        assert data["all_passed"] is True
