"""Built-in cones and polygons."""

from pathlib import Path
from typing import Any

from toricdef.core.config import settings
from toricdef.core.exceptions import SchemaError
from toricdef.core.logging import get_logger
from toricdef.domain.entities.cone import Cone
from toricdef.domain.entities.polygon import LatticePolygon
from toricdef.domain.repositories.input import InputRepository
from toricdef.infrastructure.repositories.json_input import (
    cone_from_payload,
    parse_cone_file,
    parse_polygon_file,
    polygon_from_payload,
)

logger = get_logger(__name__)

FIXTURE_CONES: dict[str, dict[str, Any]] = {
    "octant": {"rank": 3, "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
    "square": {
        "rank": 3,
        "generators": [[0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1]],
    },
    "triangle": {"rank": 3, "generators": [[0, 0, 1], [1, 0, 1], [0, 1, 1]]},
    "hexagon": {
        "rank": 3,
        "generators": [
            [0, 0, 1],
            [1, 0, 1],
            [2, 1, 1],
            [2, 2, 1],
            [1, 2, 1],
            [0, 1, 1],
        ],
    },
    "elongated_hexagon": {
        "rank": 3,
        "generators": [
            [0, 0, 1],
            [1, 1, 1],
            [1, 2, 1],
            [0, 3, 1],
            [-1, 2, 1],
            [-1, 1, 1],
        ],
    },
    # xy = z^4
    "a3": {"rank": 2, "generators": [[1, 0], [1, 4]]},
}

FIXTURE_POLYGONS: dict[str, dict[str, Any]] = {
    "triangle": {"vertices": [[0, 0], [1, 0], [0, 1]]},
    "square": {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]},
    "hexagon": {"vertices": [[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]]},
    "elongated_hexagon": {
        "vertices": [[0, 0], [1, 1], [1, 2], [0, 3], [-1, 2], [-1, 1]]
    },
    # Edges of length 3 are not primitive; kept as a rejected input.
    "rectangle_1x3": {"vertices": [[0, 0], [3, 0], [3, 1], [0, 1]]},
}


class FixtureRepository(InputRepository):
    """Built-in fixtures, extended by JSON files under FIXTURES_DIR.

    Extra files live in ``<FIXTURES_DIR>/cones/<name>.json`` and
    ``<FIXTURES_DIR>/polygons/<name>.json``.
    """

    def __init__(self, directory: str | Path | None = None):
        root = directory if directory is not None else settings.FIXTURES_DIR
        self.directory = Path(root) if root else None

    def _extra(self, kind: str) -> dict[str, Path]:
        if self.directory is None:
            return {}
        folder = self.directory / kind
        if not folder.is_dir():
            return {}
        return {path.stem: path for path in sorted(folder.glob("*.json"))}

    async def get_cone(self, key: str) -> Cone:
        extra = self._extra("cones")
        if key in extra:
            return parse_cone_file(extra[key])
        if key not in FIXTURE_CONES:
            raise SchemaError(f"unknown cone fixture {key!r}")
        return cone_from_payload(FIXTURE_CONES[key])

    async def get_polygon(self, key: str) -> LatticePolygon:
        extra = self._extra("polygons")
        if key in extra:
            return parse_polygon_file(extra[key])
        if key not in FIXTURE_POLYGONS:
            raise SchemaError(f"unknown polygon fixture {key!r}")
        return polygon_from_payload(FIXTURE_POLYGONS[key])

    async def list_keys(self) -> dict[str, list[str]]:
        return {
            "cones": sorted({*FIXTURE_CONES, *self._extra("cones")}),
            "polygons": sorted({*FIXTURE_POLYGONS, *self._extra("polygons")}),
        }
