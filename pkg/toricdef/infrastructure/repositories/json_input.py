"""JSON input files for cones and polygons."""

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from toricdef.core.exceptions import DimensionMismatchError, SchemaError
from toricdef.core.logging import get_logger
from toricdef.domain.entities.cone import Cone
from toricdef.domain.entities.polygon import LatticePolygon
from toricdef.domain.repositories.input import InputRepository
from toricdef.domain.services.cone_geometry import build_cone

logger = get_logger(__name__)

FIXTURE_PREFIX = "fixture:"


class ConeFile(BaseModel):
    """{"rank": n, "generators": [[...], ...]}"""

    model_config = ConfigDict(extra="forbid")

    rank: int = Field(ge=1)
    generators: list[list[int]] = Field(min_length=1)


class PolygonFile(BaseModel):
    """{"vertices": [[x, y], ...]}"""

    model_config = ConfigDict(extra="forbid")

    vertices: list[tuple[int, int]]


def _describe(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "document"
    return f"{location}: {first['msg']}"


def cone_from_payload(payload: dict[str, Any]) -> Cone:
    try:
        data = ConeFile.model_validate(payload)
    except ValidationError as e:
        raise SchemaError(f"invalid cone document ({_describe(e)})") from e
    for g in data.generators:
        if len(g) != data.rank:
            raise DimensionMismatchError(
                f"generator {g} does not have length {data.rank}"
            )
    return build_cone(data.generators)


def polygon_from_payload(payload: dict[str, Any]) -> LatticePolygon:
    try:
        data = PolygonFile.model_validate(payload)
    except ValidationError as e:
        raise SchemaError(f"invalid polygon document ({_describe(e)})") from e
    return LatticePolygon(vertices=tuple(data.vertices))


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e.strerror}") from e


def parse_cone_file(path: str | Path) -> Cone:
    """Read and validate a cone file."""
    try:
        data = ConeFile.model_validate_json(_read(path))
    except ValidationError as e:
        raise SchemaError(f"{path}: invalid cone document ({_describe(e)})") from e
    logger.debug("Parsed cone file", path=str(path), generators=len(data.generators))
    return cone_from_payload(data.model_dump())


def parse_polygon_file(path: str | Path) -> LatticePolygon:
    """Read and validate a polygon file."""
    try:
        data = PolygonFile.model_validate_json(_read(path))
    except ValidationError as e:
        raise SchemaError(f"{path}: invalid polygon document ({_describe(e)})") from e
    logger.debug("Parsed polygon file", path=str(path), vertices=len(data.vertices))
    return LatticePolygon(vertices=tuple(data.vertices))


class JsonInputRepository(InputRepository):
    """Inputs addressed by file path, or by ``fixture:<name>``."""

    def __init__(self, fixtures: InputRepository):
        self.fixtures = fixtures

    async def get_cone(self, key: str) -> Cone:
        if key.startswith(FIXTURE_PREFIX):
            return await self.fixtures.get_cone(key.removeprefix(FIXTURE_PREFIX))
        return parse_cone_file(key)

    async def get_polygon(self, key: str) -> LatticePolygon:
        if key.startswith(FIXTURE_PREFIX):
            return await self.fixtures.get_polygon(key.removeprefix(FIXTURE_PREFIX))
        return parse_polygon_file(key)

    async def list_keys(self) -> dict[str, list[str]]:
        keys = await self.fixtures.list_keys()
        return {
            kind: [f"{FIXTURE_PREFIX}{name}" for name in names]
            for kind, names in keys.items()
        }
