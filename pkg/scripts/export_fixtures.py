"""Write the built-in fixtures as JSON documents.

The output directory can be used as FIXTURES_DIR; files added next to the
exported ones become new fixtures.

    python -m scripts.export_fixtures [directory]
"""

import asyncio
import json
import sys
from pathlib import Path
from typing import Any

from toricdef.infrastructure.repositories.fixtures import (
    FIXTURE_CONES,
    FIXTURE_POLYGONS,
)

SAMPLE_POLYGONS: dict[str, dict[str, Any]] = {
    "pentagon": {"vertices": [[0, 0], [1, 0], [2, 1], [1, 2], [0, 1]]},
}


async def write_documents(folder: Path, documents: dict[str, dict[str, Any]]) -> int:
    """Write one ``<name>.json`` per document."""
    folder.mkdir(parents=True, exist_ok=True)
    for name, document in sorted(documents.items()):
        path = folder / f"{name}.json"
        path.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    return len(documents)


async def export_fixtures(directory: Path) -> None:
    """Export cones and polygons under ``directory``."""
    print(f"📂 Exporting fixtures to {directory}")

    cones = await write_documents(directory / "cones", FIXTURE_CONES)
    print(f"✅ Wrote {cones} cones")

    polygons = await write_documents(
        directory / "polygons", {**FIXTURE_POLYGONS, **SAMPLE_POLYGONS}
    )
    print(f"✅ Wrote {polygons} polygons")

    print("\n📋 Usage:")
    print(f"FIXTURES_DIR={directory} toricdef gorenstein --polygon fixture:pentagon")


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fixtures")
    asyncio.run(export_fixtures(target))
