"""Reference catalog of arc presentations with certified Alexander polynomials."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .bounds import arc_index_upper
from .formats import SchemaError, read_presentation
from .grid import ArcPresentation, KnotMeta
from .laurent import LaurentPolynomial, equal_up_to_units
from .verify import alexander_from_arcs

MANIFEST = "manifest.json"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    meta: KnotMeta
    presentation: ArcPresentation
    reference_alexander: LaurentPolynomial
    known_minimal_length: int | None = None
    file: str = ""

    @property
    def name(self) -> str:
        return self.meta.name


def default_catalog_dir() -> Path:
    return Path(str(resources.files("knotforge") / "data" / "catalog"))


def load_catalog(directory=None) -> list[CatalogEntry]:
    """Load and certify every manifest entry, sorted by knot name.

    Each presentation must fit under the arc-index bound for its class
    and reproduce the reference Alexander polynomial up to units.
    """
    directory = Path(directory) if directory is not None else default_catalog_dir()
    manifest_path = directory / MANIFEST
    if not manifest_path.is_file():
        raise CatalogError(f"{directory}: no entries (missing {MANIFEST})")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    rows = manifest.get("entries", [])
    if not rows:
        raise CatalogError(f"{directory}: no entries")
    out = []
    for row in rows:
        fname = row["file"]
        try:
            ap, meta = read_presentation(directory / fname)
        except (OSError, SchemaError) as exc:
            raise CatalogError(f"{fname}: {exc}") from exc
        ref = LaurentPolynomial.from_json(row["alexander"])
        limit = arc_index_upper(meta)
        if ap.n > limit:
            raise CatalogError(f"{fname}: {ap.n} arcs exceed the arc index bound {limit}")
        got = alexander_from_arcs(ap)
        if not equal_up_to_units(got, ref):
            raise CatalogError(f"{fname}: Alexander polynomial {got} does not match reference {ref}")
        out.append(CatalogEntry(meta, ap, ref, row.get("minimal_length"), fname))
    return sorted(out, key=lambda e: _name_key(e.name))


def _name_key(name: str):
    parts = name.split("_")
    try:
        return tuple(int(p) for p in parts), name
    except ValueError:
        return (10**9,), name
