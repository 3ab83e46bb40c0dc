"""The built-in group catalog, shipped as package data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .core import FiniteGroup
from .specs import parse_group_spec


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: str
    order: int
    expected_d: int | None = None
    d_note: str = ""
    tags: tuple[str, ...] = ()

    def build(self, order_cap: int | None = None) -> FiniteGroup:
        return parse_group_spec(self.spec, order_cap=order_cap)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "spec": self.spec,
            "order": self.order,
            "expected_d": self.expected_d,
            "d_note": self.d_note,
            "tags": list(self.tags),
        }


def load_catalog() -> list[CatalogEntry]:
    raw = resources.files("flexgroup.data").joinpath("catalog.json").read_text()
    doc = json.loads(raw)
    out = []
    for e in doc["entries"]:
        out.append(CatalogEntry(
            name=e["name"],
            spec=e["spec"],
            order=e["order"],
            expected_d=e.get("expected_d"),
            d_note=e.get("d_note", ""),
            tags=tuple(e.get("tags", ())),
        ))
    return out


def filter_entries(entries: list[CatalogEntry], *, max_order: int | None = None,
                   tags: list[str] | None = None) -> list[CatalogEntry]:
    out = entries
    if max_order is not None:
        out = [e for e in out if e.order <= max_order]
    if tags:
        wanted = set(tags)
        out = [e for e in out if wanted & set(e.tags)]
    return out
