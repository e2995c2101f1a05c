"""
Raw document models.

These mirror the on-disk formats and check syntactic shape only (required
fields, types, id syntax). Structural rules such as prefix nesting, id
uniqueness and layer population belong to ``validate_schema``.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, Field, StrictFloat, StrictInt, StrictStr

from .types import Layer, id_sort_key

NODE_ID_PATTERN = r"^[^.\s]+(\.[^.\s]+)*$"


class RawNode(BaseModel):
    """A node as written in a schema document."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    id: StrictStr = Field(..., pattern=NODE_ID_PATTERN)
    title: StrictStr = Field(..., min_length=1)
    children: List["RawNode"]


class RawSchemaDoc(BaseModel):
    """A framework schema document: ``{"name", "scale", "layers"}``."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: StrictStr
    scale: StrictInt | StrictFloat
    layers: Dict[Layer, List[RawNode]]


@dataclass(frozen=True)
class RawScoresDoc:
    """An assessment scores document: a name and (node_id, score) pairs."""

    name: str
    pairs: Tuple[Tuple[str, float], ...]

    def as_mapping(self) -> Mapping[str, float]:
        return dict(self.pairs)

    def normalized(self) -> Tuple[Tuple[str, float], ...]:
        """Pairs ordered by node id, for comparisons across formats."""
        return tuple(sorted(self.pairs, key=lambda pair: id_sort_key(pair[0])))
