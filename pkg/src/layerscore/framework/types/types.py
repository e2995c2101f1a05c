"""
Framework, assessment and evaluation result types.

Usage:
    from layerscore.framework.types import Layer, SchemaNode, FrameworkSchema

    node = SchemaNode(id="5", title="Security Program")
    schema = FrameworkSchema(
        name="demo", scale=100.0, layers={Layer.ORGANIZATION: (node,), ...}
    )

All types are immutable once constructed; schemas and assessments only come
out of ``validate_schema`` / ``bind_assessment`` in a valid state.
"""

from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple


class Layer(str, Enum):
    """The six top-level domains every framework schema is divided into."""

    ORGANIZATION = "organization"
    STAKEHOLDER = "stakeholder"
    TOOL_TECHNOLOGY = "tool_technology"
    POLICY = "policy"
    CULTURE = "culture"
    KNOWLEDGE = "knowledge"

    @property
    def display_name(self) -> str:
        return _LAYER_TITLES[self]

    @property
    def description(self) -> str:
        return _LAYER_DESCRIPTIONS[self]

    @property
    def rank(self) -> int:
        """Position in the fixed enumeration order; used to break ties."""
        return _LAYER_ORDER.index(self)


_LAYER_ORDER: Tuple[Layer, ...] = tuple(Layer)

_LAYER_TITLES: Dict[Layer, str] = {
    Layer.ORGANIZATION: "Organization",
    Layer.STAKEHOLDER: "Stakeholder",
    Layer.TOOL_TECHNOLOGY: "Tool & Technology",
    Layer.POLICY: "Policy",
    Layer.CULTURE: "Culture",
    Layer.KNOWLEDGE: "Knowledge",
}

_LAYER_DESCRIPTIONS: Dict[Layer, str] = {
    Layer.ORGANIZATION: (
        "A social unit of people, systematically structured and managed to meet "
        "a need or to pursue collective goals on a continuing basis."
    ),
    Layer.STAKEHOLDER: (
        "A person, group or organization with a direct or indirect stake in the "
        "organization, able to affect or be affected by its actions and policies."
    ),
    Layer.TOOL_TECHNOLOGY: (
        "The technology the service is based on: tangible artifacts such as "
        "blueprints, models and manuals, and intangible ones such as consultancy "
        "and training methods."
    ),
    Layer.POLICY: (
        "Principles or rules that guide decisions toward rational outcomes, "
        "including policy on the future development of the service."
    ),
    Layer.CULTURE: (
        "What is acceptable or unacceptable, important or unimportant; the "
        "values and behaviors forming the social environment of the organization."
    ),
    Layer.KNOWLEDGE: (
        "The sum of what is known, residing in the intelligence and competence "
        "of people; recognized as a factor of production."
    ),
}


def id_sort_key(node_id: str) -> Tuple[Tuple[int, int, str], ...]:
    """Natural ordering for dotted ids: "2" < "10", "5.2" < "5.10"."""
    return tuple(
        (0, int(part), "") if part.isdigit() else (1, 0, part)
        for part in node_id.split(".")
    )


@dataclass(frozen=True)
class SchemaNode:
    """A node of the framework tree. Nodes without children are leaves."""

    id: str
    title: str
    children: Tuple["SchemaNode", ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def walk(self) -> Iterator["SchemaNode"]:
        """Depth-first pre-order traversal, this node first."""
        yield self
        for child in self.children:
            yield from child.walk()

    def leaves(self) -> Iterator["SchemaNode"]:
        return (node for node in self.walk() if node.is_leaf)


@dataclass(frozen=True)
class FrameworkSchema:
    """
    A validated N-level framework tree.

    ``layers`` maps each Layer to its ordered root nodes. Lookup indexes are
    built once at construction; use ``validate_schema`` to obtain instances
    from untrusted input.
    """

    name: str
    scale: float
    layers: Mapping[Layer, Tuple[SchemaNode, ...]]
    _nodes: Mapping[str, SchemaNode] = field(init=False, repr=False, compare=False)
    _parents: Mapping[str, Optional[str]] = field(
        init=False, repr=False, compare=False
    )
    _layer_of: Mapping[str, Layer] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ordered = {
            layer: tuple(self.layers[layer]) for layer in Layer if layer in self.layers
        }
        nodes: Dict[str, SchemaNode] = {}
        parents: Dict[str, Optional[str]] = {}
        layer_of: Dict[str, Layer] = {}
        for layer, roots in ordered.items():
            for root in roots:
                parents.setdefault(root.id, None)
                for node in root.walk():
                    nodes.setdefault(node.id, node)
                    layer_of.setdefault(node.id, layer)
                    for child in node.children:
                        parents.setdefault(child.id, node.id)
        object.__setattr__(self, "scale", float(self.scale))
        object.__setattr__(self, "layers", MappingProxyType(ordered))
        object.__setattr__(self, "_nodes", MappingProxyType(nodes))
        object.__setattr__(self, "_parents", MappingProxyType(parents))
        object.__setattr__(self, "_layer_of", MappingProxyType(layer_of))

    def __contains__(self, node_id: object) -> bool:
        return node_id in self._nodes

    def node(self, node_id: str) -> SchemaNode:
        return self._nodes[node_id]

    def roots(self, layer: Layer) -> Tuple[SchemaNode, ...]:
        return self.layers[layer]

    def layer_of(self, node_id: str) -> Layer:
        return self._layer_of[node_id]

    def parent_of(self, node_id: str) -> Optional[SchemaNode]:
        parent_id = self._parents[node_id]
        return None if parent_id is None else self._nodes[parent_id]

    def path_to(self, node_id: str) -> Tuple[SchemaNode, ...]:
        """Chain of nodes from the layer root down to ``node_id`` inclusive."""
        chain: List[SchemaNode] = []
        current: Optional[str] = node_id
        while current is not None:
            chain.append(self._nodes[current])
            current = self._parents[current]
        return tuple(reversed(chain))

    def iter_nodes(self) -> Iterator[SchemaNode]:
        for roots in self.layers.values():
            for root in roots:
                yield from root.walk()

    def node_ids(self) -> List[str]:
        return [node.id for node in self.iter_nodes()]

    def leaf_ids(self) -> List[str]:
        """Leaf ids in layer order, depth-first within each layer."""
        return [node.id for node in self.iter_nodes() if node.is_leaf]

    def internal_ids(self) -> List[str]:
        return [node.id for node in self.iter_nodes() if not node.is_leaf]

    @property
    def layer_count(self) -> int:
        return len(self.layers)


@dataclass(frozen=True)
class Assessment:
    """Raw scores bound to the leaves of a schema."""

    name: str
    scores: Mapping[str, float]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "scores",
            MappingProxyType({key: float(value) for key, value in self.scores.items()}),
        )

    def score(self, leaf_id: str) -> float:
        return self.scores[leaf_id]


@dataclass(frozen=True)
class NodeValue:
    """Computed value of one schema node."""

    id: str
    value: float
    is_leaf: bool


@dataclass(frozen=True)
class LayerValue:
    """Computed value of a layer with its ideal and priority gap."""

    layer: Layer
    value: float
    ideal: float

    @property
    def achievement(self) -> float:
        return self.value

    @property
    def priority(self) -> float:
        return self.ideal - self.value


@dataclass(frozen=True)
class EvaluationResult:
    """Unrounded values for every node, every layer and the overall score."""

    schema_name: str
    assessment_name: str
    scale: float
    per_node: Mapping[str, NodeValue]
    per_layer: Mapping[Layer, LayerValue]
    overall: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "per_node", MappingProxyType(dict(self.per_node)))
        object.__setattr__(self, "per_layer", MappingProxyType(dict(self.per_layer)))

    def value(self, node_id: str) -> float:
        return self.per_node[node_id].value

    @property
    def readiness(self) -> float:
        """Overall score as a fraction of the ideal."""
        return self.overall / self.scale


@dataclass(frozen=True)
class LayerGap:
    layer: Layer
    ideal: float
    achievement: float
    priority: float


@dataclass(frozen=True)
class ControlGap:
    """Gap of a layer root node (a control, for the MISA schema)."""

    node_id: str
    title: str
    layer: Layer
    ideal: float
    achievement: float
    priority: float


@dataclass(frozen=True)
class GapReport:
    """
    Ideal/achievement/priority triples.

    ``layers`` follows the enumeration order; ``ranking`` lists layers by
    priority descending. ``controls`` is ordered by priority descending too,
    ties kept in schema order.
    """

    scale: float
    layers: Tuple[LayerGap, ...]
    ranking: Tuple[Layer, ...]
    controls: Tuple[ControlGap, ...] = ()

    def gap(self, layer: Layer) -> LayerGap:
        for entry in self.layers:
            if entry.layer is layer:
                return entry
        raise KeyError(layer)

    def ranked(self) -> List[LayerGap]:
        return [self.gap(layer) for layer in self.ranking]

    @property
    def weakest(self) -> Layer:
        """Layer with the lowest achievement (highest priority)."""
        return self.ranking[0]

    @property
    def strongest(self) -> Layer:
        """Layer with the highest achievement; ties go to the earlier layer."""
        return min(self.layers, key=lambda g: (-g.achievement, g.layer.rank)).layer
