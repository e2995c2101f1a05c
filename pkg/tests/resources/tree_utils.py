# tests/resources/tree_utils.py

"""
Shared helpers for framework tests: fixture paths, hypothesis strategies for
random six-layer schemas, and an independent recursive-mean oracle.
"""

from pathlib import Path
from typing import Any, Dict, List, Tuple

from hypothesis import strategies as st

from layerscore.framework.types import Layer

DATA_DIR = Path(__file__).parent / "data"

REFERENCE_SCORES = {
    "5": 54.5,
    "8": 50.0,
    "1": 51.1,
    "7": 55.8,
    "6": 85.0,
    "2": 72.0,
    "3": 47.5,
    "4": 59.0,
}

REFERENCE_LAYERS = {
    Layer.ORGANIZATION: 54.5,
    Layer.STAKEHOLDER: 50.0,
    Layer.TOOL_TECHNOLOGY: 53.45,
    Layer.POLICY: 78.5,
    Layer.CULTURE: 47.5,
    Layer.KNOWLEDGE: 59.0,
}

REFERENCE_OVERALL = 342.95 / 6

MAX_DEPTH = 5
MAX_BRANCHING = 6
NODES_PER_LAYER = 9


@st.composite
def schema_documents(draw: Any, scale: float = 100.0) -> Dict[str, Any]:
    """Random schema documents: six layers, depth <= 5, branching 1..6."""

    def subtree(node_id: str, depth: int, budget: List[int]) -> Dict[str, Any]:
        budget[0] -= 1
        children: List[Dict[str, Any]] = []
        if depth < MAX_DEPTH and budget[0] > 0:
            count = draw(st.integers(0, min(MAX_BRANCHING, budget[0])))
            children = [
                subtree(f"{node_id}.{index}", depth + 1, budget)
                for index in range(1, count + 1)
            ]
        return {"id": node_id, "title": f"Node {node_id}", "children": children}

    layers: Dict[str, List[Dict[str, Any]]] = {}
    for layer in Layer:
        budget = [NODES_PER_LAYER]
        roots = draw(st.integers(1, 3))
        prefix = layer.value[:3]
        layers[layer.value] = [
            subtree(f"{prefix}{index}", 1, budget) for index in range(1, roots + 1)
        ]
    return {"name": "random", "scale": scale, "layers": layers}


def document_leaves(document: Dict[str, Any]) -> List[str]:
    leaves: List[str] = []

    def visit(node: Dict[str, Any]) -> None:
        if not node["children"]:
            leaves.append(node["id"])
        for child in node["children"]:
            visit(child)

    for layer in Layer:
        for root in document["layers"][layer.value]:
            visit(root)
    return leaves


@st.composite
def documents_with_scores(
    draw: Any, scale: float = 100.0
) -> Tuple[Dict[str, Any], Dict[str, float]]:
    document = draw(schema_documents(scale=scale))
    scores = {
        leaf: draw(st.floats(0.0, scale, allow_nan=False, allow_infinity=False))
        for leaf in document_leaves(document)
    }
    return document, scores


def reversed_document(document: Dict[str, Any]) -> Dict[str, Any]:
    """Same tree with every list of siblings (and of roots) reversed."""

    def flip(node: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "id": node["id"],
            "title": node["title"],
            "children": [flip(child) for child in reversed(node["children"])],
        }

    return {
        "name": document["name"],
        "scale": document["scale"],
        "layers": {
            key: [flip(root) for root in reversed(roots)]
            for key, roots in document["layers"].items()
        },
    }


def oracle(
    document: Dict[str, Any], scores: Dict[str, float]
) -> Tuple[Dict[str, float], Dict[str, float], float]:
    """
    Naive recursive mean over the raw document.

    Returns (node values, layer values keyed by layer name, overall).
    """
    nodes: Dict[str, float] = {}

    def value(node: Dict[str, Any]) -> float:
        if not node["children"]:
            result = scores[node["id"]]
        else:
            values = [value(child) for child in node["children"]]
            result = sum(values) / len(values)
        nodes[node["id"]] = result
        return result

    layers: Dict[str, float] = {}
    for key, roots in document["layers"].items():
        values = [value(root) for root in roots]
        layers[key] = sum(values) / len(values)
    overall = sum(layers.values()) / len(layers)
    return nodes, layers, overall
