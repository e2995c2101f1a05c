# tests/unit/framework/types/test_types.py

import pytest

from layerscore.framework.types import (
    FrameworkSchema,
    GapReport,
    Layer,
    LayerGap,
    RawScoresDoc,
    SchemaNode,
    id_sort_key,
)


def test_layer_enumeration_order_and_names():
    assert [layer.value for layer in Layer] == [
        "organization",
        "stakeholder",
        "tool_technology",
        "policy",
        "culture",
        "knowledge",
    ]
    assert [layer.rank for layer in Layer] == list(range(6))
    assert Layer.TOOL_TECHNOLOGY.display_name == "Tool & Technology"
    assert all(layer.description for layer in Layer)


def test_id_sort_key_is_natural():
    ids = ["10", "2", "5.10", "5.2", "5", "a"]

    assert sorted(ids, key=id_sort_key) == ["2", "5", "5.2", "5.10", "10", "a"]


def test_schema_node_walk_and_leaves():
    node = SchemaNode(
        "1",
        "One",
        (SchemaNode("1.1", "A", (SchemaNode("1.1.1", "AA"),)), SchemaNode("1.2", "B")),
    )

    assert [n.id for n in node.walk()] == ["1", "1.1", "1.1.1", "1.2"]
    assert [n.id for n in node.leaves()] == ["1.1.1", "1.2"]
    assert not node.is_leaf


def test_framework_schema_indexes():
    schema = FrameworkSchema(
        name="tiny",
        scale=5,
        layers={
            Layer.CULTURE: (SchemaNode("c", "C", (SchemaNode("c.1", "C1"),)),),
            Layer.ORGANIZATION: (SchemaNode("o", "O"),),
        },
    )

    assert list(schema.layers) == [Layer.ORGANIZATION, Layer.CULTURE]
    assert schema.scale == 5.0
    assert schema.layer_count == 2
    assert "c.1" in schema and "x" not in schema
    assert schema.parent_of("c.1").id == "c"
    assert schema.node_ids() == ["o", "c", "c.1"]


def test_raw_scores_normalized_order():
    document = RawScoresDoc(name="x", pairs=(("10", 1.0), ("2", 2.0), ("2.1", 3.0)))

    assert [node_id for node_id, _ in document.normalized()] == ["2", "2.1", "10"]


def test_gap_report_lookup():
    gaps = GapReport(
        scale=100.0,
        layers=(LayerGap(Layer.POLICY, 100.0, 40.0, 60.0),),
        ranking=(Layer.POLICY,),
    )

    assert gaps.gap(Layer.POLICY).priority == 60.0
    with pytest.raises(KeyError):
        gaps.gap(Layer.CULTURE)
