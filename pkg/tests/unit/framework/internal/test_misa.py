# tests/unit/framework/internal/test_misa.py

import pytest

from layerscore.core.exceptions import UnknownControlError
from layerscore.framework.internal.misa import (
    BUILTIN_MISA_REF,
    control_title,
    layer_of_control,
    misa_control,
    misa_controls,
    misa_framework,
)
from layerscore.framework.types import Layer


@pytest.mark.parametrize(
    "control_number, layer",
    [
        (5, Layer.ORGANIZATION),
        (8, Layer.STAKEHOLDER),
        (1, Layer.TOOL_TECHNOLOGY),
        (7, Layer.TOOL_TECHNOLOGY),
        (6, Layer.POLICY),
        (2, Layer.POLICY),
        (3, Layer.CULTURE),
        (4, Layer.KNOWLEDGE),
    ],
)
def test_layer_of_control(control_number, layer):
    assert layer_of_control(control_number) is layer


@pytest.mark.parametrize("control_number", [0, 9, -1, True])
def test_unknown_control(control_number):
    with pytest.raises(UnknownControlError) as exc_info:
        layer_of_control(control_number)

    assert exc_info.value.code == "E_UNKNOWN_CONTROL"


def test_controls_follow_layer_mapping_order():
    assert [c.control_number for c in misa_controls()] == [5, 8, 1, 7, 6, 2, 3, 4]
    assert misa_control(7).title == "Enterprise Security"
    assert control_title(6) == "Multimedia Information Sharing"
    assert all(control.description for control in misa_controls())


def test_builtin_schema_shape():
    schema = misa_framework()

    assert schema.name == "MISA"
    assert schema.scale == 100.0
    assert BUILTIN_MISA_REF == "builtin:misa"
    assert schema.leaf_ids() == ["5", "8", "1", "7", "6", "2", "3", "4"]
    assert [len(schema.roots(layer)) for layer in Layer] == [1, 1, 2, 2, 1, 1]
    assert schema.internal_ids() == []


def test_builtin_schema_is_cached():
    assert misa_framework() is misa_framework()


def test_builtin_schema_agrees_with_control_table():
    schema = misa_framework()

    for control in misa_controls():
        assert schema.layer_of(control.node_id) is control.layer
        assert schema.node(control.node_id).title == control.title
