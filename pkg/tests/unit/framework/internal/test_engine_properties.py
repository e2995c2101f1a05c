# tests/unit/framework/internal/test_engine_properties.py

"""
Property-based checks of the aggregation engine on random schemas.

Assessments are built directly (not through ``bind_assessment``) where a
property needs to step outside the [0, scale] range, e.g. affine maps.
"""

import math

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from layerscore.framework.internal.engine import evaluate, gap_report, sensitivities
from layerscore.framework.internal.validation import bind_assessment, validate_schema
from layerscore.framework.types import Assessment, Layer
from tests.resources.tree_utils import (
    document_leaves,
    documents_with_scores,
    oracle,
    reversed_document,
    schema_documents,
)

PROPERTY_SETTINGS = settings(
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)


def close(a, b, tol):
    return math.isclose(a, b, rel_tol=0.0, abs_tol=tol)


@settings(
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
@given(documents_with_scores())
def test_evaluate_matches_naive_oracle(case):
    document, scores = case
    schema = validate_schema(document)

    result = evaluate(schema, bind_assessment(schema, scores))
    nodes, layers, overall = oracle(document, scores)

    for node_id, expected in nodes.items():
        assert close(result.value(node_id), expected, 1e-12)
    for layer in Layer:
        assert close(result.per_layer[layer].value, layers[layer.value], 1e-12)
    assert close(result.overall, overall, 1e-12)


@PROPERTY_SETTINGS
@given(documents_with_scores())
def test_values_bounded_by_leaf_scores(case):
    document, scores = case
    schema = validate_schema(document)

    result = evaluate(schema, bind_assessment(schema, scores))

    low, high = min(scores.values()), max(scores.values())
    assert low - 1e-12 <= result.overall <= high + 1e-12
    for layer in Layer:
        for root in schema.roots(layer):
            for node in root.walk():
                leaf_scores = [scores[leaf.id] for leaf in node.leaves()]
                value = result.value(node.id)
                assert min(leaf_scores) - 1e-12 <= value <= max(leaf_scores) + 1e-12


@PROPERTY_SETTINGS
@given(schema_documents(), st.floats(0.0, 100.0, allow_nan=False))
def test_uniform_input_is_idempotent(document, constant):
    schema = validate_schema(document)
    scores = {leaf_id: constant for leaf_id in schema.leaf_ids()}

    result = evaluate(schema, bind_assessment(schema, scores))

    assert close(result.overall, constant, 1e-12)
    for layer_value in result.per_layer.values():
        assert close(layer_value.value, constant, 1e-12)
    for node_value in result.per_node.values():
        assert close(node_value.value, constant, 1e-12)


@PROPERTY_SETTINGS
@given(documents_with_scores())
def test_child_order_does_not_matter(case):
    document, scores = case
    schema = validate_schema(document)
    flipped = validate_schema(reversed_document(document))

    original = evaluate(schema, bind_assessment(schema, scores))
    permuted = evaluate(flipped, bind_assessment(flipped, scores))

    assert close(original.overall, permuted.overall, 1e-12)
    for node_id in schema.node_ids():
        assert close(original.value(node_id), permuted.value(node_id), 1e-12)


@PROPERTY_SETTINGS
@given(documents_with_scores(), st.data())
def test_raising_one_leaf_raises_overall_by_its_sensitivity(case, data):
    document, scores = case
    schema = validate_schema(document)
    room = [leaf for leaf in schema.leaf_ids() if scores[leaf] <= schema.scale - 1e-3]
    assume(room)
    leaf_id = data.draw(st.sampled_from(room))
    delta = data.draw(st.floats(1e-3, schema.scale - scores[leaf_id]))

    before = evaluate(schema, bind_assessment(schema, scores))
    raised = dict(scores, **{leaf_id: scores[leaf_id] + delta})
    after = evaluate(schema, Assessment(name="raised", scores=raised))

    weight = sensitivities(schema)[leaf_id]
    for node in schema.path_to(leaf_id):
        assert after.value(node.id) > before.value(node.id)
    layer = schema.layer_of(leaf_id)
    assert after.per_layer[layer].value > before.per_layer[layer].value
    assert after.overall > before.overall
    assert close(after.overall - before.overall, delta * weight, 1e-9)


@PROPERTY_SETTINGS
@given(
    documents_with_scores(),
    st.floats(0.1, 10.0, allow_nan=False),
    st.floats(-100.0, 100.0, allow_nan=False),
)
def test_affine_maps_commute_with_evaluation(case, a, b):
    document, scores = case
    schema = validate_schema(document)

    base = evaluate(schema, Assessment(name="base", scores=scores))
    mapped = evaluate(
        schema,
        Assessment(
            name="mapped",
            scores={leaf_id: a * value + b for leaf_id, value in scores.items()},
        ),
    )

    assert close(mapped.overall, a * base.overall + b, 1e-9)
    for layer in Layer:
        assert close(
            mapped.per_layer[layer].value, a * base.per_layer[layer].value + b, 1e-9
        )
    for node_id, node_value in base.per_node.items():
        assert close(mapped.value(node_id), a * node_value.value + b, 1e-9)


@PROPERTY_SETTINGS
@given(documents_with_scores())
def test_ranking_puts_highest_priority_first(case):
    document, scores = case
    schema = validate_schema(document)

    report = gap_report(evaluate(schema, bind_assessment(schema, scores)))
    ranked = report.ranked()

    assert sorted(report.ranking, key=lambda layer: layer.rank) == list(Layer)
    for first, second in zip(ranked, ranked[1:]):
        assert first.achievement <= second.achievement
        assert first.priority >= second.priority
        if first.achievement == second.achievement:
            assert first.layer.rank < second.layer.rank
    assert report.weakest is ranked[0].layer
    assert ranked[0].priority == max(gap.priority for gap in report.layers)
    assert ranked[0].achievement == min(gap.achievement for gap in report.layers)
    assert report.gap(report.strongest).achievement == max(
        gap.achievement for gap in report.layers
    )


@settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
@given(documents_with_scores())
def test_sensitivities_match_finite_differences(case):
    document, scores = case
    schema = validate_schema(document)
    weights = sensitivities(schema)
    step = 1e-4 * schema.scale

    assert list(weights) == document_leaves(document)
    assert math.fsum(weights.values()) == pytest.approx(1.0, abs=1e-9)
    for leaf_id, weight in weights.items():
        up = dict(scores, **{leaf_id: scores[leaf_id] + step})
        down = dict(scores, **{leaf_id: scores[leaf_id] - step})
        slope = (
            evaluate(schema, Assessment(name="up", scores=up)).overall
            - evaluate(schema, Assessment(name="down", scores=down)).overall
        ) / (2 * step)
        assert slope == pytest.approx(weight, rel=1e-6)
