# src/layerscore/framework/internal/misa.py

"""
Built-in Multimedia Information Security Architecture (MISA) schema.

The eight MISA controls are leaves of the built-in schema; users who assess
individual sections export it (``layerscore schema``) and add "n.1", "n.2"...
children under each control.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from layerscore.core.exceptions import UnknownControlError
from layerscore.framework.types import FrameworkSchema, Layer, RawSchemaDoc

from .validation import validate_schema

MISA_SCHEMA_NAME = "MISA"
MISA_SCALE = 100.0
BUILTIN_MISA_REF = "builtin:misa"


@dataclass(frozen=True)
class MisaControl:
    """One of the eight MISA controls and the layer it is assessed under."""

    control_number: int
    title: str
    layer: Layer
    description: str

    @property
    def node_id(self) -> str:
        return str(self.control_number)


# Ordered by layer, the way the layer mapping table lists them.
MISA_CONTROLS: Tuple[MisaControl, ...] = (
    MisaControl(
        5,
        "Security Program",
        Layer.ORGANIZATION,
        "Recommendations for improving the security of computer systems and the "
        "information on them, security initiatives and priorities, and high level "
        "threat and risk analysis.",
    ),
    MisaControl(
        8,
        "Security Awareness",
        Layer.STAKEHOLDER,
        "The knowledge and attitude members of an organization possess regarding "
        "the protection of its physical and, especially, information assets.",
    ),
    MisaControl(
        1,
        "Security Infrastructure",
        Layer.TOOL_TECHNOLOGY,
        "All infrastructure components affecting information security, especially "
        "those directly related to multimedia information.",
    ),
    MisaControl(
        7,
        "Enterprise Security",
        Layer.TOOL_TECHNOLOGY,
        "A rigorous method for describing the structure and behavior of security "
        "processes, systems, personnel and sub-units so they align with the "
        "organization's core goals.",
    ),
    MisaControl(
        6,
        "Multimedia Information Sharing",
        Layer.POLICY,
        "Critical relationships among key multimedia information resources for "
        "sharing information with other relevant components.",
    ),
    MisaControl(
        2,
        "Security Policies",
        Layer.POLICY,
        "Measures taken by an organization with respect to its information "
        "security, typically following an established security standard.",
    ),
    MisaControl(
        3,
        "Security Culture",
        Layer.CULTURE,
        "Recognizing the importance of collaboration and governance; the values "
        "and behaviors shaping the organization's security environment.",
    ),
    MisaControl(
        4,
        "Monitoring Compliance",
        Layer.KNOWLEDGE,
        "Reconciling existing multimedia information against a benchmark standard "
        "that guides and limits the object and domain.",
    ),
)

_BY_NUMBER: Dict[int, MisaControl] = {c.control_number: c for c in MISA_CONTROLS}


def misa_controls() -> Tuple[MisaControl, ...]:
    """The eight MISA controls in layer-mapping order."""
    return MISA_CONTROLS


def misa_control(control_number: int) -> MisaControl:
    """
    Look up a MISA control by number.

    Raises:
        UnknownControlError: For numbers outside 1..8.
    """
    if isinstance(control_number, bool) or control_number not in _BY_NUMBER:
        raise UnknownControlError(control_number)
    return _BY_NUMBER[control_number]


def layer_of_control(control_number: int) -> Layer:
    """
    Return the layer a MISA control is assessed under.

    Args:
        control_number (int): Control number in 1..8.

    Returns:
        Layer: The layer from the MISA layer mapping.

    Raises:
        UnknownControlError: For numbers outside 1..8.
    """
    return misa_control(control_number).layer


def _misa_document() -> RawSchemaDoc:
    layers: Dict[Layer, List[dict]] = {layer: [] for layer in Layer}
    for control in MISA_CONTROLS:
        layers[control.layer].append(
            {"id": control.node_id, "title": control.title, "children": []}
        )
    return RawSchemaDoc.model_validate(
        {"name": MISA_SCHEMA_NAME, "scale": MISA_SCALE, "layers": layers}
    )


@lru_cache(maxsize=1)
def misa_framework() -> FrameworkSchema:
    """
    The built-in MISA schema: six layers, eight control leaves, scale 100.

    Construction goes through ``validate_schema``; a failure here is a defect
    in the control table above.
    """
    return validate_schema(_misa_document())


def control_title(control_number: int) -> str:
    """Title of a MISA control, e.g. ``control_title(5) == "Security Program"``."""
    return misa_control(control_number).title
