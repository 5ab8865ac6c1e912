"""
Conversion of result objects into JSON-ready mappings.

Each result type has a serializer naming the attributes it reports, properties
included. Floats are cut to SIGNIFICANT_DIGITS here and nowhere else.
"""

import dataclasses
import math
from collections import abc
from enum import Enum
from fractions import Fraction

import numpy as np

from chebkit import conf
from chebkit.dataclasses import (
    AbelianField,
    CaseCertificate,
    Check,
    ExponentTerm,
    RepulsionBound,
    Report,
    SearchRecord,
    Survey,
    TableRow,
    WeightSpec,
)
from chebkit.private.utils import significant


class Serializer:
    """Reports ``fields`` of an instance, each value represented recursively."""

    fields = ()

    def __init__(self, digits=conf.SIGNIFICANT_DIGITS):
        self.digits = digits

    def get_attribute(self, instance, name):
        return getattr(instance, name)

    def to_representation(self, instance):
        return {
            name: to_representation(self.get_attribute(instance, name), self.digits)
            for name in self.fields
        }


class EnumSerializer(Serializer):
    def to_representation(self, member):
        return member.value


class RepulsionBoundSerializer(Serializer):
    fields = (
        "T",
        "alpha",
        "K",
        "reported_K",
        "C",
        "variant",
        "correction",
        "margin",
        "passed",
    )


class TableRowSerializer(Serializer):
    fields = ("bound", "optimum", "tabled", "passed", "margin", "gap", "alpha_shift")


class CheckSerializer(Serializer):
    fields = ("description", "lhs", "relation", "rhs", "margin", "passed")


class CaseCertificateSerializer(Serializer):
    fields = ("case_name", "params", "checks", "overall", "min_margin")


class AbelianFieldSerializer(Serializer):
    fields = ("name", "kind", "param", "disc", "dL", "degree")

    def get_attribute(self, instance, name):
        if name == "name":
            return str(instance)
        return super().get_attribute(instance, name)


class SearchRecordSerializer(Serializer):
    fields = (
        "field",
        "class_label",
        "least_prime",
        "exponent_realized",
        "bound_pass",
    )


class SurveySerializer(Serializer):
    fields = ("records", "failures", "max_exponent", "overall_pass")


class WeightSpecSerializer(Serializer):
    fields = ("ell", "A", "B", "decay")


class ExponentTermSerializer(Serializer):
    fields = ("k", "c", "label")


class ReportSerializer(Serializer):
    fields = (
        "tool_version",
        "command",
        "params",
        "results",
        "overall_pass",
        "wallclock_ms",
    )


SERIALIZERS = {
    RepulsionBound: RepulsionBoundSerializer,
    TableRow: TableRowSerializer,
    Check: CheckSerializer,
    CaseCertificate: CaseCertificateSerializer,
    AbelianField: AbelianFieldSerializer,
    SearchRecord: SearchRecordSerializer,
    Survey: SurveySerializer,
    WeightSpec: WeightSpecSerializer,
    ExponentTerm: ExponentTermSerializer,
    Report: ReportSerializer,
}


def _number(value, digits):
    if isinstance(value, complex):
        return [_number(value.real, digits), _number(value.imag, digits)]
    value = float(value)
    if not math.isfinite(value):
        return str(value)
    return significant(value, digits)


def to_representation(value, digits=conf.SIGNIFICANT_DIGITS):
    """JSON-ready form of a result object, mapping, sequence or number."""
    serializer = SERIALIZERS.get(type(value))
    if serializer is not None:
        return serializer(digits).to_representation(value)

    if isinstance(value, Enum):
        return EnumSerializer(digits).to_representation(value)
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, complex, Fraction, np.floating, np.complexfloating)):
        return _number(value, digits)
    if isinstance(value, Exception):
        return str(value)
    if isinstance(value, np.ndarray):
        return [to_representation(item, digits) for item in value.tolist()]
    if dataclasses.is_dataclass(value):
        return {
            field.name: to_representation(getattr(value, field.name), digits)
            for field in dataclasses.fields(value)
        }
    if isinstance(value, abc.Mapping):
        return {
            str(key): to_representation(item, digits) for key, item in value.items()
        }
    if isinstance(value, abc.Iterable):
        return [to_representation(item, digits) for item in value]
    return str(value)
