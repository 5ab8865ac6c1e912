import math
from fractions import Fraction

import numpy as np

from chebkit.chebsearch import least_prime_quadratic
from chebkit.dataclasses import Check, ExponentTerm, RepulsionBound, Variant, WeightSpec
from chebkit.serializers import EnumSerializer, to_representation


def test_string_members_are_represented_by_value():
    assert EnumSerializer().to_representation(Variant.ALL_ZEROS) == "all-zeros"
    assert to_representation(Variant.NO_ARCH_REAL) == "no-arch-real"


def test_numbers():
    assert to_representation(1 / 3) == 0.333333333333
    assert to_representation(1 / 3, digits=3) == 0.333
    assert to_representation(Fraction(1, 4)) == 0.25
    assert to_representation(np.float64(2.5)) == 2.5
    assert to_representation(np.int64(7)) == 7
    assert to_representation(np.bool_(True)) is True
    assert to_representation(1 + 2j) == [1.0, 2.0]
    assert to_representation(math.inf) == "inf"
    assert to_representation(np.arange(3)) == [0, 1, 2]
    assert to_representation(10**40) == 10**40


def test_repulsion_bound_reports_properties():
    bound = RepulsionBound(1.0, 3.07, 1.488287, 35.8, Variant.ALL_ZEROS, 1.5)
    data = to_representation(bound)
    assert data["reported_K"] == 1.4883
    assert data["variant"] == "all-zeros"
    assert data["passed"] is True
    assert data["margin"] == to_representation(35.8 - 24 * 1.488287)


def test_plain_dataclasses_and_mappings():
    spec = to_representation(WeightSpec(2, 1.5, 7.41))
    assert spec == {"ell": 2, "A": 1.5, "B": 7.41, "decay": 1.41}
    term = to_representation(ExponentTerm(Fraction(3), -18.75, "x"))
    assert term == {"k": 3.0, "c": -18.75, "label": "x"}
    check = to_representation({"first": Check.less("a < b", 1, 2)})
    assert check["first"]["relation"] == "<"
    assert check["first"]["margin"] == 1.0


def test_search_record():
    data = to_representation(least_prime_quadratic(5, 1))
    assert data["field"]["name"] == "Q(sqrt(5))"
    assert data["field"]["kind"] == "quadratic"
    assert data["least_prime"] == 11
    assert data["bound_pass"] is True


def test_exceptions_become_messages():
    assert to_representation([ValueError("bad")]) == ["bad"]
