import numpy as np
import pytest
from hypothesis import given

from janowski_schwarzian import DomainError, RegionClass, classify, validate
from janowski_schwarzian.params import classify_from, in_E1, in_E2, in_E3

from conftest import janowski_params


def test_validate_endpoint_allowed():
    p = validate(1, -1)
    assert (p.A, p.B) == (1.0, -1.0)


@pytest.mark.parametrize("A,B", [(0.5, 0.5), (1.1, 0.0), (0.0, -1.2), (-0.3, 0.2)])
def test_validate_rejects(A, B):
    with pytest.raises(DomainError):
        validate(A, B)


@pytest.mark.parametrize(
    "A,B,region",
    [(1, 0, RegionClass.E1), (1, -1, RegionClass.E2), (-0.5, -1, RegionClass.E3),
     (0.5, -0.5, RegionClass.E2), (0.0, -1.0, RegionClass.E2)],
)
def test_classify_examples(A, B, region):
    assert classify(validate(A, B)) is region


def _grid(n=400):
    for B in np.linspace(-1.0, 1.0, n, endpoint=False):
        for A in np.linspace(B, 1.0, n + 1)[1:]:
            yield validate(A, B)


def test_partition_on_grid():
    count = 0
    for p in _grid():
        members = [in_E1(p), in_E2(p), in_E3(p)]
        assert sum(members) == 1, p
        assert classify(p) is [RegionClass.E1, RegionClass.E2, RegionClass.E3][members.index(True)]
        if classify(p) is RegionClass.E3:
            assert p.absB >= p.root
        count += 1
    assert count == 400 * 400


@given(janowski_params())
def test_classify_depends_on_moduli_only(p):
    assert classify_from(abs(p.A + p.B), abs(p.B)) is classify(p)
