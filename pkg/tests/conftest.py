import cmath

import pytest
from hypothesis import settings

from braidhc.cyclo import cyclotomic_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def embed(x):
    """Complex value of a scalar under zeta -> exp(2 pi i / n)."""
    z = cmath.exp(2j * cmath.pi / x.field.n)
    return sum(complex(c) * z ** k for k, c in enumerate(x.coeffs))


@pytest.fixture
def q3():
    return cyclotomic_field(3)
