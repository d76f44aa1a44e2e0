from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hochschild.checks import canonical_codifferentials

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def codiffs():
    return canonical_codifferentials()


small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)
nonzero_rationals = small_rationals.filter(bool)
