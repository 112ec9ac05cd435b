import numpy as np
import pytest
from hypothesis import HealthCheck, settings

# JIT warmup in the first example would trip the default deadline.
settings.register_profile(
    "idamp",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("idamp")


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
