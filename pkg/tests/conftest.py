import os
import sys

from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))

sys.path.insert(0, os.path.dirname(__file__))
