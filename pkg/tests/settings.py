"""
Hypothesis settings profiles shared by the property tests.

Usage:
    from tests.settings import STANDARD_SETTINGS

    @given(sigma=signed_permutations())
    @STANDARD_SETTINGS
    def test_something(sigma):
        ...

Tiers:
- STANDARD_SETTINGS: 100 examples, cheap group-level properties
- SLOW_SETTINGS: 50 examples, properties that enumerate extensions or build modules
- QUICK_SETTINGS: 20 examples, properties that certify isomorphisms
"""

from hypothesis import HealthCheck, settings

STANDARD_SETTINGS = settings(max_examples=100, deadline=None)

SLOW_SETTINGS = settings(max_examples=50, deadline=None,
                         suppress_health_check=[HealthCheck.too_slow])

QUICK_SETTINGS = settings(max_examples=20, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
