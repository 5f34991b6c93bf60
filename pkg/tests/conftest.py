from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fig8char.numtower import Cyclo12

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

small_ints = st.integers(min_value=-12, max_value=12)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=7))
cyclos = st.builds(lambda a, b, c, d: Cyclo12(a, b, c, d), small_ints, small_ints, small_ints,
                   small_ints)
nonzero_cyclos = cyclos.filter(bool)
