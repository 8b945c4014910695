from hypothesis import HealthCheck, settings

# exact arithmetic has very uneven per-example cost; wall-clock deadlines
# would only make the suite flaky
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
