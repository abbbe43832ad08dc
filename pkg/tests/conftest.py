from hypothesis import HealthCheck, settings

settings.register_profile(
    "fixed",
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("fixed")
