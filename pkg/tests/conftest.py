from hypothesis import HealthCheck, settings

# Deterministic property tests: derandomize replays the same example set on
# every run, so CI results are reproducible.
settings.register_profile(
    "det",
    derandomize=True,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("det")
