import hypothesis

# Quadrature-backed properties are orders of magnitude slower than pure
# arithmetic; a wall-clock deadline would just make them flaky.
hypothesis.settings.register_profile(
    "numerics", deadline=None, max_examples=60,
    derandomize=True,
)
hypothesis.settings.load_profile("numerics")
