import hypothesis

# one core, exact arithmetic: generous deadline, reproducible runs
hypothesis.settings.register_profile(
    "suite", max_examples=60, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("suite")
