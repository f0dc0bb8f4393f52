from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    by_criterion: dict[str, list] = {}
    for name, ok in RESULTS.items():
        key, desc = name.split(" ", 1)
        by_criterion.setdefault(key, []).append((ok, desc))
    terminalreporter.section("acceptance criteria")
    for key in sorted(by_criterion, key=lambda c: (int(c.rstrip("x")), c)):
        cases = by_criterion[key]
        ok = all(c[0] for c in cases)
        label = cases[0][1] if len(cases) == 1 else f"{cases[0][1].split(' (')[0]}, {len(cases)} cases"
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} - {label}")
