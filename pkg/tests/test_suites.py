"""Determinism and report formatting of the verification suites."""

from lamina.suites import SUITES, run_suite


def test_suites_are_deterministic_under_fixed_seed():
    a = run_suite("reconstruct", 50, 9)
    b = run_suite("reconstruct", 50, 9)
    assert (a.passed, a.counts, a.failures) == (b.passed, b.counts, b.failures)
    c = run_suite("crifar", 10, 5)
    d = run_suite("crifar", 10, 5)
    assert (c.passed, c.counts) == (d.passed, d.counts)


def test_seed_changes_samples():
    a = run_suite("crifar", 10, 5)
    b = run_suite("crifar", 10, 6)
    assert a.passed and b.passed
    assert a.counts["laminations"] >= 10 and b.counts["laminations"] >= 10


def test_report_text_blocks():
    res = run_suite("linkco", 5, 1)
    text = res.text()
    assert text.startswith("suite: linkco\nstatus: pass")
    assert "pairs: 5" in text


def test_registry_names():
    assert sorted(SUITES) == [
        "compgap",
        "crifar",
        "gaptrans",
        "linkco",
        "maintag",
        "qml-unlinked",
        "reconstruct",
    ]
