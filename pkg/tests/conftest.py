"""Shared oracles for the test suite."""

from collections import deque

import pytest

from artin_growth.coxeter import length_lex_key


def congruence_class(word, presentation):
    """All words reachable from ``word`` by applying relations in either direction."""
    rules = [(l, r) for l, r in presentation.rules] + [(r, l) for l, r in presentation.rules]
    seen = {tuple(word)}
    todo = deque(seen)
    while todo:
        w = todo.popleft()
        for lhs, rhs in rules:
            L = len(lhs)
            for pos in range(len(w) - L + 1):
                if w[pos : pos + L] == lhs:
                    v = w[:pos] + rhs + w[pos + L :]
                    if v not in seen:
                        seen.add(v)
                        todo.append(v)
    return seen


def class_minimum(word, presentation):
    return min(congruence_class(word, presentation), key=length_lex_key)


@pytest.fixture
def class_min():
    return class_minimum


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
