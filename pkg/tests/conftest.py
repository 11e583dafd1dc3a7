from __future__ import annotations

import functools

import pytest

from rootclosed.enumeration import classify_all
from rootclosed.permgrp import compose, identity
from rootclosed.weylinv import weyl_group

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict = {}


@functools.lru_cache(maxsize=None)
def weyl(name: str):
    return weyl_group(name)


@functools.lru_cache(maxsize=None)
def classified(name: str):
    return classify_all(weyl(name))


def closure_elements(degree: int, gens) -> set:
    """Every element of the group generated by ``gens``, by plain closure."""
    found = {identity(degree)}
    frontier = list(found)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return found


@functools.lru_cache(maxsize=None)
def weyl_elements(name: str) -> frozenset:
    wa = weyl(name)
    return frozenset(closure_elements(wa.degree, wa.simple_refls))


@pytest.fixture
def wa_a2():
    return weyl("A2")


@pytest.fixture
def wa_a3():
    return weyl("A3")


@pytest.fixture
def wa_b3():
    return weyl("B3")


@pytest.fixture
def wa_c3():
    return weyl("C3")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if passed else 'FAIL'}  {detail}")
