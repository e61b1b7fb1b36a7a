"""Run every module's doctests under pytest."""
import doctest

import pytest

import crossnest.automata
import crossnest.diagrams
import crossnest.involution
import crossnest.oracle
import crossnest.ratfunc
import crossnest.tableaux

MODULES = [
    crossnest.diagrams,
    crossnest.tableaux,
    crossnest.involution,
    crossnest.automata,
    crossnest.ratfunc,
    crossnest.oracle,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module, verbose=False)
    assert result.failed == 0
    assert result.attempted > 0 or module is crossnest.oracle
