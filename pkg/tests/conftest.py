from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from youngcurv.perm_algebra import GroupRingElement, Permutation, all_permutations


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def permutations(draw, degree=None):
    r = degree if degree is not None else draw(st.integers(1, 5))
    return Permutation(draw(st.permutations(range(1, r + 1))))


@st.composite
def ring_elements(draw, degree=3, max_terms=6):
    perms = draw(st.lists(st.sampled_from(all_permutations(degree)), max_size=max_terms))
    coeffs = draw(st.lists(small_fractions, min_size=len(perms), max_size=len(perms)))
    return GroupRingElement(degree, dict(zip(perms, coeffs)))


def frac_array(ints):
    return np.vectorize(Fraction, otypes=[object])(np.asarray(ints))


ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
