"""Byte-exact comparison of module characters with the oracle-generated golden files."""

import os

import pytest

from kacdem.cartan import AffineWeight, build_datum
from kacdem.demazure import module_char
from kacdem.weyl import weyl_group

from golden.regen import CASES, oracle_lines

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


@pytest.mark.parametrize("name", sorted(CASES))
@pytest.mark.parametrize("method", ["paths", "ops"])
def test_golden_character(name, method):
    label, coeffs, mu = CASES[name]
    g = weyl_group(build_datum(label))
    lam = AffineWeight(g.datum.label, coeffs, 0)
    text = "\n".join(module_char(g, lam, mu, method).lines()) + "\n"
    with open(os.path.join(GOLDEN, name + ".txt")) as fh:
        assert text == fh.read()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_files_are_current(name):
    with open(os.path.join(GOLDEN, name + ".txt")) as fh:
        assert fh.read() == "\n".join(oracle_lines(*CASES[name])) + "\n"
