"""Truncated q-series arithmetic."""

from __future__ import annotations

from fractions import Fraction

import pytest

from wkchar.qseries import QSeries


def test_basic_accessors():
    s = QSeries.make(Fraction(-1, 24), [1, 1, 2, 3], 1)
    assert s.order == 3
    assert s.top_exponent == Fraction(-1, 24) + 3
    assert s.coefficient(Fraction(-1, 24) + 2) == 2
    with pytest.raises(KeyError):
        s.coefficient(Fraction(1, 2))


def test_add_aligns_offsets():
    a = QSeries.make(0, [1, 1, 1, 1])
    b = QSeries.make(2, [5, 5])
    total = a + b
    assert total.offset == 0
    assert total.coefficients == (1, 1, 6, 6)


def test_add_refines_step():
    a = QSeries.make(0, [1, 1], 1)
    b = QSeries.make(Fraction(1, 2), [1], 1)
    total = a + b
    assert total.step == Fraction(1, 2)
    assert total.coefficients[:2] == (1, 1)


def test_mul_is_truncation_exact():
    a = QSeries.make(0, [1, 1, 1, 1, 1])       # 1/(1-q) through q^4
    b = QSeries.make(0, [1, -1])               # 1 - q through q^1
    product = a * b
    # product only trustworthy through min(4+0, 1+0) = q^1
    assert product.order == 1
    assert product.coefficients == (1, 0)


def test_mul_offsets_add():
    a = QSeries.make(Fraction(1, 3), [2, 1])
    b = QSeries.make(Fraction(1, 6), [3])
    product = a * b
    assert product.offset == Fraction(1, 2)
    assert product.coefficients[0] == 6


def test_scalar_and_shift():
    s = QSeries.make(1, [1, 2]).scaled(3).shifted(Fraction(1, 2))
    assert s.offset == Fraction(3, 2)
    assert s.coefficients == (3, 6)


def test_agrees_with():
    a = QSeries.make(0, [1, 2, 3, 4])
    b = QSeries.make(0, [1, 2, 3, 999])
    assert a.agrees_with(b, 2)
    assert not a.agrees_with(b, 3)


def test_rendering():
    assert str(QSeries.make(0, [0, 0])) == "0"
    s = QSeries.make(Fraction(1, 48), [1, 1, 0, 2])
    assert str(s) == "q^{1/48}(1 + q + 2q^3)"
    t = QSeries.make(2, [1, 1])
    assert str(t) == "q^2(1 + q)"


def test_validation():
    with pytest.raises(ValueError):
        QSeries.make(0, [])
    with pytest.raises(ValueError):
        QSeries.make(0, [1], step=0)
