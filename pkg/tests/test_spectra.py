import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from cyclo2adic import make_params
from cyclo2adic.cyclotomy import Label
from cyclo2adic.numtheory import ParamError
from cyclo2adic.spectra import (
    det_closed_form,
    gauss_periods,
    lemma1_residuals,
    lemma2_check,
    spectrum_closed_form,
    spectrum_direct,
    spectrum_direct_all,
    spectrum_product,
    spectrum_residual,
    spectrum_table,
    tolerance,
)

from conftest import strict_pairs


def _same_set(a, b, tol):
    return min(abs(a[0] - b[0]) + abs(a[1] - b[1]), abs(a[0] - b[1]) + abs(a[1] - b[0])) < tol


def test_periods_p5_q3(instance):
    _, part, _ = instance(5, 3)
    gp = gauss_periods(part)
    r5, r3 = math.sqrt(5), math.sqrt(3)
    assert _same_set(gp.delta_p, ((-1 + r5) / 2, (-1 - r5) / 2), 1e-12)
    assert _same_set(gp.delta_q, (complex(-1, r3) / 2, complex(-1, -r3) / 2), 1e-12)
    assert abs(gp.eta0 + gp.eta1 - 1) < tolerance(15)


@pytest.mark.parametrize("pq", strict_pairs(1000))
def test_lemma1_identities(instance, pq):
    _, part, _ = instance(*pq)
    res = lemma1_residuals(gauss_periods(part))
    assert max(res.values()) < tolerance(part.N)


@pytest.mark.parametrize("pq", [(7, 5), (3, 7), (11, 13)])
def test_lemma1_identities_non_strict(instance, pq):
    _, part, _ = instance(*pq, strict=False)
    res = lemma1_residuals(gauss_periods(part))
    assert max(res.values()) < tolerance(part.N)


@pytest.mark.parametrize("pq, branches", [((5, 3), {"+": 4, "-": -11}), ((5, 7), {"+": 9, "-": -26})])
def test_lemma2_values(instance, pq, branches):
    _, part, _ = instance(*pq)
    res = lemma2_check(gauss_periods(part))
    assert res.ok and res.sign in branches
    assert abs(res.value - branches[res.sign]) < tolerance(part.N)
    assert abs(res.value.imag) < tolerance(part.N)


@pytest.mark.parametrize("pq", strict_pairs(1000))
def test_lemma2_holds(instance, pq):
    _, part, _ = instance(*pq)
    assert lemma2_check(gauss_periods(part)).ok


def test_spectrum_closed_form_rows_5_3(instance):
    _, part, seq = instance(5, 3)
    gp = gauss_periods(part)
    assert spectrum_closed_form(0, gp, part) == 7
    for a in range(15):
        assert abs(spectrum_closed_form(a, gp, part) - spectrum_direct(a, seq)) < tolerance(15)


def test_spectrum_table_unit_rows(instance):
    _, part, _ = instance(13, 11)
    gp = gauss_periods(part)
    table = spectrum_table(gp)
    assert table[Label.D00] == gp.eta1 + gp.delta1q + gp.delta1p
    assert table[Label.D01] == gp.eta1 + gp.delta0q + gp.delta0p


def test_spectrum_direct_examples(instance):
    _, _, seq = instance(5, 7)
    assert spectrum_direct(0, seq) == pytest.approx(17)
    for a in range(1, 35):
        assert abs(spectrum_direct(35 - a, seq) - spectrum_direct(a, seq).conjugate()) < 1e-9


def test_spectrum_direct_against_naive_sum(instance):
    _, _, seq = instance(5, 7)
    all_values = spectrum_direct_all(seq)
    for a in range(35):
        naive = sum(b * cmath.exp(2j * cmath.pi * a * i / 35) for i, b in enumerate(seq.bits))
        assert abs(all_values[a] - naive) < 1e-9


@pytest.mark.parametrize("pq", strict_pairs(200) + [(7, 5), (3, 7)])
def test_lemma5_residual(instance, pq):
    p, q = pq
    _, part, seq = instance(p, q, strict=p % 4 == 1 and q % 4 == 3)
    assert spectrum_residual(part, seq) < tolerance(part.N)


def test_swapped_unit_rows_do_not_fit(instance):
    # the D10/D11 rows are not interchangeable: swapping them breaks the fit
    _, part, seq = instance(5, 7)
    table = spectrum_table(gauss_periods(part))
    table[Label.D10], table[Label.D11] = table[Label.D11], table[Label.D10]
    closed = np.array([table[Label(int(lab))] for lab in part.labels])
    assert np.max(np.abs(spectrum_direct_all(seq) - closed)) > 1


@pytest.mark.parametrize("pq, det", [((5, 3), 1792), ((5, 7), 9345848836096)])
def test_product_law_small(instance, pq, det):
    # exact determinants from fraction-free elimination (tests/test_circulant.py)
    _, _, seq = instance(*pq)
    prod = spectrum_product(seq)
    assert abs(prod.imag) < tolerance(seq.N) * seq.N * abs(prod.real) * 1e-6 + 1e-3
    assert round(prod.real) == det


@pytest.mark.parametrize("pq", strict_pairs(200))
def test_product_law_relative(instance, pq):
    params, _, seq = instance(*pq)
    prod = spectrum_product(seq)
    cands = det_closed_form(params).candidates()
    assert abs(prod.imag) <= 1e-9 * abs(prod)
    assert min(abs(prod.real - v) / abs(v) for v in cands.values()) < 1e-9


def test_det_closed_form_5_3():
    cf = det_closed_form(make_params(5, 3))
    assert cf.d == -1
    # Delta = 16 + (+-1 + 1) * 15 / 2
    assert (cf.delta_plus, cf.delta_minus) == (31, 16)
    assert cf.det_plus == 7 * 31**2 and cf.det_minus == 7 * 16**2


@pytest.mark.parametrize("pq", strict_pairs(1000))
def test_det_closed_form_integral(pq):
    cf = det_closed_form(make_params(*pq))
    assert isinstance(cf.d, int)
    assert cf.det_plus.denominator == 1 and cf.det_minus.denominator == 1
    assert isinstance(cf.delta_plus, Fraction)


def test_det_closed_form_rejects_non_strict():
    with pytest.raises(ParamError):
        det_closed_form(make_params(7, 5, strict=False))
    with pytest.raises(ParamError):
        det_closed_form(make_params(3, 7, strict=False))
