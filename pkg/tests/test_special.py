import numpy as np
import pytest
import scipy.special
import scipy.stats

from benfordlab import DomainError, SpecificationError, chi_square_critical
from benfordlab.special import chi2_sf


def test_sf_matches_scipy_over_grid():
    for df in (1, 2, 5, 8, 9, 20, 50):
        for x in (0.01, 0.5, 1.0, df / 2, df, df + 0.999, df + 1.0, 2 * df, 5 * df + 10):
            mine = chi2_sf(float(x), df)
            ref = float(scipy.stats.chi2.sf(x, df))
            assert mine == pytest.approx(ref, abs=1e-10), (df, x)


def test_sf_edge_values():
    assert chi2_sf(0.0, 8) == 1.0
    assert chi2_sf(-3.0, 8) == 1.0
    assert chi2_sf(1e6, 8) < 1e-12


def test_critical_reference_values():
    assert chi_square_critical(8, 0.05) == pytest.approx(15.507313055865453, abs=1e-8)
    assert chi_square_critical(8, 0.01) == pytest.approx(20.090235029663233, abs=1e-8)
    assert chi_square_critical(6, 0.01) == pytest.approx(16.811893829770927, abs=1e-8)


def test_critical_one_sigma_normal_equivalence():
    # two-sided one-sigma tail of a unit normal: chi2(1) critical is exactly 1
    alpha = float(scipy.special.erfc(1.0 / np.sqrt(2.0)))
    assert chi_square_critical(1, alpha) == pytest.approx(1.0, abs=1e-8)


def test_critical_alpha_near_one_tends_to_zero():
    assert chi_square_critical(8, 1.0 - 1e-9) < 0.05


def test_critical_roundtrip():
    for df in (1, 4, 8, 30):
        for alpha in (0.9, 0.5, 0.1, 0.01, 0.001):
            c = chi_square_critical(df, alpha)
            assert chi2_sf(c, df) == pytest.approx(alpha, rel=1e-6)


def test_critical_domain_errors():
    with pytest.raises(DomainError):
        chi_square_critical(8, 0.0)
    with pytest.raises(DomainError):
        chi_square_critical(8, 1.0)
    with pytest.raises(SpecificationError):
        chi_square_critical(0, 0.05)
