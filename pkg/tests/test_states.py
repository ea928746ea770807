import numpy as np
import pytest

from eofbounds import densmat as dm
from eofbounds.envelope import DomainError
from eofbounds.states import (
    bell_state,
    example2_functionals,
    example2_state,
    flip_operator,
    maximally_mixed,
    pure_from_schmidt,
    werner,
    werner_concurrence_hint,
)


def test_flip_operator():
    f = flip_operator(3)
    np.testing.assert_array_equal(f @ f, np.eye(9))
    assert np.trace(f) == 3


@pytest.mark.parametrize("f", np.linspace(-1, 1, 9))
def test_werner_flip_expectation_and_marginals(f):
    rho = werner(3, f)
    assert np.trace(rho.mat @ flip_operator(3)).real == pytest.approx(f, abs=1e-12)
    np.testing.assert_allclose(dm.reduced_a(rho), np.eye(3) / 3, atol=1e-14)
    assert 1 - dm.purity(dm.reduced_a(rho)) == pytest.approx(2 / 3)


def test_werner_antisymmetric_endpoint():
    np.testing.assert_allclose(werner(3, -1.0).mat, (np.eye(9) - flip_operator(3)) / 6, atol=1e-15)


def test_werner_d2_symmetric():
    rho = werner(2, 1.0)
    assert np.trace(rho.mat @ flip_operator(2)).real == pytest.approx(1.0)
    with pytest.raises(DomainError):
        werner(3, 1.5)


def test_werner_hint():
    assert werner_concurrence_hint(3, -1.0) == 1.0
    assert werner_concurrence_hint(3, 0.0) == 0.0
    assert werner_concurrence_hint(3, -0.5) == 0.5
    assert werner_concurrence_hint(3, 0.4) == 0.0
    with pytest.raises(NotImplementedError):
        werner_concurrence_hint(4, -0.5)


def test_example2_endpoints():
    np.testing.assert_allclose(example2_state(0.3, 1.0).mat, np.eye(9) / 9, atol=1e-15)
    rho = example2_state(0.0, 0.0)
    assert dm.von_neumann_entropy(dm.reduced_a(rho)) == pytest.approx(np.log(2))
    with pytest.raises(DomainError):
        example2_state(1.2, 0.0)


def test_example2_functionals_match_matrices():
    for a in np.linspace(0, 1, 20):
        for x in np.linspace(0, 1, 20):
            rho = example2_state(a, x)
            fx = example2_functionals(a, x)
            pa = dm.purity(dm.reduced_a(rho))
            assert fx["purity_gap"] == pytest.approx(dm.purity(rho.mat) - pa, abs=1e-10)
            assert fx["one_minus_purity_a"] == pytest.approx(1 - pa, abs=1e-10)
            assert dm.purity(dm.reduced_b(rho)) == pytest.approx(pa, abs=1e-12)


def test_example2_a0_x0_upper():
    assert example2_functionals(0.0, 0.0)["one_minus_purity_a"] == pytest.approx(0.5)


def test_pure_from_schmidt():
    np.testing.assert_allclose(pure_from_schmidt([0.5, 0.5], 2), bell_state())
    np.testing.assert_allclose(bell_state(), [2**-0.5, 0, 0, 2**-0.5])
    np.testing.assert_allclose(pure_from_schmidt([1, 0], 2), [1, 0, 0, 0])
    with pytest.raises(dm.DimensionError):
        pure_from_schmidt([0.5, 0.3, 0.2], 2)


def test_maximally_mixed():
    assert dm.purity(maximally_mixed(2, 3).mat) == pytest.approx(1 / 6)
