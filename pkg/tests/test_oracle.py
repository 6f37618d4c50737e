import numpy as np
import pytest

from jcpurity.core import bloch_from_density, density_from_bloch, eigensystem
from jcpurity.dynamics import ModelParams, bloch_series, joint_amplitudes, poisson_weights
from jcpurity.errors import ComplexRoots
from jcpurity.oracle import (
    JointStateTable,
    eigen_bruteforce,
    random_bloch,
    reduce_to_atom,
    run_oracle_suite,
)


def test_reduce_product_state():
    s = 2 ** -0.5
    rho = reduce_to_atom(JointStateTable((("g", 0, s), ("g", 1, s))))
    np.testing.assert_allclose(rho, [[0, 0], [0, 1]], atol=1e-15)


def test_reduce_bell_state():
    s = 2 ** -0.5
    rho = reduce_to_atom(JointStateTable((("e", 0, s), ("g", 1, s))))
    np.testing.assert_allclose(rho, 0.5 * np.eye(2), atol=1e-15)


def test_reduce_coherent_superposition():
    s = 2 ** -0.5
    rho = reduce_to_atom(JointStateTable((("e", 3, s), ("g", 3, 1j * s))))
    assert bloch_from_density(rho).as_tuple() == pytest.approx((1, 0, 1, 0), abs=1e-15)


def test_table_rejects_bad_level():
    with pytest.raises(ValueError):
        JointStateTable((("x", 0, 1.0),))


@pytest.mark.parametrize("rho, expected", [
    ([[0.5, 0], [0, 0.5]], (0.5, 0.5)),
    ([[0, 0], [0, 1]], (0.0, 1.0)),
    ([[0.5, 0.3], [0.3, 0.5]], (0.2, 0.8)),
])
def test_eigen_bruteforce(rho, expected):
    assert eigen_bruteforce(rho) == pytest.approx(expected, abs=1e-15)


def test_eigen_bruteforce_complex_roots():
    with pytest.raises(ComplexRoots):
        eigen_bruteforce([[0.0, 1.0], [-1.0, 0.0]])


def test_eigen_bruteforce_matches_eigensystem():
    rng = np.random.default_rng(3)
    for _ in range(200):
        R = random_bloch(rng)
        es = eigensystem(R)
        lo, hi = eigen_bruteforce(density_from_bloch(R))
        assert (lo, hi) == pytest.approx((es.eps_minus, es.eps_plus), abs=1e-12)


@pytest.mark.parametrize("model", ["jc", "ajc"])
def test_partial_trace_route(model):
    p = ModelParams(model, 5.0, 12.0, 3.0)
    trunc = poisson_weights(p.alpha)[1]
    rho = reduce_to_atom(JointStateTable.from_amplitudes(joint_amplitudes(p, 13.0, trunc)))
    np.testing.assert_allclose(bloch_from_density(rho).as_tuple(),
                               bloch_series(p, [13.0], trunc)[0], atol=1e-10)


def test_suite_passes():
    rep = run_oracle_suite(samples=16, seed=1)
    assert rep.ok, rep.summary()
    assert rep.bloch_worst <= 1e-10 and rep.eigen_worst <= 1e-11


def test_suite_reports_failures():
    rep = run_oracle_suite(samples=4, seed=1, bloch_tol=1e-30, eigen_tol=1e-30)
    assert not rep.ok
    assert "FAIL" in rep.summary()


def test_suite_rejects_zero_samples():
    with pytest.raises(ValueError):
        run_oracle_suite(samples=0)
