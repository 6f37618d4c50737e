import cmath
import math

import numpy as np
import pytest
from hypothesis import given

from jcpurity.core import (
    BlochFourVector,
    bloch_from_density,
    density_from_bloch,
    eigensystem,
    purity_decomposition,
)
from jcpurity.errors import InvalidBloch, NotHermitian
from jcpurity.oracle import eigen_bruteforce

from conftest import bloch_vectors


@pytest.mark.parametrize("R, expected", [
    ((1, 0, 0, -1), [[0, 0], [0, 1]]),
    ((1, 1, 0, 0), [[0.5, 0.5], [0.5, 0.5]]),
    ((1, 0, 0, 0), [[0.5, 0], [0, 0.5]]),
])
def test_density_from_bloch(R, expected):
    rho = density_from_bloch(BlochFourVector(*R))
    np.testing.assert_array_equal(rho, np.array(expected, dtype=complex))


def test_density_off_diagonal_sign():
    # sigma_2 eigenstate: rho_eg = (r1 - i r2)/2 in (e, g) order
    rho = density_from_bloch(BlochFourVector(1, 0, 1, 0))
    assert rho[0, 1] == -0.5j
    assert rho[1, 0] == 0.5j


@pytest.mark.parametrize("rho, expected", [
    ([[0, 0], [0, 1]], (1, 0, 0, -1)),
    ([[0.5, -0.5j], [0.5j, 0.5]], (1, 0, 1, 0)),
])
def test_bloch_from_density(rho, expected):
    assert bloch_from_density(rho).as_tuple() == pytest.approx(expected, abs=1e-15)


def test_bloch_from_density_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        bloch_from_density([[0.5, 0.1], [0.0, 0.5]])


@given(bloch_vectors())
def test_round_trip(R):
    back = bloch_from_density(density_from_bloch(R))
    assert back.as_tuple() == pytest.approx(R.as_tuple(), abs=1e-14)


def test_invalid_bloch():
    with pytest.raises(InvalidBloch):
        BlochFourVector(1, 0.8, 0, 0.8)
    with pytest.raises(InvalidBloch):
        BlochFourVector(0, 0, 0, 0)
    with pytest.raises(InvalidBloch):
        BlochFourVector(-1, 0, 0, 0)
    with pytest.raises(InvalidBloch):
        BlochFourVector(1, float("nan"), 0, 0)


def test_clamp_within_tolerance():
    R = BlochFourVector(1.0, 0.0, 0.0, -(1.0 + 5e-10))
    assert R.r3 == -1.0
    assert R.norm == 1.0


@pytest.mark.parametrize("R, coef, mixed", [
    ((1, 0, 0, 0), 1, 0.25),
    ((1, 0, 0, -1), 1, 0.0),
    ((1, 0.6, 0, 0), 1, 0.16),
])
def test_purity_decomposition(R, coef, mixed):
    R = BlochFourVector(*R)
    c, m = purity_decomposition(R)
    assert c == coef
    assert m == pytest.approx(mixed, abs=1e-15)
    rho = density_from_bloch(R)
    np.testing.assert_allclose(rho @ rho, c * rho - m * np.eye(2), atol=1e-12)


@given(bloch_vectors())
def test_purity_operator_identity(R):
    c, m = purity_decomposition(R)
    rho = density_from_bloch(R)
    np.testing.assert_allclose(rho @ rho, c * rho - m * np.eye(2), atol=1e-12)
    det = (rho[0, 0] * rho[1, 1] - rho[0, 1] * rho[1, 0]).real
    assert det == pytest.approx(m, abs=1e-12)


@given(bloch_vectors(r0=1.0))
def test_operator_inequality(R):
    rho = density_from_bloch(R)
    assert np.linalg.eigvalsh(rho - rho @ rho).min() >= -1e-12


def _char_poly_eigvec(rho, lam):
    # independent: (rho - lam) v = 0 from the first row, else the second
    a, b = rho[0, 0] - lam, rho[0, 1]
    v = np.array([b, -a]) if abs(a) + abs(b) > 1e-14 else np.array([rho[1, 1] - lam, -rho[1, 0]])
    return v / np.linalg.norm(v)


def test_eigensystem_ground_state():
    es = eigensystem(BlochFourVector(1, 0, 0, -1))
    assert (es.eps_minus, es.eps_plus) == (0.0, 1.0)
    assert abs(es.psi_plus[1]) == pytest.approx(1.0)


def test_eigensystem_maximally_mixed_uses_computational_basis():
    es = eigensystem(BlochFourVector(1, 0, 0, 0))
    assert (es.eps_minus, es.eps_plus) == (0.5, 0.5)
    np.testing.assert_array_equal(es.psi_plus, [0, 1])
    np.testing.assert_array_equal(es.psi_minus, [1, 0])


def test_eigensystem_excited_axis():
    es = eigensystem(BlochFourVector(1, 0, 0, 0.3))
    np.testing.assert_array_equal(es.psi_plus, [1, 0])


def test_eigensystem_tilted_pure_state():
    R = BlochFourVector(1, 0.6, 0, 0.8)
    es = eigensystem(R)
    rho = density_from_bloch(R)
    lo, hi = eigen_bruteforce(rho)
    assert (es.eps_minus, es.eps_plus) == pytest.approx((lo, hi), abs=1e-12)
    assert es.eps_plus == pytest.approx(1.0, abs=1e-12)
    ref = _char_poly_eigvec(rho, hi)
    assert abs(np.vdot(ref, es.psi_plus)) == pytest.approx(1.0, abs=1e-12)
    # 0.9487|e> + 0.3162|g> up to phase
    assert abs(es.psi_plus[0]) == pytest.approx(3 / math.sqrt(10), abs=1e-12)
    assert abs(es.psi_plus[1]) == pytest.approx(1 / math.sqrt(10), abs=1e-12)


def test_eigensystem_angles():
    es = eigensystem(BlochFourVector(1, 0, -0.5, -0.5))
    assert es.theta == pytest.approx(3 * math.pi / 4)
    assert es.phi_az == pytest.approx(-math.pi / 2)
    assert eigensystem(BlochFourVector(1, 0, 0, 0.2)).phi_az == 0.0


def test_eigensystem_against_char_poly_vectors():
    R = BlochFourVector(0.7, -0.2, 0.3, 0.1)
    es = eigensystem(R)
    rho = density_from_bloch(R)
    for lam, psi in ((es.eps_minus, es.psi_minus), (es.eps_plus, es.psi_plus)):
        ref = _char_poly_eigvec(rho, lam)
        assert abs(np.vdot(ref, psi)) == pytest.approx(1.0, abs=1e-12)
    # half-angle form: psi_plus = cos(t/2) e^{-i phi}|e> + sin(t/2)|g>
    assert es.psi_plus[0] == pytest.approx(
        math.cos(es.theta / 2) * cmath.exp(-1j * es.phi_az), abs=1e-15)


def test_eigensystem_random_invariants(general_blochs):
    for R in general_blochs:
        es = eigensystem(R)
        rho = density_from_bloch(R)
        _, m = purity_decomposition(R)
        assert es.eps_minus + es.eps_plus == pytest.approx(R.r0, abs=1e-12)
        assert es.eps_minus * es.eps_plus == pytest.approx(m, abs=1e-12)
        for lam, psi in ((es.eps_minus, es.psi_minus), (es.eps_plus, es.psi_plus)):
            assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.norm(rho @ psi - lam * psi) <= 1e-10
        assert abs(np.vdot(es.psi_minus, es.psi_plus)) <= 1e-10


def test_eigensystem_near_pole_is_stable():
    # tiny transverse part: a naive 1 - cos(theta) would lose all digits
    R = BlochFourVector(1, 1e-9, 0, 0.999)
    es = eigensystem(R)
    rho = density_from_bloch(R)
    assert np.linalg.norm(rho @ es.psi_plus - es.eps_plus * es.psi_plus) <= 1e-14
