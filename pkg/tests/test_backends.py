import numpy as np
import pytest

from jcpurity import BACKEND
from jcpurity._backend import available_backends
from jcpurity.dynamics import ModelParams, bloch_series

KERNELS = available_backends()
TAUS = np.linspace(0.0, 50.0, 1001)


def test_backend_name():
    assert BACKEND in KERNELS
    assert "numpy" in KERNELS


@pytest.mark.parametrize("model, beta, f", [("jc", 0.0, 1e-7), ("jc", 60.0, 3.0),
                                            ("ajc", 0.0, 1e-7), ("ajc", -5.0, 2.0)])
def test_backends_agree(model, beta, f):
    p = ModelParams(model, 7.0, beta, f)
    ref = bloch_series(p, TAUS, kernel=KERNELS["numpy"])
    for name, kernel in KERNELS.items():
        np.testing.assert_allclose(bloch_series(p, TAUS, kernel=kernel), ref, atol=1e-13,
                                   err_msg=name)


@pytest.mark.parametrize("name", sorted(KERNELS))
def test_thread_count_is_bit_identical(name):
    p = ModelParams("ajc", 6.0, 3.0, 0.5)
    serial = bloch_series(p, TAUS, kernel=KERNELS[name], num_threads=1)
    for threads in (2, 4):
        par = bloch_series(p, TAUS, kernel=KERNELS[name], num_threads=threads)
        assert np.array_equal(serial, par)


def test_repeat_is_bit_identical():
    p = ModelParams("jc", 7.0)
    assert np.array_equal(bloch_series(p, TAUS), bloch_series(p, TAUS))


def test_compiled_kernel_present():
    pytest.importorskip("jcpurity._kernels")
    assert BACKEND == "cython"
