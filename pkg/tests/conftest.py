import numpy as np
import pytest


def fd_gradient(f, arrays, eps=1e-4):
    """Central finite differences of scalar f(*arrays) w.r.t. each array."""
    grads = []
    for i, a in enumerate(arrays):
        a = np.asarray(a, dtype=np.float64)
        g = np.zeros_like(a)
        flat = a.reshape(-1)
        gf = g.reshape(-1)
        for j in range(flat.size):
            orig = flat[j]
            flat[j] = orig + eps
            fp = f(*arrays)
            flat[j] = orig - eps
            fm = f(*arrays)
            flat[j] = orig
            gf[j] = (fp - fm) / (2 * eps)
        grads.append(g)
    return grads


def rel_err(a, b, floor=1e-8):
    a, b = np.asarray(a), np.asarray(b)
    return np.max(np.abs(a - b) / np.maximum(np.maximum(np.abs(a), np.abs(b)), floor))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
