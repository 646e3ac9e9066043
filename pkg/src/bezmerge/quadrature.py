"""Gauss-Legendre rules mapped to the unit interval."""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def gauss_legendre_unit(n: int):
    """Nodes and weights of the n-point Gauss-Legendre rule on [0, 1].

    Exact for polynomials of degree up to 2n - 1.
    """
    x, w = np.polynomial.legendre.leggauss(n)
    nodes = 0.5 * (x + 1.0)
    weights = 0.5 * w
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights
