"""Shared fixtures and the brute-force oracles used across test modules."""

import pytest

from wreath_centers.groups import builtin_group
from wreath_centers.wreath import enumerate_class, type_of, w_multiply


@pytest.fixture(scope="session")
def triv():
    return builtin_group("trivial")


@pytest.fixture(scope="session")
def z2():
    return builtin_group("cyclic:2")


@pytest.fixture(scope="session")
def z3():
    return builtin_group("cyclic:3")


@pytest.fixture(scope="session")
def s3():
    return builtin_group("sym:3")


@pytest.fixture(scope="session")
def s4():
    return builtin_group("sym:4")


def brute_expand(lam, delta, n, G):
    """Full double enumeration of C_lam * C_delta, as {type: count}.

    Only uses element-level multiplication and typing, no histogram
    kernels, so it is an independent oracle for the center layer.
    """
    ys = list(enumerate_class(delta, n, G))
    out = {}
    for x in enumerate_class(lam, n, G):
        for y in ys:
            t = type_of(w_multiply(x, y, G), G)
            out[t] = out.get(t, 0) + 1
    return out
