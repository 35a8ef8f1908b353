"""Exact q-partial fractions of the restricted partition generating function."""

import json
from fractions import Fraction

from . import _qwave

__all__ = [
    "cyclotomic", "decompose", "decompose_json", "gamma_table", "gamma_top", "sigma_table",
    "wave", "partition", "partition_dp", "degnum", "w1_coeffs", "w2_coeffs",
    "rademacher", "verify",
]


def _fracs(values):
    return [Fraction(v) for v in values]


def cyclotomic(n):
    """Coefficients (low to high) of the n-th cyclotomic polynomial, Phi_1 = 1 - x."""
    return _fracs(_qwave.cyclotomic(n))


def decompose(N, max_N=30):
    """{(k, l): [coefficients of g_{k,l}]} for 1/((1-x)...(1-x^N))."""
    return {key: _fracs(c) for key, c in _qwave.decompose(N, max_N).items()}


def decompose_json(N, max_N=30):
    return json.loads(_qwave.decompose_json(N, max_N))


def gamma_table(N, max_N=30):
    """{(h, k, l): Gamma} with 1/((1-x)...(1-x^N)) = sum Gamma x^h / (1-x^k)^l."""
    return {key: Fraction(v) for key, v in _qwave.gamma_table(N, max_N).items()}


def gamma_top(j, k, N):
    return Fraction(_qwave.gamma_top(j, k, N))


def sigma_table(k):
    return [[int(v) for v in row] for row in _qwave.sigma_table(k)]


def wave(k, n, N):
    return Fraction(_qwave.wave(k, n, N))


def partition(n, N):
    """Partitions of n into parts of size at most N, summed from the waves."""
    return int(_qwave.partition(n, N))


def partition_dp(N, n_max):
    return [int(v) for v in _qwave.partition_dp(N, n_max)]


def degnum(kind, m, order, center=1):
    return _fracs(_qwave.degnum(kind, m, order, center))


def w1_coeffs(N):
    return _fracs(_qwave.w1_coeffs(N))


def w2_coeffs(N):
    return _fracs(_qwave.w2_coeffs(N))


def rademacher(h, k, N):
    out = _qwave.rademacher(h, k, N)
    out["coords"] = _fracs(out["coords"])
    return out


def verify(N_max):
    return _qwave.verify(N_max)
