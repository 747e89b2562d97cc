"""Special functions: Jacobi polynomials, Bessel J and its zeros, log-gamma."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Any

import numpy as np
import structlog
from scipy.optimize import brentq, newton

from pdmchannel.errors import BesselZeroNotFound, InvalidParam

log = structlog.get_logger(__name__)


# Jacobi polynomials


def _rec_a(n, alpha, beta):
    return 2 * n * (n + alpha + beta) * (2 * n + alpha + beta - 2)


def _rec_b(n, alpha, beta, z):
    s = 2 * n + alpha + beta
    return (s - 1) * (s * (s - 2) * z + alpha**2 - beta**2)


def _rec_c(n, alpha, beta):
    return 2 * (n + alpha - 1) * (n + beta - 1) * (2 * n + alpha + beta)


def jacobi_P(n: int, alpha: Any, beta: Any, z: Any) -> Any:
    """P_n^(alpha, beta)(z) by the three-term recurrence.

    Works on floats, numpy arrays and exact Fractions alike.
    """
    if n < 0:
        raise InvalidParam(f"degree must be >= 0, got {n}")
    if not (alpha > -1 and beta > -1):
        raise InvalidParam(f"need alpha, beta > -1, got ({alpha}, {beta})")
    p_prev = z * 0 + 1
    if n == 0:
        return p_prev
    p = (alpha + 1) + (alpha + beta + 2) * (z - 1) / 2
    for j in range(2, n + 1):
        p_prev, p = p, (_rec_b(j, alpha, beta, z) * p - _rec_c(j, alpha, beta) * p_prev) / _rec_a(
            j, alpha, beta
        )
    return p


# Bessel functions of the first kind, integer order


def _bessel_series(m: int, z: float) -> float:
    half = 0.5 * z
    term = half**m / math.factorial(m)
    total = term
    h2 = half * half
    for j in range(1, 200):
        term *= -h2 / (j * (j + m))
        total += term
        if abs(term) < 1e-17 * max(abs(total), 1e-300):
            break
    return total


def _bessel_miller(m: int, z: float) -> float:
    """Backward recurrence normalized by J_0 + 2 sum J_2j = 1."""
    start = 2 * ((max(m, int(z)) + 20 + int(math.sqrt(60 * max(m, z, 1.0)))) // 2)
    j_next, j_cur = 0.0, 1e-30
    norm = 0.0
    result = 0.0
    for n in range(start, 0, -1):
        j_prev = (2 * n / z) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        if abs(j_cur) > 1e250:
            j_cur *= 1e-250
            j_next *= 1e-250
            result *= 1e-250
            norm *= 1e-250
        if n - 1 == m:
            result = j_cur
        if (n - 1) % 2 == 0 and n - 1 > 0:
            norm += 2 * j_cur
    norm += j_cur
    if m == 0:
        result = j_cur
    return result / norm


def bessel_J(m: int, z: float) -> float:
    """J_m(z) for integer m and real z >= 0 (negative m via J_-m = (-1)^m J_m)."""
    if m < 0:
        return (-1) ** (-m) * bessel_J(-m, z)
    if z < 0:
        raise InvalidParam(f"bessel_J needs z >= 0, got {z}")
    if z == 0.0:
        return 1.0 if m == 0 else 0.0
    if z <= 2.0 or z < 0.5 * m:
        return _bessel_series(m, z)
    return _bessel_miller(m, z)


def bessel_J_array(m: int, z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    return np.vectorize(lambda v: bessel_J(m, float(v)), otypes=[float])(z)


def mcmahon_zero(m: int, s: int) -> float:
    """McMahon asymptotic estimate of j_{m,s}."""
    mu = 4.0 * m * m
    beta = (s + 0.5 * m - 0.25) * math.pi
    b8 = 8.0 * beta
    return beta - (mu - 1) / b8 - 4 * (mu - 1) * (7 * mu - 31) / (3 * b8**3)


MCMAHON_WINDOW = 1.0
ROOT_XTOL = 1e-14


def _scan_bracket(m: int, s: int) -> tuple[float, float]:
    """Bracket of the s-th zero by a sign-change scan from z = m."""
    step = 0.1
    z = max(float(m), step)
    z_limit = max(mcmahon_zero(m, s), float(m)) + 10 * math.pi + 2 * m
    f_prev = bessel_J(m, z)
    found = 0
    while z < z_limit:
        z_next = z + step
        f_next = bessel_J(m, z_next)
        if f_prev == 0.0 or f_prev * f_next < 0:
            found += 1
            if found == s:
                return z, z_next
        z, f_prev = z_next, f_next
    raise BesselZeroNotFound(f"zero j_({m},{s}) not bracketed below {z_limit:.3f}")


def _newton_from(m: int, guess: float, lo: float, hi: float) -> float | None:
    """Newton on J_m from ``guess``; None unless it converges inside (lo, hi)."""
    try:
        root = newton(
            lambda t: bessel_J(m, t),
            guess,
            fprime=lambda t: 0.5 * (bessel_J(m - 1, t) - bessel_J(m + 1, t)),
            tol=ROOT_XTOL,
            maxiter=50,
        )
    except (RuntimeError, InvalidParam):
        return None
    if not lo < root < hi or abs(bessel_J(m, root)) > 1e-12:
        return None
    return float(root)


@lru_cache(maxsize=4096)
def bessel_zero(m: int, s: int) -> float:
    """s-th positive zero of J_m.

    For s >= m, Newton starts from the McMahon estimate and must stay inside a +-1 window
    that changes sign. Otherwise a sign-change scan from m brackets the zero for Brent.
    """
    if m < 0 or s < 1:
        raise InvalidParam(f"need m >= 0 and s >= 1, got ({m}, {s})")
    guess = mcmahon_zero(m, s)
    lo, hi = guess - MCMAHON_WINDOW, guess + MCMAHON_WINDOW
    root = None
    if s >= m and bessel_J(m, lo) * bessel_J(m, hi) < 0:
        root = _newton_from(m, guess, lo, hi)
    if root is None:
        lo, hi = _scan_bracket(m, s)
        root = float(brentq(lambda t: bessel_J(m, t), lo, hi, xtol=1e-15, rtol=1e-15))
    log.debug("bessel_zero_found", m=m, s=s, zero=root, mcmahon_gap=root - guess)
    return root


# Gamma function

_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0 (Lanczos, g = 7)."""
    if not x > 0:
        raise InvalidParam(f"log_gamma needs x > 0, got {x}")
    if x < 0.5:
        return log_gamma(x + 1.0) - math.log(x)
    x -= 1.0
    a = _LANCZOS[0]
    for i in range(1, _LANCZOS_G + 2):
        a += _LANCZOS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return 0.5 * math.log(2 * math.pi) + (x + 0.5) * math.log(t) - t + math.log(a)


def gamma(x: float) -> float:
    return math.exp(log_gamma(x))
