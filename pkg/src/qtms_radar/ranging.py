"""Shared maximum-range machinery.

Both the direct-detection and the correlation (noise) radar reduce their
detection condition to the same transcendental equation in the range R:

    R * exp(a R) = K,    a = ln(10)/20 * gamma_db_per_m

where K collects the sample count, threshold, and characteristic range.
``closed_form_range`` evaluates the widely used logarithmic approximation
ln(1 + aK)/a; ``exact_range`` solves the equation to solver precision. The
closed form over-estimates the root (ln(1+x) >= W(x) for x > 0), by a
relative margin of about aK/2.
"""

from __future__ import annotations

import math

from scipy.optimize import brentq

from .errors import DomainError, SolverError

# The absorption exponent constant, kept at full precision: 10**(g R/20)
# equals exp(g R * ln(10)/20). Rounding it to 0.115 shifts km-scale results
# by under 0.05%.
ABSORPTION_EXPONENT_PER_DB = math.log(10.0) / 20.0  # 0.11512925...

#: Residual tolerance, relative to K, demanded of the exact solver.
EXACT_RESIDUAL_TOL = 1e-9


def absorption_coefficient(gamma_db_per_m: float) -> float:
    """Exponential absorption rate a (1/m) for a one-way dB/m coefficient."""
    if gamma_db_per_m < 0.0:
        raise DomainError(f"absorption must be >= 0, got {gamma_db_per_m}")
    return ABSORPTION_EXPONENT_PER_DB * gamma_db_per_m


def closed_form_range(gamma_db_per_m: float, reach_m: float) -> float:
    """Approximate root ln(1 + a K)/a of R exp(aR) = K.

    The vacuum case (gamma = 0) is an explicit branch returning K itself,
    not a numerical limit.
    """
    if reach_m <= 0.0:
        raise DomainError(f"reach must be > 0 m, got {reach_m}")
    a = absorption_coefficient(gamma_db_per_m)
    if a == 0.0:
        return reach_m
    return math.log1p(a * reach_m) / a


def exact_range(gamma_db_per_m: float, reach_m: float) -> float:
    """Unique positive root of R exp(aR) = K by bracketed root solving.

    Solves the monotone log form ln(R) + aR = ln(K) with a guaranteed
    bracket K/(1+aK) <= R <= K and verifies the residual
    |R exp(aR) - K| / K < 1e-9.

    Raises
    ------
    SolverError
        If the bracketing solve fails to reach the residual tolerance.
    """
    if reach_m <= 0.0:
        raise DomainError(f"reach must be > 0 m, got {reach_m}")
    a = absorption_coefficient(gamma_db_per_m)
    if a == 0.0:
        return reach_m
    x = a * reach_m
    log_k = math.log(reach_m)

    def g(r):
        return math.log(r) + a * r - log_k

    lo = reach_m / (1.0 + x) * (1.0 - 1e-12)
    hi = reach_m * (1.0 + 1e-12)
    try:
        root = brentq(g, lo, hi, xtol=1e-300, rtol=8.9e-16, maxiter=200)
    except (ValueError, RuntimeError) as exc:
        raise SolverError(f"range root solve failed for a*K={x}: {exc}") from exc
    residual = abs(root * math.exp(a * root) - reach_m) / reach_m
    if not residual < EXACT_RESIDUAL_TOL:
        raise SolverError(
            f"range root residual {residual:.3e} exceeds {EXACT_RESIDUAL_TOL}")
    return root


def detection_reach(samples: float, snr_threshold_linear: float,
                    characteristic_range_m: float) -> float:
    """Reach K = (M / SNR_th)**(1/4) * R_c shared by both radar families."""
    if samples < 1.0:
        raise DomainError(f"sample count must be >= 1, got {samples}")
    if snr_threshold_linear <= 0.0:
        raise DomainError(
            f"threshold SNR must be > 0, got {snr_threshold_linear}")
    if characteristic_range_m <= 0.0:
        raise DomainError(
            f"characteristic range must be > 0, got {characteristic_range_m}")
    return (samples / snr_threshold_linear) ** 0.25 * characteristic_range_m


def fourth_root_link_range(rcs_sigma_m2: float, antenna_gain_linear: float,
                           effective_aperture_m2: float, power_w: float,
                           noise_power_w: float) -> float:
    """Characteristic range (sigma G A_e P / (16 pi^2 P_n))**(1/4).

    The same fourth-root law serves the direct radar (P = transmitted
    power) and the noise radar (P = retained idler power); note that
    (4 pi)^2 = 16 pi^2.
    """
    if power_w <= 0.0:
        raise DomainError(f"power must be > 0 W, got {power_w}")
    if noise_power_w <= 0.0:
        raise DomainError(f"noise power must be > 0 W, got {noise_power_w}")
    ratio = (rcs_sigma_m2 * antenna_gain_linear * effective_aperture_m2 *
             power_w) / (16.0 * math.pi ** 2 * noise_power_w)
    return ratio ** 0.25
