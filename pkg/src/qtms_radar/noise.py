"""Correlation (noise) radar model.

The detector statistic is the Pearson correlation between the received
signal and the retained idler. The source-level coefficient rho0 degrades
with range through the same link budget as a direct radar; integration
over M samples and a false-alarm threshold on the estimated correlation
close the detection condition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import ranging
from .core import RadarLink, form_factor
from .errors import DomainError, UndetectableError

# Operating-mode classification by false-alarm probability: early-alarm
# (search) radars run near P_fa = 0.5, track radars at or below 1e-3.
EARLY_ALARM_MIN_PFA = 0.45
TRACK_MAX_PFA = 1e-3


@dataclass(frozen=True)
class FalseAlarmSpec:
    """Accepted probability of declaring a target with none present."""

    p_fa: float

    def __post_init__(self):
        if not 0.0 < self.p_fa < 1.0:
            raise DomainError(
                f"false-alarm probability must be in (0, 1), got {self.p_fa}")

    @property
    def operating_mode(self) -> str:
        """'early-alarm', 'track', or 'intermediate' (metadata only)."""
        if self.p_fa >= EARLY_ALARM_MIN_PFA:
            return "early-alarm"
        if self.p_fa <= TRACK_MAX_PFA:
            return "track"
        return "intermediate"


@dataclass(frozen=True)
class NoiseRadarSystem:
    """A correlation radar: link geometry, idler budget, and timing.

    ``rho0`` is the source-level signal/idler correlation coefficient and
    ``idler_power_w`` the power of the retained (amplified) idler record.
    """

    link: RadarLink
    idler_power_w: float
    noise_power_w: float
    rho0: float
    integration_time_s: float
    detection_bandwidth_hz: float

    def __post_init__(self):
        for name in ("idler_power_w", "noise_power_w",
                     "integration_time_s", "detection_bandwidth_hz"):
            value = getattr(self, name)
            if value <= 0.0:
                raise DomainError(f"{name} must be > 0, got {value}")
        if not 0.0 <= self.rho0 <= 1.0:
            raise DomainError(f"rho0 must be in [0, 1], got {self.rho0}")
        if self.samples < 1.0:
            raise DomainError(
                f"integration must cover at least one sample, got M={self.samples}")

    @property
    def samples(self) -> float:
        return self.integration_time_s * self.detection_bandwidth_hz


def rho0_from_idler_noise(idler_noise_power_w: float, idler_power_w: float) -> float:
    """Source correlation rho0 = 1 - P_n,i / P_i.

    Maximal (rho0 = 1) for a noiseless idler record, zero when the idler
    is all noise.
    """
    if idler_power_w <= 0.0:
        raise DomainError(f"idler power must be > 0, got {idler_power_w}")
    if idler_noise_power_w < 0.0:
        raise DomainError(
            f"idler noise power must be >= 0, got {idler_noise_power_w}")
    if idler_noise_power_w > idler_power_w:
        raise DomainError(
            "idler noise power cannot exceed total idler power "
            f"({idler_noise_power_w} > {idler_power_w})")
    return 1.0 - idler_noise_power_w / idler_power_w


def characteristic_range_nr(system: NoiseRadarSystem) -> float:
    """Range where the correlation drops by sqrt(2) in vacuum.

    R_c = (sigma G A_e P_i / (16 pi^2 P_n))**(1/4), identical in form to
    the direct-radar characteristic range with the idler power in place
    of the transmitted power.
    """
    link = system.link
    return ranging.fourth_root_link_range(
        link.rcs_sigma_m2, link.antenna_gain_linear, link.effective_aperture_m2,
        system.idler_power_w, system.noise_power_w)


def _range_degradation(system: NoiseRadarSystem, range_m: float,
                       samples: float) -> float:
    if range_m <= 0.0:
        raise DomainError(f"range must be > 0 m, got {range_m}")
    f = form_factor(system.link.atmosphere, range_m)
    rc = characteristic_range_nr(system)
    return (range_m / rc) ** 4 / (samples * f * f)


def correlation_vs_range(system: NoiseRadarSystem, range_m: float) -> float:
    """Single-sample correlation rho(R) = rho0 / sqrt(1 + (R/R_c)^4 / F^2).

    Equivalently rho0 / sqrt(1 + 1/(eta(R) SNR_i)) with SNR_i = P_i/P_n.
    Approaches rho0 as R -> 0 and rho0/sqrt(2) at R = R_c in vacuum.
    """
    return system.rho0 / math.sqrt(1.0 + _range_degradation(system, range_m, 1.0))


def effective_correlation(system: NoiseRadarSystem, range_m: float) -> float:
    """Correlation after integrating M samples.

    rho_eff(R) = rho0 / sqrt(1 + (R/R_c)^4 / (M F^2)); integration scales
    the retained-idler SNR by M, so rho <= rho_eff <= rho0 for M >= 1.
    """
    return system.rho0 / math.sqrt(
        1.0 + _range_degradation(system, range_m, system.samples))


def rho_threshold(false_alarm: FalseAlarmSpec, samples: float) -> float:
    """Correlation detection threshold rho_th = sqrt(-ln(P_fa) / M)."""
    if samples < 1.0:
        raise DomainError(f"sample count must be >= 1, got {samples}")
    return math.sqrt(-math.log(false_alarm.p_fa) / samples)


def snr_threshold_nr(rho0: float, rho_th: float) -> float:
    """Equivalent threshold SNR of a noise radar.

    SNR_th = [(rho0/rho_th)^2 - 1]^(-1) maps the correlation detection
    condition onto the direct-radar form; correlated sources push it far
    below the 10-20 dB of conventional receivers.

    Raises
    ------
    UndetectableError
        If rho0 <= rho_th: the correlation can never cross the threshold,
        so no detection range exists at any power.
    """
    if rho_th <= 0.0:
        raise DomainError(f"rho_th must be > 0, got {rho_th}")
    if rho0 <= rho_th:
        raise UndetectableError(
            f"source correlation rho0={rho0:.6g} does not exceed the "
            f"threshold rho_th={rho_th:.6g}; the system cannot detect")
    return 1.0 / ((rho0 / rho_th) ** 2 - 1.0)


def _reach(system: NoiseRadarSystem, false_alarm: FalseAlarmSpec) -> float:
    rho_th = rho_threshold(false_alarm, system.samples)
    snr_th = snr_threshold_nr(system.rho0, rho_th)
    return ranging.detection_reach(system.samples, snr_th,
                                   characteristic_range_nr(system))


def max_range_nr(system: NoiseRadarSystem, false_alarm: FalseAlarmSpec,
                 solver: str = "closed") -> float:
    """Maximum range at which rho_eff(R) still exceeds rho_th.

    Same logarithmic form as the direct radar with SNR_th replaced by
    :func:`snr_threshold_nr` and the characteristic range by
    :func:`characteristic_range_nr`. ``solver`` selects the ``"closed"``
    logarithmic approximation or the ``"exact"`` root solve.

    Raises
    ------
    UndetectableError
        If rho0 <= rho_th (propagated from :func:`snr_threshold_nr`).
    """
    reach = _reach(system, false_alarm)
    gamma = system.link.atmosphere.gamma_db_per_m
    if solver == "closed":
        return ranging.closed_form_range(gamma, reach)
    if solver == "exact":
        return ranging.exact_range(gamma, reach)
    raise DomainError(f"unknown solver {solver!r}, expected 'closed' or 'exact'")
