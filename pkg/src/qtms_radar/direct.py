"""Direct-detection (conventional) radar model.

The detector statistic is received signal power. Detection integrates
M = tau_int * B_det samples and declares a target when the effective SNR
exceeds a threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import ranging
from .core import RadarLink, channel_transfer
from .errors import DomainError

# Threshold equivalent to a single-microwave-photon detector front end
# (-190 dBm sensitivity receivers): -54 dB.
SINGLE_PHOTON_SNR_THRESHOLD_DB = -54.0


@dataclass(frozen=True)
class DetectionThreshold:
    """Minimum effective SNR (linear ratio) that declares a detection."""

    snr_threshold_linear: float

    def __post_init__(self):
        if self.snr_threshold_linear <= 0.0:
            raise DomainError(
                f"threshold SNR must be > 0, got {self.snr_threshold_linear}")

    @classmethod
    def from_db(cls, snr_threshold_db: float) -> "DetectionThreshold":
        return cls(10.0 ** (snr_threshold_db / 10.0))

    @property
    def snr_threshold_db(self) -> float:
        return 10.0 * math.log10(self.snr_threshold_linear)


def single_photon_radar_preset() -> DetectionThreshold:
    """Detection threshold of a single-photon radar receiver (-54 dB)."""
    return DetectionThreshold.from_db(SINGLE_PHOTON_SNR_THRESHOLD_DB)


@dataclass(frozen=True)
class DirectRadarSystem:
    """A direct-detection radar: link geometry plus power and timing budget.

    ``noise_power_w`` is the in-band environmental noise power P_n (see
    :func:`qtms_radar.core.thermal_noise_power`). The sample count
    M = integration_time_s * detection_bandwidth_hz must be at least 1.
    """

    link: RadarLink
    transmit_power_w: float
    noise_power_w: float
    integration_time_s: float
    detection_bandwidth_hz: float

    def __post_init__(self):
        for name in ("transmit_power_w", "noise_power_w",
                     "integration_time_s", "detection_bandwidth_hz"):
            value = getattr(self, name)
            if value <= 0.0:
                raise DomainError(f"{name} must be > 0, got {value}")
        if self.samples < 1.0:
            raise DomainError(
                f"integration must cover at least one sample, got M={self.samples}")

    @property
    def samples(self) -> float:
        """Number of integrated measurements M = tau_int * B_det."""
        return self.integration_time_s * self.detection_bandwidth_hz


def effective_snr_direct(system: DirectRadarSystem, range_m: float) -> float:
    """Effective SNR after integration, M * eta(R) * P_t / P_n."""
    eta = channel_transfer(system.link, range_m)
    return system.samples * eta * system.transmit_power_w / system.noise_power_w


def characteristic_range_direct(system: DirectRadarSystem) -> float:
    """Range where the single-sample SNR reaches 0 dB in vacuum.

    R_c = (sigma G A_e P_t / ((4 pi)^2 P_n))**(1/4); quadrupling the
    transmit power stretches it by sqrt(2).
    """
    link = system.link
    return ranging.fourth_root_link_range(
        link.rcs_sigma_m2, link.antenna_gain_linear, link.effective_aperture_m2,
        system.transmit_power_w, system.noise_power_w)


def _reach(system: DirectRadarSystem, threshold: DetectionThreshold) -> float:
    return ranging.detection_reach(system.samples, threshold.snr_threshold_linear,
                                   characteristic_range_direct(system))


def max_range_direct_closed_form(system: DirectRadarSystem,
                                 threshold: DetectionThreshold) -> float:
    """Approximate maximum detection range ln(1 + a K)/a.

    K = (M/SNR_th)**(1/4) R_c and a is the exponential absorption rate.
    This is the logarithmic approximation to the true root of the range
    equation; it reduces to K exactly in vacuum and slightly overshoots
    otherwise (flagged "approximate" in reports).
    """
    return ranging.closed_form_range(system.link.atmosphere.gamma_db_per_m,
                                     _reach(system, threshold))


def max_range_direct_exact(system: DirectRadarSystem,
                           threshold: DetectionThreshold) -> float:
    """Maximum detection range solving R exp(aR) = K to solver precision."""
    return ranging.exact_range(system.link.atmosphere.gamma_db_per_m,
                               _reach(system, threshold))
