"""Shared physics layer: constants, dB bookkeeping, thermal noise,
atmospheric attenuation, the two-way channel transfer function, and
free-space mode counting.

Conventions
-----------
* All quantities are SI internally: ranges in m, powers in W, frequencies
  in Hz. dBm / dB/km appear only at I/O boundaries.
* Atmospheric absorption is stored one-way in dB/m; the one-way power
  form factor is F(R) = 10**(-gamma*R/10) and enters the two-way channel
  squared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# CODATA 2018 exact values (SI redefinition).
PLANCK_H = 6.62607015e-34    # J s
BOLTZMANN_KB = 1.380649e-23  # J/K
SPEED_OF_LIGHT = 299792458.0  # m/s


@dataclass(frozen=True)
class PhysicalConstants:
    """Planck and Boltzmann constants used by the thermal-noise model."""

    planck_h: float = PLANCK_H          # J s
    boltzmann_kb: float = BOLTZMANN_KB  # J/K


CONSTANTS = PhysicalConstants()


def db_to_linear(x_db: float) -> float:
    """Convert a decibel value to a linear power ratio, 10**(x/10)."""
    return 10.0 ** (x_db / 10.0)


def linear_to_db(ratio: float) -> float:
    """Convert a linear power ratio to decibels.

    Raises
    ------
    DomainError
        If ``ratio`` is not strictly positive.
    """
    if ratio <= 0.0:
        raise DomainError(f"linear ratio must be > 0 to convert to dB, got {ratio}")
    return 10.0 * math.log10(ratio)


def watts_to_dbm(power_w: float) -> float:
    """Express a power in dBm (dB relative to 1 mW)."""
    if power_w <= 0.0:
        raise DomainError(f"power must be > 0 to convert to dBm, got {power_w}")
    return 10.0 * math.log10(power_w / 1e-3)


def thermal_occupancy(frequency_hz: float, temperature_k: float) -> float:
    """Mean photon number of background thermal noise at one frequency.

    Bose-Einstein occupancy N_b = 1 / (exp(h f / k_B T) - 1). At microwave
    frequencies and room temperature this is large (about 624 at 10 GHz,
    300 K); it decays exponentially once h f >> k_B T.
    """
    if frequency_hz <= 0.0:
        raise DomainError(f"frequency must be > 0 Hz, got {frequency_hz}")
    if temperature_k <= 0.0:
        raise DomainError(f"temperature must be > 0 K, got {temperature_k}")
    x = PLANCK_H * frequency_hz / (BOLTZMANN_KB * temperature_k)
    # expm1 keeps full precision in the Rayleigh-Jeans regime (x << 1).
    return 1.0 / math.expm1(x)


def thermal_noise_power(occupancy: float, frequency_hz: float,
                        detection_bandwidth_hz: float) -> float:
    """Thermal noise power P_n = N_b h f B_det in watts."""
    if occupancy <= 0.0:
        raise DomainError(f"occupancy must be > 0, got {occupancy}")
    if frequency_hz <= 0.0:
        raise DomainError(f"frequency must be > 0 Hz, got {frequency_hz}")
    if detection_bandwidth_hz <= 0.0:
        raise DomainError(
            f"detection bandwidth must be > 0 Hz, got {detection_bandwidth_hz}")
    return occupancy * PLANCK_H * frequency_hz * detection_bandwidth_hz


@dataclass(frozen=True)
class Atmosphere:
    """One-way atmospheric absorption coefficient.

    ``gamma_db_per_m`` is the one-way power attenuation in dB per meter.
    Link budgets in the literature quote dB/km; use :meth:`from_db_per_km`.
    """

    gamma_db_per_m: float = 0.0

    def __post_init__(self):
        if self.gamma_db_per_m < 0.0:
            raise DomainError(
                f"absorption coefficient must be >= 0, got {self.gamma_db_per_m}")

    @classmethod
    def from_db_per_km(cls, gamma_db_per_km: float) -> "Atmosphere":
        return cls(gamma_db_per_km / 1000.0)

    @property
    def gamma_db_per_km(self) -> float:
        return self.gamma_db_per_m * 1000.0


VACUUM = Atmosphere(0.0)


def form_factor(atmosphere: Atmosphere, range_m: float) -> float:
    """One-way atmospheric power attenuation F(R) = 10**(-gamma R / 10).

    F(0) = 1 and F decreases strictly with range for gamma > 0. The factor
    composes exponentially: F(R1 + R2) = F(R1) F(R2).
    """
    if range_m < 0.0:
        raise DomainError(f"range must be >= 0 m, got {range_m}")
    return 10.0 ** (-atmosphere.gamma_db_per_m * range_m / 10.0)


@dataclass(frozen=True)
class RadarLink:
    """Geometry and loss parameters of a monostatic transmitter-target-receiver path.

    Fields
    ------
    rcs_sigma_m2:
        Radar cross-section of the target (m^2).
    antenna_gain_linear:
        Transmit antenna gain as a linear power ratio.
    effective_aperture_m2:
        Receive antenna effective aperture A_e (m^2); equal to
        aperture_efficiency * physical_aperture when built from those.
    atmosphere:
        One-way absorption coefficient.
    """

    rcs_sigma_m2: float
    antenna_gain_linear: float
    effective_aperture_m2: float
    atmosphere: Atmosphere = VACUUM

    def __post_init__(self):
        for name in ("rcs_sigma_m2", "antenna_gain_linear", "effective_aperture_m2"):
            value = getattr(self, name)
            if value <= 0.0:
                raise DomainError(f"{name} must be > 0, got {value}")

    @classmethod
    def from_physical_aperture(cls, rcs_sigma_m2: float, antenna_gain_linear: float,
                               aperture_efficiency: float, physical_aperture_m2: float,
                               atmosphere: Atmosphere = VACUUM) -> "RadarLink":
        """Build a link from (epsilon_a, A) instead of a precomputed A_e."""
        if not 0.0 < aperture_efficiency <= 1.0:
            raise DomainError(
                f"aperture efficiency must be in (0, 1], got {aperture_efficiency}")
        if physical_aperture_m2 <= 0.0:
            raise DomainError(
                f"physical aperture must be > 0 m^2, got {physical_aperture_m2}")
        return cls(rcs_sigma_m2, antenna_gain_linear,
                   aperture_efficiency * physical_aperture_m2, atmosphere)


def aperture_from_radius(radius_m: float, convention: str = "nominal") -> float:
    """Physical aperture area for an antenna quoted by its radius.

    Two readings are in circulation for small dish specs: ``"nominal"``
    treats the radius as a nominal size and returns r**2; ``"disc"`` returns
    the geometric disc area pi r**2. Benchmark presets in this package are
    calibrated with the nominal reading.
    """
    if radius_m <= 0.0:
        raise DomainError(f"radius must be > 0 m, got {radius_m}")
    if convention == "nominal":
        return radius_m ** 2
    if convention == "disc":
        return math.pi * radius_m ** 2
    raise DomainError(f"unknown aperture convention {convention!r}")


def channel_transfer(link: RadarLink, range_m: float) -> float:
    """Two-way power transfer function of the radar channel.

    eta(R) = sigma G A_e / ((4 pi)^2 R^4) * F(R)^2

    The form factor is squared for the out-and-back path. In vacuum the
    transfer obeys the exact inverse-fourth-power law eta(2R) = eta(R)/16.
    A channel with the target absent is represented by eta = 0 downstream,
    not by this function.
    """
    if range_m <= 0.0:
        raise DomainError(f"range must be > 0 m, got {range_m}")
    f = form_factor(link.atmosphere, range_m)
    geometric = (link.rcs_sigma_m2 * link.antenna_gain_linear *
                 link.effective_aperture_m2) / ((4.0 * math.pi) ** 2 * range_m ** 4)
    return geometric * f * f


def spatial_mode_count(frequency_hz: float, bandwidth_hz: float) -> float:
    """Number of free-space spatial modes spanned by a band around a carrier.

    For lambda much smaller than the quantization volume, pi sqrt(M) equals
    f / B, so M = (f / (pi B))**2. A 10 GHz carrier with 1 GHz bandwidth
    spans about 10 modes; narrowing to 100 MHz raises that to about 1013.
    """
    if frequency_hz <= 0.0:
        raise DomainError(f"frequency must be > 0 Hz, got {frequency_hz}")
    if not 0.0 < bandwidth_hz <= frequency_hz:
        raise DomainError(
            f"bandwidth must satisfy 0 < B <= f, got B={bandwidth_hz}, f={frequency_hz}")
    return (frequency_hz / (math.pi * bandwidth_hz)) ** 2
