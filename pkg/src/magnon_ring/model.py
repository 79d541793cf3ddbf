"""
Domain types shared across the package.

Conventions
-----------
* Sites of the chain are numbered ``1..N``. The isolated (non-interacting)
  spin is addressed as site ``0`` and never lives inside the amplitude array.
* ``|0>`` is spin down, ``|1>`` is spin up. A one-magnon state is
  ``sum_j alpha_j S_j^+ |0...0>``.
* The exchange is ferromagnetic with ``J = -1``; energies are in units of
  ``|J|`` and times in units of ``hbar/|J|`` with ``hbar = 1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy import constants


class ValidationError(ValueError):
    """Raised when inputs violate a documented precondition."""


class CapacityError(ValidationError):
    """Raised when a request exceeds a hard size limit."""


class Boundary(enum.Enum):
    RING = "ring"
    OPEN = "open"


def canonical_theta(theta: float) -> float:
    """Reduce a phase modulo 2*pi into [-pi, pi]."""
    return math.remainder(float(theta), 2.0 * math.pi)


@dataclass(frozen=True)
class ChainConfig:
    """Geometry and couplings of the chain.

    ``theta`` is the phase picked up per link and is stored reduced into
    ``[-pi, pi]``. ``field_h`` only enters the dense full-space Hamiltonian;
    the mode-sum dynamics drop it as a constant energy shift.
    """

    n_sites: int
    theta: float = 0.0
    boundary: Boundary = Boundary.RING
    field_h: float = 0.0

    def __post_init__(self):
        if isinstance(self.n_sites, bool) or int(self.n_sites) != self.n_sites:
            raise ValidationError(f"n_sites must be an integer, got {self.n_sites!r}")
        if self.n_sites < 2:
            raise ValidationError(f"n_sites must be >= 2, got {self.n_sites}")
        if not math.isfinite(self.theta) or not math.isfinite(self.field_h):
            raise ValidationError("theta and field_h must be finite")
        object.__setattr__(self, "n_sites", int(self.n_sites))
        object.__setattr__(self, "boundary", Boundary(self.boundary))
        object.__setattr__(self, "theta", canonical_theta(self.theta))
        object.__setattr__(self, "field_h", float(self.field_h))

    @property
    def coupling(self) -> float:
        return -1.0

    def with_theta(self, theta: float) -> "ChainConfig":
        return ChainConfig(self.n_sites, theta, self.boundary, self.field_h)

    def check_site(self, site: int, allow_isolated: bool = False) -> int:
        lo = 0 if allow_isolated else 1
        if isinstance(site, bool) or int(site) != site or not lo <= site <= self.n_sites:
            raise ValidationError(
                f"site index {site!r} out of range [{lo}, {self.n_sites}]"
            )
        return int(site)


@dataclass(frozen=True)
class IsolatedSpin:
    """Bell pair shared between the isolated spin 0 and chain site ``m``."""

    m: int = 1

    @property
    def sites(self) -> tuple[int, ...]:
        return (self.m,)


@dataclass(frozen=True)
class InChainPair:
    """Bell pair shared between chain sites ``m1`` and ``m2``."""

    m1: int = 1
    m2: int = 2

    def __post_init__(self):
        if self.m1 == self.m2:
            raise ValidationError(f"in-chain pair needs two distinct sites, got ({self.m1}, {self.m2})")

    @property
    def sites(self) -> tuple[int, ...]:
        return (self.m1, self.m2)


Scenario = Union[IsolatedSpin, InChainPair]


def check_scenario(config: ChainConfig, scenario: Scenario) -> None:
    if not isinstance(scenario, (IsolatedSpin, InChainPair)):
        raise ValidationError(f"unknown scenario {scenario!r}")
    for site in scenario.sites:
        config.check_site(site)


@dataclass(frozen=True)
class MagnonAmplitudes:
    """Site amplitudes of a one-magnon state at a given time.

    ``alpha[j - 1]`` is the amplitude on chain site ``j``. ``alpha_isolated``
    is the amplitude of the branch where the isolated spin carries the
    excitation; it is ``None`` when no isolated spin takes part.
    """

    alpha: np.ndarray
    alpha_isolated: Optional[complex] = None
    time: float = 0.0

    def __post_init__(self):
        alpha = np.array(self.alpha, dtype=complex)
        if alpha.ndim != 1:
            raise ValidationError("alpha must be one-dimensional")
        alpha.flags.writeable = False
        object.__setattr__(self, "alpha", alpha)
        if self.alpha_isolated is not None:
            object.__setattr__(self, "alpha_isolated", complex(self.alpha_isolated))

    @property
    def n_sites(self) -> int:
        return self.alpha.shape[0]

    def norm_squared(self) -> float:
        total = float(np.sum(np.abs(self.alpha) ** 2))
        if self.alpha_isolated is not None:
            total += abs(self.alpha_isolated) ** 2
        return total

    def amplitude(self, site: int) -> complex:
        """Amplitude for a site selector (0 means the isolated spin)."""
        if site == 0:
            if self.alpha_isolated is None:
                raise ValidationError("no isolated spin in this state")
            return self.alpha_isolated
        if not 1 <= site <= self.n_sites:
            raise ValidationError(f"site {site} out of range [1, {self.n_sites}]")
        return complex(self.alpha[site - 1])


def make_initial_amplitudes(config: ChainConfig, scenario: Scenario) -> MagnonAmplitudes:
    """Bell state ``(|01> + |10>)/sqrt(2)`` on the scenario's pair, other sites down."""
    check_scenario(config, scenario)
    amp = 1.0 / math.sqrt(2.0)
    alpha = np.zeros(config.n_sites, dtype=complex)
    for site in scenario.sites:
        alpha[site - 1] = amp
    isolated = amp if isinstance(scenario, IsolatedSpin) else None
    return MagnonAmplitudes(alpha, isolated, 0.0)


class AcGeometry(enum.Enum):
    """Field layouts that maximise ``|mu x E . dx|``."""

    RADIAL_FIELD = "radial-field"
    AXIAL_MOMENT = "axial-moment"


@dataclass(frozen=True)
class AcFieldConfig:
    magnetic_moment: float
    e_field_magnitude: float
    link_length: float
    geometry: AcGeometry = AcGeometry.RADIAL_FIELD

    def __post_init__(self):
        for name in ("magnetic_moment", "e_field_magnitude", "link_length"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValidationError(f"{name} must be finite and >= 0, got {value!r}")
        object.__setattr__(self, "geometry", AcGeometry(self.geometry))


def ac_phase_per_link(ac_field: AcFieldConfig) -> float:
    """Aharonov-Casher phase (radians) acquired on one link.

    Both supported geometries put the moment, the field and the hop direction
    mutually orthogonal, so the line integral of ``mu x E`` over a uniform
    field reduces to ``mu * E * dr``.
    """
    return (
        ac_field.magnetic_moment
        * ac_field.e_field_magnitude
        * ac_field.link_length
        / (constants.hbar * constants.c**2)
    )


@dataclass(frozen=True)
class DmConfig:
    """z-only Dzyaloshinskii-Moriya coupling (in units of ``|J|``)."""

    d_z: float

    def __post_init__(self):
        if not math.isfinite(self.d_z):
            raise ValidationError(f"d_z must be finite, got {self.d_z!r}")
        if abs(math.atan(self.d_z)) >= math.pi / 2:
            raise ValidationError(f"d_z={self.d_z!r} puts phi on the boundary of (-pi/2, pi/2)")
        object.__setattr__(self, "d_z", float(self.d_z))

    @property
    def phi(self) -> float:
        return math.atan(self.d_z)

    @property
    def time_scale(self) -> float:
        """``1/cos(phi)``: how much faster every mode runs than without DM."""
        return 1.0 / math.cos(self.phi)
