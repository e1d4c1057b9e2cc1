"""Medium parameters and blockade-sphere quantities.

All frequencies are in units of the spontaneous emission rate ``gamma2``
(normally 1), intensities are dimensionless ``|Omega_p / gamma2|**2`` and
lengths use whatever unit ``c6`` and ``density`` are expressed in.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .errors import ParameterError

__all__ = [
    "MediumParams",
    "BlockadeDerived",
    "derive_blockade",
    "absorption_cross_section",
]


def absorption_cross_section(lambda_probe: float) -> float:
    """Resonant probe absorption cross section ``3 lambda**2 / (2 pi)``."""
    return 3.0 * lambda_probe**2 / (2.0 * math.pi)


@dataclass(frozen=True)
class MediumParams:
    """Atomic and medium inputs for a cascade Rydberg-EIT medium.

    ``delta_c`` defaults to ``-delta_p`` (two-photon resonance) and
    ``gamma12`` defaults to ``gamma2 / 2``; supplying values that break
    either relation raises :class:`ParameterError`.
    """

    omega_c: float
    c6: float
    density: float
    alpha: float
    delta_p: float = 0.0
    delta_c: float | None = None
    gamma2: float = 1.0
    gamma12: float | None = None
    gamma13: float = 0.0
    length: float | None = None
    lambda_probe: float | None = None

    def __post_init__(self):
        if self.delta_c is None:
            object.__setattr__(self, "delta_c", -self.delta_p)
        if self.gamma12 is None:
            object.__setattr__(self, "gamma12", self.gamma2 / 2.0)
        self._validate()

    def _validate(self):
        for key in ("omega_c", "c6", "density", "alpha", "gamma2"):
            value = getattr(self, key)
            if not (math.isfinite(value) and value > 0):
                raise ParameterError(f"{key} must be positive and finite, got {value!r}", key)
        for key in ("delta_p", "delta_c", "gamma13"):
            if not math.isfinite(getattr(self, key)):
                raise ParameterError(f"{key} must be finite", key)
        if self.gamma13 < 0:
            raise ParameterError(f"gamma13 must be >= 0, got {self.gamma13!r}", "gamma13")
        if self.gamma12 != self.gamma2 / 2.0:
            raise ParameterError(
                f"gamma12 must equal gamma2/2 = {self.gamma2 / 2.0!r}, got {self.gamma12!r}",
                "gamma12",
            )
        if abs(self.delta_p + self.delta_c) > 1e-12 * max(1.0, abs(self.delta_p)):
            raise ParameterError(
                "two-photon resonance required: delta_p + delta_c must be 0 "
                f"(got {self.delta_p!r} + {self.delta_c!r})",
                "delta_c",
            )
        for key in ("length", "lambda_probe"):
            value = getattr(self, key)
            if value is not None and not (math.isfinite(value) and value > 0):
                raise ParameterError(f"{key} must be positive, got {value!r}", key)
        if self.length is not None and self.lambda_probe is not None:
            expected = self.density * absorption_cross_section(self.lambda_probe) * self.length
            if abs(self.alpha - expected) > 1e-12 * expected:
                raise ParameterError(
                    f"alpha={self.alpha!r} inconsistent with density*sigma_abs*length={expected!r}",
                    "alpha",
                )

    def evolve(self, **changes) -> "MediumParams":
        """Copy with ``changes`` applied; ``delta_c`` follows a new ``delta_p``."""
        if "delta_p" in changes and "delta_c" not in changes:
            changes["delta_c"] = None
        if "gamma2" in changes and "gamma12" not in changes:
            changes["gamma12"] = None
        return dataclasses.replace(self, **changes)

    @property
    def gamma(self) -> complex:
        """Complex decay ``gamma2 - 2i delta_p`` of the probe coherence."""
        return complex(self.gamma2, -2.0 * self.delta_p)


@dataclass(frozen=True)
class BlockadeDerived:
    delta_eit: float
    r_c: float
    n_blockade: float


def derive_blockade(p: MediumParams) -> BlockadeDerived:
    """EIT linewidth, blockade radius and atoms per blockade sphere."""
    if not p.omega_c > 0:
        raise ParameterError("omega_c must be positive", "omega_c")
    if not p.c6 > 0:
        raise ParameterError("c6 must be positive", "c6")
    delta_eit = p.omega_c**2 / p.gamma12
    r_c = (p.c6 / delta_eit) ** (1.0 / 6.0)
    n_blockade = 4.0 * math.pi / 3.0 * r_c**3 * p.density
    return BlockadeDerived(delta_eit=delta_eit, r_c=r_c, n_blockade=n_blockade)
