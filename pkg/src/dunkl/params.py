"""Deformation parameter and the constants of the weighted measure."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class DunklParams:
    """Parameter kappa > -1/2 together with the derived measure constants.

    The reference measure on the line has density c_kappa * |x|**(2*kappa+1)
    with respect to Lebesgue measure, and balls centered at the origin have
    measure b_kappa * r**(2*kappa+2).

    The boundary value kappa = -1/2 reduces everything to classical Fourier
    analysis (uniform weight, ordinary translation).  It is admitted only when
    ``classical=True``: it sits outside the usual parameter range but provides
    exact closed-form oracles for validation.
    """

    kappa: float
    classical: bool = False

    def __post_init__(self) -> None:
        k = float(self.kappa)
        if not math.isfinite(k):
            raise ValueError("kappa must be finite")
        if k < -0.5:
            raise ValueError(f"kappa must be >= -1/2, got {k}")
        if k == -0.5 and not self.classical:
            raise ValueError(
                "kappa = -1/2 is the classical limit; construct with classical=True"
            )
        object.__setattr__(self, "kappa", k)

    @property
    def c_kappa(self) -> float:
        """Density constant of the weight c_kappa * |x|**(2*kappa+1)."""
        return 1.0 / (2.0 ** (self.kappa + 1.0) * math.gamma(self.kappa + 1.0))

    @property
    def b_kappa(self) -> float:
        """Origin-ball constant: mu(B_r) = b_kappa * r**(2*kappa+2)."""
        return self.c_kappa / (self.kappa + 1.0)

    @property
    def weight_exponent(self) -> float:
        """Exponent 2*kappa+1 of the weight density."""
        return 2.0 * self.kappa + 1.0
