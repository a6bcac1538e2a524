"""BPSK modulation, AWGN noise, and LLR computation.

Energy convention: unit energy per transmitted symbol, with Eb/N0 referenced
to information bits through the code rate, so
sigma = sqrt(1 / (2 * rate * 10^(ebno_db/10))).
"""

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class ChannelConfig:
    ebno_db: float
    rate: float
    sigma: float = field(init=False)

    def __post_init__(self):
        if not 0.0 < self.rate <= 1.0:
            raise ValueError(f"rate must be in (0, 1], got {self.rate}")
        if not math.isfinite(self.ebno_db):
            raise ValueError("Eb/N0 must be finite")
        sigma = math.sqrt(1.0 / (2.0 * self.rate * 10.0 ** (self.ebno_db / 10.0)))
        object.__setattr__(self, "sigma", sigma)


def modulate(bits) -> np.ndarray:
    """BPSK map: 0 -> +1, 1 -> -1."""
    return 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)


def transmit(x, cfg: ChannelConfig, rng: np.random.Generator) -> np.ndarray:
    """Add zero-mean Gaussian noise of standard deviation cfg.sigma."""
    x = np.asarray(x, dtype=np.float64)
    return x + rng.normal(0.0, cfg.sigma, x.size)


def llr(y, cfg: ChannelConfig) -> np.ndarray:
    """Channel log-likelihood ratios (2 / sigma^2) y."""
    if cfg.sigma <= 0.0:
        raise ValueError("sigma must be positive for LLR computation")
    return (2.0 / cfg.sigma**2) * np.asarray(y, dtype=np.float64)
