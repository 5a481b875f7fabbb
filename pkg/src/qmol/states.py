"""Four-level state vectors for two charge qubits.

Positional basis ordering is {|LL>, |LR>, |RL>, |RR>}, where the first
letter is the occupied site of molecule 1 and the second of molecule 2.
Bell basis ordering is {|Psi->, |Phi->, |Psi+>, |Phi+>} with

    |Psi+-> = (|RL> +- |LR>) / sqrt(2)
    |Phi+-> = (|RR> +- |LL>) / sqrt(2)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import NotNormalized

__all__ = [
    "Basis",
    "POSITIONAL_LABELS",
    "BELL_LABELS",
    "BELL_DISPLAY",
    "StateVector",
    "basis_state",
]

POSITIONAL_LABELS = ("LL", "LR", "RL", "RR")
BELL_LABELS = ("PsiMinus", "PhiMinus", "PsiPlus", "PhiPlus")
BELL_DISPLAY = ("Psi-", "Phi-", "Psi+", "Phi+")

_NORM_TOL = 1e-12


class Basis(enum.Enum):
    POSITIONAL = "positional"
    BELL = "bell"


def _bell_matrix() -> np.ndarray:
    s = 1.0 / sqrt(2.0)
    b = np.array(
        [
            [0.0, -s, s, 0.0],
            [-s, 0.0, 0.0, s],
            [0.0, s, s, 0.0],
            [s, 0.0, 0.0, s],
        ],
        dtype=complex,
    )
    b.setflags(write=False)
    return b


#: Rows are the Bell states expressed over the positional basis; applying it
#: to positional amplitudes yields Bell-basis amplitudes.
BELL_MATRIX = _bell_matrix()


@dataclass(frozen=True)
class StateVector:
    """Unit-norm amplitude vector tagged with the basis it is written in."""

    amplitudes: np.ndarray
    basis: Basis = Basis.POSITIONAL

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (4,):
            raise ValueError(f"expected 4 amplitudes, got {amps.shape}")
        if not np.all(np.isfinite(amps.view(float))):
            raise NotNormalized("amplitudes contain NaN or Inf")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _NORM_TOL:
            raise NotNormalized(f"state norm is {norm!r}, expected 1")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if not isinstance(self.basis, Basis):
            raise ValueError(f"basis must be a Basis member, got {self.basis!r}")

    @property
    def probabilities(self) -> np.ndarray:
        """Squared moduli of the amplitudes, in this state's basis."""
        return np.abs(self.amplitudes) ** 2

    def to_positional(self) -> "StateVector":
        if self.basis is Basis.POSITIONAL:
            return self
        return StateVector(BELL_MATRIX.conj().T @ self.amplitudes, Basis.POSITIONAL)

    def to_bell(self) -> "StateVector":
        if self.basis is Basis.BELL:
            return self
        return StateVector(BELL_MATRIX @ self.amplitudes, Basis.BELL)

    def overlap(self, other: "StateVector") -> complex:
        """Inner product <self|other>, converting bases if they differ."""
        a = self.to_positional().amplitudes
        b = other.to_positional().amplitudes
        return complex(np.vdot(a, b))

    def density_matrix(self) -> np.ndarray:
        """Rank-one density matrix |self><self| in this state's basis."""
        return np.outer(self.amplitudes, self.amplitudes.conj())


def basis_state(label: str) -> StateVector:
    """Build a basis state from a positional or Bell label.

    Positional labels (LL, LR, RL, RR) give positional-basis unit vectors;
    Bell labels (PsiMinus, PhiMinus, PsiPlus, PhiPlus) give the
    corresponding Bell state expressed in the positional basis.
    """
    amps = np.zeros(4, dtype=complex)
    if label in POSITIONAL_LABELS:
        amps[POSITIONAL_LABELS.index(label)] = 1.0
        return StateVector(amps, Basis.POSITIONAL)
    if label in BELL_LABELS:
        return StateVector(BELL_MATRIX[BELL_LABELS.index(label)], Basis.POSITIONAL)
    raise ValueError(
        f"unknown state label {label!r}; expected one of "
        f"{POSITIONAL_LABELS + BELL_LABELS}"
    )
