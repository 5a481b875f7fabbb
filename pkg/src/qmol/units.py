"""Unit conventions.

Energies are microelectronvolts (ueV) and times are nanoseconds (ns)
throughout the package.  The only physical constant needed is hbar in
those units; phase accumulation is theta = E * t / hbar.
"""

__all__ = ["HBAR_UEV_NS"]

# hbar = 6.582119569e-16 eV s expressed in ueV ns.
HBAR_UEV_NS = 0.6582119569
