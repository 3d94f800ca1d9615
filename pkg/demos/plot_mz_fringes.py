"""
Time-parity fringes in a Mach-Zehnder interferometer
=====================================================

Opposite fields in the two arms make the path a time qubit. The output
ports select the even and odd combinations of forward and backward spin
evolution, so detection probabilities oscillate with the Larmor phase.
"""

import math

import numpy as np

from timequbit import MzConfig, ZeemanParams, fringe_sweep, fringe_visibility

# field along z, spin prepared along +x
cfg = MzConfig(ZeemanParams(omega=1.0, axis=(0, 0, 1)), traversal_time=0.0)
rows = np.array(fringe_sweep(cfg, 4 * math.pi, 17))

print("phase      p_d1      p_d2      cos^2(phase/2)")
for phase, p1, p2 in rows:
    print(f"{phase:7.4f}  {p1:8.5f}  {p2:8.5f}  {math.cos(phase / 2) ** 2:8.5f}")

###############################################################################
# Which-path dephasing shrinks the fringe contrast by ``1 - lam``.

for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
    noisy = MzConfig(cfg.zeeman, 0.0, dephasing=lam)
    sweep = np.array(fringe_sweep(noisy, 4 * math.pi, 64))
    print(f"lambda = {lam:4.2f}  visibility = {fringe_visibility(sweep[:, 0], sweep[:, 1]):.6f}")
