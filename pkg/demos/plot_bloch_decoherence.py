"""
Bloch-sphere view of Larmor precession and path dephasing
=========================================================

A spin precesses about the field axis on a circle of fixed latitude.
Phase damping of the path qubit pulls its Bloch vector onto the z axis.
"""

import math

import numpy as np

from timequbit import BlochVector, bloch_vector, rotate, which_path_dephase
from timequbit.qubit import density_from_bloch

r0 = BlochVector(1.0, 0.0, 0.0)
axis = (0.0, 0.0, 1.0)
for angle in np.linspace(0, 2 * math.pi, 9):
    r = rotate(r0, axis, angle)
    print(f"angle {angle:6.3f}:  ({r.x:+.4f}, {r.y:+.4f}, {r.z:+.4f})  |r| = {r.norm:.12f}")

###############################################################################
# Dephasing keeps r_z and scales the equatorial components by ``1 - lam``.

rho = density_from_bloch((0.6, 0.0, 0.8))
for lam in (0.0, 0.5, 1.0):
    r = bloch_vector(which_path_dephase(rho, lam))
    print(f"lambda = {lam:3.1f}:  ({r.x:+.3f}, {r.y:+.3f}, {r.z:+.3f})")
