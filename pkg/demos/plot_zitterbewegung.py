"""
Zitterbewegung as time-qubit precession
=======================================

Restricted to one helicity, the Dirac Hamiltonian is a field
``B_eff = (s |p|, 0, m)`` acting on the energy-sign qubit. The Bloch vector
circles that field at twice the energy.
"""

import math

import numpy as np

from timequbit import DiracParams, BlochVector, effective_field, energy, precess
from timequbit.dirac import dirac_hamiltonian
from timequbit.qla import herm_eig

params = DiracParams(mass=1.0, momentum=(0.0, 0.0, 0.75))
print("spectrum:", herm_eig(dirac_hamiltonian(params))[0], " E =", energy(params))

b = effective_field(params, +1)
print("effective field:", b.vector, " |B| =", b.magnitude)

###############################################################################
# One full period takes ``pi / E``.

e = energy(params)
times = np.linspace(0, math.pi / e, 9)
traj = precess(BlochVector(0.0, 0.0, 1.0), params, +1, times)
bhat = b.vector / b.magnitude
for t, r in zip(times, traj):
    print(f"t = {t:5.3f}  r = ({r.x:+.4f}, {r.y:+.4f}, {r.z:+.4f})  r.B = {np.dot(r.as_array(), bhat):+.6f}")
