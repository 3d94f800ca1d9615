"""
Bell correlations between time and spin
=======================================

The entangled state ``(|+>|up> + |->|down>)/sqrt(2)`` reaches the quantum
maximum of the CHSH combination, while every local deterministic
assignment stays within +-2.
"""

import math

import numpy as np

from timequbit import bell_state, chsh, lhv_extremes, tsirelson_settings, sample_chsh

psi = bell_state()
rho = np.outer(psi, psi.conj())
settings = tsirelson_settings()

exact = chsh(rho, *settings)
print("exact correlations:", exact.e00, exact.e01, exact.e10, exact.e11)
print(f"S = {exact.s:.15f}   2 sqrt(2) = {2 * math.sqrt(2):.15f}")

_, bound = lhv_extremes()
print("largest |S| over the 16 local strategies:", bound)

###############################################################################
# Finite-shot estimates scatter about the exact value. Each correlation has
# variance ``(1 - E^2) / shots = 1 / (2 shots)``, so ``S_hat`` has standard
# deviation ``sqrt(2 / shots)``.

for shots in (100, 10_000, 1_000_000):
    records, e_hats, s_hat = sample_chsh(rho, *settings, shots=shots, seed=2024)
    print(f"shots = {shots:>9}  S_hat = {s_hat:.5f}  error = {abs(s_hat - exact.s):.2e}  sigma = {math.sqrt(2 / shots):.2e}")
