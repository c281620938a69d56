"""Fisher information basics on a single qubit.

Walks through the core quantities: the QFI of a unitary family, its
symmetric logarithmic derivative, the variance bound, and how a well-chosen
measurement attains the QFI classically.
"""

import numpy as np

from qfc import classical_fi, eigh, measurement_projectors, qfi, sld, variance
from qfc.states import random_density, random_hermitian

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)

print("Fisher information on a qubit")
print("-" * 60)

# A mixed state diagonal in the z basis, driven by sigma_x.
rho = np.diag([0.75, 0.25]).astype(complex)
print("state: diag(0.75, 0.25), generator: sigma_x")
print(f"  QFI      = {qfi(rho, SX):.6f}   (two off-diagonal terms of 1/8 each)")
print(f"  variance = {variance(rho, SX):.6f}   (upper bound, loose for mixed states)")

# The SLD solves i[rho, H] = (L rho + rho L)/2; QFI = tr(rho L^2)/4.
L = sld(rho, SX)
residual = np.linalg.norm(1j * (rho @ SX - SX @ rho) - (L @ rho + rho @ L) / 2)
print(f"  SLD defining-equation residual = {residual:.2e}")
print(f"  tr(rho L^2)/4 = {np.real(np.trace(rho @ L @ L)) / 4:.6f} (= QFI)")
print()

# For pure states the QFI saturates the variance.
plus = np.full((2, 2), 0.5, dtype=complex)  # |+><+|
print("pure state |+><+|, generator: sigma_z")
print(f"  QFI      = {qfi(plus, SZ):.6f}")
print(f"  variance = {variance(plus, SZ):.6f}   (equal: pure case)")
print()

# Measuring in the sigma_y eigenbasis reads out the full QFI classically.
sy_basis = np.array([[1, 1], [1j, -1j]], dtype=complex) / np.sqrt(2)
cfi = classical_fi(plus, SZ, measurement_projectors(sy_basis))
print(f"  classical FI, sigma_y measurement = {cfi:.6f}  (attains the QFI)")
print()

# The same happens for any state when measuring the SLD eigenbasis.
print("random full-rank states, SLD-eigenbasis measurement:")
for seed in range(3):
    r = random_density(3, 3, seed)
    h = random_hermitian(3, 100 + seed)
    basis = eigh(sld(r, h)).vectors
    got = classical_fi(r, h, measurement_projectors(basis))
    print(f"  seed {seed}: classical FI {got:.6f}  vs QFI {qfi(r, h):.6f}")
