"""Where the quantifiers vanish, and why one commuting observable is not enough.

CQ/CC mixtures are exactly the states with zero quantum correlation: both
quantifiers (and both discords) vanish there and nowhere else. For parties
of dimension 3 or more, a single local projector commuting with the state
does not certify classicality; the witness state below has such a projector
yet strictly positive correlation.
"""

import numpy as np

from qfc import (
    BipartiteState,
    OptimizerConfig,
    entropic_discord,
    geometric_discord,
    lift_a,
    make_cc,
    make_cq,
    make_witness_state,
    measurement_correlation,
    observable_correlation,
    qfi,
)
from qfc.states import haar_unitary, random_density, random_pure

cfg = OptimizerConfig(restarts=8, seed=0)

print("Zero-correlation states")
print("-" * 60)

cq = make_cq(
    [0.3, 0.7],
    haar_unitary(2, 1),
    [random_density(3, 3, 2), random_density(3, 3, 3)],
)
cc = make_cc([0.5, 0.5], (2, 2), haar_unitary(2, 4), haar_unitary(2, 5))

for label, state in [("CQ mixture on 2x3", cq), ("CC mixture on 2x2", cc)]:
    obs = observable_correlation(state, cfg).value
    meas = measurement_correlation(state, cfg).value
    dq = entropic_discord(state, cfg).value
    dg = geometric_discord(state, cfg).value
    print(f"{label}:")
    print(f"  observable {obs:.2e}  measurement {meas:.2e}  D_Q {dq:.2e}  D_G {dg:.2e}")

print()
print("A discordant state stays clearly away from zero:")
noisy_rho = 0.9 * random_pure((2, 2), 6).rho + 0.1 * np.eye(4) / 4
noisy = BipartiteState(noisy_rho, 2, 2)
print(f"  pure + 10% noise: observable {observable_correlation(noisy, cfg).value:.4f}, "
      f"measurement {measurement_correlation(noisy, cfg).value:.4f}")

print()
print("Commuting-projector witness (party a of dimension 3)")
print("-" * 60)
witness = make_witness_state()
proj = np.zeros((3, 3))
proj[0, 0] = 1.0
local = qfi(witness.rho, lift_a(proj, 2))
value = observable_correlation(witness, cfg).value
print(f"  QFI of the commuting projector driving: {local:.2e}  (zero)")
print(f"  yet the minimized basis total:          {value:.4f}  (positive)")
print("  one vanishing local speed does not make the state classical when M >= 3")
