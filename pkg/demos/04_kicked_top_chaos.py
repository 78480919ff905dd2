"""Chaos detection in the two-qubit kicked top from four Wigner cells.

The drive alternates a pi/2 collective kick about x with a nonlinear
twist about z of strength k. Classically the stroboscopic map turns
from regular to globally chaotic as k grows; quantum mechanically the
same transition shows up in S(t), the sum of the q=0 Wigner row, read
after every kick. A regular initial condition pins S; a chaotic one
makes it fluctuate. Writes phase_portraits.png next to this file when
matplotlib is available.
"""
import os

import numpy as np

from wigtom import (
    K_PRESETS,
    POINT_CHAOTIC,
    POINT_REGULAR,
    QKTParams,
    angle_grid,
    classical_trajectory,
    occupancy,
    phase_portrait,
    run_qkt,
)

KICKS = 10

print("S(t) per kick, q=0 row readout")
print(f"{'k':>12} {'start':>7} " + " ".join(f"{f't={t}':>7}" for t in range(KICKS + 1))
      + f" {'Var(S)':>10}")
for preset, k in K_PRESETS.items():
    for label, (theta0, phi0) in (("R", POINT_REGULAR), ("C", POINT_CHAOTIC)):
        s = run_qkt(QKTParams(k=k, kicks=KICKS, theta0=theta0, phi0=phi0)).s_values()
        cells = " ".join(f"{v:>7.4f}" for v in s)
        print(f"{preset:>12} {label:>7} {cells} {np.var(s):>10.3e}")

print("\nthe regular start (pi/2, pi) sits on a fixed point of the drive:"
      "\nS stays at 0.125 for every k, while the chaotic start fluctuates"
      "\nharder as k grows.")

# classical side: occupancy of the stroboscopic trajectory histogram
print("\nclassical occupancy proxy (500 steps, 50x50 bins):")
for preset, k in K_PRESETS.items():
    occ_r = occupancy(classical_trajectory(*POINT_REGULAR, k, 500))
    occ_c = occupancy(classical_trajectory(*POINT_CHAOTIC, k, 500))
    print(f"  k = {k:<10.4g} R -> {occ_r:.4f}   C -> {occ_c:.4f}")

print("\nnote: classically the R point is a fixed point at every k but an"
      "\nunstable one once k is large -- rounding noise ejects it into the"
      "\nchaotic sea, while the quantum S(t) above stays pinned exactly.")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("\nmatplotlib not installed; skipping the portraits")
else:
    seeds = angle_grid(12, 12)
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.6), sharey=True)
    for ax, (preset, k) in zip(axes, K_PRESETS.items()):
        cloud = phase_portrait(k, seeds, steps=300)
        pts = cloud.reshape(-1, 2)
        ax.plot(pts[:, 1], pts[:, 0], ",", alpha=0.4)
        ax.set_title(f"{preset}: k = {k:.4g}")
        ax.set_xlabel("phi")
        ax.set_xlim(0, 2 * np.pi)
        ax.set_ylim(np.pi, 0)
    axes[0].set_ylabel("theta")
    fig.tight_layout()
    out = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                       "phase_portraits.png")
    fig.savefig(out, dpi=150)
    print(f"\nwrote {out}")
