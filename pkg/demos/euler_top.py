"""Integrate the Euler top as a Nambu system and watch both invariants."""

import sys

from ternalg.nambu import EulerTopParams, integrate

system = EulerTopParams(1, 2, 3).system()
for h in (1e-3, 5e-4):
    traj = integrate(system, (1.0, 1.0, 1.0), h, 10_000)
    dh, dg = traj.max_drift()
    print(f"h={h:g}: drift H={dh:.3e} G={dg:.3e} end={traj.samples[-1][1:4]}")

if len(sys.argv) > 1:
    integrate(system, (1.0, 1.0, 1.0), 1e-3, 2000).write_csv(sys.argv[1])
    print("trajectory written to", sys.argv[1])
