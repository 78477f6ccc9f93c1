"""Impurity-induced depletion at fixed density for growing particle number."""
import argparse

from bogorad.condensate import CondensateParams
from bogorad.phase_integral import Window
from bogorad.spectrum import depletion
from bogorad.trajectory import ExponentialDecay


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=float, default=6.0)
    ap.add_argument("--sizes", type=int, nargs="+", default=[256, 512, 1024, 2048, 4096])
    args = ap.parse_args()
    traj = ExponentialDecay(1.0, 1.0)
    print("N,leading,correction,N*correction,grid_error*N,tail_estimate,modes")
    for n in args.sizes:
        p = CondensateParams(mass=1.0, g=1.0, density=1.0, coupling=1.0, n_particles=n, box_length=n ** (1 / 3))
        r = depletion(p, traj, Window(0.0, 2.0), k_max=args.k_max)
        print(f"{n},{r.leading:.6e},{r.correction:.6e},{r.correction * n:.5f},{r.grid_error * n:.5f},"
              f"{r.tail_estimate:.2e},{r.n_modes}")


if __name__ == "__main__":
    main()
