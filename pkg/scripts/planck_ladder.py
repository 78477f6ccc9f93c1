"""Regulated full-line integrals for exponential decay against the Planck form.

    python3 scripts/planck_ladder.py --kind gaussian --points 12
"""
import argparse
import math

import numpy as np

from bogorad.condensate import CondensateParams, make_mode
from bogorad.phase_integral import RegulatorConvergenceError, RegulatorSpec, Window, integrate_numeric
from bogorad.trajectory import ExponentialDecay


def planck(omega, rate, upper):
    x = 2 * math.pi * omega / rate
    return 2 * math.pi / (omega * rate) / (math.expm1(x) if upper else -math.expm1(-x))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", choices=("exponential", "gaussian"), default="exponential")
    ap.add_argument("--points", type=int, default=8)
    args = ap.parse_args()
    params = CondensateParams.natural(1.0, 1.0)
    reg = RegulatorSpec(kind=args.kind)
    print("omega/Gamma,hemisphere,abs2,planck,rel_error,extrapolation_error")
    for ratio in np.geomspace(0.1, 5.0, args.points):
        for upper in (True, False):
            mode = make_mode(params, 1.0, 0.7 if upper else math.pi - 0.7)
            rate = mode.omega / ratio
            target = planck(mode.omega, rate, upper)
            try:
                got = integrate_numeric(mode, ExponentialDecay(1.0, rate), Window(), reg)
            except RegulatorConvergenceError as exc:
                print(f"{ratio:.4g},{'upper' if upper else 'lower'},refused,{target:.6e},,{exc}")
                continue
            print(f"{ratio:.4g},{'upper' if upper else 'lower'},{got.abs2:.10e},{target:.10e},"
                  f"{got.abs2 / target - 1:.2e},{got.error:.2e}")


if __name__ == "__main__":
    main()
