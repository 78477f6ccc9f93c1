"""Exponential vs gaussian damping on the exponential-decay full line, per ladder."""
import argparse

from bogorad.validate import regulator_comparison


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ladder", type=float, nargs="+", default=[0.2, 0.1, 0.05],
                    help="damping ladder in units of Gamma_0")
    ap.add_argument("--order", type=int, default=2)
    args = ap.parse_args()
    print("omega/Gamma,hemisphere,exact,exponential,gaussian,separation")
    for ratio in (0.1, 0.2, 0.5, 1.0, 2.0, 3.0):
        for upper in (True, False):
            out = regulator_comparison(ratio, upper, tuple(args.ladder), args.order)
            cells = []
            for kind in ("exponential", "gaussian"):
                v = out[kind]
                cells.append("refused" if isinstance(v, Exception) else f"{v.abs2:.6e}+-{v.error:.1e}")
            sep = "" if out["separation"] is None else f"{out['separation']:.2f}"
            print(f"{ratio},{'upper' if upper else 'lower'},{out['exact'].abs2:.6e},{cells[0]},{cells[1]},{sep}")


if __name__ == "__main__":
    main()
