"""Total radiated energy for hyperbolic motion as the acceleration goes to zero."""
import math

import numpy as np

from bogorad.condensate import CondensateParams
from bogorad.spectrum import total_energy, weak_acceleration_energy
from bogorad.trajectory import UniformAccelerationRel


def main():
    p = CondensateParams.natural(1.0, 1.0)
    print("a,E_total,truncation_error,E/sqrt(a),ratio_to_closed_law")
    for a in np.geomspace(1e-5, 1e-1, 9):
        rep = total_energy(p, UniformAccelerationRel(a), k_max=math.sqrt(80 * a) if a < 0.05 else 12.0)
        print(f"{a:.3e},{rep.total:.8e},{rep.truncation_error:.1e},{rep.total / math.sqrt(a):.6f},"
              f"{rep.total / weak_acceleration_energy(p, a):.5f}")


if __name__ == "__main__":
    main()
