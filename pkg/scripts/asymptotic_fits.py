"""Power-law and Gaussian fits of the closed-form spectra in their IR and UV limits."""
import math

import numpy as np

from bogorad.condensate import CondensateParams
from bogorad.phase_integral import Window
from bogorad.spectrum import (
    angle_integrated_energy,
    envelope_exponent,
    exponential_spectrum,
    exponential_spectrum_windowed,
    fit_gaussian_slope,
    fit_power_law,
    law_exponential_ir,
    law_windowed_ir,
)
from bogorad.trajectory import UniformAccelerationRel


def main():
    p = CondensateParams.natural(1.0, 1.0)
    k = np.geomspace(1e-4, 1e-2, 9)
    full = np.array([exponential_spectrum(p, 1.0, x, 0.5).dn_dk_domega for x in k])
    exp_full, _ = fit_power_law(k, full)
    print(f"full line, IR exponent           {exp_full:.4f}")
    print(f"full line, IR ratio to k-law     {np.mean(full / law_exponential_ir(p, k)):.4e}")

    w = Window(0.0, 1.0)
    win = np.array([exponential_spectrum_windowed(p, 1.0, 1.0, w, x, 0.5).dn_dk_domega for x in k])
    exp_win, _ = fit_power_law(k, win)
    print(f"window (0, 1), IR exponent       {exp_win:.4f}")
    print(f"window (0, 1), IR ratio to k^3   {np.mean(win / law_windowed_ir(p, 1.0, k)):.4e}")

    kk = np.linspace(20.0, 200.0, 4000)
    uv = [exponential_spectrum_windowed(p, 1.0, 1.0, w, x, 0.5).dn_dk_domega for x in kk]
    print(f"window (0, 1), UV envelope       {envelope_exponent(kk, uv)[0]:.4f}")

    for a in (0.5, 1.0, 2.0):
        ks = np.linspace(6.0, 12.0, 13) * math.sqrt(a)
        slope = fit_gaussian_slope(ks, angle_integrated_energy(p, UniformAccelerationRel(a), ks))
        print(f"hyperbolic a={a:<4}, ln dE vs k^2   {slope:.5f}  (-hbar c / M a = {-1 / a:.5f})")


if __name__ == "__main__":
    main()
