"""
Grid scans behind the power-function proof
==========================================
"""

import numpy as np

from extremal_degseq.sparse import (check_derivative_inequality, check_power_star_gap,
                                    power_star_gap, power_tie_margin)

v = check_derivative_inequality()
print("ratio <= 1 on the grid:", v.holds, "max", v.worst, "at", v.worst_at)

betas = np.round(np.arange(2.0, 6.01, 0.5), 10)
print("tie margins:", [round(power_tie_margin(float(b)), 4) for b in betas])

xs = np.arange(3.0, 10.01, 1.0)
print("star gap, beta=3:", power_star_gap(3, xs))
print("all betas hold:", all(check_power_star_gap(float(b)).holds for b in betas))
