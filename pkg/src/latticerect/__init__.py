"""Exact counting of all rectangles with vertices on an n x n lattice grid.

F(n) counts rectangles of every orientation (axis-aligned and tilted)
whose four vertices lie in {0, ..., n-1}^2.  The package provides five
exact single-value algorithms spanning O(n^2) down to O(n log^2 n), an
O(N^(3/2)) all-values tabulation, two independent brute-force oracles,
and the asymptotic law F(n) = A n^4 ln n + B n^4 + O(n^(7/2)).
"""

from .allvalues import compute_table
from .asymptotics import constants, residual
from .onevalue import (
    ALGORITHMS,
    AUTO_CUTOFF,
    f0,
    f_auto,
    f_baseline,
    f_cuberoot,
    f_divisorlayer,
    f_sqrt,
    f_tenmoment,
)
from .oracle import OracleConfig, f_oracle_geometric, f_oracle_quadruples

__all__ = [
    "ALGORITHMS",
    "AUTO_CUTOFF",
    "OracleConfig",
    "compute_table",
    "constants",
    "f0",
    "f_auto",
    "f_baseline",
    "f_cuberoot",
    "f_divisorlayer",
    "f_oracle_geometric",
    "f_oracle_quadruples",
    "f_sqrt",
    "f_tenmoment",
    "residual",
]

__version__ = "0.1.0"
