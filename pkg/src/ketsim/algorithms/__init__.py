"""Blackbox generators and drivers for the textbook algorithms.

Every generator takes a numpy ``Generator``; its docstring lists the draws
it makes so a seed reproduces the same hidden structure.
"""

from .coin import coin_flip
from .deutsch import LABELS, blackbox_g_deutsch, deutsch
from .dj import bernstein_vazirani, blackbox_g_bv, blackbox_g_dj, deutsch_jozsa
from .grover import (
    GroverPlan,
    grover,
    grover_diffusion,
    grover_oracle,
    optimal_iterations,
    reflect_about_average,
)
from .record import BlackboxRecord
from .simon import (
    blackbox_g_simon,
    simon_table,
    simons_classical,
    simons_quantum,
    simons_solver,
)
