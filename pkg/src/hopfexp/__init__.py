"""Exponential maps on Hopf algebras with a first-order differential calculus.

Worked cases: functions on S3 and on the integers, the quantum group
C_q[SU_2] and the four-dimensional Sweedler-Taft algebra.
"""
from .calculus import (GroupCalculus, InvariantVectorField, UnsupportedCalculus, divergence_check,
                       exterior_derivative, integer_calculus, is_real, x_circ_omega)
from .expmap import (StateDensity, TransferMatrix, exp_dual, matexp_apply, ode_residual, path_m,
                     s3_closed_form, s3_field, series_exp_dual, state_density, transfer_matrix,
                     z_closed_form, z_diffusion, z_state_weights)
from .groups import FiniteGroup, IntWindow, WindowOverflow, cyclic, get_group, load_table, s3
from .hopf import DualVector, FunctionElement, convolve, counit_vector, delta
from .linalg import NumericError, expm
from .special import hyp0f1

__version__ = "0.1.0"
