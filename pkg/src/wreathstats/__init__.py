"""Descent statistics on wreath products C_a wr S_n and their Euler-Mahonian polynomials."""

from .algebra import BiPoly, TPoly, USeries, q_int, q_poch_t, series_equal, series_exp, series_mul
from .distributions import (
    IDENTITIES,
    MahonianSpec,
    VerificationReport,
    eulerian,
    majA_enumerate,
    majA_recurrence,
    verify_identity,
)
from .perm import (
    ColoredLetter,
    ColoredPermutation,
    DescentData,
    EnumerationGuardError,
    LOrder,
    WindowParseError,
    classical_stats,
    descent_data,
    enumerate_group,
    format_window,
    l_compare,
    lemma_check,
    parse_window,
    phi,
    phi_inverse,
    reverse,
    tilde_descent_data,
)

__version__ = "0.1.0"
