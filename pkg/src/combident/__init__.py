"""Exact verification of inverse-binomial and multinomial identities from integral representations."""

from .exact import PiPower, Rational, binomial, factorial, gamma_half, multinomial, rise_factor
from .polyint import Poly, SimplexSpec, integrate_box, integrate_interval, integrate_prob_simplex, wallis
from .series import Series, TruncationError

__version__ = "0.1.0"
