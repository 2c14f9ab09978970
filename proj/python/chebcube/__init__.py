"""Chebyshev cubature on the d-cube, total-degree hyperinterpolation in the
3-cube and the Clenshaw-Curtis-like rule for the Lebesgue measure."""

from ._chebcube import *  # noqa: F401,F403
from ._chebcube import NumericalError, __doc__  # noqa: F401
