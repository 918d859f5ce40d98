"""Dispersion relations for the 1-D compressible Navier-Stokes equations.

Exact complex roots of the acoustic dispersion cubic, Prandtl-number
asymptotics, attenuation and phase-speed reporting, plus independent
verification oracles (eigenvalue and time-domain routes).
"""

try:
    from nsdisp._core import *  # noqa: F401,F403
    from nsdisp import _core as core  # noqa: F401
except ImportError:  # in-tree builds keep the extension next to the package
    from _core import *  # noqa: F401,F403
    import _core as core  # noqa: F401

__version__ = "0.1.0"
