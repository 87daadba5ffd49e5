"""
poroshock - a numerical laboratory for viscous shock waves of the convective
porous-media equation u_t + f(u)_x = (u^m)_xx
"""
from poroshock.__version__ import __version__

__all__ = ["__version__"]
