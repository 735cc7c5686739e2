"""
PNM package: bit-exact reading and writing of binary PGM/PPM images.
"""

from .codec import MAXVAL, read_pnm, write_pnm

__all__ = ['MAXVAL', 'read_pnm', 'write_pnm']
