"""
Draw package: coordinate rasterizers for lines, circles and boxes.
"""

from .draw import circle_perimeter, line, rectangle_perimeter

__all__ = ['circle_perimeter', 'line', 'rectangle_perimeter']
