"""
Service modules for imgkit

This package contains the pipeline classes behind the command-line tool.
"""

from .coins_demo import CoinsDemo, CoinsReport
from .image_inspector import ImageInspector
from .operation_runner import OPERATIONS, OperationRunner, UnknownOperationError, parse_operation
from .settings import CoinsSettings, ConfigError, Settings, StitchSettings, load_settings, override
from .stitcher import PanoramaStitcher, StitchResult

__all__ = [
    'CoinsDemo', 'CoinsReport', 'ImageInspector', 'OPERATIONS', 'OperationRunner',
    'UnknownOperationError', 'parse_operation', 'CoinsSettings', 'ConfigError', 'Settings',
    'StitchSettings', 'load_settings', 'override', 'PanoramaStitcher', 'StitchResult',
]
