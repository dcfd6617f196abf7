"""Ring completion of rig categories, computed at small bounds."""

from .effcat import Bound, Report

__all__ = ["Bound", "Report"]
__version__ = "0.1.0"
