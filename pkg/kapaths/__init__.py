"""Caminos (k,a), estadísticas de jorobas y picos, y la biyección con súper caminos."""

from kapaths.path_core import INFINITY, LatticePath, PathParams, parse_params, parse_path

__all__ = ["INFINITY", "LatticePath", "PathParams", "parse_params", "parse_path"]
__version__ = "1.0.0"
