from .fmt import format_poly
from .parser import parse_poly

__all__ = ["format_poly", "parse_poly"]
