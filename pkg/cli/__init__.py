# CLI package
from .main import build_parser, main
from .report import format_array, format_report
from .spec_file import load_spec, parse_spec_text

__all__ = [
    "main",
    "build_parser",
    "load_spec",
    "parse_spec_text",
    "format_report",
    "format_array",
]
