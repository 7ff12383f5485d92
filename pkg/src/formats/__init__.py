"""Order files and run reports."""

from .order_file import (
    OrderFile,
    basis_strings,
    format_order_file,
    order_file_from_dict,
    parse_order_file,
    write_order_file,
)
from .report import RunReport, input_digest

__all__ = [
    'OrderFile',
    'basis_strings',
    'format_order_file',
    'order_file_from_dict',
    'parse_order_file',
    'write_order_file',
    'RunReport',
    'input_digest',
]
