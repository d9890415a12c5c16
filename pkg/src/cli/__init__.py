"""
Command-line front end: ball files in, JSON result documents out.
"""

from .ball_file import parse_balls, read_ball_file, input_digest, format_balls
from .documents import ResultDocument, dumps, to_plain
from .commands import cmd_measures, cmd_gradient, cmd_check, cmd_classify
from .main import main, build_parser

__all__ = [
    "parse_balls",
    "read_ball_file",
    "input_digest",
    "format_balls",
    "ResultDocument",
    "dumps",
    "to_plain",
    "cmd_measures",
    "cmd_gradient",
    "cmd_check",
    "cmd_classify",
    "main",
    "build_parser",
]
