"""
Plain-text ball files: one ``x y z r w`` record per line, ``#`` starts a
comment, blank lines are ignored.
"""

import hashlib
import logging
from pathlib import Path
from typing import List, Optional, Union

from ..complex.ball_set import BallSet
from ..geometry.ball import Ball
from ..utils.exceptions import ParseError
from ..utils.helpers import format_float, validate_ball_row

logger = logging.getLogger(__name__)


def parse_balls(text: str) -> BallSet:
    """
    Parse ball records from text.

    Raises:
        ParseError: a malformed record (with its line number) or no records
    """
    balls: List[Ball] = []
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            values = [float(field) for field in content.split()]
        except ValueError:
            raise ParseError(f"non-numeric field in {content!r}", number)
        check = validate_ball_row(values)
        if not check['valid']:
            raise ParseError(check['error'], number)
        balls.append(Ball.from_row(values))
    if not balls:
        raise ParseError("no ball records found")
    logger.debug(f"Parsed {len(balls)} balls")
    return BallSet(tuple(balls))


def read_ball_file(path: Union[str, Path]) -> BallSet:
    """Read and parse a ball file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")
    return parse_balls(text)


def input_digest(path: Union[str, Path]) -> Optional[str]:
    """SHA-256 of the raw file bytes, None if the file is unreadable."""
    try:
        return hashlib.sha256(Path(path).read_bytes()).hexdigest()
    except OSError:
        return None


def format_balls(balls: BallSet) -> str:
    """Write a ball set in the file format, 17 significant digits per field."""
    rows = ["# x y z r w"]
    for ball in balls:
        fields = [*ball.center, ball.radius, ball.weight]
        rows.append(" ".join(format_float(v) for v in fields))
    return "\n".join(rows) + "\n"
