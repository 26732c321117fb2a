# utils/validators.py
"""
Input validation utilities for the command line
"""
import logging
import re
from typing import List

from utils.errors import SetLiteralError

logger = logging.getLogger(__name__)

_INT_TOKEN = re.compile(r'^-?\d+$')


class SetLiteralParser:
    """Parse set literals of the form `int(,int)*`"""

    @staticmethod
    def parse(literal: str) -> List[int]:
        """
        Split a comma-separated literal into integers

        Whitespace around commas is stripped. Order and repeats are kept so the
        caller can report duplicates.

        Returns:
            List of integers in literal order
        """
        if literal is None or not literal.strip():
            raise SetLiteralError("Set literal is empty")

        values = []
        for position, token in enumerate(literal.split(',')):
            token = token.strip()
            if not _INT_TOKEN.match(token):
                raise SetLiteralError(
                    f"Token {position + 1} of {literal!r} is not a decimal integer: {token!r}"
                )
            values.append(int(token))

        logger.debug(f"Parsed set literal with {len(values)} values")
        return values
