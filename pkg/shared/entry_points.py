"""
Shared entry point utilities for ngtlab.
Consolidates common entry point logic and error handling.
"""

import logging
import sys
import traceback
from typing import Callable

from .errors import NgtLabError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_ERROR = 2


def run_with_error_handling(command: Callable[..., int], *args, **kwargs) -> int:
    """Run a CLI command, mapping any failure to exit code 2."""
    try:
        return command(*args, **kwargs)
    except NgtLabError as e:
        print(f"Error: {e}", file=sys.stderr)
        logger.debug("[ERROR] %s", traceback.format_exc())
        return EXIT_ERROR
    except (OSError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        logger.debug("[ERROR] %s", traceback.format_exc())
        return EXIT_ERROR
