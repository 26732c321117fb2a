# utils/decorators.py
"""
Reusable decorators for error handling, input checks, and timing
"""
import functools
import inspect
import logging
import time
from typing import Callable

from utils.errors import CompleteSetError

logger = logging.getLogger(__name__)


def _call_label(func: Callable, args: tuple, kwargs: dict) -> str:
    """Function name with the integer arguments it was called with, e.g. census(n=20, min_size=2)"""
    try:
        bound = inspect.signature(func).bind_partial(*args, **kwargs)
    except TypeError:
        return func.__name__
    shown = ", ".join(
        f"{name}={value}" for name, value in bound.arguments.items()
        if isinstance(value, int) and not isinstance(value, bool)
    )
    return f"{func.__name__}({shown})"


def handle_domain_errors(func: Callable) -> Callable:
    """
    Log domain errors raised by a command before re-raising them

    Usage:
        @handle_domain_errors
        def cmd_check(set_literal):
            pass
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CompleteSetError as e:
            logger.error(f"{func.__name__} rejected input ({e.code}): {str(e)}")
            raise
        except Exception as e:
            logger.error(f"Unexpected error in {func.__name__}: {str(e)}", exc_info=True)
            raise

    return wrapper


def log_execution_time(func: Callable) -> Callable:
    """
    Log execution time together with the size of the problem (N, bounds)

    Usage:
        @log_execution_time
        def census(n, min_size):
            pass
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        label = _call_label(func, args, kwargs)
        start_time = time.perf_counter()
        logger.info(f"Starting {label}...")

        try:
            result = func(*args, **kwargs)
            elapsed = time.perf_counter() - start_time
            logger.info(f"{label} completed in {elapsed:.2f}s")
            return result
        except Exception as e:
            elapsed = time.perf_counter() - start_time
            logger.error(f"{label} failed after {elapsed:.2f}s: {str(e)}")
            raise

    return wrapper


def validate_inputs(**type_checks):
    """
    Validate function input types

    Booleans are rejected where an int is expected.

    Usage:
        @validate_inputs(n=int, min_size=int)
        def census(n, min_size):
            pass
    """
    def decorator(func: Callable) -> Callable:
        sig = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            bound_args = sig.bind(*args, **kwargs)
            bound_args.apply_defaults()

            for param_name, expected_type in type_checks.items():
                if param_name not in bound_args.arguments:
                    continue
                value = bound_args.arguments[param_name]
                if expected_type is int and isinstance(value, bool):
                    raise TypeError(f"{func.__name__}: Expected {param_name} to be int, got bool")
                if not isinstance(value, expected_type):
                    raise TypeError(
                        f"{func.__name__}: Expected {param_name} to be {expected_type.__name__}, "
                        f"got {type(value).__name__}"
                    )

            return func(*args, **kwargs)

        return wrapper
    return decorator
