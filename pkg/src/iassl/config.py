"""Capacity guards, overridable through environment variables.

``IASSL_MAX_CLASSIFY_SIZE``  largest |X| accepted by classification (default 16)
``IASSL_MAX_SEARCH_SIZE``    largest |X| accepted by the labeling search (default 5)
``IASSL_MAX_SEARCH_VERTICES`` largest vertex count accepted by the search (default 12)
"""

import os

from .errors import DomainError

DEFAULT_MAX_CLASSIFY_SIZE = 16
DEFAULT_MAX_SEARCH_SIZE = 5
DEFAULT_MAX_SEARCH_VERTICES = 12


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


def max_classify_size() -> int:
    return _env_int("IASSL_MAX_CLASSIFY_SIZE", DEFAULT_MAX_CLASSIFY_SIZE)


def max_search_size() -> int:
    return _env_int("IASSL_MAX_SEARCH_SIZE", DEFAULT_MAX_SEARCH_SIZE)


def max_search_vertices() -> int:
    return _env_int("IASSL_MAX_SEARCH_VERTICES", DEFAULT_MAX_SEARCH_VERTICES)
