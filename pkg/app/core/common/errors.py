# -*- coding: utf-8 -*-
"""Base exception for data-level failures.

Every module declares its own subclasses next to the code that raises them.
The CLI maps ``DataError`` to exit status 1.
"""
from __future__ import annotations


class DataError(RuntimeError):
    """Raised when input data cannot be processed as requested."""
