"""Shortest-path interruption solvers (Python bindings)."""

from ._core import (
    GeohitError,
    generate,
    normalize_instance,
    run_cli,
    solve,
    solve_with_separator,
    verify,
    vertex_integrity,
)

__all__ = [
    "GeohitError",
    "generate",
    "normalize_instance",
    "run_cli",
    "solve",
    "solve_with_separator",
    "verify",
    "vertex_integrity",
]
