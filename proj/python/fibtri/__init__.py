"""Exact Fibonacci partition triangles and their identity checks."""

from fibtri._core import (
    diagonal_polynomial,
    fib,
    partition_sum,
    render_triangle,
    restricted_delannoy,
    triangle_rows,
    verify,
)

__all__ = [
    "diagonal_polynomial",
    "fib",
    "partition_sum",
    "render_triangle",
    "restricted_delannoy",
    "triangle_rows",
    "verify",
]
