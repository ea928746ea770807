"""Plain-text density-matrix files.

Format::

    dims <m> <n>
    re,im re,im ...      # mn entries per line, mn lines, row-major

Entries are written with 17 significant digits so a write/read round trip
is bit-exact.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .densmat import BipartiteDensityMatrix


class MatrixFileError(ValueError):
    """The file is not a well-formed matrix file."""


def format_matrix(rho: BipartiteDensityMatrix) -> str:
    lines = [f"dims {rho.dim_a} {rho.dim_b}"]
    for row in rho.mat:
        lines.append(" ".join(f"{z.real:.17g},{z.imag:.17g}" for z in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> tuple[np.ndarray, int, int]:
    """Parse file text into ``(matrix, m, n)`` without validating the state."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFileError("empty file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "dims":
        raise MatrixFileError(f"first line must be 'dims <m> <n>', got {lines[0]!r}")
    try:
        m, n = int(head[1]), int(head[2])
    except ValueError as exc:
        raise MatrixFileError(f"bad dimensions in {lines[0]!r}") from exc
    if m < 1 or n < 1:
        raise MatrixFileError(f"dimensions must be positive, got {m} {n}")
    d = m * n
    rows = lines[1:]
    if len(rows) != d:
        raise MatrixFileError(f"expected {d} matrix rows, found {len(rows)}")
    mat = np.empty((d, d), dtype=complex)
    for r, line in enumerate(rows):
        fields = line.split()
        if len(fields) != d:
            raise MatrixFileError(f"row {r + 1}: expected {d} entries, found {len(fields)}")
        for c, tok in enumerate(fields):
            try:
                re, im = tok.split(",")
                mat[r, c] = complex(float(re), float(im))
            except ValueError as exc:
                raise MatrixFileError(f"row {r + 1}, column {c + 1}: bad entry {tok!r}") from exc
    return mat, m, n


def read_matrix(path) -> BipartiteDensityMatrix:
    """Read and validate a state. Raises MatrixFileError or InvalidStateError."""
    mat, m, n = parse_matrix(Path(path).read_text())
    return BipartiteDensityMatrix(mat, m, n)


def write_matrix(path, rho: BipartiteDensityMatrix) -> None:
    Path(path).write_text(format_matrix(rho))
