"""Plain-text file formats.

Every field element is written as its canonical integer encoding
sum(c_i q^i) in decimal.  A message file has one line per branch
(f_0 ... f_{k-1}); a basis file has one line per row (s+1 entries); a
Gabidulin word file has one line per received word (n entries).  Blank
lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from iscodes.codes import InterleavedMessage, SubspaceBasis
from iscodes.field import FieldContext


class FormatError(ValueError):
    pass


def _read_rows(path: str | Path, F: FieldContext) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: {exc}") from None
        for a in row:
            if not 0 <= a < F.order:
                raise FormatError(f"{path}:{lineno}: element {a} outside [0, {F.order})")
        rows.append(row)
    return rows


def _write_rows(path: str | Path, rows: Iterable[Sequence[int]]) -> None:
    Path(path).write_text("".join(" ".join(str(a) for a in r) + "\n" for r in rows))


def write_message(path: str | Path, msg: InterleavedMessage, k: int) -> None:
    _write_rows(path, msg.coefficients(k))


def read_message(path: str | Path, F: FieldContext, s: int, k: int) -> InterleavedMessage:
    rows = _read_rows(path, F)
    if len(rows) != s or any(len(r) != k for r in rows):
        raise FormatError(f"{path}: expected {s} lines of {k} coefficients")
    return InterleavedMessage.from_coefficients(F, rows)


def write_basis(path: str | Path, basis: SubspaceBasis) -> None:
    _write_rows(path, basis.rows)


def read_basis(path: str | Path, F: FieldContext, arity: int) -> SubspaceBasis:
    rows = _read_rows(path, F)
    if any(len(r) != arity for r in rows):
        raise FormatError(f"{path}: every row needs {arity} entries")
    # dependent rows are tolerated; the decoder front-end reduces them
    return SubspaceBasis(F, rows, arity, check=False)


def write_words(path: str | Path, words: Sequence[Sequence[int]]) -> None:
    _write_rows(path, words)


def read_words(path: str | Path, F: FieldContext, s: int, n: int) -> list[list[int]]:
    rows = _read_rows(path, F)
    if len(rows) != s or any(len(r) != n for r in rows):
        raise FormatError(f"{path}: expected {s} lines of {n} entries")
    return rows
