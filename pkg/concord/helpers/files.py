"""Readers for label files and numeric matrices."""

import csv
import re
from pathlib import Path

import numpy as np
import pandas as pd

from concord.exceptions import EmptyInput, IoError, LengthMismatch, ParseError

_PANDAS_LINE = re.compile(r"line (\d+)")


def _parser_row(error: Exception) -> int | None:
    match = _PANDAS_LINE.search(str(error))
    return int(match.group(1)) if match else None


def _drop_trailing_blank(frame: pd.DataFrame, source: str) -> pd.DataFrame:
    blank = (frame.isna() | frame.eq("")).all(axis=1).to_numpy()
    keep = len(frame)
    while keep and blank[keep - 1]:
        keep -= 1
    frame = frame.iloc[:keep]
    if frame.empty:
        raise EmptyInput(source)
    return frame


def read_lines(path: Path, header: bool) -> pd.DataFrame:
    """Read one label per line, verbatim: no field splitting, no quote handling.

    Trailing blank lines are dropped; a blank line inside the data stays as an
    empty label.

    Args:
        path: File to read (UTF-8)
        header: Whether the first line is a header to skip

    Returns:
        Single-column DataFrame of object dtype

    Raises:
        IoError: If the file cannot be opened
        EmptyInput: If the file holds no data rows
        ParseError: If the file is not valid UTF-8
    """
    source = str(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (FileNotFoundError, IsADirectoryError, PermissionError) as e:
        raise IoError(source, e.strerror or str(e)) from e
    except UnicodeDecodeError as e:
        raise ParseError(None, f"not valid UTF-8 ({e.reason})", source) from e

    lines = text.split("\n")
    if header:
        lines = lines[1:]
    return _drop_trailing_blank(pd.DataFrame({0: pd.Series(lines, dtype=object)}), source)


def read_delimited(path: Path, delimiter: str, header: bool) -> pd.DataFrame:
    """Read a delimited text file as strings, keeping blank lines as missing rows.

    Quotes are ordinary characters, so every field is the exact text between
    delimiters. Trailing blank lines are dropped. Fields absent from short rows
    are NaN, present-but-empty fields are empty strings.

    Args:
        path: File to read (UTF-8)
        delimiter: Single field separator
        header: Whether the first line is a header to skip

    Returns:
        DataFrame of object dtype, one column per field

    Raises:
        IoError: If the file cannot be opened
        EmptyInput: If the file holds no data rows
        ParseError: If a row cannot be split into the expected fields
    """
    source = str(path)
    try:
        frame = pd.read_csv(
            path,
            sep=delimiter,
            header=0 if header else None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            quoting=csv.QUOTE_NONE,
            encoding="utf-8",
        )
    except (FileNotFoundError, IsADirectoryError, PermissionError) as e:
        raise IoError(source, e.strerror or str(e)) from e
    except pd.errors.EmptyDataError as e:
        raise EmptyInput(source) from e
    except pd.errors.ParserError as e:
        raise ParseError(_parser_row(e), str(e).strip(), source) from e
    except UnicodeDecodeError as e:
        raise ParseError(None, f"not valid UTF-8 ({e.reason})", source) from e

    return _drop_trailing_blank(frame, source)


def split_label_columns(
    frame: pd.DataFrame, expected: int, source: str, first_row: int
) -> list[pd.Series]:
    """Split a frame into label columns of equal length.

    A second column that stops before the first one (absent fields on a
    suffix of rows) is a length mismatch; any other absent field is left as a
    missing label for the factorizer to report.

    Raises:
        ParseError: If the number of columns differs from ``expected``
        LengthMismatch: If the columns have different lengths
    """
    if frame.shape[1] != expected:
        raise ParseError(
            first_row,
            f"expected {expected} column(s), found {frame.shape[1]}",
            source,
        )
    columns = [frame.iloc[:, i].reset_index(drop=True) for i in range(expected)]
    if expected == 1:
        return columns

    lengths = []
    for column in columns:
        present = column.notna().to_numpy()
        lengths.append(int(np.flatnonzero(present)[-1]) + 1 if present.any() else 0)
    if len(set(lengths)) > 1:
        raise LengthMismatch(lengths[0], lengths[1], source)
    return columns


def read_matrix(path: Path, delimiter: str, header: bool = False) -> np.ndarray:
    """Read a delimited matrix of reals; lines starting with '#' are comments.

    Rows are numbered from the top of the file, counting the header line but
    not comment or blank lines.

    Args:
        path: File to read (UTF-8)
        delimiter: Single field separator
        header: Whether the first line is a header to skip

    Raises:
        IoError: If the file cannot be opened
        EmptyInput: If the file has no rows
        ParseError: If a cell is not a number or rows are ragged
    """
    source = str(path)
    try:
        frame = pd.read_csv(
            path,
            sep=delimiter,
            header=None,
            skiprows=1 if header else 0,
            comment="#",
            skipinitialspace=True,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
        )
    except (FileNotFoundError, IsADirectoryError, PermissionError) as e:
        raise IoError(source, e.strerror or str(e)) from e
    except pd.errors.EmptyDataError as e:
        raise EmptyInput(source) from e
    except pd.errors.ParserError as e:
        raise ParseError(_parser_row(e), str(e).strip(), source) from e
    except UnicodeDecodeError as e:
        raise ParseError(None, f"not valid UTF-8 ({e.reason})", source) from e

    if frame.empty:
        raise EmptyInput(source)
    first_row = 2 if header else 1
    cells = frame.apply(lambda column: column.str.strip())
    absent = (cells.isna() | cells.eq("")).to_numpy()
    values = cells.apply(pd.to_numeric, errors="coerce").to_numpy(dtype=float)

    non_numeric = np.flatnonzero((np.isnan(values) & ~absent).any(axis=1))
    if non_numeric.size:
        row = int(non_numeric[0])
        column = int(np.flatnonzero(np.isnan(values[row]) & ~absent[row])[0])
        raise ParseError(
            first_row + row,
            f"non-numeric cell {cells.iat[row, column]!r}",
            source,
        )
    ragged = np.flatnonzero(absent.any(axis=1))
    if ragged.size:
        raise ParseError(first_row + int(ragged[0]), "row has missing cells", source)
    return values
