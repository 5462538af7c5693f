"""Ingest raw label columns and factorize them into dense cluster indices."""

from collections.abc import Sequence
from pathlib import Path

import numpy as np
import pandas as pd

from concord.constants import DEFAULT_DELIMITER, FORMAT_PAIR, FORMAT_SINGLE
from concord.exceptions import EmptyInput, MissingLabel, ParseError
from concord.helpers.files import read_delimited, read_lines, split_label_columns
from concord.models.labels import LabelVector


def factorize(
    raw: Sequence[object] | np.ndarray | pd.Series,
    source: str = "input",
    first_row: int = 1,
) -> LabelVector:
    """Factorize label tokens into 0-based indices by first occurrence.

    Integer tokens are used as they are; every other token is compared as a
    string after trimming surrounding whitespace.

    Args:
        raw: Label tokens, one per item, in item order
        source: Name used in error messages
        first_row: Row number of the first token in error messages

    Returns:
        LabelVector preserving the input order

    Raises:
        EmptyInput: If there are no tokens
        MissingLabel: If a token is missing or blank
    """
    values = raw.to_numpy() if isinstance(raw, pd.Series) else np.asarray(raw)
    if values.size == 0:
        raise EmptyInput(source)
    if values.ndim != 1:
        values = values.reshape(-1)

    if values.dtype.kind in "iub":
        tokens = values
    else:
        series = pd.Series(values, dtype=object)
        missing = series.isna().to_numpy()
        stripped = series.where(missing, series.astype(str).str.strip())
        missing |= (stripped == "").to_numpy()
        if missing.any():
            raise MissingLabel(first_row + int(np.flatnonzero(missing)[0]), source)
        tokens = stripped.to_numpy()

    codes, uniques = pd.factorize(tokens, sort=False)
    return LabelVector(assignments=codes, num_clusters=len(uniques))


def read_label_file(
    path: Path | str,
    format: str = FORMAT_SINGLE,
    delimiter: str = DEFAULT_DELIMITER,
    header: bool = False,
) -> LabelVector | tuple[LabelVector, LabelVector]:
    """Read one label column, or two delimited columns, from a UTF-8 text file.

    A single-format line is one whole label, so it may contain the delimiter or
    quotes. Pair-format fields are split on the delimiter with no quote handling.

    Args:
        path: File to read
        format: ``"single"`` for one label per line, ``"pair"`` for two columns
        delimiter: Field separator for the two-column format
        header: Whether to skip a header line

    Returns:
        A LabelVector, or a pair of LabelVectors of equal length

    Raises:
        IoError: If the file cannot be read
        EmptyInput: If the file has no data rows
        ParseError: If a row does not split into the expected columns
        LengthMismatch: If the two columns differ in length
        MissingLabel: If a label is blank
    """
    if format not in (FORMAT_SINGLE, FORMAT_PAIR):
        raise ParseError(None, f"unknown label file format {format!r}", str(path))
    path = Path(path)
    source = str(path)
    first_row = 2 if header else 1
    expected = 1 if format == FORMAT_SINGLE else 2

    if format == FORMAT_SINGLE:
        frame = read_lines(path, header)
    else:
        frame = read_delimited(path, delimiter, header)
    columns = split_label_columns(frame, expected, source, first_row)
    vectors = [factorize(column, source, first_row) for column in columns]
    if format == FORMAT_SINGLE:
        return vectors[0]
    return vectors[0], vectors[1]
