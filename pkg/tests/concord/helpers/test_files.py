"""Tests for delimited file readers."""

import numpy as np
import pytest

from concord.exceptions import EmptyInput, IoError, LengthMismatch, ParseError
from concord.helpers.files import (
    read_delimited,
    read_lines,
    read_matrix,
    split_label_columns,
)


def test_read_matrix(tmp_path):
    """Test reading a probability matrix with a comment line."""
    path = tmp_path / "pi.csv"
    path.write_text("# pi for two clusters\n0.5, 0\n0, 0.5\n", encoding="utf-8")

    matrix = read_matrix(path, ",")

    np.testing.assert_array_equal(matrix, [[0.5, 0.0], [0.0, 0.5]])


def test_read_matrix_ragged(tmp_path):
    """Test that a short row is reported with its row number."""
    path = tmp_path / "ragged.csv"
    path.write_text("0.25,0.25\n0.5\n", encoding="utf-8")

    with pytest.raises(ParseError) as exc_info:
        read_matrix(path, ",")

    assert exc_info.value.row == 2


def test_read_matrix_non_numeric(tmp_path):
    """Test that a non-numeric cell is reported with its row and content."""
    path = tmp_path / "words.csv"
    path.write_text("0.25,0.25\n0.5,half\n", encoding="utf-8")

    with pytest.raises(ParseError) as exc_info:
        read_matrix(path, ",")

    assert exc_info.value.row == 2
    assert "'half'" in str(exc_info.value)


def test_read_matrix_header(tmp_path):
    """Test that a header line is skipped only when requested."""
    path = tmp_path / "pi.csv"
    path.write_text("l1,l2\n0.25,0.25\n0.25,0.25\n", encoding="utf-8")

    np.testing.assert_array_equal(read_matrix(path, ",", header=True), [[0.25] * 2] * 2)
    with pytest.raises(ParseError) as exc_info:
        read_matrix(path, ",")
    assert exc_info.value.row == 1


def test_read_matrix_header_row_numbers(tmp_path):
    """Test that rows after a header are numbered from the top of the file."""
    path = tmp_path / "pi.csv"
    path.write_text("l1,l2\n0.5,0\n0\n", encoding="utf-8")

    with pytest.raises(ParseError) as exc_info:
        read_matrix(path, ",", header=True)

    assert exc_info.value.row == 3


def test_read_matrix_missing(tmp_path):
    """Test that an absent matrix file raises IoError."""
    with pytest.raises(IoError) as exc_info:
        read_matrix(tmp_path / "absent.csv", ",")

    assert "absent.csv" in str(exc_info.value)


def test_read_delimited_keeps_strings(tmp_path):
    """Test that tokens are read verbatim as strings."""
    path = tmp_path / "tokens.csv"
    path.write_text("007,NA\n7,null\n", encoding="utf-8")

    frame = read_delimited(path, ",", header=False)

    assert frame.iloc[:, 0].tolist() == ["007", "7"]
    assert frame.iloc[:, 1].tolist() == ["NA", "null"]


def test_read_delimited_header_only(tmp_path):
    """Test that a header without rows is an empty input."""
    path = tmp_path / "header.csv"
    path.write_text("first,second\n", encoding="utf-8")

    with pytest.raises(EmptyInput):
        read_delimited(path, ",", header=True)


def test_split_label_columns_wrong_count(tmp_path):
    """Test that a single-column file read as pairs is a parse error."""
    path = tmp_path / "single.txt"
    path.write_text("a\nb\n", encoding="utf-8")
    frame = read_delimited(path, ",", header=False)

    with pytest.raises(ParseError) as exc_info:
        split_label_columns(frame, 2, str(path), 1)

    assert exc_info.value.row == 1


def test_split_label_columns_keeps_empty_fields(tmp_path):
    """Test that an empty field inside a column is not a length mismatch."""
    path = tmp_path / "pair.csv"
    path.write_text("a,x\n,y\n", encoding="utf-8")
    frame = read_delimited(path, ",", header=False)

    columns = split_label_columns(frame, 2, str(path), 1)

    assert columns[0].tolist() == ["a", ""]


def test_split_label_columns_mismatch(tmp_path):
    """Test that a second column ending early is a length mismatch."""
    path = tmp_path / "pair.csv"
    path.write_text("a,x\nb,y\nc\nd\n", encoding="utf-8")
    frame = read_delimited(path, ",", header=False)

    with pytest.raises(LengthMismatch):
        split_label_columns(frame, 2, str(path), 1)


def test_read_lines_keeps_whole_lines(tmp_path):
    """Test that a line is one label, delimiters and quotes included."""
    path = tmp_path / "labels.txt"
    path.write_text('Smith, J\n"x"\nx\n\n', encoding="utf-8")

    frame = read_lines(path, header=False)

    assert frame.iloc[:, 0].tolist() == ["Smith, J", '"x"', "x"]


def test_read_lines_header_and_crlf(tmp_path):
    """Test the header skip and Windows line endings."""
    path = tmp_path / "labels.txt"
    path.write_bytes(b"label\r\na\r\nb\r\n")

    frame = read_lines(path, header=True)

    assert frame.iloc[:, 0].tolist() == ["a", "b"]


def test_read_lines_missing(tmp_path):
    """Test that an absent file raises IoError."""
    with pytest.raises(IoError):
        read_lines(tmp_path / "absent.txt", header=False)


def test_read_delimited_keeps_quotes(tmp_path):
    """Test that quotes in delimited fields are kept verbatim."""
    path = tmp_path / "pair.csv"
    path.write_text('"x",a\nx,a\n', encoding="utf-8")

    frame = read_delimited(path, ",", header=False)

    assert frame.iloc[:, 0].tolist() == ['"x"', "x"]
