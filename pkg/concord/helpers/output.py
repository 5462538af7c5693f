"""Serialization of reports and result rows.

Reals are written with 17 significant digits so that every float round-trips.
Key order follows the model field order, which keeps outputs byte-identical
for identical inputs.
"""

import io
import json

import pandas as pd
from pydantic import BaseModel

from concord.constants import CSV_SCHEMA_VERSION, FLOAT_FORMAT, OUTPUT_JSON, OUTPUT_TSV

NA = "NA"


def format_float(value: float) -> str:
    """Format a real with 17 significant digits."""
    return FLOAT_FORMAT.format(value)


def _json_value(value: object, indent: int) -> str:
    pad = "  " * (indent + 1)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(key))}: {_json_value(item, indent + 1)}"
            for key, item in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    return json.dumps(str(value))


def to_json(payload: BaseModel | dict) -> str:
    """Render a model, or a dict of models, as indented JSON."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump()
    else:
        payload = {
            key: item.model_dump() if isinstance(item, BaseModel) else item
            for key, item in payload.items()
        }
    return _json_value(payload, 0) + "\n"


def _tsv_cell(value: object) -> str:
    if value is None:
        return NA
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        return ";".join(f"{key}={item}" for key, item in value.items()) or NA
    return str(value)


def _flatten(payload: BaseModel | dict) -> dict:
    if isinstance(payload, BaseModel):
        return payload.model_dump()
    flat: dict = {}
    for key, item in payload.items():
        if isinstance(item, BaseModel):
            for field, value in item.model_dump().items():
                flat.setdefault(field, value)
        else:
            flat[key] = item
    return flat


def to_tsv(payload: BaseModel | dict) -> str:
    """Render a model, or a dict of models, as a header line and a value line."""
    flat = _flatten(payload)
    header = "\t".join(flat)
    values = "\t".join(_tsv_cell(value) for value in flat.values())
    return f"{header}\n{values}\n"


def render(payload: BaseModel | dict, output_format: str) -> str:
    """Render a payload in the requested output format."""
    if output_format == OUTPUT_TSV:
        return to_tsv(payload)
    if output_format == OUTPUT_JSON:
        return to_json(payload)
    raise ValueError(f"unknown output format {output_format!r}")


def rows_to_csv(
    rows: list[BaseModel], schema: str, missing: dict[str, str] | None = None
) -> str:
    """Render result rows as CSV preceded by a versioned schema comment line.

    Args:
        rows: Rows of one model type
        schema: Schema name written in the comment line
        missing: Text to write for missing values, per column (empty by default)

    Returns:
        CSV text
    """
    missing = missing or {}
    frame = pd.DataFrame([row.model_dump() for row in rows])
    for column in frame.columns:
        frame[column] = [
            missing.get(column, "") if value is None or value != value else _tsv_cell(value)
            for value in frame[column].astype(object)
        ]
    buffer = io.StringIO()
    buffer.write(f"# {schema} schema={CSV_SCHEMA_VERSION}\n")
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()
