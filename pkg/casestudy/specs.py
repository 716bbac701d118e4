"""
Measured building specifications and their JSON/CSV readers
"""
import csv
import io
import json
import logging
import math
import re
from dataclasses import dataclass
from typing import BinaryIO, Dict, List, Optional, Tuple, Union

from geometry import AsymDims, GeometryError

logger = logging.getLogger(__name__)

SPEC_FORMATS = ("json", "csv")
CSV_HEADER = ["name", "L1", "L2", "B1", "B2", "H", "source"]
LENGTH_FIELDS = ("L1", "L2", "B1", "B2", "H")
REQUIRED_FIELDS = ("name",) + LENGTH_FIELDS
# dot-decimal only: no thousands separators, no padding
CSV_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


class SpecError(ValueError):
    """Building specification input cannot be used"""

    def __init__(self, message: str, locus: Optional[str] = None):
        super().__init__(f"{locus}: {message}" if locus else message)
        self.locus = locus


class SpecParseError(SpecError):
    """Input is not well-formed JSON/CSV of the expected shape"""


class SpecValidationError(SpecError):
    """A record is well-formed but violates an invariant"""

    def __init__(self, message: str, locus: Optional[str] = None, field: Optional[str] = None, rule: Optional[str] = None):
        super().__init__(message, locus)
        self.field = field
        self.rule = rule


@dataclass(frozen=True)
class BuildingSpec:
    """Exterior plan dimensions of one existing L-shaped building (meters)"""

    name: str
    L1: float
    L2: float
    B1: float
    B2: float
    H: float
    source: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name.strip():
            raise SpecValidationError("name must be a non-empty string", field="name", rule="non-empty")
        try:
            dims = AsymDims(self.L1, self.L2, self.B1, self.B2, self.H)
        except GeometryError as e:
            raise SpecValidationError(str(e), locus=f"building {self.name!r}", field=e.field, rule=e.rule) from e
        for name in LENGTH_FIELDS:
            object.__setattr__(self, name, getattr(dims, name))

    @property
    def dims(self) -> AsymDims:
        return AsymDims(self.L1, self.L2, self.B1, self.B2, self.H)

    def to_dict(self) -> Dict[str, object]:
        """Record in the input schema; source only when present"""
        data: Dict[str, object] = {"name": self.name}
        data.update({name: getattr(self, name) for name in LENGTH_FIELDS})
        if self.source is not None:
            data["source"] = self.source
        return data


def _number(value: object, field: str, locus: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecValidationError(f"{field} must be a number, got {value!r}", locus, field, "numeric")
    try:
        number = float(value)
    except OverflowError:
        raise SpecValidationError(f"{field} must be finite, got an integer too large for a float", locus, field, "finite") from None
    if not math.isfinite(number):
        raise SpecValidationError(f"{field} must be finite, got {value!r}", locus, field, "finite")
    return number


def spec_from_record(record: Dict[str, object], locus: str) -> BuildingSpec:
    """
    Build a BuildingSpec from one decoded record

    Args:
        record: Mapping with the input-schema keys
        locus: Position of the record, used in error messages

    Raises:
        SpecValidationError: On missing, unknown or invalid fields
    """
    unknown = [key for key in record if key not in CSV_HEADER]
    if unknown:
        raise SpecValidationError(f"unknown field(s) {', '.join(map(str, unknown))}", locus, str(unknown[0]), "known-fields")
    missing = [key for key in REQUIRED_FIELDS if key not in record]
    if missing:
        raise SpecValidationError(f"missing field(s) {', '.join(missing)}", locus, missing[0], "required")

    name = record["name"]
    if not isinstance(name, str):
        raise SpecValidationError(f"name must be a string, got {name!r}", locus, "name", "string")
    source = record.get("source")
    if source is not None and not isinstance(source, str):
        raise SpecValidationError(f"source must be a string, got {source!r}", locus, "source", "string")
    lengths = {field: _number(record[field], field, locus) for field in LENGTH_FIELDS}
    try:
        return BuildingSpec(name=name, source=source, **lengths)
    except SpecValidationError as e:
        raise SpecValidationError(str(e), locus, e.field, e.rule) from e


def _parse_json(text: str) -> List[Tuple[str, BuildingSpec]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecParseError(e.msg, locus=f"line {e.lineno}, column {e.colno}") from e
    if not isinstance(data, list):
        raise SpecParseError(f"top level must be an array of records, got {type(data).__name__}", locus="document")

    specs = []
    for index, record in enumerate(data, start=1):
        locus = f"record {index}"
        if not isinstance(record, dict):
            raise SpecParseError(f"record must be an object, got {type(record).__name__}", locus=locus)
        specs.append((locus, spec_from_record(record, locus)))
    return specs


def _parse_csv_number(text: str, field: str, locus: str) -> float:
    if not CSV_NUMBER.fullmatch(text):
        raise SpecValidationError(f"{field} must be a dot-decimal number, got {text!r}", locus, field, "numeric")
    return _number(float(text), field, locus)


def _parse_csv(text: str) -> List[Tuple[str, BuildingSpec]]:
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader, None)
    if header is None:
        raise SpecParseError("missing header", locus="line 1")
    if header != CSV_HEADER:
        raise SpecParseError(
            f"header must be exactly {','.join(CSV_HEADER)!r}, got {','.join(header)!r}", locus="line 1"
        )

    specs = []
    for row in reader:
        if not row:
            continue
        locus = f"line {reader.line_num}"
        if len(row) != len(CSV_HEADER):
            raise SpecParseError(f"expected {len(CSV_HEADER)} columns, got {len(row)}", locus=locus)
        record: Dict[str, object] = dict(zip(CSV_HEADER, row))
        for field in LENGTH_FIELDS:
            record[field] = _parse_csv_number(row[CSV_HEADER.index(field)], field, locus)
        record["source"] = record["source"] or None
        specs.append((locus, spec_from_record(record, locus)))
    return specs


def parse_specs(stream: Union[bytes, BinaryIO], fmt: str) -> List[BuildingSpec]:
    """
    Read building specifications from JSON or CSV

    Args:
        stream: UTF-8 bytes or a binary file object
        fmt: 'json' or 'csv'

    Returns:
        Specs in input order

    Raises:
        SpecParseError: On malformed input, with line or record locus
        SpecValidationError: On invariant violations and duplicate names
    """
    if fmt not in SPEC_FORMATS:
        raise ValueError(f"unknown spec format {fmt!r}; expected one of {', '.join(SPEC_FORMATS)}")
    raw = stream if isinstance(stream, (bytes, bytearray)) else stream.read()
    try:
        text = bytes(raw).decode("utf-8-sig")
    except UnicodeDecodeError as e:
        raise SpecParseError(f"input is not UTF-8: {e.reason}", locus=f"byte {e.start}") from e

    located = _parse_json(text) if fmt == "json" else _parse_csv(text)

    seen = set()
    for locus, spec in located:
        if spec.name in seen:
            raise SpecValidationError(f"duplicate building name {spec.name!r}", locus, "name", "unique")
        seen.add(spec.name)
    specs = [spec for _, spec in located]

    logger.debug(f"Parsed {len(specs)} building spec(s) from {fmt}")
    return specs
