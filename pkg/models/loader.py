"""
Model files: loading, validation and canonical export.

A model file is a JSON object with exactly the keys name, dim,
structure_constants, metric, phi, xi and eta. Rationals are written as
"p/q" strings (bare integers are accepted on input); frame indices are
1-based. See README.md for the full schema.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from algebra.rational import format_rational, parse_rational
from models.catalog import ModelSpec, builtin, builtin_names
from utils.errors import DimensionMismatch, DuplicateEntry, ParseError, UnknownModel
from utils.logger import Logger

logger = Logger.get_logger()

KEYS = ("name", "dim", "structure_constants", "metric", "phi", "xi", "eta")


def _line_of(text: str, key: str) -> Optional[int]:
    position = text.find(f'"{key}"')
    if position < 0:
        return None
    return text.count('\n', 0, position) + 1


class _Parser:
    """Field-by-field validation of one decoded document"""

    def __init__(self, text: str, source: str):
        self.text = text
        self.source = source

    def error(self, message: str, key: str) -> ParseError:
        return ParseError(f"{self.source}: {message}", line=_line_of(self.text, key), field=key)

    def rational(self, value, key: str) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise self.error(f"{value!r} is not an integer or a \"p/q\" string", key)
        if isinstance(value, int):
            return Fraction(value)
        try:
            return parse_rational(value)
        except ValueError as e:
            raise self.error(str(e), key) from None

    def integer(self, value, key: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.error(f"{value!r} is not an integer", key)
        return value

    def vector(self, value, key: str, dim: int) -> List[Fraction]:
        if not isinstance(value, list):
            raise self.error("expected an array", key)
        if len(value) != dim:
            raise DimensionMismatch(f"{self.source}: '{key}' has {len(value)} entries, dim is {dim}")
        return [self.rational(v, key) for v in value]

    def matrix(self, value, key: str, dim: int) -> List[List[Fraction]]:
        if not isinstance(value, list):
            raise self.error("expected an array of rows", key)
        if len(value) != dim:
            raise DimensionMismatch(f"{self.source}: '{key}' has {len(value)} rows, dim is {dim}")
        return [self.vector(row, key, dim) for row in value]

    def brackets(self, value, dim: int) -> List[Tuple[int, int, int, Fraction]]:
        key = "structure_constants"
        if not isinstance(value, list):
            raise self.error("expected an array of [i, j, k, value] entries", key)

        seen: Dict[Tuple[int, int, int], int] = {}
        entries = []
        for position, entry in enumerate(value, start=1):
            if not isinstance(entry, list) or len(entry) != 4:
                raise self.error(f"entry {position} is not of the form [i, j, k, value]", key)
            i, j, k = (self.integer(v, key) for v in entry[:3])
            for index in (i, j, k):
                if not 1 <= index <= dim:
                    raise DimensionMismatch(f"{self.source}: entry {position} has index {index} outside 1..{dim}")
            if i == j:
                raise self.error(f"entry {position} brackets E_{i} with itself", key)
            amount = self.rational(entry[3], key)
            if i > j:
                i, j, amount = j, i, -amount

            if (i, j, k) in seen:
                raise DuplicateEntry(
                    f"{self.source}: entries {seen[(i, j, k)]} and {position} both give c^{k}_{i}{j} "
                    f"(antisymmetry is implied, give each bracket once)")
            seen[(i, j, k)] = position
            entries.append((i, j, k, amount))
        return entries

    def parse(self, document) -> ModelSpec:
        if not isinstance(document, dict):
            raise ParseError(f"{self.source}: top level must be an object", line=1)

        for key in document:
            if key not in KEYS:
                raise self.error(f"unknown key '{key}'", key)
        for key in KEYS:
            if key not in document:
                raise ParseError(f"{self.source}: missing key '{key}'", field=key)

        name = document["name"]
        if not isinstance(name, str) or not name:
            raise self.error("name must be a non-empty string", "name")
        dim = self.integer(document["dim"], "dim")
        if dim < 1:
            raise self.error(f"dim must be positive, got {dim}", "dim")

        metric = self.matrix(document["metric"], "metric", dim)
        for i in range(dim):
            for j in range(i + 1, dim):
                if metric[i][j] != metric[j][i]:
                    raise self.error(f"metric is not symmetric at ({i + 1},{j + 1})", "metric")

        return ModelSpec.create(
            name=name,
            dim=dim,
            structure_constants=self.brackets(document["structure_constants"], dim),
            metric=metric,
            phi=self.matrix(document["phi"], "phi", dim),
            xi=self.vector(document["xi"], "xi", dim),
            eta=self.vector(document["eta"], "eta", dim),
        )


def loads(text: str, source: str = "<string>") -> ModelSpec:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}: invalid JSON: {e.msg}", line=e.lineno) from None
    return _Parser(text, source).parse(document)


def load(path: Union[str, Path]) -> ModelSpec:
    """Load and validate a model file"""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read model file {path}: {e}") from e

    spec = loads(text, source=str(path))
    logger.info(f"Loaded model '{spec.name}' from {path}")
    return spec


def _row(values) -> str:
    return json.dumps([format_rational(v) for v in values], ensure_ascii=False)


def _block(key: str, rows: List[str]) -> List[str]:
    if not rows:
        return [f'  "{key}": [],']
    return [f'  "{key}": ['] + [f"    {row}," for row in rows[:-1]] + [f"    {rows[-1]}", "  ],"]


def dumps(spec: ModelSpec) -> str:
    """Canonical file text: fixed key order, one row per line, rationals in lowest terms"""
    brackets = [json.dumps([i, j, k, format_rational(v)]) for i, j, k, v in spec.structure_constants]
    lines = ["{",
             f'  "name": {json.dumps(spec.name, ensure_ascii=False)},',
             f'  "dim": {spec.dim},']
    lines += _block("structure_constants", brackets)
    lines += _block("metric", [_row(row) for row in spec.metric])
    lines += _block("phi", [_row(row) for row in spec.phi])
    lines.append(f'  "xi": {_row(spec.xi)},')
    lines.append(f'  "eta": {_row(spec.eta)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(spec: ModelSpec, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps(spec), encoding='utf-8')
    logger.info(f"Exported model '{spec.name}' to {path}")
    return path


def resolve(source: str, search_directory: Optional[Union[str, Path]] = None) -> ModelSpec:
    """A built-in name, a path to a model file, or <name>.json in the search directory"""
    if source in builtin_names():
        return builtin(source)

    path = Path(source)
    if path.is_file():
        return load(path)

    if search_directory:
        candidate = Path(search_directory) / f"{source}.json"
        if candidate.is_file():
            return load(candidate)

    raise UnknownModel(f"'{source}' is neither a built-in model ({', '.join(builtin_names())}) nor a model file")
