import json
from functools import lru_cache
from pathlib import Path

from jsonschema import ValidationError, validate

from utils.errors import ConfigError
from utils.logger import Logger

logger = Logger(__name__)

SCHEMA_ROOT = Path(__file__).parent.parent / "schema"


@lru_cache(maxsize=None)
def load_schema(schema_filename):
    """
    Load a JSON Schema from the schema directory or its subdirectories.
    :param schema_filename: Name of the schema file
    :return: Parsed JSON Schema
    """
    logger.debug(f"Base path for schemas: {SCHEMA_ROOT.resolve()}")
    try:
        schema_path = next(SCHEMA_ROOT.rglob(schema_filename))
    except StopIteration:
        logger.error(f"Schema file not found: {schema_filename} in {SCHEMA_ROOT.resolve()} or its subdirectories.")
        raise FileNotFoundError(f"Schema file not found: {schema_filename} in {SCHEMA_ROOT.resolve()}")
    logger.debug(f"Found schema file at: {schema_path}")
    with open(schema_path, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_data(data, schema_filename):
    """
    Validate data against a named JSON Schema.
    :param data: Parsed JSON document
    :param schema_filename: Schema file under schema/
    """
    try:
        validate(instance=data, schema=load_schema(schema_filename))
    except ValidationError as e:
        location = "/".join(str(part) for part in e.absolute_path) or "<root>"
        logger.error(f"Data validation failed at {location}: {e.message}")
        raise ConfigError(f"{schema_filename}: {e.message} at {location}", location=location)


def read_json(path):
    """
    Read a JSON document; malformed text is a usage error with the parser position.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"file not found: {path}", path=str(path))
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Malformed JSON in {path}: {e.msg} (line {e.lineno}, column {e.colno})")
        raise ConfigError(
            f"malformed JSON in {path}: {e.msg} at line {e.lineno} column {e.colno}",
            path=str(path),
            line=e.lineno,
            column=e.colno,
        )
