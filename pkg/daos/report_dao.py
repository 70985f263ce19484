import csv
import json
import os
from datetime import datetime, timezone
from pathlib import Path

from daos.schema_loader import validate_data
from utils.decorators import CustomJSONEncoder, to_jsonable
from utils.logger import Logger

logger = Logger(__name__)

DECOMPOSITION_REPORT_SCHEMA = "decomposition_report_schema.json"


def _timestamp():
    return datetime.now(timezone.utc).isoformat()


def render_report(payload, config=None, timestamp=True) -> str:
    """
    Sorted-key JSON text of a report. The config is embedded for provenance and
    `timestamp` is the only field that differs between identical runs.
    """
    document = dict(to_jsonable(payload))
    if config is not None:
        document["config"] = to_jsonable(config)
    if timestamp:
        document["timestamp"] = _timestamp()
    return json.dumps(document, cls=CustomJSONEncoder, sort_keys=True, indent=2)


def write_report(path, payload, config=None, timestamp=True, schema=None) -> Path:
    """
    Write one JSON report.
    :param path: target file; parent directories are created
    :param payload: report body (dicts, dataclasses, numpy and sympy values)
    :param config: experiment configuration embedded under "config"
    :param schema: optional schema file the rendered document must satisfy
    """
    path = Path(path)
    os.makedirs(path.parent, exist_ok=True)
    text = render_report(payload, config, timestamp)
    if schema is not None:
        validate_data(json.loads(text), schema)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
        f.write("\n")
    logger.info(f"Report written to {path}")
    return path


def write_csv(path, header, rows) -> Path:
    """Rows may be dicts keyed by header or sequences in header order."""
    path = Path(path)
    os.makedirs(path.parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for row in rows:
            values = [row.get(column) for column in header] if isinstance(row, dict) else list(row)
            writer.writerow(["" if value is None else to_jsonable(value) for value in values])
    logger.info(f"CSV with {len(rows)} rows written to {path}")
    return path
