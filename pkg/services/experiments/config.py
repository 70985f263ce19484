"""
@Time ： 2026-10-18
"""
import copy
from typing import Optional

from daos.schema_loader import read_json, validate_data
from services.experiments.validation import ExperimentConfig
from utils.logger import Logger

logger = Logger(__name__)

CONFIG_SCHEMA = "experiment_config_schema.json"
# sections replaced whole by an override instead of merged key by key
REPLACED_SECTIONS = {"curve"}


def _merge(base: dict, overrides: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict) and key not in REPLACED_SECTIONS:
            merged[key] = _merge(merged.get(key) or {}, value)
        else:
            merged[key] = value
    return merged


def build_config(document: Optional[dict] = None, **overrides) -> ExperimentConfig:
    """
    Validate a config document against the JSON schema, apply command-line
    overrides (None values are ignored, dicts merge section-wise) and build the model.
    """
    document = document or {}
    validate_data(document, CONFIG_SCHEMA)
    merged = _merge(document, overrides)
    return ExperimentConfig.model_validate(merged)


def load_config(path: Optional[str] = None, **overrides) -> ExperimentConfig:
    document = read_json(path) if path else {}
    if path:
        logger.info(f"Loaded experiment config from {path}")
    return build_config(document, **overrides)
