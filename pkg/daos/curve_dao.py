from daos.schema_loader import read_json, validate_data
from services.curve.curve import PolyCurve
from services.curve.validation import CurveInput
from utils.logger import Logger

logger = Logger(__name__)

CURVE_SCHEMA = "curve_schema.json"


def parse_curve_document(document) -> PolyCurve:
    """Validate a parsed curve document and build the curve."""
    validate_data(document, CURVE_SCHEMA)
    return CurveInput.model_validate(document).to_curve()


def load_curve(path) -> PolyCurve:
    """Read a curve JSON file: {"d": 3, "exprs": ["t", "t^2/2", "t^3/6"]} or {"components": [[...], ...]}."""
    logger.debug(f"Loading curve from {path}")
    curve = parse_curve_document(read_json(path))
    logger.info(f"Loaded curve {curve} from {path}")
    return curve
