"""
Custom JSON Encoder, Response Handler and Command Handler

@Time ： 2026-10-18
"""
import dataclasses
import json
import math
from fractions import Fraction
from functools import wraps

import click
import jsonschema
import numpy as np
import portion as P
import sympy
from fastapi import HTTPException
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from utils.errors import TorsionLabError, UsageError
from utils.intervals import to_float
from utils.logger import Logger

logger = Logger(__name__)


def _float_token(value):
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def to_jsonable(obj):
    """
    Recursively turn results into plain JSON types.
    Non-finite floats become "inf" / "-inf" / "nan" strings.
    """
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value) for value in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return _float_token(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return _float_token(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": _float_token(float(obj.real)), "im": _float_token(float(obj.imag))}
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, sympy.Basic):
        if obj == sympy.oo:
            return "inf"
        if obj == -sympy.oo:
            return "-inf"
        return str(obj)
    if isinstance(obj, P.Interval):
        return [[_float_token(to_float(atom.lower)), _float_token(to_float(atom.upper))] for atom in obj if not atom.empty]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return to_jsonable({field.name: getattr(obj, field.name) for field in dataclasses.fields(obj)})
    return obj


class CustomJSONEncoder(json.JSONEncoder):
    def encode(self, obj):
        return super().encode(to_jsonable(obj))

    def iterencode(self, obj, _one_shot=False):
        return super().iterencode(to_jsonable(obj), _one_shot)

    def default(self, obj):
        converted = to_jsonable(obj)
        if converted is obj:
            return super().default(obj)
        return converted


def handle_response(f):
    @wraps(f)
    async def decorated_function(*args, **kwargs):
        try:
            result = await f(*args, **kwargs)

            if isinstance(result, JSONResponse):
                return result

            if isinstance(result, tuple):
                data, status_code = result
            else:
                data = result
                status_code = 200

            serialized_data = json.loads(CustomJSONEncoder().encode(data))
            logger.run_log(f.__name__, "api", "success", {"status_code": status_code})
            return JSONResponse(content=serialized_data, status_code=status_code)

        except ValidationError as e:
            logger.warning(f"ValidationError: {e.errors()}")
            raise HTTPException(status_code=400, detail=json.loads(e.json()))
        except TorsionLabError as e:
            logger.warning(f"{type(e).__name__}: {e}")
            logger.run_log(f.__name__, "api", type(e).__name__, {"status_code": e.status_code})
            raise HTTPException(status_code=e.status_code, detail=to_jsonable(e.to_dict()))
        except HTTPException as e:
            logger.warning(f"HTTPException: {e.detail}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled Exception: {str(e)}", exc_info=True)
            raise HTTPException(status_code=500, detail="Internal server error")

    return decorated_function


def handle_command(f):
    """
    Map the error hierarchy of a click command onto process exit codes:
    0 success, 2 domain, 3 numerical precondition, 64 usage or parse, 1 anything else.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return f(*args, **kwargs)
        except TorsionLabError as e:
            logger.warning(f"{type(e).__name__}: {e}")
            click.echo(f"error: {e}", err=True)
            ctx.exit(e.exit_code)
        except (ValidationError, jsonschema.ValidationError, json.JSONDecodeError) as e:
            logger.warning(f"Invalid input: {e}")
            click.echo(f"error: invalid input: {e}", err=True)
            ctx.exit(UsageError.exit_code)
        except (click.exceptions.Exit, click.ClickException):
            raise
        except Exception as e:
            logger.error(f"Unhandled Exception: {str(e)}", exc_info=True)
            click.echo(f"error: {e}", err=True)
            ctx.exit(1)

    return decorated_function
