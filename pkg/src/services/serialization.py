"""JSON-lines records for verdicts, certificates, proofs and errors.

Every line is a DataResponse or ErrorResponse envelope carrying the schema
version, so records can be exported and re-validated on their own.
"""

import json
from typing import Any, Dict, Type, Union

import structlog
from pydantic import BaseModel, ValidationError

from src.core.config import get_settings
from src.core.exceptions import BudgetExceededError, FermatError, SerializationError
from src.schemas import (
    Certificate,
    ConductorData,
    ExpDiophInstance,
    FreyCurve,
    ProofDocument,
    TwistReport,
    Verdict,
)
from src.schemas.response import DataResponse, ErrorDetail, ErrorResponse

logger = structlog.get_logger(__name__)

RECORD_MODELS: Dict[str, Type[BaseModel]] = {
    "verdict": Verdict,
    "certificate": Certificate,
    "proof": ProofDocument,
    "instance": ExpDiophInstance,
    "frey_curve": FreyCurve,
    "twist": TwistReport,
    "conductor": ConductorData,
}


def _payload(data: Any) -> Any:
    if isinstance(data, BaseModel):
        return data.model_dump(mode="json")
    return data


def to_record(kind: str, data: Any, message: str = None) -> DataResponse:
    return DataResponse[Any](kind=kind, data=_payload(data), message=message)


def print_record(kind: str, data: Any, message: str = None) -> str:
    """One JSON line for a payload; models are dumped in JSON mode."""
    return to_record(kind, data, message).model_dump_json()


def error_response(exc: Exception) -> ErrorResponse:
    """Map an exception onto the error envelope."""
    if isinstance(exc, ValidationError):
        errors = [
            ErrorDetail(
                field=".".join(map(str, error["loc"])) if error["loc"] else None,
                message=error["msg"],
                code=error["type"],
            )
            for error in exc.errors()
        ]
        return ErrorResponse(message="Validation error occurred.", errors=errors, code="VALIDATION_ERROR")
    if isinstance(exc, FermatError):
        detail = ErrorDetail(field=exc.field, message=exc.message, code=exc.code)
        message = exc.message
        if isinstance(exc, BudgetExceededError):
            message = f"{exc.message} (requested {exc.requested}, budget {exc.budget})"
        return ErrorResponse(message=message, errors=[detail], code=exc.code)

    logger.exception("unhandled_error", error=str(exc))
    return ErrorResponse(
        message="An unexpected internal error occurred.",
        errors=[ErrorDetail(message=str(exc), code="INTERNAL_ERROR")],
        code="INTERNAL_ERROR",
    )


def error_record(exc: Exception) -> str:
    return error_response(exc).model_dump_json()


def parse_record(line: str) -> Union[BaseModel, ErrorResponse, Any]:
    """Parse one JSON line back into its model.

    Kinds without a registered model return the raw payload.

    Raises:
        SerializationError: On malformed JSON, a foreign schema version or an invalid payload
    """
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as e:
        raise SerializationError(f"not a JSON record: {e}")
    if not isinstance(raw, dict):
        raise SerializationError("record must be a JSON object")

    version = get_settings().SCHEMA_VERSION
    if raw.get("schema_version") != version:
        raise SerializationError(
            f"schema version {raw.get('schema_version')!r} is not {version!r}", field="schema_version"
        )

    try:
        if raw.get("status") == "error":
            return ErrorResponse.model_validate(raw)
        envelope = DataResponse[Any].model_validate(raw)
        model = RECORD_MODELS.get(envelope.kind)
        if model is None:
            return envelope.data
        return model.model_validate(envelope.data)
    except ValidationError as e:
        raise SerializationError(f"invalid {raw.get('kind', 'record')} record: {e.error_count()} errors", field="data")
