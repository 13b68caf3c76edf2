# src/schemas/response.py
from typing import Generic, List, Optional, TypeVar

from pydantic import BaseModel, Field

from src.core.config import get_settings

# Define a generic type for the data payload
T = TypeVar("T")


class BaseResponse(BaseModel):
    """Base record model for common fields."""

    schema_version: str = Field(
        default_factory=lambda: get_settings().SCHEMA_VERSION, description="Version of the structured output format."
    )
    status: str = Field(..., description="Status of the record (e.g., 'success', 'error').")
    message: Optional[str] = Field(None, description="A human-readable message about the record.")


class DataResponse(BaseResponse, Generic[T]):
    """Universal success record template, one per output line."""

    status: str = "success"
    kind: str = Field(..., description="Record type, e.g. 'verdict' or 'certificate'.")
    data: T = Field(None, description="The main data payload of the record.")


class ErrorDetail(BaseModel):
    field: Optional[str] = Field(None, description="The argument that caused the error (if applicable).")
    message: str = Field(..., description="A detailed message about the error.")
    code: Optional[str] = Field(None, description="An application-specific error code.")


class ErrorResponse(BaseResponse):
    status: str = "error"
    code: Optional[str] = Field(None, description="An application-specific error code.")
    errors: List[ErrorDetail] = Field([], description="List of detailed error messages.")
