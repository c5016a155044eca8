from enum import Enum


class ErrorCodes(Enum):
    """
    Error codes for business exceptions
    """
    INVALID_INPUT = "INVALID_INPUT"
    NOT_COPRIME = "NOT_COPRIME"
    NOT_PRIME = "NOT_PRIME"
    NOT_DIVISIBLE = "NOT_DIVISIBLE"
    HYPOTHESIS_VIOLATION = "HYPOTHESIS_VIOLATION"
    PRECISION_EXHAUSTED = "PRECISION_EXHAUSTED"
    CHECKPOINT_MISMATCH = "CHECKPOINT_MISMATCH"
    INVALID_STATE = "INVALID_STATE"
    INTERNAL_SERVER_ERROR = "INTERNAL_SERVER_ERROR"


class BusinessException(Exception):
    def __init__(self, code: ErrorCodes, msg: str):
        self.code = code
        self.msg = msg
        super().__init__(msg)

    def to_detail(self) -> dict:
        return {"error_code": f"400.{self.code.name}", "error_message": self.msg}
