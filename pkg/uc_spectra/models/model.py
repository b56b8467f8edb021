from enum import Enum
from typing import Any, Dict

from pydantic.v1 import BaseModel as Pydantic1BaseModel


class BaseModel(Pydantic1BaseModel):
    """Immutable value type shared by every model in the package.

    Models are frozen (hashable, safe to share across worker threads) and render
    themselves into plain JSON-compatible dicts with enum members flattened to their
    values.
    """

    class Config:
        frozen = True

    def to_json_dict(self) -> Dict[str, Any]:
        return _jsonable(self.dict())


def _jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value
