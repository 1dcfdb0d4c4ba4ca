import json
from enum import Enum
from pathlib import PurePath
from typing import Any

import numpy as np
from pydantic import BaseModel as PydanticModel

from mfnet.core.types import AnchoredPath


class MFNetEncoder(json.JSONEncoder):
    """JSON encoder for pydantic models, numpy values, enums and paths."""

    def default(self, obj: Any) -> Any:
        """Implement custom serialization rules."""
        if isinstance(obj, PydanticModel):
            return obj.model_dump(mode="json")
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, PurePath):
            return obj.as_posix()
        if isinstance(obj, AnchoredPath):
            return str(obj)
        return json.JSONEncoder.default(self, obj)
