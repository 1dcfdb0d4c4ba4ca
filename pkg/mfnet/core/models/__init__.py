from mfnet.core.models.base import BaseModel

__all__ = ("BaseModel",)
