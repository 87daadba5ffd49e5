from enum import Enum
from typing import Any, List, Optional, Union

from pydantic import BaseModel


class SettingType(str, Enum):
    """Enumeration of supported setting types"""
    STRING = "string"
    NUMBER = "number"
    BOOLEAN = "boolean"
    LIST = "list"


# Base metadata models
class GroupMetadataSchema(BaseModel):
    """Schema for setting group metadata"""
    id: str
    label: str
    description: Optional[str] = None
    order: int = 100


class SettingMetadataSchema(BaseModel):
    """Schema for setting metadata"""
    key: str
    label: str
    description: Optional[str] = None
    group: str = "general"
    type: SettingType = SettingType.NUMBER
    min: Optional[Union[int, float]] = None
    max: Optional[Union[int, float]] = None
    order: int = 100
    module: str = "core"


class SettingValueSchema(SettingMetadataSchema):
    """Metadata joined with the value a run actually used"""
    value: Any = None


class SettingGroupTable(BaseModel):
    """One group of the settings table written next to acceptance results"""
    group: GroupMetadataSchema
    settings: List[SettingValueSchema] = []
