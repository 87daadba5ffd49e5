from typing import List

from pydantic import BaseModel

from ..schemas.setting import (
    GroupMetadataSchema,
    SettingGroupTable,
    SettingMetadataSchema,
    SettingType,
    SettingValueSchema,
)

# Type aliases for clarity
GroupMetadata = GroupMetadataSchema
SettingMetadata = SettingMetadataSchema

__all__ = [
    "GroupMetadata",
    "SettingMetadata",
    "SettingRegistry",
    "SettingType",
    "get_setting_registry",
    "settings_registry",
]


# Registry for settings metadata
class SettingRegistry:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(SettingRegistry, cls).__new__(cls)
            cls._instance._settings = {}
            cls._instance._groups = {}
        return cls._instance

    def register_setting(self, setting: SettingMetadata):
        """Register a setting metadata"""
        if setting.group not in self._groups:
            raise ValueError(f"Group {setting.group} not found for setting {setting.key}")
        self._settings[f"{setting.module}.{setting.key}"] = setting

    def register_group(self, group: GroupMetadata):
        """Register a group metadata"""
        self._groups[group.id] = group

    def get_settings(self, module: str = None) -> List[SettingMetadata]:
        """Get all settings, optionally filtered by module"""
        if module:
            return [s for s in self._settings.values() if s.module == module]
        return list(self._settings.values())

    def get_groups(self) -> List[GroupMetadata]:
        """Get all groups ordered for display"""
        return sorted(list(self._groups.values()), key=lambda g: g.order)

    def table(self, values: BaseModel) -> List[SettingGroupTable]:
        """Join registered metadata with the values of a settings instance."""
        current = values.model_dump()
        tables = []
        for group in self.get_groups():
            rows = [
                SettingValueSchema(**s.model_dump(), value=current.get(s.key))
                for s in sorted(self._settings.values(), key=lambda s: s.order)
                if s.group == group.id
            ]
            tables.append(SettingGroupTable(group=group, settings=rows))
        return tables


# Singleton instance
settings_registry = SettingRegistry()


def get_setting_registry() -> SettingRegistry:
    """Get the setting registry singleton"""
    return SettingRegistry()
