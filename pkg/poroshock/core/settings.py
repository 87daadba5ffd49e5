from typing import Any, Dict

from pydantic_settings import BaseSettings, SettingsConfigDict


class BaseLabSettings(BaseSettings):
    """Base class for process-wide numerical defaults.

    Every field is overridable through a ``POROSHOCK_<FIELD>`` environment
    variable; unknown variables are ignored.
    """

    model_config = SettingsConfigDict(env_prefix="POROSHOCK_", extra="ignore")

    def overridden(self, **overrides: Any) -> "BaseLabSettings":
        """Return a validated copy with the given fields replaced."""
        data: Dict[str, Any] = self.model_dump()
        data.update(overrides)
        return type(self)(**data)
