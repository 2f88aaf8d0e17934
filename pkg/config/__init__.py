"""Config package for library and CLI settings."""

from .settings import Settings, settings

__all__ = [
	"Settings",
	"settings",
]
