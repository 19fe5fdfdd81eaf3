"""HTTP session service."""

from .app import DEFAULT_TTL_SECONDS, SessionStore, create_app, create_app_from_env

__all__ = ["DEFAULT_TTL_SECONDS", "SessionStore", "create_app", "create_app_from_env"]
