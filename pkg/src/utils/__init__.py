# Utils package
from .config import settings
from .logger import logger
from . import errors

__all__ = ["settings", "logger", "errors"]
