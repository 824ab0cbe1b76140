from .config import CommandConfig
from .main import main, build_parser


__all__ = ['CommandConfig', 'main', 'build_parser']
