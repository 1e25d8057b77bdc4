"""
配置包初始化
"""

from .settings import get_config, setup_logging, SYSTEM_CONFIG
from .run_config import RunConfig, load_run_config

__all__ = ['get_config', 'setup_logging', 'SYSTEM_CONFIG', 'RunConfig', 'load_run_config']
