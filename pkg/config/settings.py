"""
孤立曲线检验系统配置
"""

import logging
import os
import sys
from typing import Any, Dict, Optional, Union

try:
    from dotenv import load_dotenv
except ImportError:
    load_dotenv = None

try:
    import colorlog
except ImportError:
    colorlog = None

# 优先加载根目录下的.env，确保环境变量在第一次读取前就位
_project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
_env_path = os.path.join(_project_root, '.env')
if load_dotenv and os.path.exists(_env_path):
    load_dotenv(dotenv_path=_env_path, override=True)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _env_level(name: str, default: int) -> int:
    raw = os.getenv(name)
    if not raw:
        return default
    level = logging.getLevelName(raw.strip().upper())
    return level if isinstance(level, int) else default


# 系统配置
SYSTEM_CONFIG: Dict[str, Any] = {
    # 日志配置
    'logging': {
        'level': _env_level('ISOLATED_CURVES_LOG_LEVEL', logging.WARNING),
        'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        'file_path': os.getenv('ISOLATED_CURVES_LOG_FILE') or None,  # None表示只输出到控制台
        'color': True,
    },

    # 运行配置（嵌入表、定理列表）
    'run_config': {
        'path': os.getenv(
            'ISOLATED_CURVES_RUN_CONFIG',
            os.path.join(_project_root, 'config', 'default_run_config.json'),
        ),
    },

    # 网格扫描
    'scan': {
        'max_workers': _env_int('ISOLATED_CURVES_SCAN_WORKERS', 8),
    },

    # 锥计算
    'cone': {
        'sample_bound': 10,  # cone 命令输出 -2 类样本时的 |x| 上界
    },

    # 二元二次型求解
    'qform': {
        'max_river_steps': 1_000_000,  # 河流周期步数上限，正常输入远达不到
    },

    # API服务
    'api': {
        'host': os.getenv('ISOLATED_CURVES_API_HOST', '0.0.0.0'),
        'port': _env_int('ISOLATED_CURVES_API_PORT', 8000),
    },
}


def get_config() -> Dict[str, Any]:
    """获取系统配置"""
    return SYSTEM_CONFIG


def setup_logging(level: Optional[Union[int, str]] = None):
    """设置日志系统 - 控制台输出到stderr，保证stdout上的TSV/JSON字节稳定"""
    config = SYSTEM_CONFIG['logging']
    if level is None:
        level = config['level']
    elif isinstance(level, str):
        level = logging.getLevelName(level.upper())

    plain_formatter = logging.Formatter(config['format'])
    handlers = []

    # 文件handler（如果指定了文件路径）
    if config['file_path']:
        file_handler = logging.FileHandler(config['file_path'], mode='a', encoding='utf-8')
        file_handler.setFormatter(plain_formatter)
        handlers.append(file_handler)

    # 控制台handler（固定到原始stderr，避免运行时替换sys.stderr导致日志丢失）
    console_handler = logging.StreamHandler(getattr(sys, '__stderr__', None) or sys.stderr)
    if colorlog is not None and config.get('color', True):
        console_handler.setFormatter(colorlog.ColoredFormatter('%(log_color)s' + config['format']))
    else:
        console_handler.setFormatter(plain_formatter)
    handlers.append(console_handler)

    # 配置根日志记录器
    logging.basicConfig(level=level, handlers=handlers, force=True)

    # 设置第三方库日志级别
    logging.getLogger('uvicorn.access').setLevel(logging.WARNING)
    logging.getLogger('httpx').setLevel(logging.WARNING)
