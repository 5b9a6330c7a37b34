"""配置管理"""
import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from hstrata.core.exceptions import ConfigurationError

CONFIG_ENV_VAR = "HSTRATA_CONFIG"
DEFAULT_CONFIG_PATH = Path.home() / ".hstrata" / "config.yaml"


def _deep_merge(base: Dict, override: Dict) -> Dict:
    """override 逐层覆盖 base，返回新字典"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        current = merged.get(key)
        if isinstance(current, dict) and isinstance(value, dict):
            merged[key] = _deep_merge(current, value)
        else:
            merged[key] = value
    return merged


def _read_yaml(path: Path) -> Dict:
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Cannot parse {path}: {e}")
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path} must contain a mapping, got {type(data).__name__}")
    return data


class Config:
    """
    YAML 配置

    没有配置文件时只用默认值，不会落盘；只有 set / reset 写文件。
    """

    DEFAULT_CONFIG = {
        "enumeration": {
            "cap_with_dimensions": 8,
            "cap_counts_only": 10,
            "jobs": 1,
            "prefix_depth": 6,
        },
        "series": {
            "default_order": 30,
            "ratio_order": 100,
        },
        "verification": {
            "seed": 0,
            "samples": 10000,
            "max_exhaustive_n": 5,
        },
        "output": {
            "format": "table",
        },
    }

    def __init__(self, config_path: Optional[Path] = None) -> None:
        """
        Args:
            config_path: 配置文件路径，默认取环境变量 HSTRATA_CONFIG，
                再退回 ~/.hstrata/config.yaml
        """
        if config_path is None:
            env_path = os.environ.get(CONFIG_ENV_VAR)
            config_path = Path(env_path) if env_path else DEFAULT_CONFIG_PATH
        self.config_path = Path(config_path).expanduser()

        self.config: Dict[str, Any] = copy.deepcopy(self.DEFAULT_CONFIG)
        if self.config_path.exists():
            self.config = _deep_merge(self.DEFAULT_CONFIG, _read_yaml(self.config_path))

    def save(self) -> None:
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        self.config_path.write_text(
            yaml.dump(self.config, default_flow_style=False, allow_unicode=True),
            encoding="utf-8",
        )

    def get(self, key: str, default: Any = None) -> Any:
        """按点号路径读取，例如 "enumeration.jobs"；路径不存在时返回 default"""
        node: Any = self.config
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def get_int(self, key: str) -> int:
        """读取整数配置，类型不对时抛出 ConfigurationError"""
        value = self.get(key)
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigurationError(f"Config key '{key}' must be an integer, got {value!r}")
        return value

    def set(self, key: str, value: Any) -> None:
        """按点号路径写入并保存，中间层不存在时自动创建"""
        *parents, leaf = key.split(".")
        node = self.config
        for part in parents:
            child = node.get(part)
            if not isinstance(child, dict):
                child = node[part] = {}
            node = child
        node[leaf] = value
        self.save()

    def reset(self) -> None:
        """恢复默认值并保存"""
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        self.save()

    def list_all(self) -> Dict:
        return copy.deepcopy(self.config)


# 全局配置实例
_config_instance: Optional[Config] = None


def get_config() -> Config:
    """获取全局配置实例"""
    global _config_instance
    if _config_instance is None:
        _config_instance = Config()
    return _config_instance


def init_config(config_path: Optional[Path] = None) -> Config:
    """用指定路径重建全局配置实例"""
    global _config_instance
    _config_instance = Config(config_path)
    return _config_instance
