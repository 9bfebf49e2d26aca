# -*- coding: utf-8 -*-
"""Layered YAML configuration for proxrem."""

import os
from typing import Any, Dict, Optional

import yaml
from .functions import dump_as_json, replace_bash_var
from .log import debug

USER_CONFIG_DIR = ".proxrem"


class Config:
    """Attribute tree over a nested settings dict.

    Missing attributes resolve to an empty Config so that lookups such as
    ``cfg.scan.workers`` never raise; use ``get_value`` for defaults.
    """

    def __init__(self, data: Optional[Dict[str, Any]] = None) -> None:
        self._freeze = False
        self.from_dict(data)

    def from_dict(self, data: Optional[Dict[str, Any]]) -> "Config":
        if data is None:
            return self
        for key, value in data.items():
            if isinstance(value, dict):
                setattr(self, key, Config(value))
            elif isinstance(value, list):
                setattr(self, key, [Config(item) if isinstance(item, dict) else item for item in value])
            else:
                setattr(self, key, value)
        return self

    def empty(self) -> bool:
        return len(self.as_dict()) == 0

    def as_dict(self) -> Dict[str, Any]:
        result = {}
        for key, value in self.__dict__.items():
            if key == "_freeze":
                continue
            if isinstance(value, Config):
                result[key] = value.as_dict()
            elif isinstance(value, list):
                result[key] = [item.as_dict() if isinstance(item, Config) else item for item in value]
            else:
                result[key] = value
        return result

    def __str__(self):
        return "Config(" + dump_as_json(self.as_dict()) + ")"

    def dump_str(self, indent=2) -> str:
        """Render the effective configuration as YAML."""
        return yaml.dump(self.as_dict(), default_flow_style=False,
                         indent=indent, allow_unicode=True, sort_keys=False)

    def _walk_children(self, fn):
        for value in self.__dict__.values():
            if isinstance(value, Config):
                fn(value)
            elif isinstance(value, list):
                for v in value:
                    if isinstance(v, Config):
                        fn(v)

    def freeze(self) -> "Config":
        """Make the tree immutable; later writes raise RuntimeError."""
        self._walk_children(lambda c: c.freeze())
        self._freeze = True
        return self

    def un_freeze(self) -> "Config":
        self._walk_children(lambda c: c.un_freeze())
        self._freeze = False
        return self

    def __setattr__(self, name, value):
        if name != "_freeze" and getattr(self, "_freeze", False):
            raise RuntimeError("Configuration is frozen, cannot modify.")
        super().__setattr__(name, value)

    def __getattr__(self, name):
        if name.startswith("__"):
            raise AttributeError(name)
        if name in self.__dict__:
            return self.__dict__[name]
        return Config()

    def has_attr(self, name) -> bool:
        return name in self.__dict__

    def merge_from(self, other: "Config") -> "Config":
        """Recursively overlay another Config onto this one."""
        if not isinstance(other, Config):
            raise TypeError("Can only merge from another Config instance.")
        for key, value in other.__dict__.items():
            if key == "_freeze":
                continue
            if isinstance(value, Config) and self.has_attr(key) and isinstance(getattr(self, key), Config):
                getattr(self, key).merge_from(value)
            else:
                setattr(self, key, value)
        return self

    def _parent_of(self, key: str):
        keys = key.split('.')
        current = self
        for k in keys[:-1]:
            if not current.has_attr(k) or not isinstance(getattr(current, k), Config):
                raise AttributeError(f"Configuration does not have section '{k}' (in '{key}')")
            current = getattr(current, k)
        return current, keys[-1]

    def set_value(self, key: str, value) -> "Config":
        """Set a dotted key, eg ``set_value("scan.workers", 4)``."""
        current, leaf = self._parent_of(key)
        setattr(current, leaf, value)
        return self

    def get_value(self, key: str, default=None):
        """Get a dotted key, returning default when the leaf is absent."""
        try:
            current, leaf = self._parent_of(key)
        except AttributeError:
            return default
        if not current.has_attr(leaf):
            return default
        return getattr(current, leaf)

    def set_values(self, values: Optional[Dict[str, Any]]) -> "Config":
        if values is None:
            return self
        for key, value in values.items():
            self.set_value(key, value)
        return self


def load_yaml_with_env_vars(file_path: str) -> Dict[str, Any]:
    with open(file_path, 'r', encoding='utf-8') as file:
        rendered_content = replace_bash_var(file.read(), os.environ)
    return yaml.safe_load(rendered_content) or {}


def default_config_file() -> str:
    return os.path.abspath(os.path.join(os.path.dirname(__file__), "../setting.yaml"))


def get_config(config_file: Optional[str] = None,
               cfg_override: Optional[Dict[str, Any]] = None) -> Config:
    """
    Build the effective configuration.

    Layers, later wins: packaged setting.yaml, ~/.proxrem/setting.yaml (if
    present), the explicit config_file, then dotted-key overrides.
    """
    default_file = default_config_file()
    assert os.path.isfile(default_file), f"Default configuration file '{default_file}' not found."
    cfg = Config(load_yaml_with_env_vars(default_file))
    debug(f"Load config from '{default_file}' completed.")

    user_file = os.path.join(os.path.expanduser('~'), USER_CONFIG_DIR, "setting.yaml")
    if os.path.isfile(user_file):
        cfg.merge_from(Config(load_yaml_with_env_vars(user_file)))
        debug(f"Load config from '{user_file}' completed.")

    if config_file is not None:
        if not os.path.isfile(config_file):
            raise FileNotFoundError(f"Config file '{config_file}' not found.")
        cfg.merge_from(Config(load_yaml_with_env_vars(config_file)))
        debug(f"Load config from '{os.path.abspath(config_file)}' completed.")

    return cfg.set_values(cfg_override).freeze()


_active: Optional[Config] = None


def active_config() -> Config:
    """The process-wide configuration, loaded from defaults on first use."""
    global _active
    if _active is None:
        _active = get_config()
    return _active


def set_active_config(cfg: Optional[Config]):
    global _active
    _active = cfg
