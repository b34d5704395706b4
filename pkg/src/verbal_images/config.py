# --- config.py ---

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from . import constants

logger = logging.getLogger(__name__)

# --- Defaults ---
DEFAULT_CONFIG: Dict[str, Any] = {
    "max_group_order": constants.MAX_GROUP_ORDER,
    "max_aut_order": constants.MAX_AUT_ORDER,
    "max_pair_table_order": constants.MAX_PAIR_TABLE_ORDER,
    "max_table_order": constants.MAX_TABLE_ORDER,
    "evaluation_budget": constants.EVALUATION_BUDGET,
    "search_state_cap": constants.SEARCH_STATE_CAP,
    "threads": constants.DEFAULT_THREADS,
    "default_max_nulls": constants.DEFAULT_MAX_NULLS,
    "cayley_full_associativity_max": constants.CAYLEY_FULL_ASSOCIATIVITY_MAX,
    "cayley_associativity_samples": constants.CAYLEY_ASSOCIATIVITY_SAMPLES,
    "cache_ttl_seconds": constants.CACHE_TTL_SECONDS,
    "max_cache_entries": constants.MAX_CACHE_ENTRIES,
}

# Path from src/verbal_images/config.py to config/config.json
# Go up 3 levels: config.py -> verbal_images -> src -> root, then down to config/
DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent.parent / 'config' / 'config.json'


def validate_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Keep only known keys holding positive integers.

    Unknown keys and invalid values are dropped with a warning, so the
    defaults apply for them.
    """
    clean: Dict[str, Any] = {}
    for key, value in config.items():
        if key not in DEFAULT_CONFIG:
            logger.warning(f"Ignoring unknown config key: {key}")
            continue
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            logger.warning(f"Ignoring invalid value for {key}: {value!r}")
            continue
        clean[key] = value
    return clean


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """
    Loads user configuration from config.json, merging it with defaults.

    Args:
        path: Explicit config file; falls back to $VERBAL_IMAGES_CONFIG, then
              config/config.json next to the package checkout.

    Returns:
        dict: Defaults overridden by valid user values.
    """
    if path is None:
        path = os.environ.get('VERBAL_IMAGES_CONFIG') or DEFAULT_CONFIG_PATH
    try:
        with open(path, 'r', encoding='utf-8') as f:
            user_config = json.load(f)
        if not isinstance(user_config, dict):
            logger.warning(f"Config {path} is not a JSON object, using defaults")
            return dict(DEFAULT_CONFIG)
        # user_config takes precedence
        return {**DEFAULT_CONFIG, **validate_config(user_config)}
    except FileNotFoundError:
        return dict(DEFAULT_CONFIG)
    except json.JSONDecodeError as e:
        logger.warning(f"Config {path} is not valid JSON ({e}), using defaults")
        return dict(DEFAULT_CONFIG)


# --- Global Constants ---
APP_CONFIG = load_config()


def get_setting(key: str, config: Optional[Dict[str, Any]] = None) -> Any:
    """Look up a setting in the given config, else in APP_CONFIG."""
    source = config if config is not None else APP_CONFIG
    return source.get(key, DEFAULT_CONFIG[key])
