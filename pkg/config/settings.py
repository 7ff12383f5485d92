"""
Runtime settings for quatorder
Defaults can be overridden through QUATORDER_* environment variables or a .env file
"""

import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

ENV_PREFIX = "QUATORDER_"

DEFAULTS: Dict[str, Any] = {
    # Algorithm 1 / Algorithm 2 stop once d_n exceeds factor * p
    "norm_cap_factor": 6,
    # Type fingerprints compare theta series up to factor * p
    "fingerprint_factor": 6,
    "neighbor_prime": 2,
    # Extra bits on top of the class polynomial size bound
    "precision_margin_bits": 64,
    "precision_retries": 3,
    "lll_delta": Fraction(3, 4),
    "oracle_max_p": 2000,
    "jobs": 1,
}


def get_setting(name: str) -> Any:
    """Look up a setting, letting the environment override the default.

    Args:
        name: Setting name, e.g. "norm_cap_factor"

    Returns:
        The setting value, coerced to the type of its default
    """
    if name not in DEFAULTS:
        raise ValueError(f"Unknown setting: {name}")

    default = DEFAULTS[name]
    raw = os.getenv(ENV_PREFIX + name.upper())
    if raw is None:
        return default

    try:
        return type(default)(raw)
    except ValueError:
        raise ValueError(f"Invalid value for {ENV_PREFIX + name.upper()}: {raw!r}")


def get_cache_dir() -> Optional[Path]:
    """Directory for the Hilbert class polynomial cache, or None if disabled."""
    raw = os.getenv(ENV_PREFIX + "CACHE_DIR")
    if not raw:
        return None
    return Path(raw).expanduser()


def get_available_settings() -> list:
    """Get list of known setting names."""
    return list(DEFAULTS.keys())
