"""
src/utils/config.py
Load and cache the JSON config sections under config/.
"""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

ROOT = Path(__file__).parent.parent.parent
CONFIG_DIR = ROOT / "config"

# ── Sections ──────────────────────────────────────────────────────
CONFIG_FILES: dict[str, str] = {
    "numerics":   "numerics.json",
    "validation": "validation.json",
    "settings":   "settings.json",
}

_config_cache: dict[str, Any] = {}


def get_config(section: str) -> dict[str, Any]:
    """Load and cache one config section by name."""
    if section in _config_cache:
        return _config_cache[section]
    filename = CONFIG_FILES.get(section)
    if not filename:
        raise ValueError(f"Unknown config section: {section}")
    path = CONFIG_DIR / filename
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        config = json.load(f)
    _config_cache[section] = config
    return config


# ── Numerics ──────────────────────────────────────────────────────

def golden_settings() -> tuple[float, int]:
    """Return (tol, max_iter) for golden-section refinement."""
    cfg = get_config("numerics")["golden_section"]
    return float(cfg["tol"]), int(cfg["max_iter"])


def bisection_max_iter() -> int:
    return int(get_config("numerics")["bisection"]["max_iter"])


def numerics_value(key: str) -> Any:
    return get_config("numerics")[key]


# ── Validation ────────────────────────────────────────────────────

def suite_tolerance(kind: str = "closed_form") -> float:
    """Tolerance for closed-form suites or for suites where the oracle participates."""
    return float(get_config("validation")["tolerance"][kind])


def p_values(key: str) -> list[float]:
    """Read a p-grid; the literal "inf" maps to math.inf."""
    raw = get_config("validation")[key]
    return [math.inf if v == "inf" else float(v) for v in raw]


def validation_value(key: str) -> Any:
    return get_config("validation")[key]
