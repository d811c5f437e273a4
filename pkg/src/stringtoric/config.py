"""Enumeration budgets.

Defaults can be overridden with the ``SPW_BUDGET`` environment variable,
either a bare integer (applied to the face and reduced-word budgets) or a
comma-separated ``key=value`` list, e.g. ``SPW_BUDGET=faces=1000,words=50``.
"""

from __future__ import annotations

import os

_SHARED_KEYS = ("faces", "words")


def _overrides() -> dict[str, int]:
    raw = os.environ.get("SPW_BUDGET", "").strip()
    if not raw:
        return {}
    if raw.isdigit():
        return {k: int(raw) for k in _SHARED_KEYS}
    out = {}
    for item in raw.split(","):
        if "=" in item:
            key, val = item.split("=", 1)
            out[key.strip()] = int(val)
    return out


def budget(name: str, default: int) -> int:
    return _overrides().get(name, default)
