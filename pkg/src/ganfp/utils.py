"""Seeding, digests and small shared helpers.

Everything downstream treats (config, seed) as the complete source of
randomness, so seeds for sub-tasks are always *derived*, never drawn from
global state.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
from typing import Any

import numpy as np


def canonical_json(obj: Any) -> str:
    """Serialize to JSON with sorted keys so equal objects hash equally."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_jsonable)


def _jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return dataclasses.asdict(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"not JSON-serializable: {type(obj)!r}")


def digest_of(obj: Any, length: int = 16) -> str:
    """Stable hex digest of any JSON-serializable structure."""
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()[:length]


def derive_seed(*parts) -> int:
    """Deterministic 31-bit seed from a tuple of ints/strings.

    Used to give every sample, pair and transform its own RNG stream
    without coupling them to call order.
    """
    h = hashlib.sha256(repr(tuple(parts)).encode()).digest()
    return int.from_bytes(h[:4], "little") & 0x7FFFFFFF


def rng_for(*parts) -> np.random.Generator:
    return np.random.default_rng(derive_seed(*parts))


def as_image(arr: np.ndarray) -> np.ndarray:
    """Validate an H×W×3 float image in [0, 1] and return it as float32."""
    a = np.asarray(arr)
    if a.ndim != 3 or a.shape[2] != 3:
        from .errors import ShapeError

        raise ShapeError(f"expected H×W×3 image, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("image contains non-finite values")
    return a.astype(np.float32, copy=False)


def mse(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        from .errors import ShapeError

        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.mean((a - b) ** 2))
