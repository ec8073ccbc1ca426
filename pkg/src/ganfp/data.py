"""Deterministic synthetic attribute-editing dataset.

Procedurally rendered cartoon faces replace a real face dataset at desk
scale.  Each binary attribute toggles one visually distinct feature in its
own region of the face, so attribute edits are spatially localized, a
classifier can learn the flags almost perfectly, and an edit is exactly a
re-render with one flag flipped.

The whole dataset is a pure function of (config, seed): the same seed
always yields bit-identical pixels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConfigurationError
from .utils import derive_seed, rng_for

# Feature slots, in attribute-index order.  Regions are disjoint by
# construction (verified in tests): hair cap, eye rings, upper-lip strip,
# mouth band, cheek patches.
ATTRIBUTE_NAMES = ("dark_hair", "glasses", "mustache", "smile", "blush")

SUPPORTED_SIZES = (32, 64)


@dataclass(frozen=True)
class DataConfig:
    image_size: int = 64
    num_attributes: int = 5
    seed: int = 0
    split_fractions: tuple[float, float, float] = (0.70, 0.15, 0.15)

    def __post_init__(self):
        if self.image_size not in SUPPORTED_SIZES:
            raise ConfigurationError(
                f"image_size must be one of {SUPPORTED_SIZES}, got {self.image_size}"
            )
        if not 2 <= self.num_attributes <= len(ATTRIBUTE_NAMES):
            raise ConfigurationError(
                f"num_attributes must be in [2, {len(ATTRIBUTE_NAMES)}],"
                f" got {self.num_attributes}"
            )
        if abs(sum(self.split_fractions) - 1.0) > 1e-9 or min(self.split_fractions) < 0:
            raise ConfigurationError("split_fractions must be non-negative and sum to 1")

    @property
    def attribute_names(self) -> tuple[str, ...]:
        return ATTRIBUTE_NAMES[: self.num_attributes]


@dataclass(frozen=True)
class AttributeVector:
    values: np.ndarray  # length-K vector of {0,1} (int8)
    names: tuple[str, ...]

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int8)
        if v.ndim != 1 or len(v) != len(self.names):
            raise ConfigurationError("attribute values/names length mismatch")
        if not np.isin(v, (0, 1)).all():
            raise ConfigurationError("attribute values must be 0 or 1")
        if len(set(self.names)) != len(self.names):
            raise ConfigurationError("attribute names must be unique")
        object.__setattr__(self, "values", v)

    def flipped(self, index: int) -> "AttributeVector":
        if not 0 <= index < len(self.values):
            raise IndexError(f"attribute index {index} out of range")
        v = self.values.copy()
        v[index] = 1 - v[index]
        return AttributeVector(v, self.names)


@dataclass(frozen=True)
class SyntheticFace:
    image: np.ndarray  # H×W×3 float32 in [0,1]
    attributes: AttributeVector
    seed: int  # per-sample seed; nuisance parameters derive from it


def _nuisance(seed: int, n_extra: int = 0):
    """Continuous per-sample parameters (head pose, tones) from a seed."""
    rng = np.random.default_rng(seed)
    p = {
        "dx": rng.uniform(-0.030, 0.030),
        "dy": rng.uniform(-0.030, 0.030),
        "scale": rng.uniform(0.92, 1.08),
        "skin_t": rng.uniform(0.0, 1.0),
        "bg_t": rng.uniform(0.0, 1.0),
        "eye_r": rng.uniform(0.028, 0.036),
        "mouth_w": rng.uniform(0.10, 0.13),
    }
    return p


def _soft(dist: np.ndarray, edge: float) -> np.ndarray:
    # signed distance -> alpha, ~1.5px soft edge for mild anti-aliasing
    return np.clip(0.5 - dist / edge, 0.0, 1.0)


def _ellipse(xx, yy, cx, cy, rx, ry):
    return np.sqrt(((xx - cx) / rx) ** 2 + ((yy - cy) / ry) ** 2) - 1.0


def _paint(img, alpha, color):
    img += alpha[..., None] * (np.asarray(color, dtype=np.float64) - img)


def render_face(config: DataConfig, flags: np.ndarray, seed: int) -> np.ndarray:
    """Render one face.  Pure function of (config, flags, seed)."""
    size = config.image_size
    n = _nuisance(seed)
    # pixel-center coordinates in [0,1]
    c = (np.arange(size) + 0.5) / size
    xx, yy = np.meshgrid(c, c)  # yy is the row (vertical) coordinate
    edge = 1.5 / size

    img = np.empty((size, size, 3), dtype=np.float64)
    bg = np.array([0.82, 0.86, 0.90]) * (0.92 + 0.16 * n["bg_t"])
    img[:] = np.clip(bg, 0.05, 0.95)

    cx, cy = 0.5 + n["dx"], 0.52 + n["dy"]
    rx, ry = 0.30 * n["scale"], 0.36 * n["scale"]

    skin_a = np.array([0.95, 0.80, 0.66])
    skin_b = np.array([0.62, 0.44, 0.30])
    skin = skin_a + (skin_b - skin_a) * n["skin_t"]
    head = _soft(_ellipse(xx, yy, cx, cy, rx, ry), edge)
    _paint(img, head, skin)

    k = config.num_attributes
    f = np.zeros(len(ATTRIBUTE_NAMES), dtype=np.int8)
    f[:k] = flags

    # hair: cap of the head above the brow line; color toggles with flag 0
    brow = cy - 0.42 * ry
    cap = head * _soft(yy - brow, edge)
    hair_color = (0.13, 0.10, 0.09) if f[0] else (0.87, 0.72, 0.35)
    _paint(img, cap, hair_color)

    # eyes (always present)
    ex, ey = 0.40 * rx, cy - 0.10 * ry
    er = n["eye_r"] * n["scale"]
    for sx in (-1.0, 1.0):
        eye = _soft(_ellipse(xx, yy, cx + sx * ex, ey, er, er), edge)
        _paint(img, eye, (0.10, 0.10, 0.12))

    # glasses: rings around the eyes plus a bridge (flag 1)
    if f[1]:
        rr = er + 0.038 * n["scale"]
        for sx in (-1.0, 1.0):
            d = _ellipse(xx, yy, cx + sx * ex, ey, rr, rr)
            ring = _soft(np.abs(d) * rr - 0.009, edge)
            _paint(img, ring, (0.16, 0.14, 0.14))
        bridge = (np.abs(yy - ey) < 0.008) & (np.abs(xx - cx) < ex - rr + 0.01)
        _paint(img, bridge.astype(np.float64), (0.16, 0.14, 0.14))

    # nose (always present)
    nose = _soft(_ellipse(xx, yy, cx, cy + 0.10 * ry, 0.035, 0.055), edge)
    _paint(img, nose, skin * 0.82)

    # mustache: strip above the mouth (flag 2)
    if f[2]:
        my = cy + 0.34 * ry
        strip = _soft(np.abs(yy - my) - 0.024, edge) * _soft(
            np.abs(xx - cx) - 0.085 * n["scale"], edge
        )
        _paint(img, strip, (0.22, 0.14, 0.10))

    # mouth: smiling arc vs straight line (flag 3)
    mouth_y = cy + 0.64 * ry
    mw = n["mouth_w"] * n["scale"]
    if f[3]:
        curve = mouth_y + 0.045 * (1.0 - ((xx - cx) / mw) ** 2)
        band = _soft(np.abs(yy - curve) - 0.014, edge)
    else:
        band = _soft(np.abs(yy - mouth_y) - 0.014, edge)
    band = band * _soft(np.abs(xx - cx) - mw, edge)
    _paint(img, band, (0.62, 0.16, 0.18))

    # blush: cheek patches (flag 4)
    if f[4]:
        bx, by = 0.68 * rx, cy + 0.26 * ry
        for sx in (-1.0, 1.0):
            patch = _soft(_ellipse(xx, yy, cx + sx * bx, by, 0.042, 0.030), edge)
            _paint(img, patch * 0.8, (0.90, 0.45, 0.45))

    return np.clip(img, 0.05, 0.95).astype(np.float32)


def make_sample(config: DataConfig, index: int) -> SyntheticFace:
    seed = derive_seed(config.seed, "sample", index)
    rng = np.random.default_rng(derive_seed(seed, "flags"))
    flags = rng.integers(0, 2, size=config.num_attributes).astype(np.int8)
    image = render_face(config, flags, seed)
    return SyntheticFace(image, AttributeVector(flags, config.attribute_names), seed)


def generate_dataset(config: DataConfig, n: int) -> list[SyntheticFace]:
    """Generate n samples.  n=0 is allowed and yields an empty list."""
    if n < 0:
        raise ConfigurationError(f"sample count must be >= 0, got {n}")
    return [make_sample(config, i) for i in range(n)]


def split_dataset(samples: list[SyntheticFace], config: DataConfig):
    """Deterministic train/val/test partition (by index; samples are i.i.d.)."""
    n = len(samples)
    n_train = int(round(n * config.split_fractions[0]))
    n_val = int(round(n * config.split_fractions[1]))
    return (
        samples[:n_train],
        samples[n_train : n_train + n_val],
        samples[n_train + n_val :],
    )


def edit_target(sample: SyntheticFace, attr_index: int, config: DataConfig) -> np.ndarray:
    """Ground-truth edited image: re-render with one attribute flipped.

    Everything else (nuisance parameters, other flags) is unchanged, so
    flipping the same attribute twice reproduces the original exactly.
    """
    flipped = sample.attributes.flipped(attr_index)  # validates the index
    return render_face(config, flipped.values, sample.seed)


def export_png(samples: list[SyntheticFace], out_dir: str | Path) -> list[Path]:
    """Optional 8-bit PNG export with a JSON sidecar of attribute flags.

    The in-memory float arrays stay authoritative; PNGs are for viewing.
    """
    from PIL import Image

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, s in enumerate(samples):
        img8 = np.round(s.image * 255.0).astype(np.uint8)
        p = out / f"sample{i:05d}.png"
        Image.fromarray(img8).save(p)
        sidecar = {
            "seed": s.seed,
            "attributes": {n: int(v) for n, v in zip(s.attributes.names, s.attributes.values)},
        }
        (out / f"sample{i:05d}.json").write_text(json.dumps(sidecar, indent=2))
        paths.append(p)
    return paths
