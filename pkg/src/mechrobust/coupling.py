"""Cross-layer coupling blocks: random bits or architectural motif stamps."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InputError

_BUS = [
    [0, 1, 0, 0, 1, 0],
    [1, 0, 1, 0, 0, 1],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
]
_RING = [
    [0, 1, 0, 0, 0, 1],
    [1, 0, 1, 0, 0, 0],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 1, 0],
]
_STAR = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
]


class MotifKind(str, Enum):
    BUS = "bus"
    RING = "ring"
    STAR = "star"

    @property
    def pattern(self) -> np.ndarray:
        return np.array({"bus": _BUS, "ring": _RING, "star": _STAR}[self.value], dtype=bool)


class Placement(str, Enum):
    TILE_DIAGONAL = "tile"
    SINGLE_BLOCK = "single"


def random_coupling(n_hw: int, n_sw: int, q: float, seed=None) -> np.ndarray:
    """Each HW x SW bit set independently with probability ``q``."""
    if not 0.0 <= q <= 1.0:
        raise InputError(f"coupling probability must lie in [0, 1], got {q}")
    rng = np.random.default_rng(seed)
    return rng.random((n_hw, n_sw)) < q


def scaled_pattern(kind: MotifKind, k: int) -> np.ndarray:
    """k x k generalisation of a built-in motif; equals the 6 x 6 pattern at k = 6.

    Ring: cycle on k positions. Star: position 0 linked to all others.
    Bus: a backbone path on ceil(k/2) positions; each remaining position is a
    stub on one backbone node, the first on the backbone's far end and the
    rest from the start onward.
    """
    kind = MotifKind(kind)
    if k < 2:
        raise InputError("pattern size must be at least 2")
    a = np.zeros((k, k), bool)
    if kind is MotifKind.RING:
        i = np.arange(k)
        a[i, (i + 1) % k] = True
        a[(i + 1) % k, i] = True
    elif kind is MotifKind.STAR:
        a[0, 1:] = True
        a[1:, 0] = True
    else:
        b = math.ceil(k / 2)
        for i in range(b - 1):
            a[i, i + 1] = a[i + 1, i] = True
        for j, stub in enumerate(range(b, k)):
            anchor = (j - 1) % b
            a[stub, anchor] = a[anchor, stub] = True
    return a


def load_pattern(path) -> np.ndarray:
    """Read a custom motif: one row per line, bits separated by whitespace."""
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                row = [int(tok) for tok in line.split()]
            except ValueError:
                raise InputError(f"{path}:{lineno}: non-integer entry") from None
            if any(b not in (0, 1) for b in row):
                raise InputError(f"{path}:{lineno}: entries must be 0 or 1")
            if rows and len(row) != len(rows[0]):
                raise InputError(f"{path}:{lineno}: expected {len(rows[0])} entries, got {len(row)}")
            rows.append(row)
    if not rows:
        raise InputError(f"{path}: empty pattern")
    return np.array(rows, dtype=bool)


def motif_coupling(n_hw: int, n_sw: int, kind, placement=Placement.TILE_DIAGONAL,
                   hw_order=None, sw_order=None) -> np.ndarray:
    """Stamp a motif into the HW x SW block.

    ``kind`` is a :class:`MotifKind` or a custom 0/1 pattern array.
    TILE_DIAGONAL repeats the pattern along the diagonal as many whole times
    as fits; SINGLE_BLOCK stamps one scaled pattern of size
    ``min(n_hw, n_sw)`` at the origin (built-in kinds only). ``hw_order`` /
    ``sw_order`` optionally map pattern rows / columns to node indices.
    """
    placement = Placement(placement)
    if isinstance(kind, (MotifKind, str)):
        kind = MotifKind(kind)
        pattern = kind.pattern
    else:
        pattern = np.asarray(kind, dtype=bool)
        if placement is Placement.SINGLE_BLOCK:
            raise InputError("single-block placement needs a built-in motif kind")
    pr, pc = pattern.shape
    if n_hw < pr or n_sw < pc:
        raise InputError(f"coupling section {n_hw}x{n_sw} is smaller than the {pr}x{pc} pattern")
    b = np.zeros((n_hw, n_sw), bool)
    if placement is Placement.SINGLE_BLOCK:
        k = min(n_hw, n_sw)
        b[:k, :k] = scaled_pattern(kind, k)
    else:
        for t in range(min(n_hw // pr, n_sw // pc)):
            b[t * pr:(t + 1) * pr, t * pc:(t + 1) * pc] = pattern
    if hw_order is not None or sw_order is not None:
        rows = np.arange(n_hw) if hw_order is None else _permutation(hw_order, n_hw)
        cols = np.arange(n_sw) if sw_order is None else _permutation(sw_order, n_sw)
        out = np.zeros_like(b)
        out[np.ix_(rows, cols)] = b
        b = out
    return b


def _permutation(order, n) -> np.ndarray:
    order = np.asarray(order, np.int64)
    if sorted(order.tolist()) != list(range(n)):
        raise InputError(f"node order must be a permutation of 0..{n - 1}")
    return order


@dataclass(frozen=True)
class CouplingSpec:
    """How to fill the HW x SW block.

    ``mode`` is ``"random"`` (bits at probability ``q``), ``"motif"``
    (``kind`` stamped with ``placement``) or ``"matched_random"`` (random bits
    at the same density as the ``kind`` motif would produce).
    """

    mode: str
    q: float | None = None
    kind: str | None = None
    placement: str = Placement.TILE_DIAGONAL.value
    pattern_path: str | None = None

    def __post_init__(self):
        if self.mode not in ("random", "motif", "matched_random"):
            raise InputError(f"unknown coupling mode {self.mode!r}")
        if self.mode == "random" and (self.q is None or not 0.0 <= self.q <= 1.0):
            raise InputError("random coupling needs q in [0, 1]")
        if self.mode != "random" and self.kind is None and self.pattern_path is None:
            raise InputError(f"{self.mode} coupling needs a motif kind or pattern file")

    def _motif(self):
        return load_pattern(self.pattern_path) if self.pattern_path else MotifKind(self.kind)

    def build(self, n_hw: int, n_sw: int, seed=None) -> np.ndarray:
        if self.mode == "random":
            return random_coupling(n_hw, n_sw, self.q, seed)
        motif = motif_coupling(n_hw, n_sw, self._motif(), self.placement)
        if self.mode == "motif":
            return motif
        return random_coupling(n_hw, n_sw, motif.sum() / motif.size, seed)
