"""Parameter space: typed definitions and the [-1, 1] normalization.

Continuous parameters map linearly onto [-1, 1]. A discrete parameter with
K choices maps choice k to the midpoint of the k-th of K equal bins:

    x = 2 * (k + 0.5) / K - 1

so for K = 3 the codes are -2/3, 0, +2/3. Decoding floors back to the bin
index after clamping, which makes ``denormalize`` total on arbitrary
vectors: anything outside [-1, 1] is clamped before use.

Raw values are floats for continuous parameters and integer choice indices
for discrete ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import OutOfBoundsValue, SpecMismatch


@dataclass(frozen=True)
class Continuous:
    min: float
    max: float
    unit: str = "cm"

    def __post_init__(self):
        if not (math.isfinite(self.min) and math.isfinite(self.max)
                and self.min < self.max):
            raise ValueError(f"bad continuous range [{self.min}, {self.max}]")


@dataclass(frozen=True)
class Discrete:
    choices: tuple[str, ...]

    def __post_init__(self):
        if len(self.choices) < 2:
            raise ValueError("discrete parameter needs at least 2 choices")


ParamKind = Union[Continuous, Discrete]


@dataclass(frozen=True)
class ParamDef:
    name: str
    kind: ParamKind
    description: str = ""


@dataclass(frozen=True)
class ParamSpec:
    name: str
    params: tuple[ParamDef, ...] = field(default_factory=tuple)

    def __post_init__(self):
        names = [p.name for p in self.params]
        if len(set(names)) != len(names):
            raise ValueError("parameter names must be unique")

    def __len__(self) -> int:
        return len(self.params)

    def index(self, name: str) -> int:
        for i, p in enumerate(self.params):
            if p.name == name:
                return i
        raise KeyError(name)


RawValue = Union[float, int]
RawParams = tuple


def _check_length(spec: ParamSpec, values: Sequence) -> None:
    if len(values) != len(spec.params):
        raise SpecMismatch(f"expected {len(spec.params)} values for "
                           f"{spec.name!r}, got {len(values)}")


def normalize(spec: ParamSpec, raw: Sequence[RawValue]) -> np.ndarray:
    """Raw values -> normalized vector in [-1, 1]. Strict on bounds."""
    _check_length(spec, raw)
    out = np.empty(len(raw))
    for i, (p, v) in enumerate(zip(spec.params, raw)):
        if isinstance(p.kind, Continuous):
            v = float(v)
            if not math.isfinite(v) or v < p.kind.min or v > p.kind.max:
                raise OutOfBoundsValue(i, v, p.kind.min, p.kind.max)
            out[i] = 2.0 * (v - p.kind.min) / (p.kind.max - p.kind.min) - 1.0
        else:
            k_count = len(p.kind.choices)
            if isinstance(v, bool) or not float(v).is_integer():
                raise SpecMismatch(f"param[{i}] ({p.name}) expects a choice index")
            k = int(v)
            if not 0 <= k < k_count:
                raise OutOfBoundsValue(i, k, 0, k_count - 1)
            out[i] = 2.0 * (k + 0.5) / k_count - 1.0
    return out


def denormalize(spec: ParamSpec, x: Sequence[float]) -> RawParams:
    """Normalized vector -> raw values. Total: clamps to [-1, 1] first."""
    _check_length(spec, x)
    raw: list[RawValue] = []
    for p, xi in zip(spec.params, x):
        xi = float(np.clip(xi, -1.0, 1.0))
        if isinstance(p.kind, Continuous):
            raw.append((xi + 1.0) / 2.0 * (p.kind.max - p.kind.min) + p.kind.min)
        else:
            k_count = len(p.kind.choices)
            k = int(math.floor((xi + 1.0) * k_count / 2.0))
            raw.append(min(max(k, 0), k_count - 1))
    return tuple(raw)


def sample_random(spec: ParamSpec, seed: int) -> RawParams:
    """One uniform raw sample; a fixed seed fixes the draw."""
    rng = np.random.default_rng(seed)
    raw: list[RawValue] = []
    for p in spec.params:
        if isinstance(p.kind, Continuous):
            raw.append(float(rng.uniform(p.kind.min, p.kind.max)))
        else:
            raw.append(int(rng.integers(0, len(p.kind.choices))))
    return tuple(raw)


def default_raw(spec: ParamSpec) -> RawParams:
    """The all-midpoints setting (normalized zero vector decoded)."""
    return denormalize(spec, np.zeros(len(spec.params)))


def clamp_raw(spec: ParamSpec, raw: Sequence[RawValue]) -> tuple[RawParams, bool]:
    """Clamp raw values into bounds; returns (clamped, changed_any)."""
    _check_length(spec, raw)
    out: list[RawValue] = []
    changed = False
    for p, v in zip(spec.params, raw):
        if isinstance(p.kind, Continuous):
            c = float(min(max(float(v), p.kind.min), p.kind.max))
            changed |= (c != float(v))
            out.append(c)
        else:
            k = int(round(float(v)))
            c = min(max(k, 0), len(p.kind.choices) - 1)
            changed |= (c != v)
            out.append(c)
    return tuple(out), changed


def label_raw(spec: ParamSpec, raw: Sequence[RawValue], i: int) -> str:
    """Human-readable value of parameter ``i``."""
    p = spec.params[i]
    if isinstance(p.kind, Continuous):
        return f"{float(raw[i]):.4g} {p.kind.unit}".rstrip()
    return p.kind.choices[int(raw[i])]


def spec_to_obj(spec: ParamSpec) -> dict:
    """JSON-shaped description (template listing endpoint, UI controls)."""
    params = []
    for p in spec.params:
        if isinstance(p.kind, Continuous):
            kind = {"continuous": {"min": p.kind.min, "max": p.kind.max,
                                   "unit": p.kind.unit}}
        else:
            kind = {"discrete": {"choices": list(p.kind.choices)}}
        params.append({"name": p.name, "kind": kind,
                       "description": p.description})
    return {"name": spec.name, "params": params}
