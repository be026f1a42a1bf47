"""Exception types shared across the engine."""

from __future__ import annotations


class StitchgenError(Exception):
    """Base class for all engine errors."""


class ParseError(StitchgenError):
    """Malformed pattern document.

    Carries a locator string (e.g. "panels[0].edges[2].start") so callers
    can point at the offending field.
    """

    def __init__(self, message: str, locator: str = "$"):
        super().__init__(f"{locator}: {message}")
        self.locator = locator


class SchemaVersionMismatch(ParseError):
    def __init__(self, found: object, expected: int):
        super().__init__(f"schema_version {found!r} not supported (expected {expected})",
                         "schema_version")
        self.found = found
        self.expected = expected


class InvalidPattern(StitchgenError):
    """Operation requires a pattern that passes validation."""


class InfeasibleArc(StitchgenError):
    """Arc radius is smaller than half the chord between its endpoints."""


class OutOfBoundsValue(StitchgenError):
    def __init__(self, index: int, value: float, lo: float, hi: float):
        super().__init__(f"param[{index}] = {value} outside [{lo}, {hi}]")
        self.index = index


class SpecMismatch(StitchgenError):
    """Vector length or kind does not match the parameter spec."""


class UnknownTemplate(StitchgenError):
    def __init__(self, name: str, known: tuple[str, ...]):
        super().__init__(f"unknown template {name!r}; known: {', '.join(known)}")


class SeamSamplingMismatch(StitchgenError):
    """Stitched edges produced incompatible boundary samplings."""


class CheckpointError(StitchgenError):
    """Corrupt or incompatible checkpoint file."""


class DatasetError(StitchgenError):
    """Corrupt or incompatible dataset file."""
