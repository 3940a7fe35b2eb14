"""Sequence description files: a small versioned line format.

Grammar (documented in full in the README):

  * line 1 must read ``cauchy-seq v1``;
  * every other line is blank, a ``#`` comment, or ``key = value``;
  * ``kind`` selects the sequence family: ``explicit`` (rows of concrete
    pairs), ``powerlaw`` / ``geometric`` / ``constant`` (parametric chi
    families), or ``observed`` (tabulated chi values with a declared tail);
  * repeatable keys: ``pair = loc_z scale_z loc_w scale_w`` (explicit only)
    and ``chi = value`` (observed only); all other keys appear at most once;
  * numbers are plain decimals with an optional exponent.

Parsing is strict: unknown or misplaced keys, malformed numbers, nonpositive
scales, and missing family parameters are all reported with their line
number.  :func:`format_sequence_file` writes a canonical form that re-parses
to an identical :class:`SequenceSpec`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dichotomy import (
    KIND_CONSTANT,
    KIND_EXPLICIT,
    KIND_GEOMETRIC,
    KIND_POWER_LAW,
    TAIL_CONTINUES,
    TAIL_EQUAL_AFTER_N,
    ParamSequencePair,
    location_embedding,
    scale_embedding,
)
from .halfplane import UHPoint

__all__ = [
    "SequenceSpec",
    "SequenceFileError",
    "parse_sequence_file",
    "format_sequence_file",
    "HEADER",
    "KIND_OBSERVED",
]

HEADER = "cauchy-seq v1"
KIND_OBSERVED = "observed"

_FILE_KINDS = (KIND_EXPLICIT, KIND_POWER_LAW, KIND_GEOMETRIC, KIND_CONSTANT, KIND_OBSERVED)
_EMBEDDINGS = ("location", "scale")
_TAILS = (TAIL_EQUAL_AFTER_N, TAIL_CONTINUES)


class SequenceFileError(ValueError):
    """Parse or validation failure, carrying the offending line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


@dataclass(frozen=True)
class SequenceSpec:
    """Pure-data image of one sequence file.

    ``rows`` holds explicit pairs as (loc_z, scale_z, loc_w, scale_w) tuples;
    ``chi_values`` holds the observed table.  :meth:`to_sequence` converts to
    the live :class:`ParamSequencePair` the rest of the package consumes.
    """

    kind: str
    embedding: str = "location"
    c: float | None = None
    p: float | None = None
    r: float | None = None
    rows: tuple[tuple[float, float, float, float], ...] = ()
    chi_values: tuple[float, ...] = ()
    tail: str = TAIL_CONTINUES
    monotone_unbounded: bool = False

    def to_sequence(self) -> ParamSequencePair:
        """Build the live sequence object this file describes."""
        if self.kind == KIND_EXPLICIT:
            return ParamSequencePair.explicit(
                (UHPoint(lz, sz), UHPoint(lw, sw)) for lz, sz, lw, sw in self.rows
            )
        if self.kind == KIND_POWER_LAW:
            return ParamSequencePair.power_law(self.c, self.p)
        if self.kind == KIND_GEOMETRIC:
            return ParamSequencePair.geometric(self.c, self.r)
        if self.kind == KIND_CONSTANT:
            return ParamSequencePair.constant(self.c)
        # observed: an equal tail turns the table into concrete pairs; a
        # continuing tail stays opaque (lookup callback, clamped length).
        if self.tail == TAIL_EQUAL_AFTER_N:
            embed = location_embedding if self.embedding == "location" else scale_embedding
            return ParamSequencePair.explicit(embed(v) for v in self.chi_values)
        values = self.chi_values

        def lookup(n: int, _table=values) -> float:
            return _table[n - 1]

        return ParamSequencePair.from_callback(
            lookup,
            n_available=len(values),
            monotone_unbounded=self.monotone_unbounded,
        )


def _parse_float(raw: str, line_no: int, what: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise SequenceFileError(line_no, f"{what}: not a number: {raw!r}") from None
    if not math.isfinite(value):
        raise SequenceFileError(line_no, f"{what}: must be finite, got {raw!r}")
    return value


def parse_sequence_file(text: str) -> SequenceSpec:
    """Parse file content into a :class:`SequenceSpec`.

    Raises:
        SequenceFileError: with the line number of the first problem found.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise SequenceFileError(1, f"first line must be {HEADER!r}")
    seen: dict[str, int] = {}
    kind: str | None = None
    scalars: dict[str, float] = {}
    embedding = "location"
    tail: str | None = None
    monotone = False
    rows: list[tuple[float, float, float, float]] = []
    chis: list[float] = []
    for line_no, raw in enumerate(lines[1:], start=2):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SequenceFileError(line_no, f"expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not value:
            raise SequenceFileError(line_no, f"missing value for {key!r}")
        if key in ("kind", "embedding", "tail", "monotone_unbounded", "c", "p", "r"):
            if key in seen:
                raise SequenceFileError(line_no, f"duplicate key {key!r}")
            seen[key] = line_no
        if key == "kind":
            if value not in _FILE_KINDS:
                raise SequenceFileError(line_no, f"unknown kind {value!r}")
            kind = value
        elif key == "embedding":
            if value not in _EMBEDDINGS:
                raise SequenceFileError(line_no, f"unknown embedding {value!r}")
            embedding = value
        elif key == "tail":
            if value not in _TAILS:
                raise SequenceFileError(line_no, f"unknown tail {value!r}")
            tail = value
        elif key == "monotone_unbounded":
            if value not in ("true", "false"):
                raise SequenceFileError(line_no, "monotone_unbounded must be true or false")
            monotone = value == "true"
        elif key in ("c", "p", "r"):
            scalars[key] = _parse_float(value, line_no, key)
        elif key == "pair":
            parts = value.split()
            if len(parts) != 4:
                raise SequenceFileError(
                    line_no, f"pair needs 4 numbers (loc_z scale_z loc_w scale_w), got {len(parts)}"
                )
            numbers = [_parse_float(p, line_no, "pair entry") for p in parts]
            if numbers[1] <= 0.0 or numbers[3] <= 0.0:
                raise SequenceFileError(line_no, "pair scales must be positive")
            rows.append(tuple(numbers))
        elif key == "chi":
            v = _parse_float(value, line_no, "chi")
            if v < 0.0:
                raise SequenceFileError(line_no, "chi must be non-negative")
            chis.append(v)
        else:
            raise SequenceFileError(line_no, f"unknown key {key!r}")
    if kind is None:
        raise SequenceFileError(1, "missing required key 'kind'")
    kind_line = seen["kind"]
    if rows and kind != KIND_EXPLICIT:
        raise SequenceFileError(kind_line, f"kind {kind!r} does not take pair rows")
    if chis and kind != KIND_OBSERVED:
        raise SequenceFileError(kind_line, f"kind {kind!r} does not take chi values")
    if monotone and kind != KIND_OBSERVED:
        raise SequenceFileError(
            seen["monotone_unbounded"], "monotone_unbounded applies to observed sequences only"
        )
    if kind == KIND_EXPLICIT:
        if not rows:
            raise SequenceFileError(kind_line, "explicit sequences need at least one pair row")
        if tail is None:
            tail = TAIL_EQUAL_AFTER_N
        if tail != TAIL_EQUAL_AFTER_N:
            raise SequenceFileError(seen["tail"], "explicit sequences must declare tail equal_after_n")
    elif kind == KIND_OBSERVED:
        if not chis:
            raise SequenceFileError(kind_line, "observed sequences need at least one chi value")
        if tail is None:
            tail = TAIL_CONTINUES
    else:
        if tail is None:
            tail = TAIL_CONTINUES
        if tail != TAIL_CONTINUES:
            raise SequenceFileError(seen["tail"], f"kind {kind!r} continues; tail must say so")
    needed = {
        KIND_POWER_LAW: ("c", "p"),
        KIND_GEOMETRIC: ("c", "r"),
        KIND_CONSTANT: ("c",),
    }.get(kind, ())
    for name in needed:
        if name not in scalars:
            raise SequenceFileError(kind_line, f"kind {kind!r} requires key {name!r}")
    for name in scalars:
        if name not in needed:
            raise SequenceFileError(seen[name], f"kind {kind!r} does not take key {name!r}")
    spec = SequenceSpec(
        kind=kind,
        embedding=embedding,
        c=scalars.get("c"),
        p=scalars.get("p"),
        r=scalars.get("r"),
        rows=tuple(rows),
        chi_values=tuple(chis),
        tail=tail,
        monotone_unbounded=monotone,
    )
    try:
        spec.to_sequence()
    except ValueError as exc:
        raise SequenceFileError(kind_line, str(exc)) from None
    return spec


def format_sequence_file(spec: SequenceSpec) -> str:
    """Write the canonical text form; its parse equals ``spec`` exactly.

    Floats are written with ``repr``, which round-trips every double.
    """
    out = [HEADER, f"kind = {spec.kind}", f"embedding = {spec.embedding}", f"tail = {spec.tail}"]
    if spec.kind == KIND_OBSERVED:
        out.append(f"monotone_unbounded = {'true' if spec.monotone_unbounded else 'false'}")
    for name in ("c", "p", "r"):
        value = getattr(spec, name)
        if value is not None:
            out.append(f"{name} = {value!r}")
    for lz, sz, lw, sw in spec.rows:
        out.append(f"pair = {lz!r} {sz!r} {lw!r} {sw!r}")
    for v in spec.chi_values:
        out.append(f"chi = {v!r}")
    return "\n".join(out) + "\n"
