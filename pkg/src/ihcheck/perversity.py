"""Perversity arithmetic.

A perversity for ambient dimension ``l`` is an integer sequence
``(p_2, ..., p_l)`` indexed by codimension, with ``p_2 = 0`` and consecutive
steps in ``{0, 1}``.  Perversities are immutable values carrying their ambient
dimension, so the top 4-perversity and the top 5-perversity are distinct.

For a space whose boundary is itself singular, chains are tested against the
boundary with the derived perversity ``(p_{j+1} - p_3)_j`` in one dimension
lower; ``boundary_perversity`` computes it.  It fixes the zero and top
perversities and swaps the two middle ones.

Dimensions 0 and 1 admit no codimension-two strata; the empty perversity for
them can be built with ``Perversity(l, ())`` directly (``new_perversity``
enforces ``l >= 2`` as the validated public constructor).
"""

from __future__ import annotations

from dataclasses import dataclass


class PerversityError(ValueError):
    """Base class for perversity construction errors."""


class BaseViolation(PerversityError):
    """p_2 must be 0."""


class GrowthViolation(PerversityError):
    """Consecutive values must differ by 0 or 1."""


class LengthMismatch(PerversityError):
    """The value sequence must have length l - 1."""


class AmbientTooSmall(PerversityError):
    """The operation needs a larger ambient dimension."""


class RangeError(PerversityError):
    """Truncation length out of range."""


@dataclass(frozen=True, order=True)
class Perversity:
    ambient_dim: int
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        """Value controlling codimension-k strata, 2 <= k <= ambient_dim."""
        if not 2 <= k <= self.ambient_dim:
            raise IndexError(f"codimension {k} outside [2, {self.ambient_dim}]")
        return self.values[k - 2]

    def __str__(self) -> str:
        if not self.values:
            return "()"
        return "(" + ",".join(str(v) for v in self.values) + ")"

    @property
    def top_value(self) -> int:
        """p_l, the entry governing the deepest possible strata."""
        if not self.values:
            return 0
        return self.values[-1]


def new_perversity(l: int, values) -> Perversity:
    """Validated constructor for an l-perversity, l >= 2."""
    if l < 2:
        raise AmbientTooSmall(f"ambient dimension {l} < 2")
    values = tuple(int(v) for v in values)
    if len(values) != l - 1:
        raise LengthMismatch(f"expected {l - 1} values for ambient dimension {l}, got {len(values)}")
    if values[0] != 0:
        raise BaseViolation(f"p_2 = {values[0]} != 0")
    for i in range(len(values) - 1):
        if values[i + 1] - values[i] not in (0, 1):
            raise GrowthViolation(f"step p_{i + 3} - p_{i + 2} = {values[i + 1] - values[i]} not in {{0, 1}}")
    return Perversity(l, values)


_KINDS = {
    "zero": "0", "0": "0",
    "top": "t", "t": "t",
    "lower_middle": "m", "m": "m",
    "upper_middle": "n", "n": "n",
}


def standard_perversity(kind: str, l: int) -> Perversity:
    """zero, top, lower_middle (floor) or upper_middle (ceil) l-perversity."""
    if l < 2:
        raise AmbientTooSmall(f"ambient dimension {l} < 2")
    short = _KINDS.get(kind)
    if short is None:
        raise PerversityError(f"unknown perversity kind {kind!r}")
    ks = range(2, l + 1)
    if short == "0":
        values = [0 for _ in ks]
    elif short == "t":
        values = [k - 2 for k in ks]
    elif short == "m":
        values = [(k - 2) // 2 for k in ks]
    else:
        values = [(k - 1) // 2 for k in ks]
    return new_perversity(l, values)


def complement(p: Perversity) -> Perversity:
    """The perversity q with p + q = t (componentwise k - 2 - p_k)."""
    return Perversity(p.ambient_dim, tuple((k - 2) - p[k] for k in range(2, p.ambient_dim + 1)))


def boundary_perversity(p: Perversity) -> Perversity:
    """The (l-1)-perversity with values p_{j+1} - p_3, governing chains inside the boundary."""
    l = p.ambient_dim
    if l < 3:
        raise AmbientTooSmall(f"boundary perversity needs ambient dimension >= 3, got {l}")
    vals = tuple(p[j + 1] - p[3] for j in range(2, l))
    if l - 1 >= 2:
        return new_perversity(l - 1, vals)
    return Perversity(l - 1, vals)


def truncate(p: Perversity, l2: int) -> Perversity:
    """Prefix (p_2, ..., p_{l2}).  l2 = 1 yields the empty perversity."""
    if not 1 <= l2 <= p.ambient_dim:
        raise RangeError(f"cannot truncate an {p.ambient_dim}-perversity to length {l2}")
    return Perversity(l2, p.values[: max(0, l2 - 1)])


def all_perversities(l: int) -> list[Perversity]:
    """Every valid l-perversity, lexicographically.  For l <= 1 the single empty one."""
    if l <= 1:
        return [Perversity(l, ())]
    out = []

    def grow(vals):
        if len(vals) == l - 1:
            out.append(Perversity(l, tuple(vals)))
            return
        last = vals[-1]
        for step in (0, 1):
            vals.append(last + step)
            grow(vals)
            vals.pop()

    grow([0])
    out.sort()
    return out


def parse_perversity(text: str, l: int) -> Perversity:
    """CLI grammar: one of 0|t|m|n, or an explicit comma list ``0,1,1,2``."""
    text = text.strip()
    if text in _KINDS:
        if l <= 1:
            return Perversity(l, ())
        return standard_perversity(text, l)
    try:
        values = [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise PerversityError(f"cannot parse perversity {text!r}") from exc
    if l <= 1 and not values:
        return Perversity(l, ())
    return new_perversity(l, values)
