"""t-cores, t-quotients, core towers, and defects via the abacus encoding.

A partition (l_1, ..., l_k) is encoded by its beta-set, the strictly
decreasing bead positions {l_i + k - i : i = 1..k}; for k = len(lam) these
are the first-column hook lengths.  Sliding a bead from position b to the
vacant position b - t deletes a rim hook of length t from the partition,
so pushing every bead as far down its residue class mod t as possible
yields the t-core, independently of deletion order.  Reading the beads in
residue class r (positions divided by t after subtracting r) gives
component r of the t-quotient.

Convention fixed here: bead counts are always normalised up to a multiple
of t before reading off cores and quotients.  This pins down the order of
the quotient components; aggregate statistics (sizes, defects, tower row
weights) do not depend on that choice, and tests that compare against
reference data treat quotient tuples as multisets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .partitions import Partition

# Materialisation guard for pre-tower rows, which have t**j entries.
_MAX_ROW_ENTRIES = 1 << 20


def _check_modulus(t: int) -> None:
    if t < 2:
        raise ValueError(f"modulus t must be at least 2, got {t}")


def _bead_count(length: int, t: int) -> int:
    """Smallest multiple of t that is >= length."""
    return length if length % t == 0 else length + (t - length % t)


def _beads(lam: Partition, count: int) -> list[int]:
    """Beta-set of lam padded to the given bead count, descending."""
    parts = lam.parts
    return [
        (parts[i] if i < len(parts) else 0) + (count - 1 - i) for i in range(count)
    ]


def _partition_from_beads(beads: Sequence[int]) -> Partition:
    desc = sorted(beads, reverse=True)
    k = len(desc)
    parts = []
    for i, b in enumerate(desc):
        p = b - (k - 1 - i)
        if p > 0:
            parts.append(p)
    return Partition(tuple(parts))


@dataclass(frozen=True)
class BetaSet:
    """Strictly decreasing bead positions encoding a partition on the abacus."""

    beads: tuple[int, ...]

    def __post_init__(self) -> None:
        beads = self.beads
        for i, b in enumerate(beads):
            if b < 0:
                raise ValueError(f"bead position {b} is negative")
            if i > 0 and beads[i - 1] <= b:
                raise ValueError("bead positions must be strictly decreasing")

    @classmethod
    def from_partition(cls, lam: Partition, bead_count: int | None = None) -> "BetaSet":
        if bead_count is None:
            bead_count = len(lam)
        if bead_count < len(lam):
            raise ValueError("bead count smaller than the number of parts")
        return cls(tuple(_beads(lam, bead_count)))

    def to_partition(self) -> Partition:
        return _partition_from_beads(self.beads)

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    def runners(self, t: int) -> tuple[tuple[int, ...], ...]:
        """Beads per residue class mod t, each divided down to runner positions."""
        _check_modulus(t)
        out: list[list[int]] = [[] for _ in range(t)]
        for b in self.beads:
            out[b % t].append((b - b % t) // t)
        return tuple(tuple(r) for r in out)


@lru_cache(maxsize=None)
def t_core(lam: Partition, t: int) -> Partition:
    """The t-core of lam: no hook length of the result is divisible by t."""
    _check_modulus(t)
    beads = _beads(lam, _bead_count(len(lam), t))
    counts = [0] * t
    for b in beads:
        counts[b % t] += 1
    slid = [r + t * i for r in range(t) for i in range(counts[r])]
    return _partition_from_beads(slid)


@lru_cache(maxsize=None)
def t_quotient(lam: Partition, t: int) -> tuple[Partition, ...]:
    """The t-quotient of lam as an ordered t-tuple of partitions.

    Component r is read from the beads in residue class r mod t.  The size
    identity |lam| = |core| + t * (total quotient size) always holds.
    """
    _check_modulus(t)
    beads = _beads(lam, _bead_count(len(lam), t))
    components = []
    for r in range(t):
        runner = sorted(((b - r) // t for b in beads if b % t == r), reverse=True)
        components.append(_partition_from_beads(runner))
    return tuple(components)


def is_t_core(lam: Partition, t: int) -> bool:
    return t_core(lam, t) == lam


def reconstruct(core: Partition, quotient: Sequence[Partition], t: int) -> Partition:
    """The unique partition with the given t-core and t-quotient.

    Inverse of (t_core, t_quotient) under the same bead-count convention.
    Rejects a core that is not actually a t-core and quotients of the wrong
    arity.
    """
    _check_modulus(t)
    if len(quotient) != t:
        raise ValueError(
            f"quotient must have exactly {t} components, got {len(quotient)}"
        )
    if not is_t_core(core, t):
        raise ValueError(f"core argument {core!r} is not a {t}-core")
    pad = max((len(q) for q in quotient), default=0)
    k = _bead_count(len(core), t) + t * pad
    counts = [0] * t
    for b in _beads(core, k):
        counts[b % t] += 1
    beads: list[int] = []
    for r in range(t):
        for v in _beads(quotient[r], counts[r]):
            beads.append(t * v + r)
    return _partition_from_beads(beads)


def pre_tower_row(lam: Partition, t: int, j: int) -> tuple[Partition, ...]:
    """Row j of the t-core pre-tower: t**j partitions, iterated quotients of lam.

    Row 0 is (lam,); each next row concatenates, in order, the t-quotients
    of the previous row's entries.
    """
    _check_modulus(t)
    if j < 0:
        raise ValueError("row index j must be nonnegative")
    row: tuple[Partition, ...] = (lam,)
    for _ in range(j):
        if len(row) * t > _MAX_ROW_ENTRIES:
            raise ValueError("pre-tower row has too many entries to materialise")
        row = tuple(c for p in row for c in t_quotient(p, t))
    return row


@dataclass(frozen=True)
class CoreTower:
    """Rows of t-cores built from iterated quotients of one partition.

    Row j holds the t-cores of pre-tower row j, in order, and has t**j
    entries.  Rows are kept up to the last level whose pre-tower row is
    nonempty; for the empty partition that is the single row (EMPTY,).
    """

    t: int
    rows: tuple[tuple[Partition, ...], ...]

    @property
    def height(self) -> int:
        return len(self.rows) - 1

    @property
    def row_sizes(self) -> tuple[int, ...]:
        return tuple(sum(p.size for p in row) for row in self.rows)


def core_tower(lam: Partition, t: int) -> CoreTower:
    """The t-core tower of lam."""
    _check_modulus(t)
    rows = []
    row: tuple[Partition, ...] = (lam,)
    while True:
        rows.append(tuple(t_core(p, t) for p in row))
        nxt = tuple(c for p in row for c in t_quotient(p, t))
        if not any(nxt):
            break
        row = nxt
    return CoreTower(t=t, rows=tuple(rows))


@lru_cache(maxsize=None)
def tower_row_sizes(lam: Partition, t: int) -> tuple[int, ...]:
    """Total size of each tower row, row 0 up to the tower height.

    Sparse equivalent of core_tower(lam, t).row_sizes: empty entries are
    dropped between levels since they contribute nothing.
    """
    _check_modulus(t)
    sizes = []
    current: tuple[Partition, ...] = (lam,)
    while True:
        sizes.append(sum(t_core(p, t).size for p in current))
        current = tuple(c for p in current for c in t_quotient(p, t) if c)
        if not current:
            break
    return tuple(sizes)


def row_size(lam: Partition, t: int, j: int) -> int:
    """Total size of tower row j; zero beyond the tower height."""
    if j < 0:
        raise ValueError("row index j must be nonnegative")
    sizes = tower_row_sizes(lam, t)
    return sizes[j] if j < len(sizes) else 0


def defect(lam: Partition, t: int) -> int:
    """(|lam| - sum of tower row sizes) / (t - 1), always a nonnegative integer."""
    sizes = tower_row_sizes(lam, t)
    num = lam.size - sum(sizes)
    quot, rem = divmod(num, t - 1)
    if rem or quot < 0:
        raise ArithmeticError(
            f"defect of {lam!r} for t={t} is not a nonnegative integer"
        )
    return quot


def is_generalized_core(lam: Partition, j: int, t: int) -> bool:
    """True when every entry of pre-tower row j+1 is empty.

    For j = 0 this is exactly the t-core predicate.
    """
    if j < 0:
        raise ValueError("row index j must be nonnegative")
    return len(tower_row_sizes(lam, t)) <= j + 1


def removable_rim_hooks(lam: Partition, t: int) -> list[tuple[int, int, Partition]]:
    """All ways to remove one rim hook of length t, as (top_row, bottom_row, result).

    Works directly on the part lists, with no abacus involved: a removable
    rim hook spanning rows a..b (0-based) forces the intermediate new parts
    to hug the old boundary, leaving one consistency condition on row b.
    """
    parts = lam.parts
    k = len(parts)
    found = []
    for a in range(k):
        for b in range(a, k):
            last = parts[a] + (b - a) - t
            below = parts[b + 1] if b + 1 < k else 0
            if below <= last <= parts[b] - 1:
                new = (
                    list(parts[:a])
                    + [parts[i + 1] - 1 for i in range(a, b)]
                    + [last]
                    + list(parts[b + 1 :])
                )
                found.append((a, b, Partition(tuple(p for p in new if p > 0))))
    return found


def t_core_by_rim_hooks(lam: Partition, t: int) -> Partition:
    """t-core computed by greedy rim-hook deletion, as an independent cross-check.

    Deletes the removable t-rim-hook with the largest row indices first;
    any deletion order reaches the same core, which is what the abacus
    comparison tests assert.
    """
    _check_modulus(t)
    current = lam
    while True:
        hooks = removable_rim_hooks(current, t)
        if not hooks:
            return current
        current = max(hooks, key=lambda h: (h[0], h[1]))[2]
