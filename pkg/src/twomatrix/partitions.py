"""Integer partitions, Frobenius coordinates and shifted labels.

Partitions are immutable value types: parts are stored as a weakly
decreasing tuple of positive integers with trailing zeros stripped, so
they can serve as dictionary keys in series expansions.  The text form
used by the CLI and CSV output is ``"3+1"``, with ``"()"`` for the empty
partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import LengthExceedsN

__all__ = [
    "Partition",
    "FrobeniusCoords",
    "conjugate",
    "frobenius",
    "shifted_labels",
    "tilde_transform",
    "enumerate_partitions",
]


class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are accepted on input and stripped.  Equality and
    hashing are structural, both based on the normalized part tuple.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"negative part in {ps}")
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("Partition is immutable")

    # -- container protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    # -- basic data ---------------------------------------------------------
    @property
    def weight(self) -> int:
        """Sum of all parts."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 0-based, reading 0 beyond the stored length."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    # -- text form ----------------------------------------------------------
    def to_text(self) -> str:
        """Render as ``"3+1"`` (``"()"`` for the empty partition)."""
        return "+".join(str(p) for p in self.parts) if self.parts else "()"

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("()", ""):
            return cls()
        return cls(int(tok) for tok in text.split("+"))

    # -- derived partitions ---------------------------------------------------
    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram (column lengths)."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def frobenius(self) -> "FrobeniusCoords":
        """Frobenius coordinates (arm and leg lengths along the diagonal)."""
        conj = self.conjugate()
        k = sum(1 for i, p in enumerate(self.parts) if p >= i + 1)
        alphas = tuple(self.parts[i] - i - 1 for i in range(k))
        betas = tuple(conj.parts[i] - i - 1 for i in range(k))
        return FrobeniusCoords(alphas, betas)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Yield Young-diagram nodes (i, j), 1-based, row-major."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)


@dataclass(frozen=True)
class FrobeniusCoords:
    """Frobenius notation (alphas | betas), both strictly decreasing."""

    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    def __post_init__(self):
        if len(self.alphas) != len(self.betas):
            raise ValueError("alpha and beta sequences differ in length")
        for seq in (self.alphas, self.betas):
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"not strictly decreasing: {seq}")
            if seq and seq[-1] < 0:
                raise ValueError(f"negative entry in {seq}")

    def to_partition(self) -> Partition:
        """Rebuild the partition with these diagonal hooks."""
        k = len(self.alphas)
        # Row i has alpha_i boxes right of the diagonal node (i, i).
        rows = [self.alphas[i] + i + 1 for i in range(k)]
        # Column lengths below the diagonal fix the remaining rows.
        col = [self.betas[i] + i + 1 for i in range(k)]
        extra_rows: list[int] = []
        r = k
        while True:
            width = sum(1 for c in col if c >= r + 1)
            if width == 0:
                break
            extra_rows.append(width)
            r += 1
        return Partition(rows + extra_rows)

    def transposed(self) -> "FrobeniusCoords":
        return FrobeniusCoords(self.betas, self.alphas)


def conjugate(lam: Partition) -> Partition:
    """Transpose of ``lam``; swaps (alphas | betas) in Frobenius form."""
    return lam.conjugate()


def frobenius(lam: Partition) -> FrobeniusCoords:
    """Frobenius coordinates of ``lam``."""
    return lam.frobenius()


def shifted_labels(lam: Partition, n_rows: int) -> tuple[int, ...]:
    """Strictly decreasing labels ``h_i = lam_i - i + n_rows``, i = 1..n_rows.

    Parts beyond the length of ``lam`` read zero, so for the empty
    partition the labels are ``(n_rows - 1, ..., 1, 0)``.

    Raises
    ------
    LengthExceedsN
        If ``lam`` has more than ``n_rows`` parts.
    """
    if lam.length > n_rows:
        raise LengthExceedsN(f"partition length {lam.length} exceeds {n_rows}")
    return tuple(lam.part(i) - (i + 1) + n_rows for i in range(n_rows))


def tilde_transform(nu: Partition, n_rows: int) -> Partition:
    """The complementary partition with parts ``nu_1 - nu_{N-i+1}``.

    Reflecting the padded part list of ``nu`` about half its largest
    part gives another partition of length at most ``n_rows``; applying
    the transform twice returns the original partition.
    """
    if nu.length > n_rows:
        raise LengthExceedsN(f"partition length {nu.length} exceeds {n_rows}")
    top = nu.part(0)
    return Partition(top - nu.part(n_rows - i) for i in range(1, n_rows + 1))


def enumerate_partitions(max_weight: int, max_length: int) -> Iterator[Partition]:
    """Yield every partition with weight <= max_weight and length <= max_length.

    The order is graded by weight, then lexicographically descending on
    the part tuples, so e.g. (2, 2) gives (), (1), (2), (1, 1).  The
    order is deterministic and documented so that series output is
    reproducible byte for byte.
    """

    def gen(remaining: int, cap: int, slots: int) -> Iterator[list[int]]:
        if remaining == 0:
            yield []
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first, slots - 1):
                yield [first] + rest

    for w in range(0, max_weight + 1):
        for parts in gen(w, w, max_length):
            yield Partition(parts)
