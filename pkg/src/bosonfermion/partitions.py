"""Partitions, Young diagrams, hooks, residues and dimension vectors.

Diagrams use English notation: row 0 is the longest row, rows grow downward.
A box sits in column ``col`` and row ``row`` (both counted from zero) and has
residue ``col - row``.
"""

from functools import cache
from typing import Iterable, NamedTuple


class Box(NamedTuple):
    col: int
    row: int

    @property
    def residue(self) -> int:
        return self.col - self.row


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; ``Partition()`` is empty."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, row: int) -> int:
        """Length of row ``row`` (0-indexed); zero beyond the last row."""
        return self[row] if row < len(self) else 0

    def contains_box(self, box: Box) -> bool:
        return box.col >= 0 and box.row >= 0 and box.col < self.part(box.row)

    def multiplicities(self) -> dict[int, int]:
        """Map part value i to the number of rows of length i."""
        mult: dict[int, int] = {}
        for p in self:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def parse_partition(text: str) -> Partition:
    """Parse the bracket form, e.g. "[2,1]" or "[]"."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"expected a bracketed partition like [2,1], got {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return Partition()
    try:
        parts = [int(tok) for tok in inner.split(",")]
    except ValueError:
        raise ValueError(f"invalid partition literal {text!r}") from None
    return Partition(parts)


def boxes(shape: Partition) -> list[Box]:
    """All boxes of the diagram in row-major order."""
    return [Box(j, k) for k, row_len in enumerate(shape) for j in range(row_len)]


def residue(box: Box) -> int:
    return box.col - box.row


def arm(shape: Partition, box: Box) -> int:
    return shape.part(box.row) - box.col - 1


def leg(shape: Partition, box: Box) -> int:
    return sum(1 for row_len in shape[box.row + 1:] if row_len > box.col)


def hook(shape: Partition, box: Box) -> int:
    """Arm plus leg plus one for a box inside the diagram."""
    if not shape.contains_box(box):
        raise ValueError(f"box {box} lies outside the diagram of {shape}")
    return arm(shape, box) + leg(shape, box) + 1


@cache
def hook_product(shape: Partition) -> int:
    result = 1
    for box in boxes(shape):
        result *= hook(shape, box)
    return result


def dimension_vector(shape: Partition) -> dict[int, int]:
    """Number of boxes of each residue; absent keys mean zero."""
    counts: dict[int, int] = {}
    for box in boxes(shape):
        r = box.residue
        counts[r] = counts.get(r, 0) + 1
    return counts


def z_factor(shape: Partition) -> int:
    """prod over part values i of i^(multiplicity) * multiplicity!."""
    result = 1
    for i, m in shape.multiplicities().items():
        result *= i**m
        for j in range(2, m + 1):
            result *= j
    return result


def addable_corners(shape: Partition) -> list[Box]:
    """Boxes whose addition yields a partition, ordered top row first."""
    corners = []
    for row in range(len(shape) + 1):
        col = shape.part(row)
        if row == 0 or shape.part(row - 1) > col:
            corners.append(Box(col, row))
    return corners


def removable_corners(shape: Partition) -> list[Box]:
    """Boxes whose removal yields a partition, ordered top row first."""
    corners = []
    for row, row_len in enumerate(shape):
        if shape.part(row + 1) < row_len:
            corners.append(Box(row_len - 1, row))
    return corners


def addable_boxes(shape: Partition, k: int) -> list[Box]:
    return [b for b in addable_corners(shape) if b.residue == k]


def removable_boxes(shape: Partition, k: int) -> list[Box]:
    return [b for b in removable_corners(shape) if b.residue == k]


def add_box(shape: Partition, box: Box) -> Partition:
    if box not in addable_corners(shape):
        raise ValueError(f"box {box} is not addable to {shape}")
    parts = list(shape)
    if box.row == len(parts):
        parts.append(1)
    else:
        parts[box.row] += 1
    return Partition(parts)


def remove_box(shape: Partition, box: Box) -> Partition:
    if box not in removable_corners(shape):
        raise ValueError(f"box {box} is not removable from {shape}")
    parts = list(shape)
    parts[box.row] -= 1
    if parts[box.row] == 0:
        parts.pop()
    return Partition(parts)


def cartan_apply(counts: dict[int, int], k: int) -> int:
    """(C v)_k for the doubly infinite tridiagonal Cartan matrix of type A."""
    return 2 * counts.get(k, 0) - counts.get(k - 1, 0) - counts.get(k + 1, 0)


def monomial_indices(shape: Partition, charge: int, count: int) -> tuple[int, ...]:
    """First ``count`` indices i_k = (charge - k) + shape_k of the wedge word."""
    return tuple(charge - k + shape.part(k) for k in range(count))


def shape_from_indices(indices: Iterable[int], charge: int) -> Partition:
    """Inverse of monomial_indices: read off shape_k = i_k - (charge - k).

    The given prefix must already have merged with the vacuum tail, i.e. its
    trailing entries satisfy i_k = charge - k.
    """
    parts = []
    for k, i in enumerate(indices):
        parts.append(i - (charge - k))
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(parts)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size 0, 1, ..., n, smaller sizes first."""
    return [shape for m in range(n + 1) for shape in partitions_of(m)]
