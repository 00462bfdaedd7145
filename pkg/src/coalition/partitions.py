"""Vertex partitions and their 1-based text form.

Text format: blocks separated by '|', vertices 1-based and space-separated
within a block, e.g. "2|11|12|13|14|1 7|3 6 16|4 5 15|8 9 10".  Internal
vertex labels stay 0-based; only text I/O shifts by one.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .graphs import VertexSet, bits_to_list


class PartitionError(ValueError):
    """Structurally unusable partition input (bad universe, bad text)."""


class Partition:
    """Ordered list of vertex blocks over a common universe.

    Construction checks only that blocks live in the stated universe; the
    partition laws (disjoint, covering, nonempty) are queried separately so
    that verification can report them as rejections rather than faults.
    """

    __slots__ = ("universe", "blocks")

    def __init__(self, universe: int, blocks: Sequence[VertexSet]):
        for b in blocks:
            if b.universe != universe:
                raise PartitionError("block universe mismatch")
        self.universe = universe
        self.blocks = tuple(blocks)

    @classmethod
    def of(cls, universe: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(universe, [VertexSet.of(universe, b) for b in blocks])

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.universe == other.universe
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.blocks))

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r}, n={self.universe})"

    def block_masks(self) -> tuple[int, ...]:
        return tuple(b.bits for b in self.blocks)

    def is_valid(self) -> bool:
        """Blocks pairwise disjoint, all nonempty, union = whole universe."""
        seen = 0
        for b in self.blocks:
            if not b.bits:
                return False
            if seen & b.bits:
                return False
            seen |= b.bits
        return seen == (1 << self.universe) - 1


def parse_partition(text: str, universe: int) -> Partition:
    """Parse the 1-based '|'-separated block format."""
    blocks = []
    for chunk in text.split("|"):
        members = []
        for tok in chunk.split():
            try:
                label = int(tok)
            except ValueError:
                raise PartitionError(f"bad vertex label {tok!r}") from None
            if not 1 <= label <= universe:
                raise PartitionError(
                    f"vertex label {label} outside 1..{universe}"
                )
            members.append(label - 1)
        blocks.append(VertexSet.of(universe, members))
    return Partition(universe, blocks)


def format_partition(P: Partition) -> str:
    """Render in the 1-based text format (inverse of parse_partition)."""
    return "|".join(
        " ".join(str(v + 1) for v in bits_to_list(b.bits)) for b in P.blocks
    )


def partition_from_assignment(universe: int, assignment: Sequence[int]) -> Partition:
    """Blocks from a per-vertex block-index array, in first-appearance order."""
    nblocks = max(assignment) + 1 if assignment else 0
    masks = [0] * nblocks
    for v, b in enumerate(assignment):
        masks[b] |= 1 << v
    return Partition(universe, [VertexSet(universe, m) for m in masks])
