"""Exact block partitions of the open unit square.

Coordinates are dyadic rationals held as ``fractions.Fraction`` (the joins
and bisections only ever halve, so denominators stay powers of two and
everything hashes and compares exactly).  A partition is a tuple of open
blocks, pairwise disjoint, of total area one, sorted by (x1, y1).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Sequence

from . import trees
from .trees import DihedralElement, Tree, is_leaf

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
X_AXIS = "x"
Y_AXIS = "y"


class PartitionError(ValueError):
    pass


class NotDyadicError(PartitionError):
    """Raised when a partition admits no recursive bisection structure."""


def is_dyadic_fraction(value: Fraction) -> bool:
    return value.denominator & (value.denominator - 1) == 0


def format_dyadic(value: Fraction) -> str:
    """Coordinate text form a/2^b in lowest terms."""
    if not is_dyadic_fraction(value):
        raise ValueError(f"{value} is not dyadic")
    exponent = value.denominator.bit_length() - 1
    return f"{value.numerator}/2^{exponent}"


def parse_dyadic(text: str) -> Fraction:
    text = text.strip()
    if "/2^" in text:
        num, exp = text.split("/2^")
        return Fraction(int(num), 2 ** int(exp))
    return Fraction(text)


@dataclass(frozen=True, order=True)
class Block:
    x1: Fraction
    x2: Fraction
    y1: Fraction
    y2: Fraction
    label: int | None = None

    def __post_init__(self):
        if not (self.x1 < self.x2 and self.y1 < self.y2):
            raise PartitionError(f"degenerate block {self}")
        if not (ZERO <= self.x1 and self.x2 <= ONE and ZERO <= self.y1 and self.y2 <= ONE):
            raise PartitionError(f"block {self} leaves the unit square")

    @property
    def area(self) -> Fraction:
        return (self.x2 - self.x1) * (self.y2 - self.y1)

    def touches_boundary(self) -> bool:
        return self.x1 == ZERO or self.x2 == ONE or self.y1 == ZERO or self.y2 == ONE

    def contains_block(self, other: "Block") -> bool:
        return (
            self.x1 <= other.x1
            and other.x2 <= self.x2
            and self.y1 <= other.y1
            and other.y2 <= self.y2
        )

    def overlaps(self, other: "Block") -> bool:
        return (
            self.x1 < other.x2
            and other.x1 < self.x2
            and self.y1 < other.y2
            and other.y1 < self.y2
        )


@dataclass(frozen=True)
class Rect:
    """Query rectangle (no label, may be any subwindow of the square)."""

    x1: Fraction
    x2: Fraction
    y1: Fraction
    y2: Fraction


UNIT_RECT = Rect(ZERO, ONE, ZERO, ONE)


@dataclass(frozen=True)
class Cut:
    orientation: str  # HORIZONTAL or VERTICAL
    coordinate: Fraction  # the fixed axis value
    lo: Fraction  # extent along the cut
    hi: Fraction


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[Block, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.blocks, key=lambda b: (b.x1, b.y1)))
        object.__setattr__(self, "blocks", ordered)
        total = sum((b.area for b in ordered), ZERO)
        if total != ONE:
            raise PartitionError(f"block areas sum to {total}, not 1")
        for i, a in enumerate(ordered):
            for b in ordered[i + 1 :]:
                if a.overlaps(b):
                    raise PartitionError(f"blocks overlap: {a} / {b}")
        labels = [b.label for b in ordered if b.label is not None]
        if labels and len(set(labels)) != len(labels):
            raise PartitionError("duplicate block labels")

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def arity(self) -> int:
        return len(self.blocks)

    def labels(self) -> tuple[int | None, ...]:
        return tuple(b.label for b in self.blocks)

    def is_standard(self) -> bool:
        labels = sorted(b.label for b in self.blocks if b.label is not None)
        return labels == list(range(1, len(self.blocks) + 1))

    def unlabeled(self) -> "BlockPartition":
        return BlockPartition(tuple(replace(b, label=None) for b in self.blocks))

    def with_lex_labels(self) -> "BlockPartition":
        return BlockPartition(
            tuple(replace(b, label=i + 1) for i, b in enumerate(self.blocks))
        )

    def block_with_label(self, label: int) -> Block:
        for b in self.blocks:
            if b.label == label:
                return b
        raise KeyError(f"no block labeled {label}")

    def key(self) -> tuple:
        """Canonical hashable key (coordinates and labels)."""
        return tuple(
            (b.x1, b.x2, b.y1, b.y2, b.label) for b in self.blocks
        )


UNIT_SQUARE = BlockPartition((Block(ZERO, ONE, ZERO, ONE, label=1),))


def unit_square(label: int | None = 1) -> BlockPartition:
    return BlockPartition((Block(ZERO, ONE, ZERO, ONE, label=label),))


def _scale_into(b: Block, window: Rect | Block) -> Block:
    """Affinely map a block of the unit square into the window."""
    wx, wy = window.x2 - window.x1, window.y2 - window.y1
    return Block(
        window.x1 + b.x1 * wx,
        window.x1 + b.x2 * wx,
        window.y1 + b.y1 * wy,
        window.y1 + b.y2 * wy,
        b.label,
    )


def hjoin(p: BlockPartition, q: BlockPartition) -> BlockPartition:
    """Place p in the west half and q in the east half (labels kept)."""
    west = Rect(ZERO, HALF, ZERO, ONE)
    east = Rect(HALF, ONE, ZERO, ONE)
    return BlockPartition(
        tuple(_scale_into(b, west) for b in p.blocks)
        + tuple(_scale_into(b, east) for b in q.blocks)
    )


def vjoin(p: BlockPartition, q: BlockPartition) -> BlockPartition:
    """Place p in the south half and q in the north half (labels kept)."""
    south = Rect(ZERO, ONE, ZERO, HALF)
    north = Rect(ZERO, ONE, HALF, ONE)
    return BlockPartition(
        tuple(_scale_into(b, south) for b in p.blocks)
        + tuple(_scale_into(b, north) for b in q.blocks)
    )


def realize(t: Tree) -> BlockPartition:
    """Geometric realization: h joins east, v joins north, labels from leaves."""
    if is_leaf(t):
        return unit_square(label=t)
    left, right = realize(t[1]), realize(t[2])
    return hjoin(left, right) if t[0] == trees.H else vjoin(left, right)


def compose_partition(p: BlockPartition, i: int, q: BlockPartition) -> BlockPartition:
    """Replace the block labeled i (or the i-th in sorted order when
    unlabeled) by q scaled into it, renumbering labels operadically."""
    m, n = len(p), len(q)
    if not 1 <= i <= m:
        raise IndexError(f"block ordinal {i} out of range 1..{m}")
    if all(b.label is not None for b in p.blocks):
        target = p.block_with_label(i)
    else:
        target = p.blocks[i - 1]
    out: list[Block] = []
    for b in p.blocks:
        if b is target:
            continue
        if b.label is None:
            out.append(b)
        else:
            shift = n - 1 if b.label > i else 0
            out.append(replace(b, label=b.label + shift))
    for b in q.blocks:
        scaled = _scale_into(b, target)
        if scaled.label is not None:
            scaled = replace(scaled, label=i + scaled.label - 1)
        out.append(scaled)
    return BlockPartition(tuple(out))


def build_dyadic(choices: Sequence[tuple[int, str]]) -> BlockPartition:
    """Start from the unit square and perform exact bisections.

    Each choice is (block ordinal in the current sorted order, axis),
    axis "x" bisecting by a vertical line and "y" by a horizontal one.
    """
    part = unit_square(label=None)
    for step, (ordinal, axis) in enumerate(choices):
        if not 1 <= ordinal <= len(part):
            raise IndexError(f"step {step}: ordinal {ordinal} out of range 1..{len(part)}")
        if axis not in (X_AXIS, Y_AXIS):
            raise ValueError(f"step {step}: axis must be 'x' or 'y'")
        part = bisect(part, ordinal, axis)
    return part


def bisect(p: BlockPartition, ordinal: int, axis: str) -> BlockPartition:
    b = p.blocks[ordinal - 1]
    rest = tuple(x for k, x in enumerate(p.blocks) if k != ordinal - 1)
    if axis == X_AXIS:
        c = (b.x1 + b.x2) / 2
        halves = (Block(b.x1, c, b.y1, b.y2), Block(c, b.x2, b.y1, b.y2))
    else:
        c = (b.y1 + b.y2) / 2
        halves = (Block(b.x1, b.x2, b.y1, c), Block(b.x1, b.x2, c, b.y2))
    return BlockPartition(rest + halves)


# ---------------------------------------------------------------------------
# Cuts, slices, block classification
# ---------------------------------------------------------------------------

def _merge_intervals(intervals: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    merged: list[tuple[Fraction, Fraction]] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def _intersect_intervals(a, b) -> list[tuple[Fraction, Fraction]]:
    out = []
    for lo1, hi1 in a:
        for lo2, hi2 in b:
            lo, hi = max(lo1, lo2), min(hi1, hi2)
            if lo < hi:
                out.append((lo, hi))
    return out


def cuts(p: BlockPartition) -> frozenset[Cut]:
    """Maximal open segments separating the blocks."""
    out: set[Cut] = set()
    for orientation in (VERTICAL, HORIZONTAL):
        if orientation == VERTICAL:
            coords = {b.x1 for b in p.blocks} | {b.x2 for b in p.blocks}
            lower = lambda b, c: b.x2 == c
            upper = lambda b, c: b.x1 == c
            span = lambda b: (b.y1, b.y2)
        else:
            coords = {b.y1 for b in p.blocks} | {b.y2 for b in p.blocks}
            lower = lambda b, c: b.y2 == c
            upper = lambda b, c: b.y1 == c
            span = lambda b: (b.x1, b.x2)
        for c in coords:
            if c == ZERO or c == ONE:
                continue
            below = _merge_intervals([span(b) for b in p.blocks if lower(b, c)])
            above = _merge_intervals([span(b) for b in p.blocks if upper(b, c)])
            for lo, hi in _intersect_intervals(below, above):
                out.add(Cut(orientation, c, lo, hi))
    _check_cut_consistency(p, out)
    return frozenset(out)


def _check_cut_consistency(p: BlockPartition, found: set[Cut]) -> None:
    # Every internal block edge must lie under some cut on both sides;
    # area + disjointness already guarantee coverage, so it suffices that
    # each block side strictly inside the square is matched by a cut.
    for b in p.blocks:
        sides = [
            (VERTICAL, b.x1, b.y1, b.y2),
            (VERTICAL, b.x2, b.y1, b.y2),
            (HORIZONTAL, b.y1, b.x1, b.x2),
            (HORIZONTAL, b.y2, b.x1, b.x2),
        ]
        for orientation, c, lo, hi in sides:
            if c == ZERO or c == ONE:
                continue
            covered = _merge_intervals(
                [
                    (cut.lo, cut.hi)
                    for cut in found
                    if cut.orientation == orientation and cut.coordinate == c
                ]
            )
            if not any(seg_lo <= lo and hi <= seg_hi for seg_lo, seg_hi in covered):
                raise PartitionError(f"inconsistent partition: side {c} of {b} uncovered")


def is_subrectangle(p: BlockPartition, r: Rect) -> int | None:
    """Arity of r as a disjoint union of blocks of p, or None."""
    inside = [b for b in p.blocks if r.x1 <= b.x1 and b.x2 <= r.x2 and r.y1 <= b.y1 and b.y2 <= r.y2]
    area = sum((b.area for b in inside), ZERO)
    if area != (r.x2 - r.x1) * (r.y2 - r.y1):
        return None
    return len(inside)


def _blocks_in(p: BlockPartition, r: Rect) -> list[Block]:
    return [
        b
        for b in p.blocks
        if r.x1 <= b.x1 and b.x2 <= r.x2 and r.y1 <= b.y1 and b.y2 <= r.y2
    ]


def main_cuts(p: BlockPartition, r: Rect = UNIT_RECT) -> frozenset[str]:
    """Which exact bisections of r are unions of cuts of p."""
    if is_subrectangle(p, r) is None:
        raise PartitionError(f"{r} is not a subrectangle of the partition")
    out = set()
    mid_x = (r.x1 + r.x2) / 2
    mid_y = (r.y1 + r.y2) / 2
    inside = _blocks_in(p, r)
    if not any(b.x1 < mid_x < b.x2 for b in inside):
        out.add(VERTICAL)
    if not any(b.y1 < mid_y < b.y2 for b in inside):
        out.add(HORIZONTAL)
    return frozenset(out)


def primary_cuts_and_slices(
    p: BlockPartition, r: Rect, orientation: str
) -> tuple[tuple[Fraction, ...], tuple[Rect, ...]]:
    """Primary cuts of r parallel to its main cut, and the slices between.

    The main cut must exist in the requested orientation; cuts come back in
    natural order with the sides of r as implicit outer boundaries.
    """
    if orientation not in (HORIZONTAL, VERTICAL):
        raise ValueError("orientation must be 'horizontal' or 'vertical'")
    if orientation not in main_cuts(p, r):
        raise PartitionError(f"no {orientation} main cut in {r}")

    def collect(window: Rect) -> list[Fraction]:
        if orientation not in main_cuts(p, window):
            return []
        if orientation == HORIZONTAL:
            mid = (window.y1 + window.y2) / 2
            lowr = Rect(window.x1, window.x2, window.y1, mid)
            highr = Rect(window.x1, window.x2, mid, window.y2)
        else:
            mid = (window.x1 + window.x2) / 2
            lowr = Rect(window.x1, mid, window.y1, window.y2)
            highr = Rect(mid, window.x2, window.y1, window.y2)
        return collect(lowr) + [mid] + collect(highr)

    cut_coords = tuple(collect(r))
    if orientation == HORIZONTAL:
        bounds = (r.y1,) + cut_coords + (r.y2,)
        slices = tuple(
            Rect(r.x1, r.x2, bounds[j], bounds[j + 1]) for j in range(len(bounds) - 1)
        )
    else:
        bounds = (r.x1,) + cut_coords + (r.x2,)
        slices = tuple(
            Rect(bounds[j], bounds[j + 1], r.y1, r.y2) for j in range(len(bounds) - 1)
        )
    return cut_coords, slices


INTERIOR = "interior"
BORDER = "border"


def classify_blocks(p: BlockPartition) -> dict[Block, str]:
    return {b: (BORDER if b.touches_boundary() else INTERIOR) for b in p.blocks}


def interior_labels(p: BlockPartition) -> frozenset[int]:
    return frozenset(
        b.label for b in p.blocks if b.label is not None and not b.touches_boundary()
    )


def boundary_order(p: BlockPartition) -> tuple[tuple[int, ...], ...]:
    """Label sequences along the south, north, west, east sides."""
    south = sorted((b for b in p.blocks if b.y1 == ZERO), key=lambda b: b.x1)
    north = sorted((b for b in p.blocks if b.y2 == ONE), key=lambda b: b.x1)
    west = sorted((b for b in p.blocks if b.x1 == ZERO), key=lambda b: b.y1)
    east = sorted((b for b in p.blocks if b.x2 == ONE), key=lambda b: b.y1)
    return tuple(
        tuple(b.label for b in side) for side in (south, north, west, east)
    )


# ---------------------------------------------------------------------------
# Tree preimages
# ---------------------------------------------------------------------------

def fiber(p: BlockPartition) -> tuple[Tree, ...]:
    """All binary monomials realizing p, labels carried from the blocks.

    Recursive main-cut decomposition; a window with both main cuts yields
    trees from both splits (deduplicated, though the root operations differ).
    """
    if any(b.label is None for b in p.blocks):
        p = p.with_lex_labels()

    def go(window: Rect, blocks: tuple[Block, ...]) -> tuple[Tree, ...]:
        if len(blocks) == 1:
            return (blocks[0].label,)
        results: dict[bytes, Tree] = {}
        mid_x = (window.x1 + window.x2) / 2
        mid_y = (window.y1 + window.y2) / 2
        if not any(b.x1 < mid_x < b.x2 for b in blocks):
            west = tuple(b for b in blocks if b.x2 <= mid_x)
            east = tuple(b for b in blocks if b.x1 >= mid_x)
            for left in go(Rect(window.x1, mid_x, window.y1, window.y2), west):
                for right in go(Rect(mid_x, window.x2, window.y1, window.y2), east):
                    tree = (trees.H, left, right)
                    results[trees.canonical_key(tree)] = tree
        if not any(b.y1 < mid_y < b.y2 for b in blocks):
            south = tuple(b for b in blocks if b.y2 <= mid_y)
            north = tuple(b for b in blocks if b.y1 >= mid_y)
            for bottom in go(Rect(window.x1, window.x2, window.y1, mid_y), south):
                for top in go(Rect(window.x1, window.x2, mid_y, window.y2), north):
                    tree = (trees.V, bottom, top)
                    results[trees.canonical_key(tree)] = tree
        if not results:
            raise NotDyadicError(f"window {window} admits no main cut")
        return tuple(results.values())

    return go(UNIT_RECT, p.blocks)


def is_dyadic(p: BlockPartition) -> bool:
    try:
        fiber(p)
    except NotDyadicError:
        return False
    return True


# ---------------------------------------------------------------------------
# Dihedral action on partitions
# ---------------------------------------------------------------------------

def transform_partition(p: BlockPartition, g: DihedralElement) -> BlockPartition:
    """Geometric counterpart of the symmetry action on monomials."""

    def move(b: Block) -> Block:
        x1, x2, y1, y2 = b.x1, b.x2, b.y1, b.y2
        if g.flip_h:
            x1, x2 = ONE - x2, ONE - x1
        if g.flip_v:
            y1, y2 = ONE - y2, ONE - y1
        if g.transpose:
            x1, x2, y1, y2 = y1, y2, x1, x2
        return Block(x1, x2, y1, y2, b.label)

    return BlockPartition(tuple(move(b) for b in p.blocks))


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def format_partition(p: BlockPartition) -> str:
    lines = []
    for b in p.blocks:
        coords = " ".join(format_dyadic(c) for c in (b.x1, b.x2, b.y1, b.y2))
        label = "-" if b.label is None else str(b.label)
        lines.append(f"{coords} {label}")
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> BlockPartition:
    blocks = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise PartitionError(f"line {lineno}: expected 'x1 x2 y1 y2 label'")
        x1, x2, y1, y2 = (parse_dyadic(s) for s in parts[:4])
        label = None if parts[4] == "-" else int(parts[4])
        blocks.append(Block(x1, x2, y1, y2, label))
    return BlockPartition(tuple(blocks))


# ---------------------------------------------------------------------------
# Enumeration of dyadic partitions
# ---------------------------------------------------------------------------

def enumerate_partitions(n: int, limit: int = 8) -> Iterator[BlockPartition]:
    """All distinct unlabeled dyadic partitions with n blocks (BFS over
    bisection sequences, deduplicated by coordinates)."""
    if n < 1:
        raise ValueError("arity must be >= 1")
    if n > limit:
        raise ValueError(f"arity {n} exceeds the enumeration limit {limit}")
    level = {unit_square(label=None).key(): unit_square(label=None)}
    for _ in range(n - 1):
        nxt: dict[tuple, BlockPartition] = {}
        for part in level.values():
            for ordinal in range(1, len(part) + 1):
                for axis in (X_AXIS, Y_AXIS):
                    q = bisect(part, ordinal, axis)
                    nxt[q.key()] = q
        level = nxt
    for key in sorted(level):
        yield level[key]
