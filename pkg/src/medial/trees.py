"""Tree monomials over two binary operations.

A monomial is a complete rooted binary plane tree whose internal nodes carry
one of two operation symbols: ``h`` (horizontal) or ``v`` (vertical).  Leaves
carry 1-based argument indices.  Trees are plain nested tuples so they hash
and compare fast in the rewriting closures:

    leaf       -> int (the argument index)
    internal   -> (op, left, right) with op in {"h", "v"}

A *standard* monomial has leaf labels forming a permutation of 1..n.  The
shape of a monomial is the same tree with all labels set to 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Mapping

H = "h"
V = "v"
OPS = (H, V)

Tree = int | tuple
Position = tuple[int, ...]


class MonomialSyntaxError(ValueError):
    """Raised on malformed monomial text; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def opposite(op: str) -> str:
    return V if op == H else H


def is_leaf(t: Tree) -> bool:
    return isinstance(t, int)


def arity(t: Tree) -> int:
    if is_leaf(t):
        return 1
    return arity(t[1]) + arity(t[2])


def leaf_labels(t: Tree) -> tuple[int, ...]:
    """Leaf labels read left to right."""
    out: list[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if is_leaf(node):
            out.append(node)
        else:
            stack.append(node[2])
            stack.append(node[1])
    return tuple(out)


def is_standard(t: Tree) -> bool:
    labels = leaf_labels(t)
    return sorted(labels) == list(range(1, len(labels) + 1))


def strip_labels(t: Tree) -> Tree:
    """Forget the leaf permutation (every label becomes 0)."""
    if is_leaf(t):
        return 0
    return (t[0], strip_labels(t[1]), strip_labels(t[2]))


def with_identity_labels(t: Tree) -> Tree:
    """Relabel leaves 1..n left to right."""
    counter = iter(range(1, arity(t) + 1))

    def go(node: Tree) -> Tree:
        if is_leaf(node):
            return next(counter)
        return (node[0], go(node[1]), go(node[2]))

    return go(t)


def relabel(t: Tree, mapping: Mapping[int, int]) -> Tree:
    """Apply a label substitution to every leaf (identity where unmapped)."""
    if is_leaf(t):
        return mapping.get(t, t)
    return (t[0], relabel(t[1], mapping), relabel(t[2], mapping))


# ---------------------------------------------------------------------------
# Text grammar:  expr := ident | "(" expr ("h"|"v") expr ")"
# ---------------------------------------------------------------------------

def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            tokens.append((c, c, i))
            i += 1
        elif c.isalnum() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("word", text[i:j], i))
            i = j
        else:
            raise MonomialSyntaxError(f"unexpected character {c!r}", i)
    return tokens


def parse_monomial(
    text: str,
    names: dict[str, int] | None = None,
    require_standard: bool = True,
) -> Tree:
    """Parse monomial text into a tree.

    Identifiers of the form ``x<k>`` map to argument index k; any other
    identifier is assigned the next unused index in first-occurrence order.
    Passing a ``names`` dict shares one assignment across several parses
    (needed to state a relation whose two sides permute the same letters);
    the dict is updated in place.
    """
    tokens = _tokenize(text)
    pos = 0
    assigned: dict[str, int] = {} if names is None else names
    seen_here: set[str] = set()

    def next_index() -> int:
        used = set(assigned.values())
        k = 1
        while k in used:
            k += 1
        return k

    def leaf_for(word: str, offset: int) -> int:
        if require_standard and word in seen_here:
            raise MonomialSyntaxError(f"duplicate leaf identifier {word!r}", offset)
        seen_here.add(word)
        if word in assigned:
            return assigned[word]
        if word.startswith("x") and word[1:].isdigit():
            idx = int(word[1:])
            if idx < 1:
                raise MonomialSyntaxError("leaf indices are 1-based", offset)
        else:
            idx = next_index()
        if require_standard and idx in assigned.values():
            raise MonomialSyntaxError(f"leaf index {idx} already used", offset)
        assigned[word] = idx
        return idx

    def parse_expr() -> Tree:
        nonlocal pos
        if pos >= len(tokens):
            raise MonomialSyntaxError("unexpected end of input", len(text))
        kind, value, offset = tokens[pos]
        if kind == "word":
            pos += 1
            return leaf_for(value, offset)
        if kind == "(":
            pos += 1
            left = parse_expr()
            if pos >= len(tokens):
                raise MonomialSyntaxError("unexpected end of input", len(text))
            kind2, op, off2 = tokens[pos]
            if kind2 != "word" or op not in OPS:
                raise MonomialSyntaxError("expected operation 'h' or 'v'", off2)
            pos += 1
            right = parse_expr()
            if pos >= len(tokens):
                raise MonomialSyntaxError("unexpected end of input", len(text))
            kind3, _, off3 = tokens[pos]
            if kind3 != ")":
                raise MonomialSyntaxError("expected ')'", off3)
            pos += 1
            return (op, left, right)
        raise MonomialSyntaxError(f"unexpected token {value!r}", offset)

    tree = parse_expr()
    if pos != len(tokens):
        raise MonomialSyntaxError(f"trailing input {tokens[pos][1]!r}", tokens[pos][2])
    if require_standard and not is_standard(tree):
        raise MonomialSyntaxError("leaf labels do not form a permutation of 1..n", 0)
    return tree


def format_monomial(t: Tree, names: Mapping[int, str] | None = None) -> str:
    """Pretty-print with every internal node parenthesized; reparses equal."""
    if is_leaf(t):
        return names[t] if names else f"x{t}"
    return f"({format_monomial(t[1], names)} {t[0]} {format_monomial(t[2], names)})"


def to_word(t: Tree) -> str:
    """Functional notation for the underlying shape.

    Variables are renumbered x1..xn left to right (identity permutation);
    H/V name the two operations.
    """
    counter = iter(range(1, arity(t) + 1))

    def go(node: Tree) -> str:
        if is_leaf(node):
            return f"x{next(counter)}"
        return f"{node[0].upper()}({go(node[1])},{go(node[2])})"

    return go(t)


# ---------------------------------------------------------------------------
# Positions
# ---------------------------------------------------------------------------

def subtree_at(t: Tree, position: Position) -> Tree:
    node = t
    for step in position:
        if is_leaf(node):
            raise IndexError(f"position {position} runs past a leaf")
        node = node[1 + step]
    return node


def replace_at(t: Tree, position: Position, replacement: Tree) -> Tree:
    if not position:
        return replacement
    if is_leaf(t):
        raise IndexError(f"position {position} runs past a leaf")
    step, rest = position[0], position[1:]
    if step == 0:
        return (t[0], replace_at(t[1], rest, replacement), t[2])
    return (t[0], t[1], replace_at(t[2], rest, replacement))


def positions(t: Tree) -> Iterator[tuple[Position, Tree]]:
    """All (position, subtree) pairs in preorder."""
    stack: list[tuple[Position, Tree]] = [((), t)]
    while stack:
        pos, node = stack.pop()
        yield pos, node
        if not is_leaf(node):
            stack.append((pos + (1,), node[2]))
            stack.append((pos + (0,), node[1]))


# ---------------------------------------------------------------------------
# Operad structure
# ---------------------------------------------------------------------------

def partial_compose(t: Tree, i: int, u: Tree) -> Tree:
    """Substitute u for the i-th argument of t, with standard renumbering.

    Labels j > i of t shift up by arity(u)-1; labels of u shift up by i-1.
    """
    m, n = arity(t), arity(u)
    if not 1 <= i <= m:
        raise IndexError(f"argument index {i} out of range 1..{m}")

    def go(node: Tree) -> Tree:
        if is_leaf(node):
            if node == i:
                return relabel(u, {k: i + k - 1 for k in leaf_labels(u)})
            return node + n - 1 if node > i else node
        return (node[0], go(node[1]), go(node[2]))

    return go(t)


# ---------------------------------------------------------------------------
# Dihedral symmetry action
# ---------------------------------------------------------------------------

def _flip(t: Tree, op: str) -> Tree:
    if is_leaf(t):
        return t
    left, right = _flip(t[1], op), _flip(t[2], op)
    if t[0] == op:
        left, right = right, left
    return (t[0], left, right)


def _transpose(t: Tree) -> Tree:
    if is_leaf(t):
        return t
    return (opposite(t[0]), _transpose(t[1]), _transpose(t[2]))


@dataclass(frozen=True)
class DihedralElement:
    """Symmetry of the square acting on tree monomials.

    Written in the normal form transpose^t . fliph^a . flipv^b; ``apply``
    performs the flips first, then the transposition.
    """

    transpose: bool = False
    flip_h: bool = False
    flip_v: bool = False

    def apply(self, t: Tree) -> Tree:
        if self.flip_h:
            t = _flip(t, H)
        if self.flip_v:
            t = _flip(t, V)
        if self.transpose:
            t = _transpose(t)
        return t

    def compose(self, other: "DihedralElement") -> "DihedralElement":
        """Element acting as self after other: (self*other).apply = self.apply . other.apply."""
        # Moving other's transpose across self's flips swaps the flip axes.
        a, b = self.flip_h, self.flip_v
        if other.transpose:
            a, b = b, a
        return DihedralElement(
            transpose=self.transpose ^ other.transpose,
            flip_h=a ^ other.flip_h,
            flip_v=b ^ other.flip_v,
        )

    @property
    def is_identity(self) -> bool:
        return not (self.transpose or self.flip_h or self.flip_v)


IDENTITY = DihedralElement()
FLIP_H = DihedralElement(flip_h=True)
FLIP_V = DihedralElement(flip_v=True)
TRANSPOSE = DihedralElement(transpose=True)


def dihedral_elements() -> tuple[DihedralElement, ...]:
    """The eight symmetries of the square."""
    return tuple(
        DihedralElement(transpose=t, flip_h=a, flip_v=b)
        for t in (False, True)
        for a in (False, True)
        for b in (False, True)
    )


def apply_symmetry(t: Tree, g: DihedralElement) -> Tree:
    return g.apply(t)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def catalan(n: int) -> int:
    out = 1
    for k in range(n):
        out = out * 2 * (2 * k + 1) // (k + 2)
    return out


def shape_count(n: int) -> int:
    """Number of operation-labeled binary shapes with n leaves."""
    return 2 ** (n - 1) * catalan(n - 1)


def enumerate_shapes(n: int, limit: int = 10) -> Iterator[Tree]:
    """All operation-labeled shapes with identity leaf labels, in a fixed order."""
    if n < 1:
        raise ValueError("arity must be >= 1")
    if n > limit:
        raise ValueError(f"arity {n} exceeds the enumeration limit {limit}")

    def go(size: int, offset: int) -> Iterator[Tree]:
        if size == 1:
            yield offset + 1
            return
        for split in range(1, size):
            for left in go(split, offset):
                for right in go(size - split, offset + split):
                    yield (H, left, right)
                    yield (V, left, right)

    return go(n, 0)


def random_shape(n: int, rng: random.Random) -> Tree:
    """Uniformly random split pattern with random operation labels."""

    def go(size: int, offset: int) -> Tree:
        if size == 1:
            return offset + 1
        split = rng.randint(1, size - 1)
        return (rng.choice(OPS), go(split, offset), go(size - split, offset + split))

    return go(n, 0)


# ---------------------------------------------------------------------------
# Canonical key
# ---------------------------------------------------------------------------

def canonical_key(t: Tree) -> bytes:
    """Prefix-free preorder encoding; injective on trees."""
    out = bytearray()

    def emit_varint(k: int) -> None:
        while k >= 0x80:
            out.append((k & 0x7F) | 0x80)
            k >>= 7
        out.append(k)

    def go(node: Tree) -> None:
        if is_leaf(node):
            out.append(0x00)
            emit_varint(node)
        else:
            out.append(0x01 if node[0] == H else 0x02)
            go(node[1])
            go(node[2])

    go(t)
    return bytes(out)
