"""Search over associativity classes.

One interchange application, performed on any binary representative of an
alternating tree, descends to a local move on the alternating tree itself:
pick a node, two adjacent children both rooted at the opposite operation,
and a two-way split of each child's list.  Searching over alternating trees
with these moves explores exactly the joint rewrite closure while skipping
the associativity churn, which keeps the big equivalence checks tractable.

Every quotient move expands back into explicit binary steps (associativity
rotations around a single interchange), so search results are delivered as
ordinary replayable certificates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .assoc import (
    AltTree,
    alt_is_leaf,
    alt_leaf_labels,
    alt_strip,
    right_comb,
    to_alternating,
)
from .rewrite import (
    ALL_FAMILIES,
    BACKWARD,
    DEFAULT_BUDGET,
    FORWARD,
    INTERCHANGE,
    Certificate,
    RewriteStep,
    apply_redex,
    assoc_path,
    certificate_from_path,
    comb_steps,
)
from .trees import Position, Tree, V, arity, leaf_labels, opposite, relabel

# A move is (path to the node, child index i, split of child i, split of
# child i+1); the node's operation determines the interchange direction.
Move = tuple[Position, int, int, int]


def _group(op: str, parts: tuple[AltTree, ...]) -> AltTree:
    return parts[0] if len(parts) == 1 else (op,) + parts


def _join(op: str, x: AltTree, y: AltTree) -> AltTree:
    xs = x[1:] if not alt_is_leaf(x) and x[0] == op else (x,)
    ys = y[1:] if not alt_is_leaf(y) and y[0] == op else (y,)
    return (op,) + xs + ys


def _node_move_result(node: AltTree, i: int, sa: int, sb: int) -> AltTree:
    """Apply the move at this node; may collapse to a single child."""
    op = node[0]
    opp = opposite(op)
    kids = node[1:]
    A, B = kids[i], kids[i + 1]
    p = _group(opp, A[1 : 1 + sa])
    q = _group(opp, A[1 + sa :])
    r = _group(opp, B[1 : 1 + sb])
    s = _group(opp, B[1 + sb :])
    new_child = (opp, _join(op, p, r), _join(op, q, s))
    rest = kids[:i] + (new_child,) + kids[i + 2 :]
    if len(rest) == 1:
        return rest[0]
    return (op,) + rest


def _apply_at_path(tree: AltTree, path: Position, i: int, sa: int, sb: int) -> AltTree:
    if not path:
        return _node_move_result(tree, i, sa, sb)
    idx = path[0]
    kids = list(tree[1:])
    sub = _apply_at_path(kids[idx], path[1:], i, sa, sb)
    if not alt_is_leaf(sub) and sub[0] == tree[0]:
        # The child collapsed to a node carrying our own operation: splice.
        kids[idx : idx + 1] = list(sub[1:])
    else:
        kids[idx] = sub
    return (tree[0],) + tuple(kids)


def apply_move(tree: AltTree, move: Move) -> AltTree:
    path, i, sa, sb = move
    return _apply_at_path(tree, path, i, sa, sb)


def alt_successors(tree: AltTree) -> Iterator[tuple[Move, AltTree]]:
    """All single-interchange neighbours of an alternating tree."""
    stack: list[tuple[Position, AltTree]] = [((), tree)]
    while stack:
        path, node = stack.pop()
        if alt_is_leaf(node):
            continue
        opp = opposite(node[0])
        kids = node[1:]
        for j, child in enumerate(kids):
            if not alt_is_leaf(child):
                stack.append((path + (j,), child))
        for i in range(len(kids) - 1):
            A, B = kids[i], kids[i + 1]
            if alt_is_leaf(A) or alt_is_leaf(B):
                continue
            if A[0] != opp or B[0] != opp:
                continue
            for sa in range(1, len(A) - 1):
                for sb in range(1, len(B) - 1):
                    move = (path, i, sa, sb)
                    yield move, _apply_at_path(tree, path, i, sa, sb)


# ---------------------------------------------------------------------------
# Expansion of a quotient move into binary steps
# ---------------------------------------------------------------------------

def _comb_chain(op: str, parts: list[Tree]) -> Tree:
    out = parts[-1]
    for part in reversed(parts[:-1]):
        out = (op, part, out)
    return out


def _split_rep(op: str, child: AltTree, split: int) -> Tree:
    """Binary representative of ``child`` whose root splits its list at
    ``split``; children are combed canonically below the split."""
    kids = child[1:]
    left = _comb_chain(op, [right_comb(c) for c in kids[:split]])
    right = _comb_chain(op, [right_comb(c) for c in kids[split:]])
    return (op, left, right)


def _rep_with_redex(tree: AltTree, move: Move) -> tuple[Tree, Position]:
    """A binary representative in which the move is one interchange redex."""
    path, i, sa, sb = move

    def go(node: AltTree, depth: int) -> tuple[Tree, Position]:
        op = node[0]
        kids = node[1:]
        if depth == len(path):
            opp = opposite(op)
            parts = [right_comb(c) for c in kids[: i]]
            redex = (op, _split_rep(opp, kids[i], sa), _split_rep(opp, kids[i + 1], sb))
            parts.append(redex)
            parts.extend(right_comb(c) for c in kids[i + 2 :])
            rel = (1,) * i if i == len(parts) - 1 else (1,) * i + (0,)
            if len(parts) == 1:
                rel = ()
            return _comb_chain(op, parts), rel
        idx = path[depth]
        parts = [right_comb(c) for c in kids]
        sub, sub_pos = go(kids[idx], depth + 1)
        parts[idx] = sub
        rel = (1,) * idx if idx == len(parts) - 1 else (1,) * idx + (0,)
        return _comb_chain(op, parts), rel + sub_pos

    return go(tree, 0)


def expand_move(u: AltTree, move: Move) -> tuple[tuple[RewriteStep, ...], AltTree]:
    """Binary steps from right_comb(u) to right_comb(v) realizing the move."""
    rep, pos = _rep_with_redex(u, move)
    node = rep
    for p in pos:
        node = node[1 + p]
    direction = FORWARD if node[0] == V else BACKWARD
    step = RewriteStep(INTERCHANGE, direction, pos)
    after = apply_redex(rep, step)
    v = apply_move(u, move)
    steps = (
        assoc_path(right_comb(u), rep)
        + (step,)
        + assoc_path(after, right_comb(v))
    )
    return steps, v


def expand_path(t_start: Tree, moves: list[tuple[AltTree, Move]]) -> tuple[RewriteStep, ...]:
    """Binary steps from ``t_start`` through a chain of quotient moves.

    ``moves`` lists (state, move applied at that state) in order.
    """
    _, start_rot = comb_steps(t_start)
    steps = list(start_rot)
    for state, move in moves:
        seg, _ = expand_move(state, move)
        steps.extend(seg)
    return tuple(steps)


# ---------------------------------------------------------------------------
# Equivalence search (bidirectional)
# ---------------------------------------------------------------------------

@dataclass
class EquivalenceResult:
    certificate: Certificate | None
    proved_distinct: bool
    expanded: int

    @property
    def found(self) -> bool:
        return self.certificate is not None

    @property
    def decided(self) -> bool:
        return self.found or self.proved_distinct


def _trace(parents: dict, state: AltTree) -> list[tuple[AltTree, Move]]:
    """Chain of (state, move) pairs from the search root to ``state``."""
    chain: list[tuple[AltTree, Move]] = []
    while True:
        prev = parents[state]
        if prev is None:
            break
        prev_state, move = prev
        chain.append((prev_state, move))
        state = prev_state
    chain.reverse()
    return chain


def check_equivalence(
    t1: Tree, t2: Tree, budget: int = DEFAULT_BUDGET
) -> EquivalenceResult:
    """Bidirectional search for a rewrite proof that t1 and t2 are equal.

    Returns a replayable certificate on success.  On failure the result
    distinguishes a definitive negative (both closures exhausted, disjoint)
    from plain budget exhaustion.
    """
    if arity(t1) != arity(t2):
        raise ValueError("monomials must have equal arity")
    if sorted(leaf_labels(t1)) != sorted(leaf_labels(t2)):
        raise ValueError("monomials must use the same arguments")

    u1, u2 = to_alternating(t1), to_alternating(t2)

    def build(meet: AltTree, fwd_parents: dict, bwd_parents: dict) -> Certificate:
        fwd_steps = expand_path(t1, _trace(fwd_parents, meet))
        bwd_steps = expand_path(t2, _trace(bwd_parents, meet))
        total = fwd_steps + tuple(s.inverted() for s in reversed(bwd_steps))
        cert = certificate_from_path(t1, total)
        assert cert.final == t2
        return cert

    if u1 == u2:
        steps = assoc_path(t1, t2)
        return EquivalenceResult(Certificate(t1, steps, t2), False, 0)

    sides = [
        {"parents": {u1: None}, "queue": deque([u1])},
        {"parents": {u2: None}, "queue": deque([u2])},
    ]
    expanded = 0
    while sides[0]["queue"] or sides[1]["queue"]:
        side = 0 if len(sides[0]["queue"]) <= len(sides[1]["queue"]) else 1
        if not sides[side]["queue"]:
            side = 1 - side
        mine, other = sides[side], sides[1 - side]
        for _ in range(len(mine["queue"])):
            if expanded >= budget:
                return EquivalenceResult(None, False, expanded)
            state = mine["queue"].popleft()
            expanded += 1
            for move, nxt in alt_successors(state):
                if nxt in mine["parents"]:
                    continue
                mine["parents"][nxt] = (state, move)
                if nxt in other["parents"]:
                    fwd = sides[0]["parents"]
                    bwd = sides[1]["parents"]
                    return EquivalenceResult(build(nxt, fwd, bwd), False, expanded)
                mine["queue"].append(nxt)
    return EquivalenceResult(None, True, expanded)


# ---------------------------------------------------------------------------
# Commutation discovery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CommutationWitness:
    monomial: Tree
    permutation: tuple[int, ...]  # image of argument i at index i-1
    certificate: Certificate

    @property
    def moved_points(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, img in enumerate(self.permutation) if img != i + 1)

    @property
    def is_transposition(self) -> bool:
        moved = self.moved_points
        return len(moved) == 2

    @property
    def transposed_pair(self) -> tuple[int, int] | None:
        return self.moved_points if self.is_transposition else None


@dataclass
class CommutationScan:
    witnesses: tuple[CommutationWitness, ...]
    exhausted: bool
    expanded: int
    class_size: int

    def __iter__(self):
        return iter(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)


def find_commutations(
    t: Tree,
    budget: int = DEFAULT_BUDGET,
    families: frozenset[str] | None = None,
) -> CommutationScan:
    """Scan the rewrite closure of t for same-shape relabelings.

    Every member whose operation-labeled shape equals t's shape is t with
    its arguments permuted; each distinct nonidentity permutation is
    reported once, with a certificate from a shortest interchange path.
    Passing a proper subset of rule families falls back to a plain binary
    closure scan under those rules.
    """
    if families is not None and frozenset(families) != ALL_FAMILIES:
        return _find_commutations_binary(t, frozenset(families), budget)
    u = to_alternating(t)
    u_strip = alt_strip(u)
    u_labels = alt_leaf_labels(u)
    parents: dict[AltTree, tuple[AltTree, Move] | None] = {u: None}
    queue: deque[AltTree] = deque([u])
    found: dict[tuple[int, ...], AltTree] = {}
    expanded = 0
    exhausted = True
    while queue:
        if expanded >= budget:
            exhausted = False
            break
        state = queue.popleft()
        expanded += 1
        for move, nxt in alt_successors(state):
            if nxt in parents:
                continue
            parents[nxt] = (state, move)
            queue.append(nxt)
            if alt_strip(nxt) == u_strip:
                v_labels = alt_leaf_labels(nxt)
                sigma = dict(zip(u_labels, v_labels))
                perm = tuple(sigma[k] for k in sorted(sigma))
                if perm != tuple(sorted(sigma)) and perm not in found:
                    found[perm] = nxt
    witnesses = []
    for perm, state in sorted(found.items()):
        sigma = {i + 1: img for i, img in enumerate(perm)}
        target = relabel(t, sigma)
        steps = expand_path(t, _trace(parents, state))
        _, target_rot = comb_steps(target)
        total = steps + tuple(s.inverted() for s in reversed(target_rot))
        cert = certificate_from_path(t, total)
        assert cert.final == target
        witnesses.append(CommutationWitness(t, perm, cert))
    return CommutationScan(
        witnesses=tuple(witnesses),
        exhausted=exhausted,
        expanded=expanded,
        class_size=len(parents),
    )


def _find_commutations_binary(
    t: Tree, families: frozenset[str], budget: int
) -> CommutationScan:
    from .rewrite import closure
    from .trees import strip_labels

    result = closure(t, families=families, budget=budget, keep_parents=True)
    shape = strip_labels(t)
    labels = leaf_labels(t)
    witnesses = []
    seen: set[tuple[int, ...]] = set()
    for member in sorted(result.members, key=repr):
        if member == t or strip_labels(member) != shape:
            continue
        image = dict(zip(labels, leaf_labels(member)))
        perm = tuple(image[k] for k in sorted(image))
        if perm in seen:
            continue
        seen.add(perm)
        cert = certificate_from_path(t, result.path_to(member))
        witnesses.append(CommutationWitness(t, perm, cert))
    return CommutationScan(
        witnesses=tuple(witnesses),
        exhausted=result.exhausted,
        expanded=result.expanded,
        class_size=len(result.members),
    )


def interchange_neighbours_exist(tree: AltTree) -> bool:
    """True iff some binary representative contains an interchange redex."""
    for _ in alt_successors(tree):
        return True
    return False
