"""Undirected rewriting on binary monomials.

Three rule families, each usable in both directions:

    assoc_h      (p h q) h r  <->  p h (q h r)
    assoc_v      (p v q) v r  <->  p v (q v r)
    interchange  (p h q) v (r h s)  <->  (p v r) h (q v s)

Closures are breadth-first searches deduplicated by the tree value itself
(nested tuples hash cheaply); certificates record localized steps that any
independent implementation can replay bit-exactly.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .trees import (
    H,
    V,
    Position,
    Tree,
    format_monomial,
    is_leaf,
    leaf_labels,
    parse_monomial,
    replace_at,
    subtree_at,
)

ASSOC_H = "assoc_h"
ASSOC_V = "assoc_v"
INTERCHANGE = "interchange"
ALL_FAMILIES = frozenset({ASSOC_H, ASSOC_V, INTERCHANGE})
ASSOC_FAMILIES = frozenset({ASSOC_H, ASSOC_V})
INTERCHANGE_ONLY = frozenset({INTERCHANGE})

FORWARD = "forward"
BACKWARD = "backward"

DEFAULT_BUDGET = 10**7


class RewriteError(ValueError):
    pass


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    direction: str
    position: Position

    def inverted(self) -> "RewriteStep":
        flip = BACKWARD if self.direction == FORWARD else FORWARD
        return RewriteStep(self.rule, flip, self.position)

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "direction": self.direction,
            "position": "".join(str(i) for i in self.position),
        }

    @staticmethod
    def from_json(data: dict) -> "RewriteStep":
        return RewriteStep(
            data["rule"],
            data["direction"],
            tuple(int(c) for c in data["position"]),
        )


def _apply_local(node: Tree, rule: str, direction: str) -> Tree | None:
    """Apply a rule at the root of ``node``; None if the pattern misses."""
    if is_leaf(node):
        return None
    op, left, right = node
    if rule == ASSOC_H or rule == ASSOC_V:
        want = H if rule == ASSOC_H else V
        if op != want:
            return None
        if direction == FORWARD:
            if is_leaf(left) or left[0] != want:
                return None
            return (want, left[1], (want, left[2], right))
        if is_leaf(right) or right[0] != want:
            return None
        return (want, (want, left, right[1]), right[2])
    if rule == INTERCHANGE:
        if direction == FORWARD:
            if op != V or is_leaf(left) or is_leaf(right):
                return None
            if left[0] != H or right[0] != H:
                return None
            return (H, (V, left[1], right[1]), (V, left[2], right[2]))
        if op != H or is_leaf(left) or is_leaf(right):
            return None
        if left[0] != V or right[0] != V:
            return None
        return (V, (H, left[1], right[1]), (H, left[2], right[2]))
    raise RewriteError(f"unknown rule {rule!r}")


_RULE_ORDER = (ASSOC_H, ASSOC_V, INTERCHANGE)
_DIRECTIONS = (FORWARD, BACKWARD)


def find_redexes(t: Tree, families: Iterable[str] = ALL_FAMILIES) -> list[RewriteStep]:
    """Every applicable (rule, direction, position), preorder then rule order."""
    fams = frozenset(families)
    out: list[RewriteStep] = []

    def walk(node: Tree, pos: Position) -> None:
        if is_leaf(node):
            return
        for rule in _RULE_ORDER:
            if rule not in fams:
                continue
            for direction in _DIRECTIONS:
                if _apply_local(node, rule, direction) is not None:
                    out.append(RewriteStep(rule, direction, pos))
        walk(node[1], pos + (0,))
        walk(node[2], pos + (1,))

    walk(t, ())
    return out


def apply_redex(t: Tree, step: RewriteStep) -> Tree:
    node = subtree_at(t, step.position)
    result = _apply_local(node, step.rule, step.direction)
    if result is None:
        raise RewriteError(
            f"{step.rule}/{step.direction} does not match at position {step.position}"
        )
    return replace_at(t, step.position, result)


def successors(t: Tree, families: Iterable[str] = ALL_FAMILIES) -> Iterator[tuple[RewriteStep, Tree]]:
    fams = frozenset(families)

    def walk(node: Tree, pos: Position) -> Iterator[tuple[RewriteStep, Tree]]:
        if is_leaf(node):
            return
        for rule in _RULE_ORDER:
            if rule not in fams:
                continue
            for direction in _DIRECTIONS:
                local = _apply_local(node, rule, direction)
                if local is not None:
                    yield RewriteStep(rule, direction, pos), replace_at(t, pos, local)
        yield from walk(node[1], pos + (0,))
        yield from walk(node[2], pos + (1,))

    yield from walk(t, ())


# ---------------------------------------------------------------------------
# Closure
# ---------------------------------------------------------------------------

@dataclass
class ClosureResult:
    members: frozenset[Tree]
    exhausted: bool
    expanded: int
    frontier_peak: int
    edges: tuple[tuple[Tree, RewriteStep, Tree], ...] | None = None
    parents: dict | None = None

    def __len__(self) -> int:
        return len(self.members)

    def path_to(self, target: Tree) -> list[RewriteStep]:
        """Steps from the closure root to a member (requires keep_parents)."""
        if self.parents is None:
            raise RewriteError("closure was run without parent tracking")
        steps: list[RewriteStep] = []
        node = target
        while True:
            prev = self.parents[node]
            if prev is None:
                break
            parent, step = prev
            steps.append(step)
            node = parent
        steps.reverse()
        return steps


def closure(
    t: Tree,
    families: Iterable[str] = ALL_FAMILIES,
    budget: int = DEFAULT_BUDGET,
    keep_edges: bool = False,
    keep_parents: bool = False,
) -> ClosureResult:
    """Breadth-first rewrite closure of t under the enabled families.

    ``budget`` bounds node expansions; running out is reported through
    ``exhausted=False``, not an exception.  Every rewrite preserves arity
    and the leaf multiset, so members all share t's leaves.
    """
    fams = frozenset(families)
    start_leaves = tuple(sorted(leaf_labels(t)))
    parents: dict[Tree, tuple[Tree, RewriteStep] | None] = {t: None}
    edges: list[tuple[Tree, RewriteStep, Tree]] = []
    queue: deque[Tree] = deque([t])
    expanded = 0
    peak = 1
    exhausted = True
    while queue:
        if expanded >= budget:
            exhausted = False
            break
        node = queue.popleft()
        expanded += 1
        for step, result in successors(node, fams):
            if __debug__:
                assert tuple(sorted(leaf_labels(result))) == start_leaves
            if keep_edges:
                edges.append((node, step, result))
            if result not in parents:
                parents[result] = (node, step)
                queue.append(result)
        peak = max(peak, len(queue))
    return ClosureResult(
        members=frozenset(parents),
        exhausted=exhausted,
        expanded=expanded,
        frontier_peak=peak,
        edges=tuple(edges) if keep_edges else None,
        parents=parents if keep_parents else None,
    )


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Replayable proof object: initial monomial plus localized steps."""

    initial: Tree
    steps: tuple[RewriteStep, ...]
    final: Tree

    @property
    def interchange_count(self) -> int:
        return sum(1 for s in self.steps if s.rule == INTERCHANGE)

    def inverted(self) -> "Certificate":
        return Certificate(
            self.final,
            tuple(s.inverted() for s in reversed(self.steps)),
            self.initial,
        )

    def to_json(self) -> dict:
        return {
            "initial": format_monomial(self.initial),
            "steps": [s.to_json() for s in self.steps],
            "final": format_monomial(self.final),
        }

    def dump(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @staticmethod
    def from_json(data: dict) -> "Certificate":
        return Certificate(
            parse_monomial(data["initial"]),
            tuple(RewriteStep.from_json(s) for s in data["steps"]),
            parse_monomial(data["final"]),
        )

    @staticmethod
    def load(text: str) -> "Certificate":
        return Certificate.from_json(json.loads(text))


@dataclass(frozen=True)
class ReplayResult:
    ok: bool
    failed_step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def replay_certificate(cert: Certificate) -> ReplayResult:
    """Re-run every step; true only if the stated final tree is reached."""
    current = cert.initial
    for k, step in enumerate(cert.steps):
        try:
            current = apply_redex(current, step)
        except (RewriteError, IndexError) as exc:
            return ReplayResult(False, k, f"step {k}: {exc}")
    if current != cert.final:
        return ReplayResult(
            False,
            len(cert.steps),
            f"final tree is {format_monomial(current)}, not the claimed "
            f"{format_monomial(cert.final)}",
        )
    return ReplayResult(True)


def certificate_from_path(initial: Tree, steps: Iterable[RewriteStep]) -> Certificate:
    current = initial
    steps = tuple(steps)
    for step in steps:
        current = apply_redex(current, step)
    return Certificate(initial, steps, current)


# ---------------------------------------------------------------------------
# Rotation normal form (explicit associativity paths)
# ---------------------------------------------------------------------------

def comb_steps(t: Tree) -> tuple[Tree, tuple[RewriteStep, ...]]:
    """Rotate to the recursive right-comb representative of t's class
    modulo associativity, recording the forward steps taken."""
    steps: list[RewriteStep] = []

    def go(node: Tree, pos: Position) -> Tree:
        if is_leaf(node):
            return node
        op = node[0]
        while not is_leaf(node[1]) and node[1][0] == op:
            left = node[1]
            node = (op, left[1], (op, left[2], node[2]))
            rule = ASSOC_H if op == H else ASSOC_V
            steps.append(RewriteStep(rule, FORWARD, pos))
        return (op, go(node[1], pos + (0,)), go(node[2], pos + (1,)))

    result = go(t, ())
    return result, tuple(steps)


def assoc_path(src: Tree, dst: Tree) -> tuple[RewriteStep, ...]:
    """Explicit associativity steps from src to dst (same class required)."""
    comb_a, up = comb_steps(src)
    comb_b, down = comb_steps(dst)
    if comb_a != comb_b:
        raise RewriteError("trees are not equal modulo associativity")
    return up + tuple(s.inverted() for s in reversed(down))
