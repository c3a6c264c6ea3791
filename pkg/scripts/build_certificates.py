#!/usr/bin/env python3
"""Regenerate the certificates bundled under src/medial/certs/.

The configA certificate follows a fixed chain of twenty interchange
milestones (the classical derivation for that configuration); this script
interpolates the explicit associativity steps between consecutive
milestones, so the shipped JSON replays one localized rewrite at a time.
The remaining certificates come from bidirectional search.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from medial.assoc import to_alternating
from medial.catalog import BM9, CASE2, CONFIG_A, CONFIG_B, KOCK16, CERTIFICATE_FILES
from medial.quotient import alt_successors, check_equivalence, expand_move
from medial.rewrite import Certificate, certificate_from_path, comb_steps, replay_certificate
from medial.trees import parse_monomial

CERTS_DIR = Path(__file__).resolve().parent.parent / "src" / "medial" / "certs"

# Interchange milestones for configuration A, all ten letters per line;
# reassociations between consecutive lines are interpolated below.
CONFIG_A_MILESTONES = [
    "(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))",
    "(((a h b) v (c h (d v e))) h (((f v g) v i) h (h v j)))",
    "(((a h b) v (c h (d v e))) h ((f h h) v ((g v i) h j)))",
    "(((a v c) h ((b v d) v e)) h ((f h h) v ((g v i) h j)))",
    "(((a h (b v d)) v (c h e)) h ((f h h) v ((g v i) h j)))",
    "(((a h (b v d)) h (f h h)) v ((c h e) h ((g v i) h j)))",
    "(((a h (b v d)) v ((c h e) h (g v i))) h ((f h h) v j))",
    "(((a v (c h e)) h (((b v d) v g) v i)) h ((f h h) v j))",
    "(((a h ((b v d) v g)) v ((c h e) h i)) h ((f h h) v j))",
    "(((a h ((b v d) v g)) h (f h h)) v (((c h e) h i) h j))",
    "(((a h ((b v d) v g)) v (c h e)) h ((f h h) v (i h j)))",
    "(((a v c) h (((b v d) v g) v e)) h ((f h h) v (i h j)))",
    "(((a h (b v d)) v (c h (g v e))) h ((f h h) v (i h j)))",
    "(((a h (b v d)) h (f h h)) v ((c h (g v e)) h (i h j)))",
    "((a v (c h (g v e))) h (((b v d) h (f h h)) v (i h j)))",
    "((a v (c h (g v e))) h (((b v d) v i) h ((f h h) v j)))",
    "((a v (c h (g v e))) h ((b h (f h h)) v ((d v i) h j)))",
    "(((a h b) h (f h h)) v ((c h (g v e)) h ((d v i) h j)))",
    "(((a h b) v (c h (g v e))) h ((f h h) v ((d v i) h j)))",
    "(((a h b) v (c h (g v e))) h ((f v (d v i)) h (h v j)))",
    "(((a h b) v (c h (g v e))) h (((f v d) h h) v (i h j)))",
]


def build_config_a() -> Certificate:
    names: dict[str, int] = {}
    milestones = [parse_monomial(CONFIG_A_MILESTONES[0], names=names)]
    for text in CONFIG_A_MILESTONES[1:]:
        milestones.append(parse_monomial(text, names=names))
    assert milestones[0] == CONFIG_A.lhs
    assert milestones[-1] == CONFIG_A.rhs

    _, steps0 = comb_steps(milestones[0])
    steps = list(steps0)
    for prev, nxt in zip(milestones, milestones[1:]):
        u, v = to_alternating(prev), to_alternating(nxt)
        for move, result in alt_successors(u):
            if result == v:
                segment, _ = expand_move(u, move)
                steps.extend(segment)
                break
        else:
            raise SystemExit(
                f"no single interchange connects milestones:\n  {prev}\n  {nxt}"
            )
    _, steps_final = comb_steps(milestones[-1])
    steps.extend(s.inverted() for s in reversed(steps_final))
    cert = certificate_from_path(milestones[0], steps)
    assert cert.final == CONFIG_A.rhs
    return cert


def build_by_search(relation) -> Certificate:
    result = check_equivalence(relation.lhs, relation.rhs)
    if not result.found:
        raise SystemExit(f"search failed for {relation.name}")
    return result.certificate


def main() -> None:
    CERTS_DIR.mkdir(parents=True, exist_ok=True)
    built = {
        "configA": build_config_a(),
        "kock16": build_by_search(KOCK16),
        "bm9": build_by_search(BM9),
        "configB": build_by_search(CONFIG_B),
        "case2": build_by_search(CASE2),
    }
    for name, cert in built.items():
        assert replay_certificate(cert)
        path = CERTS_DIR / CERTIFICATE_FILES[name]
        path.write_text(cert.dump())
        print(
            f"{name:10} {len(cert.steps):4} steps "
            f"({cert.interchange_count} interchanges) -> {path.name}"
        )


if __name__ == "__main__":
    main()
