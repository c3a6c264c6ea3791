"""Term rewriting and enumeration for double interchange semigroups."""

from .assoc import (
    binary_representatives,
    enumerate_alternating,
    format_alternating,
    to_alternating,
)
from .catalog import RELATIONS, load_certificate
from .counts import (
    dihedral_orbits,
    interchange_graph,
    isolated_count,
    verify_fiber_equivalence,
)
from .geometry import (
    Block,
    BlockPartition,
    build_dyadic,
    classify_blocks,
    compose_partition,
    cuts,
    fiber,
    hjoin,
    is_subrectangle,
    main_cuts,
    primary_cuts_and_slices,
    realize,
    vjoin,
)
from .intervals import (
    association_to_sequence,
    is_tree_sequence,
    sequence_to_association,
    thompson_map,
)
from .quotient import CommutationWitness, check_equivalence, find_commutations
from .rewrite import (
    Certificate,
    RewriteStep,
    apply_redex,
    closure,
    find_redexes,
    replay_certificate,
)
from .trees import (
    apply_symmetry,
    canonical_key,
    dihedral_elements,
    enumerate_shapes,
    format_monomial,
    parse_monomial,
    partial_compose,
    to_word,
)

__version__ = "0.1.0"
