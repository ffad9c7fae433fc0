"""Word-representable graph toolkit: semi-transitive orientations, k-uniform
word-representants, representation numbers, and graph6 enumeration pipelines."""

from .graphs import (
    Graph,
    Graph6Error,
    UnsupportedSizeError,
    are_isomorphic,
    delete_vertex,
    encode_graph6,
    generate,
    induced_subgraph,
    is_connected,
    parse_graph6,
)
from .orientations import (
    CyclicOrientationError,
    Orientation,
    ShortcutWitness,
    find_k_shortcut_free_orientation,
    find_semi_transitive_orientation,
    find_shortcut,
    find_transitive_orientation,
    is_acyclic,
    is_semi_transitive_orientation,
    is_word_representable,
    orient_by_order,
)
from .uniform import (
    INFINITE,
    CapExceededError,
    PositionAssignment,
    assignment_of_word,
    find_k_uniform_representant,
    find_permutational_representant,
    representation_number,
    word_of_assignment,
)
from .words import (
    Word,
    alternate_in_word,
    graph_of_word,
    is_k_uniform,
    verify_representation,
)

__version__ = "0.1.0"
