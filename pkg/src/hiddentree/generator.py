"""Directed-network generation: activity-driven random destinations with tree-path closure.

Every active node runs the same selection loop: with ``act`` starting at
``activity``, each round succeeds when a uniform draw falls below ``act``,
so a node performs ``floor(activity)`` selections plus one more with
probability ``frac(activity)``. A successful selection picks a destination
uniformly over all nodes and links the source to the destination and to
every node on the latent tree path between them.

Nodes use independent RNG substreams derived from the master seed, so the
generated edge set is identical under any processing order.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .errors import ParameterError
from .graph import DirectedGraph
from .hidden_tree import TreeParams, build_tree, path_between

__all__ = [
    "Variant",
    "ModelParams",
    "GenerationTrace",
    "generate",
    "generate_with_trace",
    "derive_seed",
]

_MASK64 = (1 << 64) - 1


def derive_seed(master_seed: int, index: int) -> int:
    """Derive a decorrelated 64-bit substream seed from (master_seed, index).

    splitmix64 finalizer over the combined inputs; stable across platforms
    and Python versions.
    """
    x = ((master_seed & _MASK64) * 0x9E3779B97F4A7C15 + (index & _MASK64) + 1) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


class Variant(enum.Enum):
    """Which nodes initiate selections."""

    ALL_ACTIVE = "all"
    LEAF_ACTIVE = "leaf"


@dataclass(frozen=True)
class ModelParams:
    """Full specification of one generation run.

    ``seed`` drives destination selection and is independent of the tree
    construction seed inside ``tree``.
    """

    tree: TreeParams
    activity: float
    seed: int = 0
    variant: Variant = Variant.ALL_ACTIVE
    allow_self_selection: bool = False
    include_tree_edges: bool = False

    def __post_init__(self):
        if self.activity < 0:
            raise ParameterError(f"activity must be >= 0, got {self.activity}")


@dataclass(frozen=True)
class GenerationTrace:
    """Diagnostic record of one run.

    ``selection_counts[i]`` counts every successful selection by node i,
    including draws discarded for landing on i itself. ``destinations[i]``
    holds only the kept draws, so edge provenance stays checkable.
    """

    selection_counts: list[int]
    destinations: list[tuple[int, ...]]
    closure_edges_added: int


def generate(params: ModelParams) -> DirectedGraph:
    """Run the generation loop and return the deduplicated directed graph."""
    graph, _ = generate_with_trace(params)
    return graph


def generate_with_trace(params: ModelParams) -> tuple[DirectedGraph, GenerationTrace]:
    """As :func:`generate`, also returning the per-node selection trace."""
    tree = build_tree(params.tree)
    n = tree.node_count
    out: list[set[int]] = [set() for _ in range(n)]

    if params.include_tree_edges:
        for child in range(1, n):
            p = tree.parent[child]
            out[child].add(p)
            out[p].add(child)

    if params.variant is Variant.LEAF_ACTIVE:
        active = tree.leaves()
    else:
        active = range(n)

    counts = [0] * n
    dests: list[list[int]] = [[] for _ in range(n)]
    closure_added = 0

    for i in active:
        rng = random.Random(derive_seed(params.seed, i))
        act = params.activity
        while act > 0:
            if rng.random() < act:
                counts[i] += 1
                dest = rng.randrange(n)
                if dest != i or params.allow_self_selection:
                    dests[i].append(dest)
                    edges_i = out[i]
                    if dest != i:
                        edges_i.add(dest)
                    for v in path_between(tree, i, dest):
                        if v != i and v != dest and v not in edges_i:
                            edges_i.add(v)
                            closure_added += 1
            act -= 1

    graph = DirectedGraph.from_out_sets(out)
    trace = GenerationTrace(
        selection_counts=counts,
        destinations=[tuple(d) for d in dests],
        closure_edges_added=closure_added,
    )
    return graph, trace
