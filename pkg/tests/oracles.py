"""Brute-force reference implementations, independent of the engine.

These deliberately avoid the package's traversal code paths: adjacency is
a plain dict of string sets, paths are enumerated as explicit tuples, and
the type-distance table is written out by hand rather than derived from
the predicate table.
"""

from __future__ import annotations

# Hop distances on the 5-node type graph (Paper is the hub; cites gives
# Paper a self-loop, every other same-type trip is out-and-back).
ORACLE_DISTANCE = {
    ("Paper", "Paper"): 1,
    ("Paper", "Concept"): 1,
    ("Paper", "Author"): 1,
    ("Paper", "Journal"): 1,
    ("Paper", "Conference"): 1,
    ("Concept", "Paper"): 1,
    ("Author", "Paper"): 1,
    ("Journal", "Paper"): 1,
    ("Conference", "Paper"): 1,
    ("Concept", "Concept"): 2,
    ("Concept", "Author"): 2,
    ("Concept", "Journal"): 2,
    ("Concept", "Conference"): 2,
    ("Author", "Concept"): 2,
    ("Author", "Author"): 2,
    ("Author", "Journal"): 2,
    ("Author", "Conference"): 2,
    ("Journal", "Concept"): 2,
    ("Journal", "Author"): 2,
    ("Journal", "Journal"): 2,
    ("Journal", "Conference"): 2,
    ("Conference", "Concept"): 2,
    ("Conference", "Author"): 2,
    ("Conference", "Journal"): 2,
    ("Conference", "Conference"): 2,
}


def undirected_adjacency(pairs) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {}
    for s, o in pairs:
        if s == o:
            continue
        adj.setdefault(s, set()).add(o)
        adj.setdefault(o, set()).add(s)
    return adj


def all_simple_paths(adj: dict[str, set[str]], start: str, cutoff: int) -> list[tuple[str, ...]]:
    """Every simple path of length 1..cutoff starting at start."""
    paths: list[tuple[str, ...]] = []

    def extend(path: tuple[str, ...]) -> None:
        if len(path) - 1 >= cutoff:
            return
        for nxt in sorted(adj.get(path[-1], ())):
            if nxt in path:
                continue
            paths.append(path + (nxt,))
            extend(path + (nxt,))

    extend((start,))
    return paths


def oracle_path_count(adj: dict[str, set[str]], start: str, end: str, cutoff: int) -> int:
    return sum(1 for p in all_simple_paths(adj, start, cutoff) if p[-1] == end)


def oracle_reachable(adj: dict[str, set[str]], start: str, cutoff: int) -> set[str]:
    """Independent BFS, distinct from the path enumerator."""
    seen = {start}
    frontier = {start}
    for _ in range(cutoff):
        frontier = {n for u in frontier for n in adj.get(u, ())} - seen
        seen |= frontier
    return seen - {start}


def oracle_semantic_query(graph, sources, target_type_value: str, k: int):
    """Re-rank by full path enumeration; returns (targets, cross_edges)."""
    types = {iri: entity.etype.value for iri, entity in graph.entities.items()}
    adj = undirected_adjacency((t.s, t.o) for t in graph.triples)
    scores: dict[str, int] = {}
    edges: set[tuple[str, str]] = set()
    for src in sources:
        cutoff = ORACLE_DISTANCE[(types[src], target_type_value)]
        for path in all_simple_paths(adj, src, cutoff):
            end = path[-1]
            if types[end] != target_type_value:
                continue
            scores[end] = scores.get(end, 0) + 1
            edges.add((src, end))
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    surviving = {iri for iri, _ in ranked}
    cross = sorted(edge for edge in edges if edge[1] in surviving)
    return [(iri, score) for iri, score in ranked], cross
