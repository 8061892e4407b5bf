"""Shared helpers: independent brute-force reference implementations that
the production code must agree with."""

from __future__ import annotations

import random
from itertools import combinations

from crownkit.graphs import BipartiteGraph, Graph


def brute_max_matching_size(edges: list[tuple[int, int]]) -> int:
    """Maximum matching of an arbitrary graph by exhaustive recursion."""
    best = 0
    edges = sorted(edges)

    def go(index: int, used: frozenset[int], count: int) -> int:
        if index == len(edges):
            return count
        result = go(index + 1, used, count)
        u, v = edges[index]
        if u not in used and v not in used:
            result = max(result, go(index + 1, used | {u, v}, count + 1))
        return result

    return go(0, frozenset(), best)


def brute_min_vertex_cover_size(vertices: list[int], edges: list[tuple[int, int]]) -> int:
    for size in range(len(vertices) + 1):
        for combo in combinations(sorted(vertices), size):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v in edges):
                return size
    return len(vertices)


def hall_says_saturating(g: BipartiteGraph) -> bool:
    """Hall's condition checked over every subset of side A."""
    side_a = sorted(g.side_a)
    for size in range(1, len(side_a) + 1):
        for combo in combinations(side_a, size):
            if len(g.neighborhood_of_a(combo)) < size:
                return False
    return True


def union_find_components(vertices: list[int], edges: list[tuple[int, int]]):
    parent = {v: v for v in vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in vertices:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def random_simple_graph(rng: random.Random, n: int, density: float) -> Graph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < density]
    return Graph.build(range(1, n + 1), edges)
