"""Digraph structure: strongly connected components and cycle periods."""

from __future__ import annotations

from math import gcd


def strongly_connected_components(n, adjacency):
    """Tarjan's algorithm with an explicit stack (no recursion).

    adjacency[i] is an iterable of successors of vertex i.  Components are
    returned in topological order of the condensation: if there is an edge
    from component A to component B then A appears before B.  Vertices
    inside a component are sorted.
    """
    adjacency = [tuple(adjacency[i]) for i in range(n)]
    index = [None] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack = []
    components = []
    counter = 0

    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, ptr = work.pop()
            if ptr == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            succs = adjacency[v]
            while ptr < len(succs):
                w = succs[ptr]
                ptr += 1
                if index[w] is None:
                    work.append((v, ptr))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])

    components.reverse()  # Tarjan emits sinks first; we want sources first
    return components


def component_period(component, adjacency):
    """Gcd of cycle lengths inside one strongly connected component.

    Returns 0 for a trivial component (single vertex, no self-loop).
    Computed as the gcd of depth(u) + 1 - depth(v) over internal edges
    u -> v of a BFS tree, which equals the gcd of the component's simple
    cycle lengths.
    """
    members = set(component)
    root = component[0]
    depth = {root: 0}
    queue = [root]
    internal_edges = []
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for w in adjacency[u]:
            if w not in members:
                continue
            internal_edges.append((u, w))
            if w not in depth:
                depth[w] = depth[u] + 1
                queue.append(w)
    g = 0
    for u, w in internal_edges:
        g = gcd(g, depth[u] + 1 - depth[w])
    return abs(g)


def is_trivial_component(component, adjacency):
    """Single vertex with no self-loop."""
    if len(component) > 1:
        return False
    v = component[0]
    return v not in adjacency[v]
