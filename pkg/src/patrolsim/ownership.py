"""Owner assignment of triangles and dual edges to primal vertices.

Every triangle is owned by one of its corners; the owner of a triangle also
owns the dual edges to all adjacent triangles.  The key property to uphold:
the owners of two adjacent triangles must be connected in the primal graph
(equal owners are accepted as trivially connected; the search prefers
distinct adjacent owners and only falls back to equality when forced).
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangulation import Triangulation


@dataclass(frozen=True)
class OwnerMap:
    triangle_owner: tuple[int, ...]              # per-triangle primal vertex
    dual_edge_owners: tuple[tuple[int, int], ...]  # per dual edge id


@dataclass(frozen=True)
class OwnershipInfeasible:
    """Search gave up within budget; carries the best partial assignment."""
    nodes_explored: int
    assigned: tuple[int, ...]       # -1 where unassigned
    message: str


def _owners_connected(t: Triangulation, a: int, b: int) -> bool:
    return a == b or t.primal_adjacent(a, b)


def assign_owners(t: Triangulation,
                  node_budget: int = 200_000) -> OwnerMap | OwnershipInfeasible:
    """Greedy corner choice with backtracking.

    Triangles are processed in index order.  Candidate owners are the
    triangle's corners, ordered to prefer (1) corners lying on a primal
    edge shared with some dual neighbor, (2) corners adjacent (not equal)
    to every already-assigned neighbor's owner, (3) lowest primal id.
    On grids this succeeds without backtracking; if the budget runs out an
    infeasibility report is returned instead of raising.
    """
    ntri = len(t.triangles)
    dual = t.dual
    shared_corners = [set() for _ in range(ntri)]
    for eid, (ti, tj) in enumerate(dual.edges):
        u, v = t.shared_primal_edge[eid]
        shared_corners[ti].update((u, v))
        shared_corners[tj].update((u, v))

    owner = [-1] * ntri
    nodes = 0

    def candidates(ti: int) -> list[int]:
        assigned_nbr_owners = [owner[tj] for tj, _ in dual.neighbors(ti)
                               if owner[tj] >= 0]

        def key(c: int):
            on_shared = 0 if c in shared_corners[ti] else 1
            strict = 0 if all(c != o and t.primal_adjacent(c, o)
                              for o in assigned_nbr_owners) else 1
            return (on_shared, strict, c)

        return sorted(t.triangles[ti], key=key)

    def feasible(ti: int, c: int) -> bool:
        return all(_owners_connected(t, c, owner[tj])
                   for tj, _ in dual.neighbors(ti) if owner[tj] >= 0)

    def search(ti: int) -> bool:
        nonlocal nodes
        if ti == ntri:
            return True
        for c in candidates(ti):
            nodes += 1
            if nodes > node_budget:
                return False
            if feasible(ti, c):
                owner[ti] = c
                if search(ti + 1):
                    return True
                owner[ti] = -1
        return False

    if search(0):
        triangle_owner = tuple(owner)
        dual_edge_owners = tuple((owner[ti], owner[tj])
                                 for ti, tj in dual.edges)
        return OwnerMap(triangle_owner=triangle_owner,
                        dual_edge_owners=dual_edge_owners)
    reason = ("node budget exhausted" if nodes > node_budget
              else "no feasible assignment exists")
    return OwnershipInfeasible(nodes_explored=nodes,
                               assigned=tuple(owner),
                               message=reason)


def verify_theorem1(t: Triangulation, o: OwnerMap) -> list[tuple[int, int]]:
    """Adjacent-triangle pairs whose owners are not connected in the primal
    graph.  Empty list means the connected-owners property holds."""
    violations = []
    for ti, tj in t.dual.edges:
        a, b = o.triangle_owner[ti], o.triangle_owner[tj]
        if not _owners_connected(t, a, b):
            violations.append((ti, tj))
    return violations


@dataclass(frozen=True)
class DualEdgeOwnershipReport:
    violations: tuple[tuple[int, int], ...]   # dual edges with bad owners
    max_dual_edges_owned: int                 # over primal vertices
    bound: int                                # the constant checked against


def verify_theorem2(t: Triangulation, o: OwnerMap,
                    bound: int = 18) -> DualEdgeOwnershipReport:
    """Restates the connectivity check per dual edge via dual_edge_owners
    and checks bounded ownership: no primal vertex owns more than ``bound``
    dual edges (each triangle has <= 3 dual edges and a primal vertex is a
    corner of at most deg-many triangles, so a small constant suffices)."""
    violations = []
    owned = [0] * len(t.points)
    for eid, (ti, tj) in enumerate(t.dual.edges):
        a, b = o.dual_edge_owners[eid]
        if (a, b) != (o.triangle_owner[ti], o.triangle_owner[tj]):
            violations.append((ti, tj))
            continue
        if not _owners_connected(t, a, b):
            violations.append((ti, tj))
        owned[a] += 1
        if b != a:
            owned[b] += 1
    max_owned = max(owned, default=0)
    if max_owned > bound:
        violations.append((-1, -1))
    return DualEdgeOwnershipReport(violations=tuple(violations),
                                   max_dual_edges_owned=max_owned,
                                   bound=bound)
