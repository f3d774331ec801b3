"""Discrete molecule model: atoms, bonds, and small graph helpers."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .elements import NUMBER_TO_SYMBOL

# Numeric bond orders; 1.5 is the aromatic order.
BOND_ORDERS: tuple[float, ...] = (1.0, 1.5, 2.0, 3.0)

STEREO_NONE = 0
STEREO_CIS = 1
STEREO_TRANS = 2
STEREO_CODES: tuple[int, ...] = (STEREO_NONE, STEREO_CIS, STEREO_TRANS)


@dataclass
class Atom:
    """One atom: element number, formal charge, aromatic flag, total H count.

    ``chiral`` carries a parsed ``@``/``@@`` tag verbatim; it is round-tripped
    through SMILES output but is not part of the numeric feature set.
    """

    element: int
    formal_charge: int = 0
    aromatic: bool = False
    explicit_h: int = 0
    chiral: str | None = None

    @property
    def symbol(self) -> str:
        return NUMBER_TO_SYMBOL[self.element]


@dataclass
class Bond:
    """Undirected bond between atom indices ``u < v``."""

    u: int
    v: int
    order: float = 1.0
    stereo: int = STEREO_NONE
    conjugated: bool = False

    def other(self, i: int) -> int:
        return self.v if i == self.u else self.u


@dataclass
class Molecule:
    atoms: list[Atom] = field(default_factory=list)
    bonds: list[Bond] = field(default_factory=list)

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def n_bonds(self) -> int:
        return len(self.bonds)

    def copy(self) -> "Molecule":
        return Molecule(
            atoms=[replace(a) for a in self.atoms],
            bonds=[replace(b) for b in self.bonds],
        )

    def validate_structure(self) -> None:
        """Check index ranges, u < v ordering, and simple-graph uniqueness."""
        n = self.n_atoms
        seen: set[tuple[int, int]] = set()
        for b in self.bonds:
            if not (0 <= b.u < n and 0 <= b.v < n):
                raise ValueError(f"bond ({b.u},{b.v}) out of range for {n} atoms")
            if b.u >= b.v:
                raise ValueError(f"bond endpoints must satisfy u < v, got ({b.u},{b.v})")
            if (b.u, b.v) in seen:
                raise ValueError(f"duplicate bond ({b.u},{b.v})")
            seen.add((b.u, b.v))

    def neighbor_lists(self) -> list[list[tuple[int, Bond]]]:
        """Adjacency as, per atom, a list of (neighbor index, bond)."""
        adj: list[list[tuple[int, Bond]]] = [[] for _ in self.atoms]
        for b in self.bonds:
            adj[b.u].append((b.v, b))
            adj[b.v].append((b.u, b))
        return adj

    def bond_between(self, u: int, v: int) -> Bond | None:
        if u > v:
            u, v = v, u
        for b in self.bonds:
            if b.u == u and b.v == v:
                return b
        return None

    def degree(self, i: int) -> int:
        """Heavy-atom degree (number of incident bonds)."""
        return sum(1 for b in self.bonds if b.u == i or b.v == i)

    def order_sum(self, i: int) -> float:
        """Sum of incident bond orders, aromatic counting 1.5."""
        return sum(b.order for b in self.bonds if b.u == i or b.v == i)

    def connected_components(self) -> list[list[int]]:
        adj = self.neighbor_lists()
        seen = [False] * self.n_atoms
        comps: list[list[int]] = []
        for start in range(self.n_atoms):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j, _ in adj[i]:
                    if not seen[j]:
                        seen[j] = True
                        stack.append(j)
            comps.append(sorted(comp))
        return comps


def cycle_basis(mol: Molecule) -> list[list[int]]:
    """Independent cycles as atom-index lists (spanning-tree back edges)."""
    adj = mol.neighbor_lists()
    parent = [-1] * mol.n_atoms
    depth = [-1] * mol.n_atoms
    cycles: list[list[int]] = []
    for root in range(mol.n_atoms):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        stack = [root]
        used: set[tuple[int, int]] = set()
        while stack:
            i = stack.pop()
            for j, _ in adj[i]:
                key = (min(i, j), max(i, j))
                if key in used:
                    continue
                if depth[j] < 0:
                    used.add(key)
                    parent[j] = i
                    depth[j] = depth[i] + 1
                    stack.append(j)
                elif j != parent[i]:
                    used.add(key)
                    # back edge (i, j): walk both ends up to the common ancestor
                    path_i, path_j = [i], [j]
                    a, b = i, j
                    while depth[a] > depth[b]:
                        a = parent[a]
                        path_i.append(a)
                    while depth[b] > depth[a]:
                        b = parent[b]
                        path_j.append(b)
                    while a != b:
                        a, b = parent[a], parent[b]
                        path_i.append(a)
                        path_j.append(b)
                    cycles.append(path_i + path_j[-2::-1])
    return cycles


def bridges(n_atoms: int, edges: list[tuple[int, int]]) -> set[tuple[int, int]]:
    """Bridge edges of the graph given by ``edges`` (endpoints as (u, v), u < v)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_atoms)]
    for idx, (u, v) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    disc = [-1] * n_atoms
    low = [0] * n_atoms
    out: set[tuple[int, int]] = set()
    timer = 0

    for root in range(n_atoms):
        if disc[root] >= 0:
            continue
        # iterative DFS; (node, incoming edge index, neighbor cursor)
        stack: list[list[int]] = [[root, -1, 0]]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            frame = stack[-1]
            i, in_edge, cursor = frame
            if cursor < len(adj[i]):
                frame[2] += 1
                j, eidx = adj[i][cursor]
                if eidx == in_edge:
                    continue
                if disc[j] < 0:
                    disc[j] = low[j] = timer
                    timer += 1
                    stack.append([j, eidx, 0])
                else:
                    low[i] = min(low[i], disc[j])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[i])
                    if low[i] > disc[p]:
                        u, v = edges[in_edge]
                        out.add((u, v))
    return out
