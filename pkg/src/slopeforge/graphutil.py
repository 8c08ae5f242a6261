"""Abstract-graph algorithms: connectivity, blocks, st-numbering, planarity.

Everything here works on plain adjacency mappings {vertex: set(neighbors)}
and is sized for desk-scale inputs (hundreds of vertices).  Connectivity is
decided by separator enumeration up to size 3: only the distinctions
k in {0, 1, 2, 3, >=4} matter to the drawers and checkers.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

Adj = Dict[str, Set[str]]


def adjacency(vertices: Iterable[str], edges: Iterable[Tuple[str, str]]) -> Adj:
    adj: Adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def components(adj: Adj, removed: Set[str] = frozenset()) -> List[Set[str]]:
    seen: Set[str] = set(removed)
    comps: List[Set[str]] = []
    for start in adj:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def is_connected(adj: Adj, removed: Set[str] = frozenset()) -> bool:
    rest = [v for v in adj if v not in removed]
    if not rest:
        return True
    seen = {rest[0]} | set(removed)
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return all(v in seen for v in rest)


def articulation_points(adj: Adj) -> Set[str]:
    """Cutvertices via iterative Tarjan lowpoints, per connected component."""
    order: Dict[str, int] = {}
    low: Dict[str, int] = {}
    parent: Dict[str, Optional[str]] = {}
    cuts: Set[str] = set()
    counter = 0
    for root in adj:
        if root in order:
            continue
        parent[root] = None
        stack: List[Tuple[str, Iterable[str]]] = [(root, iter(sorted(adj[root])))]
        order[root] = low[root] = counter
        counter += 1
        root_children = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w not in order:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, iter(sorted(adj[w]))))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], order[w])
            if not advanced:
                stack.pop()
                p = parent[v]
                if p is not None:
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= order[p]:
                        cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    return cuts


def bridges(adj: Adj) -> Set[FrozenSet[str]]:
    """Bridge edges via lowpoints (iterative)."""
    order: Dict[str, int] = {}
    low: Dict[str, int] = {}
    parent: Dict[str, Optional[str]] = {}
    out: Set[FrozenSet[str]] = set()
    counter = 0
    for root in adj:
        if root in order:
            continue
        parent[root] = None
        order[root] = low[root] = counter
        counter += 1
        stack: List[Tuple[str, Iterable[str]]] = [(root, iter(sorted(adj[root])))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w not in order:
                    parent[w] = v
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, iter(sorted(adj[w]))))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], order[w])
            if not advanced:
                stack.pop()
                p = parent[v]
                if p is not None:
                    low[p] = min(low[p], low[v])
                    if low[v] > order[p]:
                        out.add(frozenset((p, v)))
        # parallel edges cannot occur: simple graphs only
    return out


def two_edge_connected_components(adj: Adj) -> List[Set[str]]:
    """Connected components after deleting all bridges."""
    br = bridges(adj)
    pruned: Adj = {v: set() for v in adj}
    for v in adj:
        for w in adj[v]:
            if frozenset((v, w)) not in br:
                pruned[v].add(w)
    return components(pruned)


def vertex_connectivity(adj: Adj, cap: int = 4) -> int:
    """Vertex connectivity, exact up to min(cap, 4); larger values return cap.

    Decided by separator enumeration: cheap cutvertex/pair scans first, then
    triples.  Complete graphs K_n report min(n - 1, cap).
    """
    n = len(adj)
    if n <= 1:
        return 0
    if any(len(adj[v]) == n - 1 for v in adj) and all(len(adj[v]) == n - 1 for v in adj):
        return min(n - 1, cap)
    if not is_connected(adj):
        return 0
    if articulation_points(adj):
        return 1
    if _has_separator_of_size(adj, 2):
        return 2
    if cap <= 3:
        return 3
    if _has_separator_of_size(adj, 3):
        return 3
    return cap


def _has_separator_of_size(adj: Adj, k: int) -> bool:
    n = len(adj)
    if n <= k + 1:
        return False
    names = sorted(adj)
    if k == 2:
        # For each v, articulation points of G - v.
        for v in names:
            sub = {u: adj[u] - {v} for u in adj if u != v}
            if articulation_points(sub):
                return True
        return False
    for sep in combinations(names, k):
        if not is_connected(adj, removed=set(sep)):
            return True
    return False


def min_degree(adj: Adj) -> int:
    return min((len(adj[v]) for v in adj), default=0)


def is_biconnected(adj: Adj) -> bool:
    if len(adj) <= 1:
        return False
    if len(adj) == 2:
        a, b = sorted(adj)
        return b in adj[a]
    return is_connected(adj) and not articulation_points(adj)


# ---------------------------------------------------------------------------
# st-numbering (Even/Tarjan style via DFS lowpoints and a linked insertion
# order).  Works for any biconnected graph; s and t need not be adjacent
# (a virtual (s, t) edge is added internally if missing).
# ---------------------------------------------------------------------------


def st_numbering(adj: Adj, s: str, t: str) -> Dict[str, int]:
    if s == t or s not in adj or t not in adj:
        raise ValueError("s, t must be distinct vertices of the graph")
    if len(adj) == 2:
        return {s: 1, t: 2}
    if not is_biconnected(adj):
        raise ValueError("st-numbering requires a biconnected graph")
    work: Adj = {v: set(ns) for v, ns in adj.items()}
    if t not in work[s]:
        # Virtual (s, t) edge: the numbering it produces remains valid for
        # the original graph since only s and t's own conditions use it,
        # and those hold trivially at the extremes.
        work[s].add(t)
        work[t].add(s)

    # DFS from s with first tree edge (s, t).  In a biconnected graph t's
    # subtree then covers every vertex except s.
    pre: Dict[str, int] = {s: 0, t: 1}
    parent: Dict[str, Optional[str]] = {s: None, t: s}
    low: Dict[str, str] = {s: s, t: t}
    lowpre: Dict[str, int] = {s: 0, t: 1}
    counter = 2
    preorder: List[str] = [s, t]
    stack: List[Tuple[str, List[str]]] = [(t, sorted(work[t] - {s}, reverse=True))]
    while stack:
        v, todo = stack[-1]
        if todo:
            w = todo.pop()
            if w not in pre:
                pre[w] = counter
                counter += 1
                parent[w] = v
                low[w] = w
                lowpre[w] = pre[w]
                preorder.append(w)
                stack.append((w, sorted(work[w] - {v}, reverse=True)))
            elif w != parent[v] and pre[w] < lowpre[v]:
                lowpre[v] = pre[w]
                low[v] = w
        else:
            stack.pop()
            p = parent[v]
            if p is not None and lowpre[v] < lowpre[p]:
                lowpre[p] = lowpre[v]
                low[p] = low[v]
    if len(pre) != len(work):
        raise ValueError("graph is not connected")

    # Even-Tarjan sign rule: insert each vertex next to its parent.
    sign: Dict[str, int] = {s: -1}
    lst: List[str] = [s, t]
    for v in preorder[2:]:
        p = parent[v]
        assert p is not None
        if sign[low[v]] == -1:
            lst.insert(lst.index(p), v)
            sign[p] = 1
        else:
            lst.insert(lst.index(p) + 1, v)
            sign[p] = -1
    return {v: i + 1 for i, v in enumerate(lst)}


def verify_st_numbering(adj: Adj, s: str, t: str, sigma: Dict[str, int]) -> List[str]:
    """Return violated st-ordering conditions (empty means valid)."""
    problems: List[str] = []
    n = len(adj)
    if sorted(sigma.values()) != list(range(1, n + 1)):
        problems.append("numbering is not a bijection onto 1..n")
        return problems
    if sigma[s] != 1:
        problems.append("sigma(s) != 1")
    if sigma[t] != n:
        problems.append("sigma(t) != n")
    for v in adj:
        if v in (s, t):
            continue
        if not any(sigma[w] < sigma[v] for w in adj[v]):
            problems.append(f"{v} has no lower neighbor")
        if not any(sigma[w] > sigma[v] for w in adj[v]):
            problems.append(f"{v} has no higher neighbor")
    return problems


# ---------------------------------------------------------------------------
# 2-SAT via implication graph strongly connected components.
# ---------------------------------------------------------------------------


def two_sat(n_vars: int, clauses: Sequence[Tuple[int, int]]) -> Optional[List[bool]]:
    """Solve 2-SAT over variables 0..n_vars-1.

    Literals: +i+1 for x_i, -(i+1) for not x_i.  Returns an assignment or
    None when unsatisfiable.
    """

    def node(lit: int) -> int:
        v = abs(lit) - 1
        return 2 * v + (1 if lit > 0 else 0)

    def neg(lit: int) -> int:
        return node(-lit)

    n_nodes = 2 * n_vars
    out_edges: List[List[int]] = [[] for _ in range(n_nodes)]
    for a, b in clauses:
        out_edges[neg(a)].append(node(b))
        out_edges[neg(b)].append(node(a))

    index: List[Optional[int]] = [None] * n_nodes
    low = [0] * n_nodes
    on_stack = [False] * n_nodes
    stack: List[int] = []
    comp = [-1] * n_nodes
    counter = [0]
    n_comp = [0]

    for root in range(n_nodes):
        if index[root] is not None:
            continue
        work: List[Tuple[int, int]] = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(out_edges[v]):
                w = out_edges[v][pi]
                pi += 1
                if index[w] is None:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp[0]
                    if w == v:
                        break
                n_comp[0] += 1
            if work:
                pv, _ = work[-1]
                low[pv] = min(low[pv], low[v])

    result = []
    for i in range(n_vars):
        pos, negn = 2 * i + 1, 2 * i
        if comp[pos] == comp[negn]:
            return None
        # Reverse topological order = increasing Tarjan component index:
        # a literal is true when its component comes later.
        result.append(comp[pos] < comp[negn])
    return result


# ---------------------------------------------------------------------------
# Planarity (Demoucron-Malgrange-Pertuiset).  Used only by the re-embedding
# oracle on small instances, so clarity beats asymptotics.
# ---------------------------------------------------------------------------


def is_planar(adj: Adj) -> bool:
    for comp in components(adj):
        sub = {v: adj[v] & comp for v in comp}
        for block_edges in _blocks(sub):
            verts = {v for e in block_edges for v in e}
            block = {v: set() for v in verts}
            for e in block_edges:
                a, b = tuple(e)
                block[a].add(b)
                block[b].add(a)
            if not _demoucron(block):
                return False
    return True


def _blocks(adj: Adj) -> List[Set[FrozenSet[str]]]:
    """Biconnected components as edge sets (iterative Hopcroft-Tarjan)."""
    order: Dict[str, int] = {}
    low: Dict[str, int] = {}
    parent: Dict[str, Optional[str]] = {}
    estack: List[FrozenSet[str]] = []
    out: List[Set[FrozenSet[str]]] = []
    counter = 0
    for root in adj:
        if root in order:
            continue
        parent[root] = None
        order[root] = low[root] = counter
        counter += 1
        stack: List[Tuple[str, List[str]]] = [(root, sorted(adj[root]))]
        while stack:
            v, todo = stack[-1]
            if todo:
                w = todo.pop()
                if w not in order:
                    estack.append(frozenset((v, w)))
                    parent[w] = v
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, sorted(adj[w])))
                elif w != parent[v] and order[w] < order[v]:
                    estack.append(frozenset((v, w)))
                    low[v] = min(low[v], order[w])
            else:
                stack.pop()
                p = parent[v]
                if p is None:
                    continue
                low[p] = min(low[p], low[v])
                if low[v] >= order[p]:
                    block: Set[FrozenSet[str]] = set()
                    while estack:
                        e = estack.pop()
                        block.add(e)
                        if e == frozenset((p, v)):
                            break
                    if block:
                        out.append(block)
    return out


def _demoucron(adj: Adj) -> bool:
    """Planarity of a biconnected simple graph by face-by-face embedding."""
    n = len(adj)
    m = sum(len(ns) for ns in adj.values()) // 2
    if n <= 4 or m <= n + 2:
        return True
    if m > 3 * n - 6:
        return False

    cycle = _find_cycle(adj)
    embedded_v: Set[str] = set(cycle)
    embedded_e: Set[FrozenSet[str]] = {
        frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))
    }
    faces: List[List[str]] = [list(cycle), list(reversed(cycle))]

    def fragments() -> List[Tuple[Set[str], Set[FrozenSet[str]], Set[str]]]:
        # A fragment: component of G - embedded vertices, plus its attachments,
        # or a single non-embedded edge between embedded vertices (a chord).
        frags = []
        seen: Set[str] = set()
        for v in sorted(adj):
            if v in embedded_v or v in seen:
                continue
            comp = {v}
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in embedded_v or y in seen:
                        continue
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
            edges: Set[FrozenSet[str]] = set()
            contacts: Set[str] = set()
            for x in comp:
                for y in adj[x]:
                    edges.add(frozenset((x, y)))
                    if y in embedded_v:
                        contacts.add(y)
            frags.append((comp, edges, contacts))
        for v in sorted(embedded_v):
            for w in sorted(adj[v]):
                if w in embedded_v and frozenset((v, w)) not in embedded_e and v < w:
                    frags.append((set(), {frozenset((v, w))}, {v, w}))
        return frags

    while True:
        frags = fragments()
        if not frags:
            return True
        chosen = None
        chosen_faces = None
        for frag in frags:
            admissible = [i for i, f in enumerate(faces) if frag[2] <= set(f)]
            if not admissible:
                return False
            if len(admissible) == 1:
                chosen, chosen_faces = frag, admissible
                break
        if chosen is None:
            chosen = frags[0]
            chosen_faces = [i for i, f in enumerate(faces) if chosen[2] <= set(f)]
        comp, edges, contacts = chosen
        face_idx = chosen_faces[0]
        path = _alpha_path(adj, comp, contacts)
        _embed_path(faces, face_idx, path)
        embedded_v.update(path)
        for i in range(len(path) - 1):
            embedded_e.add(frozenset((path[i], path[i + 1])))


def _find_cycle(adj: Adj) -> List[str]:
    start = sorted(adj)[0]
    parent: Dict[str, Optional[str]] = {start: None}
    on_path: Set[str] = {start}
    stack: List[Tuple[str, List[str]]] = [(start, sorted(adj[start], reverse=True))]
    while stack:
        v, todo = stack[-1]
        if todo:
            w = todo.pop()
            if w not in parent:
                parent[w] = v
                on_path.add(w)
                stack.append((w, sorted(adj[w], reverse=True)))
            elif w != parent[v] and w in on_path:
                cyc = [v]
                x = v
                while x != w:
                    x = parent[x]  # type: ignore[assignment]
                    cyc.append(x)
                return cyc
        else:
            stack.pop()
            on_path.discard(v)
    raise ValueError("acyclic graph has trivial planarity")


def _alpha_path(adj: Adj, comp: Set[str], contacts: Set[str]) -> List[str]:
    """A path through the fragment between two distinct contact vertices."""
    contacts_sorted = sorted(contacts)
    a = contacts_sorted[0]
    if not comp:
        return [a, contacts_sorted[1]]
    starts = sorted(w for w in adj[a] if w in comp)
    first = starts[0]
    parent: Dict[str, Optional[str]] = {first: None}
    stack = [first]
    target = None
    while stack:
        v = stack.pop()
        hits = sorted(w for w in adj[v] if w in contacts and w != a)
        if hits:
            target = hits[0]
            tail = [target, v]
            x = v
            while parent[x] is not None:
                x = parent[x]  # type: ignore[assignment]
                tail.append(x)
            tail.append(a)
            return list(reversed(tail))
        for w in sorted(adj[v]):
            if w in comp and w not in parent:
                parent[w] = v
                stack.append(w)
    raise ValueError("fragment with fewer than two contacts")


def _embed_path(faces: List[List[str]], face_idx: int, path: List[str]) -> None:
    face = faces.pop(face_idx)
    a, b = path[0], path[-1]
    ia = face.index(a)
    rotated = face[ia:] + face[:ia]
    ib = rotated.index(b)
    inner = path[1:-1]
    side1 = rotated[: ib + 1] + list(reversed(inner))
    side2 = rotated[ib:] + [rotated[0]] + inner
    faces.append(side1)
    faces.append(side2)
