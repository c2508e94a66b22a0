"""Functional quivers of set maps, their cycle/tree anatomy, and general quivers.

A set map ``phi: {1..n} -> {1..n}`` determines a quiver with one outgoing
arrow per vertex.  Every connected component is a cycle with trees hanging
off it; the decomposition drives both the enumeration of twisting maps and
the classification of the resulting algebras.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (MalformedQuiverError, NotOneCycleError, OutOfRangeError,
                     RootsNotDistinctError)


@dataclass(frozen=True)
class FunctionalQuiver:
    """Quiver of a set map: vertex ``i`` has a single arrow ``i -> targets[i-1]``.

    Vertices are the 1-based integers ``1..n``.
    """

    targets: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.targets)
        for t in self.targets:
            if not 1 <= t <= n:
                raise OutOfRangeError(f"target {t} outside 1..{n}")

    @property
    def n(self) -> int:
        return len(self.targets)

    def phi(self, v: int) -> int:
        return self.targets[v - 1]

    def preimages(self, v: int) -> List[int]:
        return [j for j in range(1, self.n + 1) if self.phi(j) == v]

    def to_general(self) -> "GeneralQuiver":
        arrows = tuple((f"a{i}", i, self.phi(i)) for i in range(1, self.n + 1))
        return GeneralQuiver(tuple(range(1, self.n + 1)), arrows)


def from_set_map(targets: Sequence[int]) -> FunctionalQuiver:
    return FunctionalQuiver(tuple(targets))


def endo_matrix(fq: FunctionalQuiver, fld) -> list:
    """Matrix of the algebra endomorphism of k^n attached to the set map.

    Basis vector ``e_i`` is sent to the sum of ``e_j`` over the preimages
    ``phi(j) = i``, so column ``i`` has a one in each preimage row.
    """
    zero, one = fld.zero(), fld.one()
    mat = [[zero] * fq.n for _ in range(fq.n)]
    for j in range(1, fq.n + 1):
        mat[j - 1][fq.phi(j) - 1] = one
    return mat


@dataclass
class ComponentInfo:
    """One connected component: its cycle, and tree depths above the cycle."""

    vertices: frozenset
    cycle: Tuple[int, ...]
    depth: Dict[int, int]

    @property
    def s(self) -> int:
        return len(self.cycle)

    @property
    def strict(self) -> bool:
        return all(d == 0 for d in self.depth.values())

    @property
    def loop_vertex(self) -> Optional[int]:
        return self.cycle[0] if self.s == 1 else None

    def tree_roots(self) -> List[int]:
        """Vertices at depth 1 (immediate predecessors of the cycle)."""
        return sorted(v for v, d in self.depth.items() if d == 1)


def components(fq: FunctionalQuiver) -> List[ComponentInfo]:
    """Decompose the quiver; each component is an s-cycle with trees."""
    n = fq.n
    comp_id = [0] * (n + 1)
    comps: List[ComponentInfo] = []
    seen = [False] * (n + 1)
    for start in range(1, n + 1):
        if seen[start]:
            continue
        # walk until we hit a previously seen vertex
        path = []
        v = start
        while not seen[v]:
            seen[v] = True
            path.append(v)
            v = fq.phi(v)
        if comp_id[v]:
            cid = comp_id[v]
            cycle = None
        else:
            # v is on the new path: the tail from v onwards is the cycle
            idx = path.index(v)
            cycle = tuple(path[idx:])
            cid = len(comps) + 1
            comps.append(ComponentInfo(frozenset(), cycle, {}))
        for w in path:
            comp_id[w] = cid
    # gather vertices per component and compute depths by following phi
    members: Dict[int, List[int]] = {}
    for v in range(1, n + 1):
        members.setdefault(comp_id[v], []).append(v)
    out = []
    for cid, comp in enumerate(comps, start=1):
        verts = members[cid]
        on_cycle = set(comp.cycle)
        depth = {}
        for v in verts:
            d, w = 0, v
            while w not in on_cycle:
                d += 1
                w = fq.phi(w)
            depth[v] = d
        # rotate the cycle to start at its smallest vertex
        cyc = list(comp.cycle)
        k = cyc.index(min(cyc))
        cyc = tuple(cyc[k:] + cyc[:k])
        out.append(ComponentInfo(frozenset(verts), cyc, depth))
    out.sort(key=lambda c: min(c.vertices))
    return out


@dataclass(frozen=True)
class GeneralQuiver:
    """A finite quiver with hashable vertex labels and labelled arrows."""

    vertices: Tuple
    arrows: Tuple[Tuple, ...]  # (label, source, target)

    def __post_init__(self):
        vs = set(self.vertices)
        for label, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise MalformedQuiverError(f"arrow {label}: {s}->{t} dangles")

    @property
    def dim(self) -> int:
        """Dimension of the truncated path algebra: vertices + arrows."""
        return len(self.vertices) + len(self.arrows)

    def opposite(self) -> "GeneralQuiver":
        return GeneralQuiver(self.vertices,
                             tuple((lab, t, s) for lab, s, t in self.arrows))

    def is_forest(self) -> bool:
        """True when the underlying directed graph has no (directed) cycle."""
        out_edges: Dict = {v: [] for v in self.vertices}
        for _, s, t in self.arrows:
            out_edges[s].append(t)
        color: Dict = {}

        def visit(v) -> bool:
            color[v] = 1
            for w in out_edges[v]:
                c = color.get(w, 0)
                if c == 1 or (c == 0 and not visit(w)):
                    return False
            color[v] = 2
            return True

        return all(visit(v) for v in self.vertices if color.get(v, 0) == 0)

    def canonical_key(self):
        """A quiver-isomorphism invariant key (exact: minimised over relabellings)."""
        n = len(self.vertices)
        if not self.arrows:
            return (n, ())
        index = {v: i for i, v in enumerate(self.vertices)}
        raw = [(index[s], index[t]) for _, s, t in self.arrows]
        # refine by local degrees to keep the permutation search tiny
        loops = {i: sum(1 for s, t in raw if s == t == i) for i in range(n)}
        outd = {i: sum(1 for s, _ in raw if s == i) for i in range(n)}
        ind = {i: sum(1 for _, t in raw if t == i) for i in range(n)}
        profile = [(outd[i], ind[i], loops[i]) for i in range(n)]
        order = sorted(range(n), key=lambda i: profile[i])
        groups: List[List[int]] = []
        for i in order:
            if groups and profile[groups[-1][-1]] == profile[i]:
                groups[-1].append(i)
            else:
                groups.append([i])
        best = None
        for perm_parts in _product_permutations(groups):
            relabel = {}
            pos = 0
            for part in perm_parts:
                for v in part:
                    relabel[v] = pos
                    pos += 1
            key = tuple(sorted((relabel[s], relabel[t]) for s, t in raw))
            if best is None or key < best:
                best = key
        return (n, best)

    def to_dot(self, colors: Optional[Dict] = None) -> str:
        """Deterministic DOT rendering; vertex colours come from the coloration."""
        lines = ["digraph {"]
        for i, v in enumerate(sorted(self.vertices, key=str)):
            label = str(v)
            if colors is not None and v in colors:
                label += f" : {colors[v]}"
            lines.append(f'  n{i} [label="{label}"];')
        index = {v: i for i, v in enumerate(sorted(self.vertices, key=str))}
        for lab, s, t in sorted(self.arrows, key=lambda a: (str(a[1]), str(a[2]), str(a[0]))):
            lines.append(f'  n{index[s]} -> n{index[t]} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "schema": "quiver/v1",
            "kind": "general",
            "vertices": [str(v) for v in self.vertices],
            "arrows": [[str(lab), str(s), str(t)] for lab, s, t in self.arrows],
        }


def _product_permutations(groups: List[List[int]]):
    """Iterate over per-group permutations (cartesian product of S_groups)."""
    if not groups:
        yield []
        return
    head, rest = groups[0], groups[1:]
    for perm in permutations(head):
        for tail in _product_permutations(rest):
            yield [list(perm)] + tail


def functional_to_dot(fq: FunctionalQuiver, colors: Optional[Dict] = None) -> str:
    return fq.to_general().to_dot(colors)


def functional_to_json(fq: FunctionalQuiver) -> dict:
    return {"schema": "quiver/v1", "kind": "functional",
            "n": fq.n, "map": list(fq.targets)}


def quiver_from_json(doc: dict):
    if doc.get("schema") != "quiver/v1":
        raise ValueError("not a quiver/v1 document")
    if doc["kind"] == "functional":
        return from_set_map(doc["map"])
    vertices = tuple(doc["vertices"])
    arrows = tuple((lab, s, t) for lab, s, t in doc["arrows"])
    return GeneralQuiver(vertices, arrows)


def cibils_transform(fq: FunctionalQuiver, comp: ComponentInfo,
                     colors: Dict[int, object], roots: Tuple) -> GeneralQuiver:
    """Forest obtained from a coloured 1-cycle component.

    Delete the loop vertex together with every arrow ending at it; add two
    fresh vertices labelled "1" and "2"; attach each resulting tree root to
    "1" when its colour is ``roots[0]`` and to "2" when it is ``roots[1]``.
    Original vertices keep their integer labels.
    """
    if comp.s != 1:
        raise NotOneCycleError(f"component cycle has length {comp.s}")
    r1, r2 = roots
    if r1 == r2:
        raise RootsNotDistinctError("the two attachment roots coincide")
    loop = comp.loop_vertex
    keep = sorted(v for v in comp.vertices if v != loop)
    arrows = []
    for v in keep:
        w = fq.phi(v)
        if w != loop:
            arrows.append((f"a{v}", v, w))
    for root in comp.tree_roots():
        color = colors[root]
        if color == r1:
            arrows.append((f"a{root}", root, "1"))
        elif color == r2:
            arrows.append((f"a{root}", root, "2"))
        else:
            raise ValueError(f"tree root {root} coloured {color}, not a root")
    vertices = tuple(keep) + ("1", "2")
    return GeneralQuiver(vertices, tuple(sorted(arrows, key=lambda a: str(a[0]))))


def disjoint_union(a: GeneralQuiver, b: GeneralQuiver) -> GeneralQuiver:
    """Union with labels prefixed to keep them distinct."""
    va = tuple(("L", v) for v in a.vertices)
    vb = tuple(("R", v) for v in b.vertices)
    aa = tuple((("L", lab), ("L", s), ("L", t)) for lab, s, t in a.arrows)
    ab = tuple((("R", lab), ("R", s), ("R", t)) for lab, s, t in b.arrows)
    return GeneralQuiver(va + vb, aa + ab)


# --------------------------------------------------------------------------
# shape classes of set maps
# --------------------------------------------------------------------------

def _tree_encoding(children: Dict[int, List[int]], v: int) -> str:
    return "(" + "".join(sorted(_tree_encoding(children, c)
                                for c in children.get(v, []))) + ")"


def shape_key(targets: Sequence[int]) -> tuple:
    """Canonical form of a set map up to relabelling of {1..n}.

    Each component is encoded as the lexicographically minimal rotation of
    the tuple of canonical rooted-tree encodings around its cycle; the map
    key is the sorted multiset of component encodings.
    """
    fq = from_set_map(targets)
    comps = components(fq)
    keys = []
    for comp in comps:
        on_cycle = set(comp.cycle)
        children: Dict[int, List[int]] = {}
        for v in comp.vertices:
            if v not in on_cycle:
                children.setdefault(fq.phi(v), []).append(v)
        encs = tuple(_tree_encoding(children, c) for c in comp.cycle)
        rotations = [encs[i:] + encs[:i] for i in range(len(encs))]
        keys.append(min(rotations))
    return tuple(sorted(keys))


def shape_classes(n: int) -> List[Tuple[int, ...]]:
    """One representative set map per quiver-isomorphism class (n <= 6)."""
    if n > 6:
        raise ValueError("shape enumeration is limited to n <= 6")
    from itertools import product as iproduct
    seen = {}
    for targets in iproduct(range(1, n + 1), repeat=n):
        key = shape_key(targets)
        if key not in seen:
            seen[key] = targets
    return sorted(seen.values())


def shape_class_sizes(n: int) -> Dict[Tuple[int, ...], int]:
    """Map each representative to the size of its relabelling class."""
    from itertools import product as iproduct
    reps: Dict[tuple, Tuple[int, ...]] = {}
    sizes: Dict[Tuple[int, ...], int] = {}
    for targets in iproduct(range(1, n + 1), repeat=n):
        key = shape_key(targets)
        if key not in reps:
            reps[key] = targets
            sizes[targets] = 0
        sizes[reps[key]] += 1
    return sizes
