"""Immutable IS-A hierarchies.

A :class:`Taxonomy` is built from ``(child, parent)`` edges, validated once, and
indexed so that depth lookups are O(1) and ancestor queries are dictionary
lookups.  Concepts are addressed by dense integer ids (``ConceptId``) assigned
in order of first appearance; every query also accepts the label directly.

Multiple inheritance is allowed.  Depth is the number of edges on a shortest
root-to-concept path, so ``depth(root) == 0``.
"""

from collections import deque
from dataclasses import dataclass

from taxsim.errors import (
    CycleDetected,
    DuplicateEdge,
    EmptyTaxonomy,
    MalformedLine,
    MultipleRoots,
    NoRoot,
    UnknownConcept,
)

ConceptId = int


@dataclass(frozen=True)
class TaxonomyReport:
    concept_count: int
    edge_count: int
    max_depth_D: int
    is_tree: bool

    def lines(self):
        return [
            f"concept_count={self.concept_count}",
            f"edge_count={self.edge_count}",
            f"max_depth_D={self.max_depth_D}",
            f"is_tree={str(self.is_tree).lower()}",
        ]


class Taxonomy:
    """Rooted IS-A hierarchy over interned concept labels.

    Parameters
    ----------
    labels : sequence of str
        Concept labels; position is the ConceptId.
    edges : sequence of (int, int)
        ``(child, parent)`` id pairs, in input order.
    """

    __slots__ = (
        "labels", "edges", "parents", "children", "root", "depth",
        "max_depth", "_index", "_up",
    )

    def __init__(self, labels, edges):
        labels = tuple(labels)
        edges = tuple((int(c), int(p)) for c, p in edges)
        if not edges:
            raise EmptyTaxonomy("taxonomy has no edges")
        index = {}
        for i, label in enumerate(labels):
            _check_label(label)
            if label in index:
                raise ValueError(f"duplicate label {label!r}")
            index[label] = i
        n = len(labels)

        parents = [[] for _ in range(n)]
        children = [[] for _ in range(n)]
        seen = set()
        for c, p in edges:
            if not (0 <= c < n and 0 <= p < n):
                raise ValueError(f"edge ({c}, {p}) out of range")
            if c == p:
                raise CycleDetected([labels[c], labels[c]])
            if (c, p) in seen:
                raise DuplicateEdge(f"{labels[c]}\t{labels[p]}")
            seen.add((c, p))
            parents[c].append(p)
            children[p].append(c)

        cycle = _find_cycle(parents)
        roots = [i for i in range(n) if not parents[i]]
        if not roots:
            raise NoRoot([labels[i] for i in cycle])
        if cycle:
            raise CycleDetected([labels[i] for i in cycle])
        if len(roots) > 1:
            raise MultipleRoots([labels[i] for i in roots])
        root = roots[0]

        depth = [-1] * n
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in children[u]:
                if depth[v] < 0:
                    depth[v] = depth[u] + 1
                    queue.append(v)

        # shortest upward distances to every ancestor, filled parents-first
        up = [None] * n
        for c in _topological_order(parents, children, root):
            dist = {c: 0}
            for p in parents[c]:
                for a, k in up[p].items():
                    if k + 1 < dist.get(a, n):
                        dist[a] = k + 1
            up[c] = dist

        set_ = object.__setattr__
        set_(self, "labels", labels)
        set_(self, "edges", edges)
        set_(self, "parents", tuple(tuple(ps) for ps in parents))
        set_(self, "children", tuple(tuple(cs) for cs in children))
        set_(self, "root", root)
        set_(self, "depth", tuple(depth))
        set_(self, "max_depth", max(depth))
        set_(self, "_index", index)
        set_(self, "_up", tuple(up))

    def __setattr__(self, name, value):
        raise AttributeError("Taxonomy is immutable")

    def __reduce__(self):
        return (Taxonomy, (self.labels, self.edges))

    def __eq__(self, other):
        if not isinstance(other, Taxonomy):
            return NotImplemented
        return self.labels == other.labels and self.edges == other.edges

    def __hash__(self):
        return hash((self.labels, self.edges))

    def __len__(self):
        return len(self.labels)

    def __contains__(self, label):
        return label in self._index

    def __repr__(self):
        return (f"Taxonomy(concepts={len(self.labels)}, edges={len(self.edges)}, "
                f"root={self.labels[self.root]!r}, D={self.max_depth})")

    @classmethod
    def from_edges(cls, pairs):
        """Build from ``(child_label, parent_label)`` pairs."""
        index = {}
        edges = []
        for child, parent in pairs:
            c = index.setdefault(child, len(index))
            p = index.setdefault(parent, len(index))
            edges.append((c, p))
        return cls(list(index), edges)

    def id(self, label) -> ConceptId:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownConcept(label) from None

    def resolve(self, c) -> ConceptId:
        """Accept a ConceptId or a label and return the ConceptId."""
        if isinstance(c, str):
            return self.id(c)
        c = int(c)
        if not 0 <= c < len(self.labels):
            raise UnknownConcept(c)
        return c

    def label(self, c: ConceptId) -> str:
        return self.labels[c]

    def up_distances(self, c):
        """Map each ancestor of ``c`` (including ``c``) to its shortest upward distance."""
        return self._up[self.resolve(c)]


def _check_label(label):
    if not isinstance(label, str) or not label.strip():
        raise ValueError(f"invalid label {label!r}")
    if "\t" in label or "\n" in label or "\r" in label:
        raise ValueError(f"label {label!r} contains a tab or newline")


def _find_cycle(parents):
    """Return the ids on one parent-cycle, or an empty list."""
    n = len(parents)
    state = [0] * n  # 0 unvisited, 1 on stack, 2 done
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, 0)]
        path = [start]
        state[start] = 1
        while stack:
            u, i = stack[-1]
            if i < len(parents[u]):
                stack[-1] = (u, i + 1)
                v = parents[u][i]
                if state[v] == 1:
                    return path[path.index(v):] + [v]
                if state[v] == 0:
                    state[v] = 1
                    stack.append((v, 0))
                    path.append(v)
            else:
                state[u] = 2
                stack.pop()
                path.pop()
    return []


def _topological_order(parents, children, root):
    remaining = [len(ps) for ps in parents]
    order = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in children[u]:
            remaining[v] -= 1
            if remaining[v] == 0:
                queue.append(v)
    return order


def parse_taxonomy(text):
    """Parse a ``child<TAB>parent`` edge list into a :class:`Taxonomy`.

    Blank lines and lines starting with ``#`` are skipped.  The root is the
    single label that never appears in the child column.

    >>> tax = parse_taxonomy("A\\tR\\nB\\tR\\n")
    >>> tax.label(tax.root), tax.max_depth
    ('R', 1)
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    pairs = []
    seen = {}
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedLine(lineno, "expected exactly one TAB separating child and parent")
        child, parent = fields
        if not child.strip() or not parent.strip():
            raise MalformedLine(lineno, "empty label")
        if (child, parent) in seen:
            raise DuplicateEdge(f"line {lineno} repeats line {seen[child, parent]}: {child}\t{parent}")
        seen[child, parent] = lineno
        pairs.append((child, parent))
    if not pairs:
        raise EmptyTaxonomy("no edges found")
    return Taxonomy.from_edges(pairs)


def load_taxonomy(path):
    with open(path, encoding="utf-8") as fh:
        return parse_taxonomy(fh.read())


def serialize_taxonomy(tax):
    """Inverse of :func:`parse_taxonomy`; edges are written in their original order."""
    return "".join(f"{tax.labels[c]}\t{tax.labels[p]}\n" for c, p in tax.edges)


def depth_of(tax, c):
    return tax.depth[tax.resolve(c)]


def ancestors_of(tax, c):
    """All concepts on any upward path from ``c``, including ``c`` and the root."""
    return frozenset(tax.up_distances(c))


def is_ancestor(tax, a, d):
    """True iff ``a`` subsumes ``d``.  Reflexive."""
    return tax.resolve(a) in tax.up_distances(d)


def validate(tax):
    return TaxonomyReport(
        concept_count=len(tax.labels),
        edge_count=len(tax.edges),
        max_depth_D=tax.max_depth,
        is_tree=all(len(ps) == 1 for i, ps in enumerate(tax.parents) if i != tax.root),
    )
