from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.core.exceptions import ImproperColoringError, InvalidColoringError
from app.graph.bits import VertexSet, full_set, iter_vertices, lowest
from app.graph.core import Graph


@dataclass(frozen=True, slots=True)
class Coloring:
    """
    Total map vertex -> color in 1..k with every color class non-empty.

    ``colors[v]`` is the color of vertex ``v``. Properness is a property of
    the pair (graph, coloring) and is checked by :func:`validate_coloring`.
    """

    colors: Tuple[int, ...]

    def __post_init__(self):
        if not self.colors:
            return
        k = max(self.colors)
        if min(self.colors) < 1:
            raise InvalidColoringError(f"colors must be positive, got {min(self.colors)}")
        missing = set(range(1, k + 1)) - set(self.colors)
        if missing:
            raise InvalidColoringError(f"color classes {sorted(missing)} are empty")

    @classmethod
    def from_labels(cls, labels: Iterable) -> "Coloring":
        """Rename arbitrary labels to 1..k in order of first appearance."""
        names: Dict = {}
        colors = []
        for label in labels:
            if label not in names:
                names[label] = len(names) + 1
            colors.append(names[label])
        return cls(tuple(colors))

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    @property
    def n(self) -> int:
        return len(self.colors)

    def class_masks(self) -> Tuple[VertexSet, ...]:
        """Vertex set of each color class; index 0 holds color 1."""
        masks = [0] * self.k
        for v, color in enumerate(self.colors):
            masks[color - 1] |= 1 << v
        return tuple(masks)

    def relabeled(self, mapping: Dict[int, int]) -> "Coloring":
        return Coloring(tuple(mapping[color] for color in self.colors))

    def as_list(self) -> List[int]:
        return list(self.colors)


@dataclass(frozen=True, slots=True)
class BAnalysis:
    """b-vertices of each color class of a proper coloring."""

    b_vertices_per_color: Tuple[VertexSet, ...]

    @property
    def is_b_coloring(self) -> bool:
        return all(self.b_vertices_per_color)

    def b_vertices(self, color: int) -> List[int]:
        return list(iter_vertices(self.b_vertices_per_color[color - 1]))

    def colors_without_b_vertex(self) -> List[int]:
        return [i + 1 for i, mask in enumerate(self.b_vertices_per_color) if not mask]


def find_conflict(g: Graph, colors: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First edge whose endpoints share a color, if any."""
    for u in range(g.n):
        for v in iter_vertices(g.adj[u] >> (u + 1)):
            w = u + 1 + v
            if colors[u] == colors[w]:
                return (u, w)
    return None


def neighbor_color_sets(g: Graph, c: Coloring) -> List[int]:
    """Per vertex, the bit set of colors among its neighbours (bit i-1 for color i)."""
    colors = c.colors
    result = []
    for v in range(g.n):
        seen = 0
        for u in iter_vertices(g.adj[v]):
            seen |= 1 << (colors[u] - 1)
        result.append(seen)
    return result


def validate_coloring(g: Graph, c: Coloring) -> BAnalysis:
    """
    Check properness and collect b-vertices.

    Raises ImproperColoringError naming the first monochromatic edge.
    """
    if c.n != g.n:
        raise InvalidColoringError(f"coloring has {c.n} entries for a graph on {g.n} vertices")
    conflict = find_conflict(g, c.colors)
    if conflict is not None:
        raise ImproperColoringError(conflict, c.colors[conflict[0]])

    everyone = full_set(c.k)
    b_masks = [0] * c.k
    for v, seen in enumerate(neighbor_color_sets(g, c)):
        own = 1 << (c.colors[v] - 1)
        if seen | own == everyone:
            b_masks[c.colors[v] - 1] |= 1 << v
    return BAnalysis(tuple(b_masks))


def is_b_coloring(g: Graph, c: Coloring) -> bool:
    try:
        return validate_coloring(g, c).is_b_coloring
    except ImproperColoringError:
        return False


def first_b_vertex(analysis: BAnalysis, color: int) -> int:
    return lowest(analysis.b_vertices_per_color[color - 1])
