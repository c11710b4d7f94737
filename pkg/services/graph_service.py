"""
Servicio de Grafos
==================

Predicados estructurales y clasificación de aristas.

Las funciones que terminan en `_mask` trabajan sobre el subgrafo inducido por
el conjunto de vértices `alive` (máscara de bits) sin construir grafos nuevos;
las usan la búsqueda de apex y la enumeración.
"""

from collections import Counter
from typing import Iterable, List, Optional, Sequence, Tuple

from core.exceptions import EmptyGraphError, UsageError
from models.graph import DegreePairSpectrum, Edge, EdgeClass, Graph, iter_bits


def degree(g: Graph, v: int) -> int:
    """Número de aristas incidentes a v"""
    if not 0 <= v < g.n:
        raise UsageError(f"Vértice {v} fuera de rango (n={g.n})")
    return g.degrees[v]


def delete_vertices(g: Graph, X: Iterable[int]) -> Graph:
    """
    Subgrafo inducido por V(g)∖X

    Los vértices sobrevivientes se reetiquetan 0..n−|X|−1 en orden ascendente
    de su etiqueta original.
    """
    removed = 0
    for v in X:
        if not 0 <= v < g.n:
            raise UsageError(f"Vértice {v} fuera de rango (n={g.n})")
        removed |= 1 << v
    alive = g.full_mask & ~removed
    if not alive:
        raise EmptyGraphError("Borrar todos los vértices deja el grafo vacío")
    return induced_subgraph(g, alive)


def induced_subgraph(g: Graph, alive: int) -> Graph:
    survivors = list(iter_bits(alive))
    position = {v: i for i, v in enumerate(survivors)}
    masks = []
    for v in survivors:
        mask = 0
        for u in iter_bits(g.adj[v] & alive):
            mask |= 1 << position[u]
        masks.append(mask)
    return Graph.from_adjacency(masks)


def is_connected(g: Graph) -> bool:
    """True si g tiene una sola componente (un vértice aislado es conexo)"""
    return reach_mask(g.adj, g.full_mask, 1) == g.full_mask


def is_tree(g: Graph) -> bool:
    """Conexo y con exactamente n−1 aristas"""
    return g.m == g.n - 1 and is_connected(g)


def is_regular(g: Graph) -> Optional[int]:
    """Grado común si todos los grados coinciden; None en otro caso"""
    degrees = set(g.degrees)
    return degrees.pop() if len(degrees) == 1 else None


def classify_edges(g: Graph) -> Tuple[DegreePairSpectrum, List[Tuple[Edge, EdgeClass]]]:
    """
    Clasifica cada arista como simétrica o asimétrica

    Returns:
        (espectro c_{a,b}, lista de (arista, EdgeClass) en orden de aristas)
    """
    deg = g.degrees
    counts: Counter = Counter()
    classes = []
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        counts[(min(a, b), max(a, b))] += 1
        classes.append(((u, v), EdgeClass.of(a, b)))
    return DegreePairSpectrum.from_mapping(counts), classes


def degree_spectrum(g: Graph) -> DegreePairSpectrum:
    deg = g.degrees
    counts: Counter = Counter()
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        counts[(a, b) if a <= b else (b, a)] += 1
    return DegreePairSpectrum.from_mapping(counts)


def components(g: Graph) -> List[Tuple[int, ...]]:
    return [tuple(iter_bits(mask)) for mask in component_masks(g.adj, g.full_mask)]


def cyclomatic_number(g: Graph) -> int:
    """μ = m − n + c"""
    return g.m - g.n + len(component_masks(g.adj, g.full_mask))


def cross_edge_count(g: Graph, X: Iterable[int]) -> int:
    """Aristas con un extremo en X y el otro fuera de X"""
    inside = 0
    for v in X:
        inside |= 1 << v
    outside = g.full_mask & ~inside
    return sum((g.adj[v] & outside).bit_count() for v in iter_bits(inside))


# ======================================================================
# Primitivas sobre máscaras
# ======================================================================

def reach_mask(adj: Sequence[int], alive: int, seed: int) -> int:
    """Vértices de `alive` alcanzables desde la máscara `seed`"""
    seen = seed & alive
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def component_masks(adj: Sequence[int], alive: int) -> List[int]:
    comps = []
    rest = alive
    while rest:
        comp = reach_mask(adj, alive, rest & -rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def edge_count_mask(adj: Sequence[int], alive: int) -> int:
    return sum((adj[v] & alive).bit_count() for v in iter_bits(alive)) // 2


def is_tree_mask(adj: Sequence[int], alive: int) -> bool:
    if not alive:
        return False
    if edge_count_mask(adj, alive) != alive.bit_count() - 1:
        return False
    return reach_mask(adj, alive, alive & -alive) == alive


def is_connected_mask(adj: Sequence[int], alive: int) -> bool:
    return bool(alive) and reach_mask(adj, alive, alive & -alive) == alive
