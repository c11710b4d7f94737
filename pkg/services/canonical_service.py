"""
Servicio de Forma Canónica
==========================

Etiquetado canónico exacto de grafos pequeños.

Algoritmo:
---------
1. Refinamiento equitativo: cada celda se parte según cuántos vecinos tiene
   cada vértice en cada celda; las subceldas quedan en su lugar, ordenadas por
   firma. La partición inicial es una sola celda, así que el primer paso
   separa por grado.
2. Individualización: se elige la primera celda no unitaria y se prueba cada
   vértice como celda unitaria delante del resto, refinando de nuevo.
3. Cada hoja (partición discreta) da un etiquetado; el canónico es el de
   mayor clave (tupla de filas de adyacencia reetiquetadas).

Podas por automorfismos:
- dos hojas con la misma clave dan un automorfismo; si la hoja actual
  coincide con una anterior, todo el subárbol desde donde divergen los
  caminos es imagen de uno ya explorado y se abandona
- los automorfismos que fijan el prefijo individualizado unen órbitas entre
  los candidatos de la celda; solo se explora un representante por órbita

El código canónico es la cadena graph6 del grafo reetiquetado, así que dos
grafos tienen el mismo código si y solo si son isomorfos.
"""

from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from models.graph import Graph, iter_bits
from services.graph_io_service import encode_graph6

Cells = List[Tuple[int, ...]]


def canonical_labeling(g: Graph) -> Tuple[int, ...]:
    """
    Etiquetado canónico

    Returns:
        lab, con lab[i] = vértice original que recibe la etiqueta i
    """
    search = _CanonicalSearch(g.adj)
    search.run()
    return search.best_lab


def canonical_form(g: Graph) -> Tuple[str, Graph]:
    """(código canónico, grafo reetiquetado canónicamente)"""
    rows = relabel(g.adj, canonical_labeling(g))
    return encode_graph6(rows), Graph.from_adjacency(rows)


def canonical_code(g: Graph) -> str:
    return encode_graph6(canonical_rows(g.adj))


def canonical_rows(adj: Sequence[int]) -> Tuple[int, ...]:
    """Máscaras de adyacencia del representante canónico"""
    search = _CanonicalSearch(adj)
    search.run()
    return search.best_key


def relabel(adj: Sequence[int], lab: Sequence[int]) -> Tuple[int, ...]:
    position = [0] * len(adj)
    for i, v in enumerate(lab):
        position[v] = i
    rows = []
    for v in lab:
        mask = 0
        for u in iter_bits(adj[v]):
            mask |= 1 << position[u]
        rows.append(mask)
    return tuple(rows)


def refine(adj: Sequence[int], cells: Cells) -> Cells:
    """Refinamiento equitativo estable de una partición ordenada"""
    while True:
        masks = [_cell_mask(cell) for cell in cells]
        refined: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple((adj[v] & mask).bit_count() for mask in masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) == 1:
                refined.append(cell)
                continue
            changed = True
            for signature in sorted(groups):
                refined.append(tuple(groups[signature]))
        cells = refined
        if not changed:
            return cells


def _cell_mask(cell: Sequence[int]) -> int:
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


class _CanonicalSearch:
    """Búsqueda con retroceso sobre el árbol de individualización-refinamiento"""

    def __init__(self, adj: Sequence[int]):
        self.adj = tuple(adj)
        self.n = len(adj)
        self.best_key: Optional[Tuple[int, ...]] = None
        self.best_lab: Optional[Tuple[int, ...]] = None
        self.best_path: Tuple[int, ...] = ()
        self.automorphisms: List[Tuple[int, ...]] = []

    def run(self) -> None:
        self._visit(refine(self.adj, [tuple(range(self.n))]), ())

    def _visit(self, cells: Cells, path: Tuple[int, ...]) -> Optional[int]:
        """Devuelve la profundidad a la que hay que retroceder, o None"""
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            return self._leaf(cells, path)
        cell = cells[target]
        explored: List[int] = []
        for v in sorted(cell):
            if explored and self._in_explored_orbit(v, explored, path):
                continue
            rest = tuple(u for u in cell if u != v)
            child = cells[:target] + [(v,), rest] + cells[target + 1:]
            jump = self._visit(refine(self.adj, child), path + (v,))
            explored.append(v)
            if jump is not None and jump < len(path):
                return jump
        return None

    def _leaf(self, cells: Cells, path: Tuple[int, ...]) -> Optional[int]:
        lab = tuple(cell[0] for cell in cells)
        key = relabel(self.adj, lab)
        if self.best_key is None or key > self.best_key:
            self.best_key, self.best_lab, self.best_path = key, lab, path
            return None
        if key == self.best_key:
            gamma = [0] * self.n
            for mine, theirs in zip(lab, self.best_lab):
                gamma[mine] = theirs
            self.automorphisms.append(tuple(gamma))
            depth = 0
            while depth < len(path) and depth < len(self.best_path) and path[depth] == self.best_path[depth]:
                depth += 1
            return depth
        return None

    def _in_explored_orbit(self, v: int, explored: List[int], path: Tuple[int, ...]) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if any(gamma[p] != p for p in path):
                continue
            for x in range(self.n):
                a, b = find(x), find(gamma[x])
                if a != b:
                    parent[a] = b
        root = find(v)
        return any(find(u) == root for u in explored)


# ======================================================================
# Oráculo por fuerza bruta (solo para n pequeño)
# ======================================================================

def are_isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Prueba las n! biyecciones; solo para verificar canonical_code"""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    target = set(h.edges)
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges):
            return True
    return False
