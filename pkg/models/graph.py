"""
Modelo de Grafo
===============

Grafo simple no dirigido con vértices 0..n−1, inmutable después de construido.

La adyacencia se guarda como una tupla de máscaras de bits: el bit v de adj[u]
vale 1 si u~v. Todas las "mutaciones" (borrar vértices, subdividir aristas)
devuelven un grafo nuevo, así que un Graph se puede compartir entre hilos y
enviar a otros procesos sin sincronización.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from core.exceptions import DomainError, EmptyGraphError
from models.enums import EdgeKind

Edge = Tuple[int, int]


class Graph:
    """
    Grafo simple, finito, con etiquetas 0..n−1

    Invariantes:
    - sin lazos ni aristas paralelas
    - todo extremo está en 0..n−1
    - n ≥ 1 (el grafo vacío no tiene uso en este dominio)
    """

    __slots__ = ("n", "adj", "_degrees", "_edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not isinstance(n, int) or n < 1:
            raise EmptyGraphError(f"El grafo debe tener al menos un vértice (n={n})")
        masks = [0] * n
        for edge in edges:
            u, v = (int(x) for x in edge)
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"Arista ({u}, {v}) fuera del rango 0..{n - 1}")
            if u == v:
                raise DomainError(f"Lazo en el vértice {u}: solo se admiten grafos simples")
            if (masks[u] >> v) & 1:
                raise DomainError(f"Arista repetida ({u}, {v}): solo se admiten grafos simples")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._init(tuple(masks))

    def _init(self, masks: Tuple[int, ...]) -> None:
        object.__setattr__(self, "n", len(masks))
        object.__setattr__(self, "adj", masks)
        object.__setattr__(self, "_degrees", None)
        object.__setattr__(self, "_edges", None)

    @classmethod
    def from_adjacency(cls, masks: Iterable[int]) -> "Graph":
        """Construcción rápida desde máscaras simétricas ya validadas"""
        masks = tuple(masks)
        if not masks:
            raise EmptyGraphError("El grafo debe tener al menos un vértice (n=0)")
        graph = cls.__new__(cls)
        graph._init(masks)
        return graph

    def __setattr__(self, name, value):
        raise AttributeError("Graph es inmutable")

    def __reduce__(self):
        return (Graph.from_adjacency, (self.adj,))

    # ------------------------------------------------------------------
    # Estructura
    # ------------------------------------------------------------------

    @property
    def degrees(self) -> Tuple[int, ...]:
        if self._degrees is None:
            object.__setattr__(self, "_degrees", tuple(mask.bit_count() for mask in self.adj))
        return self._degrees

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Aristas (u, v) con u < v en orden lexicográfico"""
        if self._edges is None:
            edges = []
            for u, mask in enumerate(self.adj):
                rest = mask >> (u + 1)
                v = u + 1
                while rest:
                    if rest & 1:
                        edges.append((u, v))
                    rest >>= 1
                    v += 1
            object.__setattr__(self, "_edges", tuple(edges))
        return self._edges

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def iter_bits(mask: int) -> Iterator[int]:
    """Índices de los bits encendidos, de menor a mayor"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class EdgeClass:
    """Clase de una arista: simétrica si y solo si gap = 0"""
    kind: EdgeKind
    gap: int

    @classmethod
    def of(cls, du: int, dv: int) -> "EdgeClass":
        gap = abs(du - dv)
        return cls(EdgeKind.SYMMETRIC if gap == 0 else EdgeKind.ASYMMETRIC, gap)


@dataclass(frozen=True)
class DegreePairSpectrum:
    """
    Conteos c_{a,b} de aristas por par de grados (a ≤ b)

    Es el estadístico suficiente del índice de Randić y de la simetría de aristas.
    """
    counts: Tuple[Tuple[Tuple[int, int], int], ...] = field(default=())

    @classmethod
    def from_mapping(cls, counts: Mapping[Tuple[int, int], int]) -> "DegreePairSpectrum":
        merged: Dict[Tuple[int, int], int] = {}
        for (a, b), c in counts.items():
            key = (min(a, b), max(a, b))
            merged[key] = merged.get(key, 0) + c
        return cls(tuple(sorted((pair, c) for pair, c in merged.items() if c)))

    def get(self, a: int, b: int) -> int:
        key = (min(a, b), max(a, b))
        for pair, c in self.counts:
            if pair == key:
                return c
        return 0

    def items(self) -> Tuple[Tuple[Tuple[int, int], int], ...]:
        return self.counts

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def asymmetric(self) -> int:
        return sum(c for (a, b), c in self.counts if a != b)

    def asymmetric_with_gap(self, gap: int) -> int:
        return sum(c for (a, b), c in self.counts if b - a == gap)

    @property
    def max_gap(self) -> int:
        return max((b - a for (a, b), _ in self.counts), default=0)

    def as_dict(self) -> Dict[str, int]:
        """Forma JSON: {"a,b": c}"""
        return {f"{a},{b}": c for (a, b), c in self.counts}
