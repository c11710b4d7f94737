"""
Servicio de Número Apex
=======================

Número apex: mínimo |X| tal que G − X es un árbol (0 si G ya es árbol).

Búsqueda principal (ramificación y poda, profundización iterativa en el
presupuesto b):
- todo ciclo tiene un vértice en X: se toma un ciclo corto c_1..c_r y la
  rama i borra c_i y marca c_1..c_{i−1} como conservados (ramas disjuntas)
- el residual es conexo: si hay varias componentes, las que no contienen a
  los conservados se borran enteras
- cota ciclomática: borrar un vértice de grado d baja μ = m − n + c en a lo
  sumo max(d − 1, 0), así que la suma de los b mayores debe alcanzar μ

Se recogen todas las soluciones mínimas y el testigo es la menor como tupla
ordenada. `apex_number_bruteforce` es el oráculo por subconjuntos.
"""

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from core.config import settings
from core.exceptions import DomainError, InfeasibleError, UsageError
from core.logger import get_logger
from models.certificates import ApexCertificate
from models.graph import Graph, iter_bits
from services.graph_service import (
    component_masks,
    cross_edge_count,
    delete_vertices,
    edge_count_mask,
    is_connected,
    is_regular,
    is_tree,
    is_tree_mask,
)

logger = get_logger("apex")


# ======================================================================
# Ramificación y poda
# ======================================================================

class _ApexSearch:
    """Búsqueda acotada por presupuesto sobre máscaras de vértices vivos"""

    def __init__(self, adj: Sequence[int], collect: bool):
        self.adj = adj
        self.collect = collect
        self.solutions: List[int] = []

    def feasible(self, alive: int, budget: int) -> bool:
        self.solutions = []
        self._search(alive, 0, budget, 0)
        return bool(self.solutions)

    def _search(self, alive: int, kept: int, budget: int, removed: int) -> bool:
        """True si hay que cortar toda la búsqueda (modo sin recolección)"""
        comps = component_masks(self.adj, alive)
        if len(comps) > 1:
            return self._choose_component(comps, alive, kept, budget, removed)

        if is_tree_mask(self.adj, alive):
            self.solutions.append(removed)
            return not self.collect
        if budget == 0 or not self._cyclomatic_ok(alive, kept, budget, 1):
            return False

        cycle = shortest_cycle(self.adj, alive)
        earlier = 0
        for v in cycle:
            bit = 1 << v
            if not kept & bit:
                if self._search(alive & ~bit, kept | earlier, budget - 1, removed | bit):
                    return True
            earlier |= bit
        return False

    def _choose_component(self, comps: List[int], alive: int, kept: int, budget: int, removed: int) -> bool:
        if kept:
            holders = [comp for comp in comps if comp & kept]
            if len(holders) > 1:
                return False
            candidates = holders
        else:
            candidates = sorted(comps, key=lambda comp: comp & -comp)
        for comp in candidates:
            dropped = alive & ~comp
            cost = dropped.bit_count()
            if cost > budget:
                continue
            if self._search(comp, kept, budget - cost, removed | dropped):
                return True
        return False

    def _cyclomatic_ok(self, alive: int, kept: int, budget: int, components: int) -> bool:
        mu = edge_count_mask(self.adj, alive) - alive.bit_count() + components
        if mu <= 0:
            return True
        gains = sorted(
            (max((self.adj[v] & alive).bit_count() - 1, 0) for v in iter_bits(alive & ~kept)),
            reverse=True,
        )
        return sum(gains[:budget]) >= mu


def shortest_cycle(adj: Sequence[int], alive: int) -> Tuple[int, ...]:
    """
    Vértices de un ciclo corto del subgrafo inducido por `alive`

    BFS desde cada vértice; la primera arista que cierra entre dos ramas da un
    ciclo formado por los dos caminos hasta su ancestro común. Se devuelve el
    menor de todos los BFS.
    """
    best: Optional[Tuple[int, ...]] = None
    for root in iter_bits(alive):
        parent = {root: root}
        depth = {root: 0}
        frontier = [root]
        found = None
        while frontier and found is None:
            nxt = []
            for u in frontier:
                for w in iter_bits(adj[u] & alive):
                    if w not in parent:
                        parent[w] = u
                        depth[w] = depth[u] + 1
                        nxt.append(w)
                    elif w != parent[u] and depth[w] >= depth[u]:
                        found = (u, w)
                        break
                if found:
                    break
            frontier = nxt
        if found is None:
            continue
        cycle = _close_cycle(parent, *found)
        if best is None or len(cycle) < len(best):
            best = cycle
            if len(best) == 3:
                break
    if best is None:
        raise DomainError("El subgrafo no tiene ciclos")
    return tuple(sorted(best))


def _close_cycle(parent, u: int, w: int) -> Tuple[int, ...]:
    ancestors = [u]
    while parent[ancestors[-1]] != ancestors[-1]:
        ancestors.append(parent[ancestors[-1]])
    on_path = set(ancestors)
    other = [w]
    while other[-1] not in on_path:
        other.append(parent[other[-1]])
    lca = other[-1]
    return tuple(ancestors[:ancestors.index(lca) + 1] + other[:-1])


def _lower_bound(adj: Sequence[int], alive: int) -> int:
    mu = edge_count_mask(adj, alive) - alive.bit_count() + len(component_masks(adj, alive))
    gains = sorted((max((adj[v] & alive).bit_count() - 1, 0) for v in iter_bits(alive)), reverse=True)
    bound, total = 0, 0
    while total < mu and bound < len(gains):
        total += gains[bound]
        bound += 1
    return bound


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DomainError("El número apex solo está definido para grafos conexos")


def _certificate(g: Graph, removed: int) -> ApexCertificate:
    witness = tuple(iter_bits(removed))
    residual = delete_vertices(g, witness) if witness else g
    return ApexCertificate(k=len(witness), witness=witness, residual=residual)


def apex_number(g: Graph) -> ApexCertificate:
    """
    Número apex con certificado

    Returns:
        ApexCertificate con el testigo lexicográficamente mínimo

    Raises:
        DomainError: grafo desconexo
    """
    _require_connected(g)
    if is_tree(g):
        return ApexCertificate(k=0, witness=(), residual=g)
    search = _ApexSearch(g.adj, collect=True)
    budget = max(1, _lower_bound(g.adj, g.full_mask))
    while not search.feasible(g.full_mask, budget):
        budget += 1
    best = min(search.solutions, key=lambda mask: tuple(iter_bits(mask)))
    return _certificate(g, best)


def apex_at_most(g: Graph, budget: int) -> bool:
    """True si algún X con |X| ≤ budget deja un árbol (g conexo)"""
    if is_tree(g):
        return True
    if budget <= 0 or _lower_bound(g.adj, g.full_mask) > budget:
        return False
    return _ApexSearch(g.adj, collect=False).feasible(g.full_mask, budget)


def apex_number_bruteforce(g: Graph) -> ApexCertificate:
    """
    Oráculo: subconjuntos por tamaño creciente, lexicográficos dentro del tamaño

    Raises:
        DomainError: grafo desconexo
        InfeasibleError: n > BRUTEFORCE_MAX_ORDER
    """
    if g.n > settings.BRUTEFORCE_MAX_ORDER:
        raise InfeasibleError(
            f"apex_number_bruteforce admite n ≤ {settings.BRUTEFORCE_MAX_ORDER}, recibido n={g.n}",
            estimate=2 ** g.n,
        )
    _require_connected(g)
    full = g.full_mask
    for size in range(g.n):
        for X in combinations(range(g.n), size):
            removed = sum(1 << v for v in X)
            if is_tree_mask(g.adj, full & ~removed):
                return _certificate(g, removed)
    raise DomainError("Ningún subconjunto deja un árbol")


def is_k_apex_tree(g: Graph, k: int) -> bool:
    """
    True si y solo si el número apex de g es exactamente k

    Un grafo desconexo no es k-apex tree para ningún k.
    """
    if k < 0:
        raise UsageError(f"k debe ser ≥ 0, recibido {k}")
    if not is_connected(g):
        return False
    if k == 0:
        return is_tree(g)
    return apex_at_most(g, k) and not apex_at_most(g, k - 1)


# ======================================================================
# Auditoría de no regularidad
# ======================================================================

def regular_witness(g: Graph, k: int, degree: int):
    """Cantidades de la prueba de no regularidad sobre un k-apex tree m-regular"""
    from schemas.apex import RegularWitness
    from services.graph_io_service import write_graph6

    cert = apex_number(g)
    n, m = g.n, degree
    l = cross_edge_count(g, cert.witness)
    X = set(cert.witness)
    survivors = [v for v in range(n) if v not in X]
    pendant_ok = all(
        g.degrees[survivors[i]] <= k + 1
        for i, d in enumerate(cert.residual.degrees) if d == 1
    )
    return RegularWitness(
        graph6=write_graph6(g),
        degree=m,
        witness=list(cert.witness),
        cross_edges=l,
        identity_ok=l == m * n - m * k - 2 * n + 2 * k + 2,
        bound_ok=l <= m * k,
        chain_ok=m * (n - 2 * k) <= 2 * n - 2 * k - 2,
        pendant_ok=pendant_ok,
    )


def audit_nonregularity(k: int, n: int, jobs: Optional[int] = None, strategy=None, allow_large: bool = False):
    """
    Busca k-apex trees regulares de orden n

    Para n ≥ 4k − 1 la lista vacía confirma la no regularidad en ese orden;
    por debajo del umbral los testigos regulares son legítimos.
    """
    from schemas.apex import NonRegularityAudit
    from services.enumeration_service import enumerate_k_apex_trees

    if k < 2:
        raise UsageError(f"La auditoría de no regularidad requiere k ≥ 2, recibido k={k}")
    scanned = 0
    witnesses = []
    for g in enumerate_k_apex_trees(k, n, strategy=strategy, jobs=jobs, allow_large=allow_large):
        scanned += 1
        degree = is_regular(g)
        if degree is not None:
            witnesses.append(regular_witness(g, k, degree))
    threshold = 4 * k - 1
    logger.info(f"[APEX] no regularidad k={k} n={n}: {scanned} grafos, {len(witnesses)} regulares")
    return NonRegularityAudit(
        k=k,
        n=n,
        scanned=scanned,
        regular_witnesses=witnesses,
        threshold=threshold,
        theorem_consistent=n < threshold or not witnesses,
    )
