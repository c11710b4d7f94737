"""
Servicio de Enumeración
=======================

Generación exhaustiva libre de isomorfos.

Grafos conexos (aumentación canónica por vértices):
--------------------------------------------------
Cada hijo de un padre P de orden n−1 es P + v con N(v) = S, S ≠ ∅. El hijo
se acepta solo si v puede ser el vértice de borrado canónico: entre los
vértices que no son de corte se toman los de grado mínimo, luego los de
mayor firma (grados vecinos ordenados) y, de esos, el de mayor etiqueta
canónica w. Se acepta si v está en el conjunto y G − w ≅ P. Los hijos
repetidos de un mismo padre se eliminan por código canónico; hijos de
padres distintos nunca coinciden.

k-apex trees:
------------
- Estrategia A: filtra enumerate_connected por número apex.
- Estrategia B: árboles libres de orden n−k más k vértices nuevos con
  vecindades S_1 ≤ ... ≤ S_k en el árbol y cualquier conjunto de aristas
  entre ellos. Un vértice nuevo con un solo vecino en el árbol daría número
  apex < k y se descarta antes de construir.

Todos los resultados se ordenan por código canónico, así que la salida no
depende del número de procesos.
"""

import heapq
import time
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.config import settings
from core.exceptions import ConsistencyError, InfeasibleError, UsageError
from core.logger import get_logger
from core.workers import chunked, map_ordered
from models.enums import EnumerationStrategy
from models.graph import Graph, iter_bits
from schemas.enumeration import EnumerationSummary
from services.canonical_service import are_isomorphic_bruteforce, canonical_code, canonical_labeling, relabel
from services.graph_io_service import encode_graph6, parse_graph6
from services.graph_service import is_connected, is_connected_mask

logger = get_logger("enumeration")

# Clases de grafos conexos por orden (n = 0..12), para estimar costos
CONNECTED_COUNTS = (
    1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571, 1006700565, 164059830476,
)
FREE_TREE_COUNTS = (1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159)

CACHED_LEVELS = 8
PARENT_CHUNK = 64

_LEVELS: Dict[int, Tuple[str, ...]] = {1: ("@",)}


# ======================================================================
# Grafos conexos
# ======================================================================

def _check_connected_guard(n: int, allow_large: bool) -> None:
    if n < 1:
        raise UsageError(f"n debe ser ≥ 1, recibido {n}")
    if n > settings.MAX_CONNECTED_ORDER and not allow_large:
        estimate = CONNECTED_COUNTS[n] if n < len(CONNECTED_COUNTS) else None
        raise InfeasibleError(
            f"enumerate_connected({n}) supera MAX_CONNECTED_ORDER={settings.MAX_CONNECTED_ORDER}; "
            "use --allow-large para forzar",
            estimate=estimate,
        )


def connected_codes(n: int, jobs: Optional[int] = None) -> Tuple[str, ...]:
    """Códigos canónicos de los grafos conexos de orden n, ordenados"""
    if n in _LEVELS:
        return _LEVELS[n]
    codes = tuple(_merged_children(n, jobs))
    if n <= CACHED_LEVELS:
        _LEVELS[n] = codes
    return codes


def iter_connected_codes(n: int, jobs: Optional[int] = None) -> Iterator[str]:
    """Como connected_codes, pero por encima de CACHED_LEVELS el nivel no se guarda"""
    if n <= CACHED_LEVELS or n in _LEVELS:
        yield from connected_codes(n, jobs)
        return
    yield from _merged_children(n, jobs)


def _merged_children(n: int, jobs: Optional[int]) -> Iterator[str]:
    # cada bloque de padres devuelve sus hijos ordenados; hijos de padres
    # distintos nunca coinciden, así que la mezcla no repite códigos
    parents = connected_codes(n - 1, jobs)
    started = time.perf_counter()
    chunks = map_ordered(_children_of_chunk, list(chunked(parents, PARENT_CHUNK)), jobs)
    count = 0
    for code in heapq.merge(*chunks):
        count += 1
        yield code
    logger.info(f"[ENUM] orden {n}: {count} grafos conexos ({time.perf_counter() - started:.2f}s)")


def enumerate_connected(n: int, jobs: Optional[int] = None, allow_large: bool = False) -> Iterator[Graph]:
    """
    Un representante por clase de grafos conexos de orden n

    Se emiten en orden ascendente de código canónico.

    Raises:
        UsageError: n < 1
        InfeasibleError: n > MAX_CONNECTED_ORDER sin allow_large
    """
    _check_connected_guard(n, allow_large)
    for code in iter_connected_codes(n, jobs):
        yield parse_graph6(code)


def _children_of_chunk(parent_codes: Sequence[str]) -> List[str]:
    children = []
    for code in parent_codes:
        children.extend(_children(code))
    return children


def _children(parent_code: str) -> List[str]:
    parent = parse_graph6(parent_code)
    p = parent.n
    v = p
    full = (1 << (p + 1)) - 1
    accepted = set()
    for S in range(1, 1 << p):
        adj = list(parent.adj) + [S]
        for u in iter_bits(S):
            adj[u] |= 1 << v
        degrees = [mask.bit_count() for mask in adj]
        deg_v = degrees[v]

        if any(degrees[u] < deg_v and is_connected_mask(adj, full & ~(1 << u)) for u in range(p)):
            continue
        ties = [u for u in range(p) if degrees[u] == deg_v and is_connected_mask(adj, full & ~(1 << u))]
        ties.append(v)
        if len(ties) > 1:
            signatures = {u: sorted(degrees[x] for x in iter_bits(adj[u])) for u in ties}
            best = max(signatures.values())
            if signatures[v] != best:
                continue
            ties = [u for u in ties if signatures[u] == best]

        lab = canonical_labeling(Graph.from_adjacency(adj))
        if len(ties) > 1:
            position = {u: i for i, u in enumerate(lab)}
            w = max(ties, key=position.__getitem__)
            if w != v:
                reduced = [0] * p
                survivors = [x for x in range(p + 1) if x != w]
                index = {x: i for i, x in enumerate(survivors)}
                for x in survivors:
                    for y in iter_bits(adj[x] & ~(1 << w)):
                        reduced[index[x]] |= 1 << index[y]
                if canonical_code(Graph.from_adjacency(reduced)) != parent_code:
                    continue
        accepted.add(encode_graph6(relabel(adj, lab)))
    return sorted(accepted)


def enumerate_connected_bruteforce(n: int) -> List[Graph]:
    """
    Oráculo para n ≤ 5: todos los grafos etiquetados, filtrados a conexos y
    deduplicados con isomorfismo por fuerza bruta
    """
    if n > 5:
        raise InfeasibleError("El oráculo etiquetado solo admite n ≤ 5", estimate=2 ** (n * (n - 1) // 2))
    pairs = list(combinations(range(n), 2))
    representatives: List[Graph] = []
    for bits in range(1 << len(pairs)):
        g = Graph(n, [pair for i, pair in enumerate(pairs) if (bits >> i) & 1])
        if not is_connected(g):
            continue
        if not any(are_isomorphic_bruteforce(g, h) for h in representatives):
            representatives.append(g)
    return representatives


# ======================================================================
# Árboles libres
# ======================================================================

def _rooted_code(adj: Sequence[int], root: int, parent: int) -> str:
    children = sorted(_rooted_code(adj, c, root) for c in iter_bits(adj[root]) if c != parent)
    return "(" + "".join(children) + ")"


def _centers(adj: Sequence[int]) -> List[int]:
    n = len(adj)
    degrees = [mask.bit_count() for mask in adj]
    remaining = n
    layer = [v for v in range(n) if degrees[v] <= 1]
    removed = set()
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed.add(v)
            for u in iter_bits(adj[v]):
                if u not in removed:
                    degrees[u] -= 1
                    if degrees[u] == 1:
                        nxt.append(u)
        layer = nxt
    return [v for v in range(n) if v not in removed]


def tree_code(tree: Graph) -> str:
    """Código AHU del árbol enraizado en su centro (el menor si hay dos)"""
    return min(_rooted_code(tree.adj, c, -1) for c in _centers(tree.adj))


def _parents_from_code(code: str) -> Tuple[int, ...]:
    parents: List[int] = []
    stack: List[int] = []
    for char in code:
        if char == "(":
            parents.append(stack[-1] if stack else -1)
            stack.append(len(parents) - 1)
        else:
            stack.pop()
    return tuple(parents)


def tree_from_code(code: str) -> Graph:
    """Árbol cuyo arreglo de padres en preorden codifica la cadena AHU"""
    parents = _parents_from_code(code)
    return Graph(len(parents), [(p, v) for v, p in enumerate(parents) if p >= 0])


def parent_array(tree: Graph) -> Tuple[int, ...]:
    """Arreglo de padres canónico (preorden desde el centro; la raíz tiene −1)"""
    return _parents_from_code(tree_code(tree))


def _next_rooted_sequence(levels: List[int], p: Optional[int] = None) -> Optional[List[int]]:
    """Siguiente sucesión de niveles de árbol enraizado en orden lexicográfico decreciente"""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    result = list(levels)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _split_sequence(levels: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Separa el primer subárbol de la raíz (bajado un nivel) del resto del árbol"""
    m = next((i for i in range(2, len(levels)) if levels[i] == 1), len(levels))
    left = [levels[i] - 1 for i in range(1, m)]
    rest = [0] + list(levels[m:])
    return left, rest


def _next_free_sequence(levels: List[int]) -> Optional[List[int]]:
    """
    La sucesión misma si es canónica para un árbol libre; si no, la siguiente
    candidata

    Es canónica cuando la raíz es un centro y el primer subárbol no supera al
    resto en altura, tamaño ni orden lexicográfico.
    """
    left, rest = _split_sequence(levels)
    left_height, rest_height = max(left), max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return levels
    p = len(left)
    candidate = _next_rooted_sequence(levels, p)
    if levels[p] > 2:
        new_left, _ = _split_sequence(candidate)
        suffix = list(range(1, max(new_left) + 2))
        candidate[-len(suffix):] = suffix
    return candidate


def _parents_from_levels(levels: Sequence[int]) -> Tuple[int, ...]:
    parents: List[int] = []
    last_at: Dict[int, int] = {}
    for v, depth in enumerate(levels):
        parents.append(last_at[depth - 1] if depth else -1)
        last_at[depth] = v
    return tuple(parents)


def free_tree_parent_arrays(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Arreglos de padres canónicos, uno por clase de árboles libres de orden n

    Cada árbol se describe por su sucesión de niveles en preorden desde un
    centro; se recorren en orden lexicográfico decreciente y solo se emiten
    las sucesiones canónicas, así que no hace falta deduplicar.
    """
    if n < 1:
        raise UsageError(f"n debe ser ≥ 1, recibido {n}")
    if n <= 2:
        yield tuple(range(-1, n - 1))
        return
    levels: Optional[List[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free_sequence(levels)
        if levels is not None:
            yield _parents_from_levels(levels)
            levels = _next_rooted_sequence(levels)


def enumerate_trees(n: int) -> List[Graph]:
    """Un árbol por clase de isomorfismo de árboles libres de orden n, etiquetado en preorden"""
    return [
        Graph(n, [(p, v) for v, p in enumerate(parents) if p >= 0])
        for parents in free_tree_parent_arrays(n)
    ]


# ======================================================================
# k-apex trees
# ======================================================================

def _attach_masks(t: int) -> List[int]:
    """Vecindades posibles de un vértice nuevo: vacía o con ≥ 2 vértices del árbol"""
    return [S for S in range(1 << t) if S.bit_count() != 1]


def strategy_b_candidates(k: int, n: int) -> int:
    t = n - k
    trees = FREE_TREE_COUNTS[t] if t < len(FREE_TREE_COUNTS) else len(enumerate_trees(t))
    masks = (1 << t) - t
    return trees * comb(masks + k - 1, k) * 2 ** (k * (k - 1) // 2)


def strategy_a_feasible(n: int) -> bool:
    return n <= settings.MAX_CONNECTED_ORDER


def _validate_apex_query(k: int, n: int) -> None:
    if k < 1:
        raise UsageError(f"k debe ser ≥ 1, recibido {k}")
    if n <= k:
        raise UsageError(f"Se requiere n > k (k={k}, n={n})")


def resolve_strategy(k: int, n: int, strategy: Optional[EnumerationStrategy], allow_large: bool) -> EnumerationStrategy:
    """
    AUTO elige B si cabe en MAX_ATTACH_CANDIDATES, si no A

    Raises:
        InfeasibleError: la estrategia pedida (o ambas) excede su guarda
    """
    strategy = EnumerationStrategy(strategy or EnumerationStrategy.AUTO)
    candidates = strategy_b_candidates(k, n)
    b_ok = allow_large or candidates <= settings.MAX_ATTACH_CANDIDATES
    a_ok = allow_large or strategy_a_feasible(n)
    if strategy is EnumerationStrategy.AUTO:
        if candidates <= settings.MAX_ATTACH_CANDIDATES:
            return EnumerationStrategy.B
        if a_ok:
            return EnumerationStrategy.A
        raise InfeasibleError(
            f"k-apex trees (k={k}, n={n}) exceden ambas guardas; use --allow-large",
            estimate=candidates,
        )
    if strategy is EnumerationStrategy.B and not b_ok:
        raise InfeasibleError(
            f"La estrategia B para (k={k}, n={n}) excede MAX_ATTACH_CANDIDATES={settings.MAX_ATTACH_CANDIDATES}",
            estimate=candidates,
        )
    if strategy is EnumerationStrategy.A and not a_ok:
        estimate = CONNECTED_COUNTS[n] if n < len(CONNECTED_COUNTS) else None
        raise InfeasibleError(
            f"La estrategia A para n={n} excede MAX_CONNECTED_ORDER={settings.MAX_CONNECTED_ORDER}",
            estimate=estimate,
        )
    return strategy


def _has_apex_exactly(task: Tuple[str, int]) -> bool:
    from services.apex_service import is_k_apex_tree

    code, k = task
    return is_k_apex_tree(parse_graph6(code), k)


def _has_apex_below(task: Tuple[str, int]) -> bool:
    from services.apex_service import apex_at_most

    code, k = task
    return apex_at_most(parse_graph6(code), k - 1)


def _strategy_a_codes(k: int, n: int, jobs: Optional[int]) -> List[str]:
    codes = connected_codes(n, jobs)
    keep = map_ordered(_has_apex_exactly, [(code, k) for code in codes], jobs)
    return [code for code, ok in zip(codes, keep) if ok]


def _attach_task(task: Tuple[str, int, int]) -> List[str]:
    tree_graph6, k, first = task
    tree = parse_graph6(tree_graph6)
    t = tree.n
    masks = [S for S in _attach_masks(t) if S >= first]
    pairs = list(combinations(range(k), 2))
    full = (1 << (t + k)) - 1
    found = set()
    for rest in combinations_with_replacement(masks, k - 1):
        neighborhoods = (first,) + rest
        base = list(tree.adj) + list(neighborhoods)
        for i, S in enumerate(neighborhoods):
            for u in iter_bits(S):
                base[u] |= 1 << (t + i)
        for bits in range(1 << len(pairs)):
            adj = list(base)
            for index, (i, j) in enumerate(pairs):
                if (bits >> index) & 1:
                    adj[t + i] |= 1 << (t + j)
                    adj[t + j] |= 1 << (t + i)
            if not is_connected_mask(adj, full):
                continue
            found.add(canonical_code(Graph.from_adjacency(adj)))
    return sorted(found)


def _strategy_b_codes(k: int, n: int, jobs: Optional[int]) -> List[str]:
    t = n - k
    tasks = [
        (encode_graph6(tree.adj), k, first)
        for tree in enumerate_trees(t)
        for first in _attach_masks(t)
    ]
    unique = sorted({code for chunk in map_ordered(_attach_task, tasks, jobs) for code in chunk})
    below = map_ordered(_has_apex_below, [(code, k) for code in unique], jobs)
    return [code for code, drop in zip(unique, below) if not drop]


def apex_tree_codes(
    k: int,
    n: int,
    strategy: Optional[EnumerationStrategy] = None,
    jobs: Optional[int] = None,
    allow_large: bool = False,
) -> List[str]:
    """Códigos canónicos ordenados de los grafos de orden n con número apex k"""
    _validate_apex_query(k, n)
    chosen = resolve_strategy(k, n, strategy, allow_large)
    started = time.perf_counter()
    if chosen is EnumerationStrategy.A:
        codes = _strategy_a_codes(k, n, jobs)
    else:
        codes = _strategy_b_codes(k, n, jobs)
    logger.info(
        f"[ENUM] {len(codes)} grafos con número apex {k} de orden {n} "
        f"(estrategia {chosen.value}, {time.perf_counter() - started:.2f}s)"
    )
    return codes


def enumerate_k_apex_trees(
    k: int,
    n: int,
    strategy: Optional[EnumerationStrategy] = None,
    jobs: Optional[int] = None,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """
    Un representante por clase de grafos de orden n con número apex exactamente k

    Raises:
        UsageError: k < 1 o n ≤ k
        InfeasibleError: la estrategia elegida excede su guarda
    """
    for code in apex_tree_codes(k, n, strategy, jobs, allow_large):
        yield parse_graph6(code)


def count_cross_check(k: int, n: int, jobs: Optional[int] = None, allow_large: bool = False) -> EnumerationSummary:
    """
    Corre las estrategias A y B y exige los mismos códigos canónicos

    Raises:
        ConsistencyError: los conjuntos difieren (bug de generación)
    """
    _validate_apex_query(k, n)
    started = time.perf_counter()
    codes_a = apex_tree_codes(k, n, EnumerationStrategy.A, jobs, allow_large)
    codes_b = apex_tree_codes(k, n, EnumerationStrategy.B, jobs, allow_large)
    if codes_a != codes_b:
        only_a = sorted(set(codes_a) - set(codes_b))[:5]
        only_b = sorted(set(codes_b) - set(codes_a))[:5]
        raise ConsistencyError(
            f"Estrategias A y B difieren en (k={k}, n={n}): {len(codes_a)} vs {len(codes_b)}; "
            f"solo A: {only_a}, solo B: {only_b}"
        )
    return EnumerationSummary(
        n=n, k=k, filter=f"apex-number = {k}", count=len(codes_a), strategy="A+B",
        count_a=len(codes_a), count_b=len(codes_b),
        wall_time=round(time.perf_counter() - started, 3) if settings.REPORT_TIMING else None,
    )


def summarize_connected(n: int, jobs: Optional[int] = None, allow_large: bool = False) -> EnumerationSummary:
    _check_connected_guard(n, allow_large)
    started = time.perf_counter()
    count = sum(1 for _ in iter_connected_codes(n, jobs))
    return EnumerationSummary(
        n=n, filter="connected", count=count, strategy=EnumerationStrategy.A.value,
        wall_time=round(time.perf_counter() - started, 3) if settings.REPORT_TIMING else None,
    )


def summarize_apex_trees(
    k: int,
    n: int,
    strategy: Optional[EnumerationStrategy] = None,
    jobs: Optional[int] = None,
    allow_large: bool = False,
) -> EnumerationSummary:
    _validate_apex_query(k, n)
    started = time.perf_counter()
    chosen = resolve_strategy(k, n, strategy, allow_large)
    count = len(apex_tree_codes(k, n, chosen, jobs, allow_large))
    return EnumerationSummary(
        n=n, k=k, filter=f"apex-number = {k}", count=count, strategy=chosen.value,
        wall_time=round(time.perf_counter() - started, 3) if settings.REPORT_TIMING else None,
    )

