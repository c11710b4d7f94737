"""
Servicio de la Familia Extremal
===============================

Familia G̃ₖⁿ: k-apex trees (k ≥ 2) de orden n ≥ 4k − 1 con grados en {2, 3}
y exactamente dos aristas asimétricas. Todo miembro tiene
R = n/2 − (5 − 2√6)/6.

Incluye:
- valor extremal cerrado y test de pertenencia
- construcción de miembros (paramétrica para k = 2, catálogo de grafos
  cúbicos con una arista subdividida, búsqueda exhaustiva de respaldo)
- auditorías de los corolarios y de la conjetura sobre k-apex trees
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import networkx as nx

from core.config import settings
from core.exceptions import ConsistencyError, InfeasibleError, UsageError
from core.logger import get_logger
from core.workers import map_ordered
from models.certificates import ConstructionResult, FamilyMembership
from models.enums import AuditClaim, MembershipVerdict, Sign
from models.graph import Graph
from models.radical import RadicalValue, sign
from schemas.audit import ConjectureCandidate, ConjectureReport, VerificationReport, Violation
from schemas.common import RadicalOut
from services.apex_service import apex_number
from services.canonical_service import canonical_code
from services.enumeration_service import apex_tree_codes, resolve_strategy
from services.graph_io_service import from_networkx, parse_graph6, write_graph6
from services.graph_service import degree_spectrum, is_connected, is_regular
from services.lemma_service import LEMMA_CONSTANT_C
from services.randic_service import randic, randic_float

logger = get_logger("family")

FLOAT_TOLERANCE = 1e-9


def extremal_value(n: int) -> RadicalValue:
    """n/2 − (5 − 2√6)/6 = n/2 − 5/6 + (1/3)√6 (función total en n)"""
    return RadicalValue.rational(Fraction(n, 2)) - LEMMA_CONSTANT_C


def _threshold(k: int) -> int:
    return 4 * k - 1


def _require_k(k: int) -> None:
    if k < 2:
        raise UsageError(f"La familia extremal requiere k ≥ 2, recibido k={k}")


def _require_scope(k: int, n: int) -> None:
    _require_k(k)
    if n < _threshold(k):
        raise UsageError(f"Se requiere n ≥ 4k − 1 = {_threshold(k)} (k={k}, n={n})")


# ======================================================================
# Pertenencia
# ======================================================================

def family_membership(g: Graph, k: int) -> FamilyMembership:
    """
    Verifica, en orden: n ≥ 4k − 1, grados en {2, 3}, dos aristas asimétricas,
    número apex = k. Reporta la primera condición que falla.

    Raises:
        UsageError: k < 2
        ConsistencyError: un miembro con R ≠ valor extremal
    """
    _require_k(k)
    spectrum = degree_spectrum(g)
    degrees_ok = set(g.degrees) <= {2, 3}
    asym = spectrum.asymmetric
    apex_k = apex_number(g).k if is_connected(g) else None

    if g.n < _threshold(k):
        verdict = MembershipVerdict.ORDER_TOO_SMALL
    elif not degrees_ok:
        verdict = MembershipVerdict.DEGREES_OUTSIDE_2_3
    elif asym != 2:
        verdict = MembershipVerdict.ASYMMETRIC_COUNT
    elif apex_k != k:
        verdict = MembershipVerdict.APEX_NUMBER
    else:
        verdict = MembershipVerdict.MEMBER

    value = None
    if verdict is MembershipVerdict.MEMBER:
        value = randic(g).value
        if value != extremal_value(g.n):
            raise ConsistencyError(f"Miembro con R = {value} distinto de {extremal_value(g.n)}")
    return FamilyMembership(
        graph=g, k=k, degrees_ok=degrees_ok, asym_count=asym, apex_k=apex_k, verdict=verdict, value=value
    )


def _is_member_shape(g: Graph) -> bool:
    """Grados en {2, 3} y dos aristas asimétricas (el número apex lo fija la enumeración)"""
    return set(g.degrees) <= {2, 3} and degree_spectrum(g).asymmetric == 2


# ======================================================================
# Construcción
# ======================================================================

def subdivided_k4(n: int) -> Graph:
    """K₄ con la arista (2, 3) reemplazada por el camino 2-4-5-…-(n−1)-3"""
    if n < 5:
        raise UsageError(f"La subdivisión de K₄ requiere n ≥ 5, recibido {n}")
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
    path = [2] + list(range(4, n)) + [3]
    edges += list(zip(path, path[1:]))
    return Graph(n, edges)


def subdivide_edge(g: Graph, edge: Tuple[int, int], times: int) -> Graph:
    """Reemplaza la arista u-v por un camino con `times` vértices nuevos"""
    u, v = edge
    edges = [e for e in g.edges if e != (min(u, v), max(u, v))]
    path = [u] + list(range(g.n, g.n + times)) + [v]
    edges += list(zip(path, path[1:]))
    return Graph(g.n + times, edges)


def cubic_catalog(max_order: Optional[int] = None) -> List[Graph]:
    """
    Grafos cúbicos conexos de orden ≤ max_order, sin repetidos, ordenados por
    (orden, código canónico)
    """
    max_order = max_order or settings.MAX_CUBIC_BASE_ORDER
    candidates = [
        nx.complete_graph(4),
        nx.complete_bipartite_graph(3, 3),
        nx.cubical_graph(),
        nx.petersen_graph(),
        nx.frucht_graph(),
        nx.truncated_tetrahedron_graph(),
        nx.heawood_graph(),
    ]
    for m in range(3, max_order // 2 + 1):
        candidates.append(nx.circular_ladder_graph(m))
        candidates.append(nx.LCF_graph(2 * m, [m], 2 * m))
    for order in range(4, max_order + 1, 2):
        for seed in range(5):
            candidates.append(nx.random_regular_graph(3, order, seed=seed))

    catalog: Dict[str, Graph] = {}
    for G in candidates:
        if G.number_of_nodes() > max_order:
            continue
        g = from_networkx(G)
        if is_regular(g) != 3 or not is_connected(g):
            continue
        catalog.setdefault(canonical_code(g), g)
    return [catalog[code] for code in sorted(catalog, key=lambda code: (parse_graph6(code).n, code))]


def construct_member(k: int, n: int, jobs: Optional[int] = None, allow_large: bool = False) -> ConstructionResult:
    """
    Construye un miembro de G̃ₖⁿ verificado con family_membership

    Orden de intentos: K₄ subdividido (k = 2), catálogo cúbico con una arista
    subdividida n − n_H veces, y búsqueda sobre enumerate_k_apex_trees.

    Returns:
        ConstructionResult con graph=None si la búsqueda factible no encontró nada

    Raises:
        UsageError: k < 2 o n < 4k − 1
        InfeasibleError: el catálogo falló y la búsqueda excede la guarda
    """
    _require_scope(k, n)
    searched: List[str] = []

    if k == 2:
        g = subdivided_k4(n)
        searched.append("K4 subdividido")
        if family_membership(g, k).is_member:
            return ConstructionResult(k=k, n=n, graph=g, source="parametric-k4", searched=tuple(searched))

    catalog = cubic_catalog(min(settings.MAX_CUBIC_BASE_ORDER, n - 1))
    for base in catalog:
        times = n - base.n
        searched.append(f"cúbico {write_graph6(base)} (n_H={base.n})")
        tried = set()
        for edge in base.edges:
            g = subdivide_edge(base, edge, times)
            code = canonical_code(g)
            if code in tried:
                continue
            tried.add(code)
            if family_membership(g, k).is_member:
                logger.info(f"[OK] miembro (k={k}, n={n}) desde el grafo cúbico {write_graph6(base)}")
                return ConstructionResult(k=k, n=n, graph=g, source="cubic-catalog", searched=tuple(searched))

    resolve_strategy(k, n, None, allow_large)
    searched.append(f"k-apex trees (k={k}, n={n})")
    for code in apex_tree_codes(k, n, None, jobs, allow_large):
        g = parse_graph6(code)
        if _is_member_shape(g):
            return ConstructionResult(k=k, n=n, graph=g, source="enumeration", searched=tuple(searched))
    logger.info(f"[FAMILY] sin miembros para (k={k}, n={n})")
    return ConstructionResult(k=k, n=n, graph=None, source="not-found", searched=tuple(searched))


# ======================================================================
# Corolarios
# ======================================================================

def _scan_entry(code: str) -> Tuple[RadicalValue, Dict[int, int], float, bool]:
    g = parse_graph6(code)
    spectrum = degree_spectrum(g)
    by_gap: Dict[int, int] = {}
    for (a, b), count in spectrum.items():
        if a != b:
            by_gap[b - a] = by_gap.get(b - a, 0) + count
    return randic(g).value, by_gap, randic_float(g), _is_member_shape(g)


def _scan(k: int, n: int, jobs, strategy, allow_large) -> List[Tuple[str, Tuple[RadicalValue, Dict[int, int], float, bool]]]:
    codes = apex_tree_codes(k, n, strategy, jobs, allow_large)
    return list(zip(codes, map_ordered(_scan_entry, codes, jobs)))


def _violation(code: str, value: RadicalValue, bound: RadicalValue, by_gap: Dict[int, int]) -> Violation:
    return Violation(
        graph6=code,
        value=RadicalOut.of(value),
        bound=RadicalOut.of(bound),
        difference=RadicalOut.of(value - bound),
        asymmetric_by_gap={str(gap): count for gap, count in sorted(by_gap.items())},
    )


def check_corollary_gap2(
    k: int, n: int, jobs: Optional[int] = None, strategy=None, allow_large: bool = False
) -> VerificationReport:
    """
    R(G) < n/2 − (5 − 2√6)/6 para todo k-apex tree con alguna arista asimétrica
    de brecha de grado ≥ 2 ("no casi iguales")
    """
    _require_scope(k, n)
    bound = extremal_value(n)
    rows = _scan(k, n, jobs, strategy, allow_large)
    qualifying = 0
    violations = []
    for code, (value, by_gap, _, _) in rows:
        if max(by_gap, default=0) < 2:
            continue
        qualifying += 1
        if sign(value - bound) is not Sign.NEGATIVE:
            violations.append(_violation(code, value, bound, by_gap))
    logger.info(f"[AUDIT] corolario brecha ≥ 2 (k={k}, n={n}): {qualifying} grafos, {len(violations)} violaciones")
    return VerificationReport(
        claim=AuditClaim.COROLLARY1, k=k, n=n, scanned=len(rows), qualifying=qualifying,
        holds=not violations, violations=violations,
        notes=["'No casi iguales' se lee como brecha de grado ≥ 2"],
    )


def check_corollary_many_asym(
    k: int, n: int, m: int, jobs: Optional[int] = None, strategy=None, allow_large: bool = False
) -> VerificationReport:
    """
    R(G) < n/2 − (5 − 2√6)/6 para todo k-apex tree cuyas aristas asimétricas
    tienen todas brecha 1 y son al menos 2m − 2 (2 ≤ m ≤ k + 2)

    Los miembros exactos de la familia quedan fuera de la hipótesis.
    """
    _require_scope(k, n)
    if not 2 <= m <= k + 2:
        raise UsageError(f"m debe estar en [2, k+2] = [2, {k + 2}], recibido m={m}")
    bound = extremal_value(n)
    rows = _scan(k, n, jobs, strategy, allow_large)
    qualifying = 0
    violations = []
    for code, (value, by_gap, _, member) in rows:
        asym = sum(by_gap.values())
        if member or asym < 2 * m - 2 or set(by_gap) != {1}:
            continue
        qualifying += 1
        if sign(value - bound) is not Sign.NEGATIVE:
            violations.append(_violation(code, value, bound, by_gap))
    notes = ["'Casi iguales' se lee como brecha de grado exactamente 1", "Se excluyen los miembros exactos de la familia"]
    if m < 4:
        notes.append(f"m={m} está en [2, k+2] pero lemma6 solo se afirma para m ≥ 4")
    logger.info(f"[AUDIT] corolario ≥ 2m−2 asimétricas (k={k}, n={n}, m={m}): {len(violations)} violaciones")
    return VerificationReport(
        claim=AuditClaim.COROLLARY2, k=k, n=n, m=m, scanned=len(rows), qualifying=qualifying,
        holds=not violations, violations=violations, notes=notes,
    )


# ======================================================================
# Conjetura
# ======================================================================

def verify_conjecture(
    k: int, n: int, jobs: Optional[int] = None, strategy=None, allow_large: bool = False
) -> ConjectureReport:
    """
    Máximo exacto de R sobre los k-apex trees de orden n contra la familia

    Se cumple si max R = n/2 − (5 − 2√6)/6 y los maximizadores son exactamente
    los miembros; con familia vacía se exige max R estrictamente menor. El
    máximo se contrasta con un barrido flotante independiente.
    """
    _require_scope(k, n)
    extremal = extremal_value(n)
    rows = _scan(k, n, jobs, strategy, allow_large)
    members = sorted(code for code, (_, _, _, member) in rows if member)

    best: Optional[RadicalValue] = None
    for _, (value, _, _, _) in rows:
        if best is None or value > best:
            best = value
    maximizers = sorted(code for code, (value, _, _, _) in rows if value == best)

    float_max = max((flt for _, (_, _, flt, _) in rows), default=None)
    if float_max is None:
        float_agrees = True
    else:
        float_argmax = sorted(code for code, (_, _, flt, _) in rows if flt >= float_max - FLOAT_TOLERANCE)
        float_agrees = abs(float(best) - float_max) <= FLOAT_TOLERANCE and float_argmax == maximizers

    comparison = sign(best - extremal) if best is not None else None
    if not rows:
        holds = True
    elif members:
        holds = comparison is Sign.ZERO and maximizers == members
    else:
        holds = comparison is Sign.NEGATIVE

    counterexamples = []
    member_set = set(members)
    for code, (value, _, _, member) in rows:
        relation = sign(value - extremal)
        if relation is Sign.POSITIVE or (relation is Sign.ZERO and not member):
            counterexamples.append(ConjectureCandidate(graph6=code, value=RadicalOut.of(value), is_member=code in member_set))

    logger.info(
        f"[AUDIT] conjetura (k={k}, n={n}): {len(rows)} grafos, "
        f"max={best.to_decimal() if best is not None else 'n/a'}, se cumple={holds}"
    )
    return ConjectureReport(
        k=k,
        n=n,
        scanned=len(rows),
        max_value=RadicalOut.of(best) if best is not None else None,
        maximizers=maximizers,
        extremal_value=RadicalOut.of(extremal),
        family_members=members,
        family_empty=not members,
        comparison=comparison,
        conjecture_holds=holds,
        counterexamples=counterexamples,
        float_max=float_max,
        float_agrees=float_agrees,
    )
