"""
Servicio del Índice de Randić
=============================

R(G) = Σ_{uv∈E} 1/√(d(u)d(v)), calculado en aritmética exacta.

El cálculo va por el espectro de pares de grados: una raíz por par (a, b)
distinto en lugar de una por arista.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from core.exceptions import ConsistencyError, DomainError
from models.certificates import RandicResult
from models.graph import DegreePairSpectrum, Graph
from models.radical import RadicalValue, inv_sqrt, sum_values
from services.graph_service import degree_spectrum

HALF = Fraction(1, 2)


@lru_cache(maxsize=1024)
def pair_terms(a: int, b: int) -> Tuple[RadicalValue, RadicalValue]:
    """(1/√(ab), (1/2)(1/√a − 1/√b)²) para grados a, b ≥ 1"""
    diff = inv_sqrt(a) - inv_sqrt(b)
    return inv_sqrt(a * b), (diff * diff).scale(HALF)


def randic_from_spectrum(spectrum: DegreePairSpectrum) -> RandicResult:
    values = []
    gaps = []
    for (a, b), count in spectrum.items():
        weight, half_square = pair_terms(a, b)
        values.append(weight.scale(count))
        gaps.append(half_square.scale(count))
    return RandicResult(value=sum_values(values), gap=sum_values(gaps), spectrum=spectrum)


def randic(g: Graph) -> RandicResult:
    """
    Índice de Randić exacto con el funcional de brecha

    Los vértices aislados no aportan aristas: el valor se calcula igual, pero
    la identidad R = n/2 − gap solo vale sin vértices aislados.
    """
    return randic_from_spectrum(degree_spectrum(g))


def randic_value(g: Graph) -> RadicalValue:
    return randic(g).value


def randic_gap(g: Graph) -> RadicalValue:
    """(1/2)·Σ_{uv∈E} (1/√d(u) − 1/√d(v))²"""
    return randic(g).gap


def randic_float(g: Graph) -> float:
    """Suma directa en punto flotante arista por arista (oráculo independiente)"""
    deg = g.degrees
    return sum(1.0 / (deg[u] * deg[v]) ** 0.5 for u, v in g.edges)


def verify_gap_identity(g: Graph) -> bool:
    """
    Verifica R(G) = n/2 − gap(G) exactamente

    Raises:
        DomainError: el grafo tiene vértices aislados
        ConsistencyError: la identidad no se cumple (bug aritmético)
    """
    if 0 in g.degrees:
        raise DomainError("La identidad del funcional de brecha requiere grado mínimo ≥ 1")
    result = randic(g)
    expected = RadicalValue.rational(Fraction(g.n, 2)) - result.gap
    if result.value != expected:
        raise ConsistencyError(f"R(G) = {result.value} difiere de n/2 − gap = {expected}")
    return True
