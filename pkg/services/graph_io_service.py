"""
Servicio de Formatos de Grafos
==============================

Lectura y escritura de grafos en texto.

Formatos soportados:
-------------------
1. graph6: N(n) seguido de los bits del triángulo superior por columnas
   (x(0,1), x(0,2), x(1,2), x(0,3), ...), 6 bits por carácter con offset 63.
2. Lista de aristas: primera línea "n m", luego m líneas "u v" con etiquetas
   base 0; '#' inicia un comentario. Un archivo puede traer varios bloques.

Detección automática: si la primera línea útil empieza con un dígito o '#'
es lista de aristas; si no, graph6 (una cadena por línea).
"""

from typing import Iterator, List, Sequence, Tuple

import networkx as nx

from core.exceptions import DomainError, EmptyGraphError, GraphFormatError
from models.graph import Graph

GRAPH6_HEADER = ">>graph6<<"


# ======================================================================
# graph6
# ======================================================================

def encode_graph6(masks: Sequence[int]) -> str:
    """graph6 a partir de máscaras de adyacencia"""
    n = len(masks)
    out = _encode_order(n)
    value = 0
    nbits = 0
    for j in range(1, n):
        row = masks[j]
        for i in range(j):
            value = (value << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(value + 63))
                value = 0
                nbits = 0
    if nbits:
        out.append(chr((value << (6 - nbits)) + 63))
    return "".join(out)


def _encode_order(n: int) -> List[str]:
    if n <= 62:
        return [chr(n + 63)]
    if n <= 258047:
        return ["~"] + [chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)]
    return ["~", "~"] + [chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0)]


def write_graph6(g: Graph) -> str:
    return encode_graph6(g.adj)


def parse_graph6(text: str) -> Graph:
    """
    Parsea una cadena graph6

    Raises:
        GraphFormatError: longitud incorrecta, caracteres fuera de 63..126 o
            bits de relleno no nulos (con el byte donde se detectó)
        EmptyGraphError: n = 0
    """
    data = text.strip()
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not data:
        raise GraphFormatError("Cadena graph6 vacía", offset=base)
    for index, char in enumerate(data):
        if not 63 <= ord(char) <= 126:
            raise GraphFormatError(f"Carácter inválido {char!r} en graph6", offset=base + index)

    values = [ord(char) - 63 for char in data]
    if values[0] < 63:
        n, start = values[0], 1
    elif len(values) >= 4 and values[1] < 63:
        n, start = _decode_bits(values[1:4]), 4
    elif len(values) >= 8 and values[1] == 63:
        n, start = _decode_bits(values[2:8]), 8
    else:
        raise GraphFormatError("Encabezado de orden truncado en graph6", offset=base + len(values))
    if n == 0:
        raise EmptyGraphError("graph6 describe el grafo vacío (n=0)")

    total_bits = n * (n - 1) // 2
    expected = start + (total_bits + 5) // 6
    if len(values) != expected:
        raise GraphFormatError(
            f"Longitud graph6 incorrecta: se esperaban {expected} bytes para n={n}, hay {len(values)}",
            offset=base + min(len(values), expected)
        )

    masks = [0] * n
    bit_index = 0
    for j in range(1, n):
        for i in range(j):
            byte = values[start + bit_index // 6]
            if (byte >> (5 - bit_index % 6)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            bit_index += 1
    padding = (6 - total_bits % 6) % 6
    if padding and values[-1] & ((1 << padding) - 1):
        raise GraphFormatError("Bits de relleno no nulos al final del graph6", offset=base + len(values) - 1)
    return Graph.from_adjacency(masks)


def _decode_bits(groups: Sequence[int]) -> int:
    value = 0
    for group in groups:
        value = (value << 6) | group
    return value


# ======================================================================
# Lista de aristas
# ======================================================================

def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> List[Graph]:
    """Uno o más bloques "n m" + m líneas "u v" """
    return [graph for _, graph in _iter_edge_list(text.splitlines())]


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _iter_edge_list(lines: Sequence[str]) -> Iterator[Tuple[int, Graph]]:
    rows = [(number, _strip_comment(line)) for number, line in enumerate(lines, start=1)]
    rows = [(number, content) for number, content in rows if content]
    index = 0
    while index < len(rows):
        header_line, header = rows[index]
        n, m = _parse_pair(header, header_line, "encabezado 'n m'")
        if n < 1:
            raise GraphFormatError("El grafo vacío (n=0) no está permitido", line=header_line)
        if m > len(rows) - index - 1:
            raise GraphFormatError(f"Se esperaban {m} aristas después del encabezado", line=header_line)
        edges = []
        for number, content in rows[index + 1:index + 1 + m]:
            edges.append(_parse_pair(content, number, "arista 'u v'"))
        try:
            graph = Graph(n, edges)
        except (DomainError, EmptyGraphError) as exc:
            raise GraphFormatError(str(exc), line=header_line)
        yield header_line, graph
        index += 1 + m


def _parse_pair(content: str, line: int, what: str) -> Tuple[int, int]:
    parts = content.split()
    if len(parts) != 2:
        raise GraphFormatError(f"Se esperaba {what}, se leyó '{content}'", line=line)
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"Enteros inválidos en {what}: '{content}'", line=line)
    if a < 0 or b < 0:
        raise GraphFormatError(f"Valores negativos en {what}: '{content}'", line=line)
    return a, b


# ======================================================================
# Detección automática
# ======================================================================

def detect_is_edge_list(text: str) -> bool:
    for line in text.splitlines():
        stripped = line.strip()
        if stripped:
            return stripped[0].isdigit() or stripped[0] == "#"
    return False


def read_graphs(text: str) -> List[Tuple[int, Graph]]:
    """
    Lee todos los grafos de un texto con detección de formato

    Returns:
        Lista de (número de línea, grafo)

    Raises:
        GraphFormatError: con el número de línea del problema
    """
    lines = text.splitlines()
    if detect_is_edge_list(text):
        return list(_iter_edge_list(lines))
    graphs = []
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            graphs.append((number, parse_graph6(stripped)))
        except GraphFormatError as exc:
            raise GraphFormatError(exc.detail, offset=exc.offset, line=number)
        except EmptyGraphError as exc:
            raise GraphFormatError(str(exc), line=number)
    return graphs


# ======================================================================
# networkx
# ======================================================================

def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_networkx(G: nx.Graph) -> Graph:
    """Convierte un nx.Graph reetiquetando sus nodos en orden ascendente"""
    if nx.number_of_selfloops(G):
        raise DomainError("El grafo de networkx tiene lazos")
    H = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return Graph(H.number_of_nodes(), H.edges())
