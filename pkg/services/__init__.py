"""
Services Package
================

Lógica de cálculo, un servicio por área:

- graph_service / graph_io_service: operaciones sobre grafos, graph6 y listas de aristas
- canonical_service: forma canónica e isomorfismo
- randic_service / lemma_service: índice de Randić exacto y funciones escalares
- apex_service: número apex y auditoría de no regularidad
- enumeration_service: grafos conexos, árboles libres y k-apex trees
- family_service: familia extremal, corolarios y conjetura
- report_service: envoltorio y serialización de reportes

La API (api/) y el CLI (scripts/) solo traducen entradas y errores.
"""

# Los servicios se importan según se necesiten
# No exponemos todo para evitar importaciones circulares

__all__ = []
