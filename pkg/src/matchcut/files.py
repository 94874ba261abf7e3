"""Text formats: edge-list graph files, DIMACS CNF, and JSON sidecars.

Graph files: a header line "n m" followed by m lines "u v"; lines whose
first non-blank character is '#' are comments.  CNF files follow DIMACS
conventions ('c' comments, "p cnf <vars> <clauses>", zero-terminated
clauses); positive 1-in-3 inputs additionally require exactly three
distinct positive literals per clause.
"""

from __future__ import annotations

import json

from .graphs import Graph, GraphError, build_graph
from .reduction import Formula13, GadgetLayout
from .twosat import TwoSatInstance


class ParseError(ValueError):
    """Malformed input text."""


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("missing graph header line")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"non-numeric header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header promises {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"non-numeric edge line {line!r}") from exc
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    """Generic DIMACS CNF: returns (variable count, clause literal lists)."""
    var_count = None
    promised = None
    clauses: list[list[int]] = []
    pending: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad problem line {line!r}")
            try:
                var_count, promised = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise ParseError(f"non-numeric problem line {line!r}") from exc
            continue
        if var_count is None:
            raise ParseError("clause before the problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError as exc:
                raise ParseError(f"non-numeric literal {tok!r}") from exc
            if lit == 0:
                clauses.append(pending)
                pending = []
            else:
                if abs(lit) > var_count:
                    raise ParseError(f"literal {lit} out of range")
                pending.append(lit)
    if pending:
        raise ParseError("unterminated clause at end of input")
    if var_count is None:
        raise ParseError("missing problem line")
    if promised is not None and len(clauses) != promised:
        raise ParseError(f"problem line promises {promised} clauses, found {len(clauses)}")
    return var_count, clauses


def formula_from_dimacs(text: str) -> Formula13:
    """Parse a positive 1-in-3 formula from DIMACS CNF text."""
    var_count, clauses = parse_dimacs(text)
    triples = []
    for clause in clauses:
        if any(lit < 0 for lit in clause):
            raise ParseError(f"negative literal in clause {clause}")
        if len(clause) != 3:
            raise ParseError(f"clause {clause} must have exactly three literals")
        if len(set(clause)) != 3:
            raise ParseError(f"clause {clause} repeats a variable")
        triples.append(tuple(lit - 1 for lit in clause))
    return Formula13(var_count, tuple(triples))


def format_formula_dimacs(formula: Formula13) -> str:
    lines = [f"p cnf {formula.var_count} {len(formula.clauses)}"]
    lines.extend(
        " ".join(str(var + 1) for var in clause) + " 0" for clause in formula.clauses
    )
    return "\n".join(lines) + "\n"


def format_twosat_dimacs(inst: TwoSatInstance) -> str:
    """2-CNF in DIMACS form; variable i+1 stands for vertex i."""
    lines = [f"p cnf {inst.var_count} {len(inst.clauses)}"]
    for clause in inst.clauses:
        lits = [(var + 1) if polarity else -(var + 1) for var, polarity in clause]
        lines.append(f"{lits[0]} {lits[1]} 0")
    return "\n".join(lines) + "\n"


def twosat_variable_map(inst: TwoSatInstance) -> str:
    """JSON sidecar mapping DIMACS variables to vertex ids."""
    return json.dumps(
        {"variable_to_vertex": {str(v + 1): v for v in range(inst.var_count)}},
        indent=2,
        sort_keys=True,
    ) + "\n"


def layout_sidecar(layout: GadgetLayout) -> str:
    """JSON sidecar mapping gadget roles to vertex ids."""
    payload = {
        "c": list(layout.c),
        "c_prime": list(layout.c_prime),
        "cjk": [list(t) for t in layout.cjk],
        "ajk": [list(t) for t in layout.ajk],
        "bjk": [list(t) for t in layout.bjk],
        "cjk_prime": [list(t) for t in layout.cjk_prime],
        "Q": {str(x): sorted(q) for x, q in layout.q_cliques.items()},
        "F": sorted(layout.f_clique),
        "T": sorted(layout.t_clique),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
