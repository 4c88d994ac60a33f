"""Graph file formats and report serialization.

Exact rationals cross every boundary as strings "p/q"; decimal renderings
(4 places) are display-only duplicates and never parsed back.
"""

from __future__ import annotations

from fractions import Fraction
from .analysis import AnalysisReport, analyze
from .curvature import CurvatureSolution, steinerberger_curvature
from .errors import GraphFormatError
from .graphs import Graph


# --- edge list -----------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse "n m" header plus m lines "u v" (0-based, u != v)."""
    lines = text.splitlines()
    header_idx = None
    for idx, raw in enumerate(lines):
        if raw.strip() and not raw.strip().startswith("#"):
            header_idx = idx
            break
    if header_idx is None:
        raise GraphFormatError("empty input")
    header = lines[header_idx].split()
    if len(header) != 2:
        raise GraphFormatError("expected header 'n m'", line=header_idx + 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("expected integer header 'n m'", line=header_idx + 1)
    if n < 1:
        raise GraphFormatError("vertex count must be positive", line=header_idx + 1)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = header_idx + 1
    remaining = m
    for raw in lines[header_idx + 1 :]:
        lineno += 1
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if remaining == 0:
            raise GraphFormatError("more edge lines than the declared count", line=lineno)
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphFormatError("expected 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("expected integer endpoints", line=lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge ({u},{v})", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({key[0]},{key[1]})", line=lineno)
        seen.add(key)
        edges.append(key)
        remaining -= 1
    if remaining:
        raise GraphFormatError(f"expected {m} edges, found {m - remaining}")
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# --- graph6 --------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_bytes_to_int(chars: str, lineno: int | None = None) -> int:
    value = 0
    for ch in chars:
        b = ord(ch) - 63
        if not (0 <= b < 64):
            raise GraphFormatError(f"byte {ord(ch)} outside graph6 range", line=lineno)
        value = value << 6 | b
    return value


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optional >>graph6<< header tolerated)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise GraphFormatError("empty graph6 line")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            if len(s) < 8:
                raise GraphFormatError("truncated graph6 length header")
            n = _g6_bytes_to_int(s[2:8])
            body = s[8:]
        else:
            if len(s) < 4:
                raise GraphFormatError("truncated graph6 length header")
            n = _g6_bytes_to_int(s[1:4])
            body = s[4:]
    else:
        n = ord(s[0]) - 63
        if n < 0:
            raise GraphFormatError("malformed graph6 length header")
        body = s[1:]
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise GraphFormatError(
            f"graph6 body for n={n} needs {expect} bytes, found {len(body)}"
        )
    bits = _g6_bytes_to_int(body)
    total_bits = 6 * expect
    pad = total_bits - nbits
    if pad and bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    edges = []
    pos = total_bits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if bits >> pos & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode in standard graph6 (no trailing newline, no header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | (1 if g.has_edge(i, j) else 0)
    nbytes = (nbits + 5) // 6
    bits <<= nbytes * 6 - nbits
    body = "".join(chr((bits >> (6 * (nbytes - 1 - k)) & 63) + 63) for k in range(nbytes))
    return head + body


# --- decimal / exact rendering -------------------------------------------

def exact_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_exact(s: str) -> Fraction:
    return Fraction(s)


def decimal_str(q: Fraction, places: int = 4) -> str:
    """Fixed-point rendering, round-half-even, display only."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    scaled = round(abs(q) * 10**places)
    digits = str(scaled).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def curvature_sign(q: Fraction) -> str:
    if q > 0:
        return "positive"
    if q < 0:
        return "negative"
    return "zero"


# --- DOT export -----------------------------------------------------------

_SIGN_COLORS = {"positive": "#1a7832", "zero": "#6f6f6f", "negative": "#c23b21"}


def export_dot(g: Graph, sol: CurvatureSolution) -> str:
    """DOT rendering with curvature labels (4 places) and sign colors."""
    lines = ["graph curvature {", "  node [style=filled, fontcolor=white];"]
    for v in range(g.n):
        label = decimal_str(sol.K[v])
        color = _SIGN_COLORS[curvature_sign(sol.K[v])]
        lines.append(f'  {v} [label="{label}", fillcolor="{color}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- report documents -----------------------------------------------------

def report_document(g: Graph, report: AnalysisReport | None = None) -> dict:
    """The wire-format curvature report (exact strings plus decimals)."""
    rep = report if report is not None else analyze(g)
    sol = rep.solution
    return {
        "n": g.n,
        "edges": [list(e) for e in g.sorted_edges()],
        "regime": sol.regime.lower(),
        "curvature": [exact_str(k) for k in sol.K],
        "curvature_decimal": [decimal_str(k) for k in sol.K],
        "curvature_sign": [curvature_sign(k) for k in sol.K],
        "total": exact_str(sol.total),
        "total_decimal": decimal_str(sol.total),
        "min": exact_str(rep.min_curvature),
        "min_decimal": decimal_str(rep.min_curvature),
        "diameter": rep.diameter,
        "bm_sharp": rep.is_bm_sharp,
        "self_centered": rep.self_centered,
        "antipodal": rep.antipodal,
        "solution_space_dim": sol.solution_space_dim,
        "average_distance": exact_str(rep.average_distance),
        "average_distance_decimal": decimal_str(rep.average_distance),
    }


def analysis_document(g: Graph, report: AnalysisReport | None = None) -> dict:
    """Superset of the report document with every analysis field."""
    rep = report if report is not None else analyze(g)
    doc = report_document(g, rep)
    doc.update(
        {
            "constant_curvature": rep.constant_curvature,
            "bm_upper_bound": exact_str(rep.bm_upper_bound)
            if rep.bm_upper_bound is not None
            else None,
            "bm_bound_unbounded": rep.bm_bound_unbounded,
            "avdist_bound": exact_str(rep.avdist_bound)
            if rep.avdist_bound is not None
            else None,
            "maximin_value": exact_str(rep.solution.maximin_value)
            if rep.solution.maximin_value is not None
            else None,
        }
    )
    return doc


def curvature_table(g: Graph, sol: CurvatureSolution, sep: str = "\t") -> str:
    """Delimited per-vertex table: vertex, exact, decimal, sign."""
    lines = [sep.join(["vertex", "curvature", "decimal", "sign"])]
    for v in range(g.n):
        k = sol.K[v]
        lines.append(sep.join([str(v), exact_str(k), decimal_str(k), curvature_sign(k)]))
    return "\n".join(lines) + "\n"


def solution_for(g: Graph) -> CurvatureSolution:
    return steinerberger_curvature(g)
