"""Plain-text graph and certificate documents, plus the seeded G(n, p) generator.

Edge-list document::

    # optional comments anywhere, prefixed '#'
    <n> <m>
    <u> <v>     (m lines, 0-based ids, no duplicates in either orientation)

Certificate document::

    minor-order <k>
    d <int>
    seed <int>
    mode <word>
    branch <i>: v1 v2 ...   (k lines, strictly ascending vertex ids)

Both formats round-trip losslessly through parse/emit. The random generator
is the stdlib Mersenne Twister (``random.Random(seed)``); G(n, p) draws one
uniform variate per vertex pair in lexicographic (u, v) order, so identical
(n, p, seed) give identical graphs on every platform.
"""

from __future__ import annotations

import random
from typing import TYPE_CHECKING

from .errors import CertificateFormatError, EdgeListFormatError
from .graph import Graph

if TYPE_CHECKING:
    from .pipeline import MinorCertificate


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document into a Graph.

    Raises EdgeListFormatError with a 1-based line number for: malformed
    header or edge lines, self-loops, duplicate edges (either orientation),
    ids outside 0..n-1, and a declared edge count that does not match the
    number of edge lines.
    """
    header: tuple[int, int] | None = None
    g: Graph | None = None
    edges_seen = 0
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise EdgeListFormatError("header must be '<n> <m>'", lineno)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise EdgeListFormatError("header must contain two integers", lineno) from None
            if n < 0 or m < 0:
                raise EdgeListFormatError("header counts must be nonnegative", lineno)
            header = (n, m)
            g = Graph(n)
            continue
        if len(fields) != 2:
            raise EdgeListFormatError("edge line must be '<u> <v>'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListFormatError("edge line must contain two integers", lineno) from None
        assert g is not None
        if edges_seen >= header[1]:
            raise EdgeListFormatError(
                f"more edge lines than the declared {header[1]}", lineno
            )
        if u == v:
            raise EdgeListFormatError(f"self-loop at vertex {u}", lineno)
        if not 0 <= u < header[0] or not 0 <= v < header[0]:
            raise EdgeListFormatError(
                f"vertex id out of range 0..{header[0] - 1}", lineno
            )
        if g.has_edge(u, v):
            raise EdgeListFormatError(f"duplicate edge ({u}, {v})", lineno)
        g.add_edge(u, v)
        edges_seen += 1
    if header is None:
        raise EdgeListFormatError("missing header line", last_line or 1)
    if edges_seen != header[1]:
        raise EdgeListFormatError(
            f"declared {header[1]} edges but found {edges_seen}", last_line
        )
    assert g is not None
    return g


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def emit_certificate(cert: "MinorCertificate") -> str:
    lines = [
        f"minor-order {cert.order}",
        f"d {cert.d}",
        f"seed {cert.seed}",
        f"mode {cert.mode}",
    ]
    for i, branch in enumerate(cert.branch_sets):
        lines.append(f"branch {i}: " + " ".join(str(v) for v in branch))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> "MinorCertificate":
    """Parse a certificate document; inverse of emit_certificate."""
    from .pipeline import MinorCertificate

    lines = [
        (no, raw.strip())
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if len(lines) < 4:
        raise CertificateFormatError("document too short")
    order = _meta_int(lines[0], "minor-order")
    d = _meta_int(lines[1], "d")
    seed = _meta_int(lines[2], "seed")
    no, line = lines[3]
    fields = line.split()
    if len(fields) != 2 or fields[0] != "mode":
        raise CertificateFormatError("expected 'mode <word>'", no)
    mode = fields[1]
    branch_lines = lines[4:]
    if len(branch_lines) != order:
        raise CertificateFormatError(
            f"declared order {order} but found {len(branch_lines)} branch lines"
        )
    branch_sets: list[list[int]] = []
    for i, (no, line) in enumerate(branch_lines):
        prefix, _, rest = line.partition(":")
        if prefix.split() != ["branch", str(i)]:
            raise CertificateFormatError(f"expected 'branch {i}: ...'", no)
        try:
            verts = [int(tok) for tok in rest.split()]
        except ValueError:
            raise CertificateFormatError("branch vertices must be integers", no) from None
        if not verts:
            raise CertificateFormatError(f"branch {i} is empty", no)
        if any(b <= a for a, b in zip(verts, verts[1:])):
            raise CertificateFormatError(
                f"branch {i}: vertex ids must be strictly ascending", no
            )
        branch_sets.append(verts)
    return MinorCertificate(
        order=order, branch_sets=branch_sets, d=d, seed=seed, mode=mode
    )


def _meta_int(entry: tuple[int, str], key: str) -> int:
    no, line = entry
    fields = line.split()
    if len(fields) != 2 or fields[0] != key:
        raise CertificateFormatError(f"expected '{key} <int>'", no)
    try:
        return int(fields[1])
    except ValueError:
        raise CertificateFormatError(f"expected '{key} <int>'", no) from None


def gnp_generate(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with a fixed, portable draw order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = random.Random(seed)
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g
