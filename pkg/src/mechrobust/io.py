"""File formats: edge lists, design structure matrices, attack traces."""
from __future__ import annotations

import re
import warnings
from pathlib import Path

import numpy as np

from .attack import AttackTrace
from .errors import DSMParseError, InputError
from .graph import Graph, from_adjacency, from_edge_list


def write_edge_list(g: Graph, path) -> None:
    """``n <count>`` header, then one ``u v`` line per edge (0-based ids)."""
    lines = [f"n {g.id_bound}"] + [f"{u} {v}" for u, v in g.edge_array()]
    Path(path).write_text("\n".join(lines) + "\n")


def read_edge_list(path) -> Graph:
    n = None
    edges = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            tokens = line.split("#", 1)[0].split()
            if not tokens:
                continue
            if n is None:
                if len(tokens) != 2 or tokens[0] != "n":
                    raise InputError(f"{path}:{lineno}: expected header 'n <count>'")
                n = _int(tokens[1], path, lineno)
                continue
            if len(tokens) != 2:
                raise InputError(f"{path}:{lineno}: expected 'u v', got {line.strip()!r}")
            edges.append((_int(tokens[0], path, lineno), _int(tokens[1], path, lineno)))
    if n is None:
        raise InputError(f"{path}: missing 'n <count>' header")
    return from_edge_list(n, edges)


def _int(tok, path, lineno):
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"{path}:{lineno}: {tok!r} is not an integer") from None


_SPLIT = re.compile(r"[,\s;]+")


def _is_number(tok: str) -> bool:
    try:
        float(tok)
    except ValueError:
        return False
    return True


def read_dsm(path) -> Graph:
    """Read a square 0/1 design structure matrix.

    Entries may be separated by commas or whitespace. A single header row
    and/or a leading label column are detected and skipped. Asymmetric
    matrices are symmetrised with logical OR (with a warning); the diagonal
    is ignored.
    """
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            rows.append((lineno, [t for t in _SPLIT.split(text) if t != ""]))
    if not rows:
        raise DSMParseError(f"{path}: empty matrix")

    if not all(_is_number(t) for t in rows[0][1]):
        rows = rows[1:]
        if not rows:
            raise DSMParseError(f"{path}: header row but no data")
    label_col = any(not _is_number(r[1][0]) for r in rows)
    if label_col:
        rows = [(ln, toks[1:]) for ln, toks in rows]

    width = len(rows[0][1])
    for lineno, toks in rows:
        if len(toks) != width:
            raise DSMParseError(f"expected {width} entries, found {len(toks)}", line=lineno)
    if len(rows) != width:
        raise DSMParseError(f"matrix is not square: {len(rows)} rows x {width} columns")

    a = np.zeros((width, width), np.uint8)
    for i, (lineno, toks) in enumerate(rows):
        for j, tok in enumerate(toks):
            try:
                val = float(tok)
            except ValueError:
                raise DSMParseError(f"non-numeric entry {tok!r}", line=lineno, column=j + 1) from None
            if val not in (0.0, 1.0):
                raise DSMParseError(f"non-binary entry {tok!r}", line=lineno, column=j + 1)
            a[i, j] = int(val)
    np.fill_diagonal(a, 0)
    if not np.array_equal(a, a.T):
        n_asym = int((a != a.T).sum() // 2)
        warnings.warn(f"{path}: DSM is asymmetric in {n_asym} pairs; symmetrising by OR", stacklevel=2)
    return from_adjacency(a | a.T)


def write_dsm(g: Graph, path, delimiter: str = ",") -> None:
    a = g.adjacency_matrix()
    Path(path).write_text("\n".join(delimiter.join(str(x) for x in row) for row in a) + "\n")


def write_trace(trace: AttackTrace, path) -> None:
    """Two-column ``step removed`` record followed by the S_k line."""
    lines = [f"# strategy {trace.strategy}"]
    if trace.seed is not None:
        lines.append(f"# seed {trace.seed}")
    lines.append("step removed")
    lines += [f"{k} {v}" for k, v in enumerate(trace.removed, 1)]
    lines.append("s_series " + " ".join(str(s) for s in trace.s_series))
    Path(path).write_text("\n".join(lines) + "\n")


def read_trace(path) -> AttackTrace:
    strategy, seed = "unknown", None
    removed, s_series = [], None
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            tokens = line.split()
            if not tokens:
                continue
            if tokens[0] == "#":
                if len(tokens) >= 3 and tokens[1] == "strategy":
                    strategy = tokens[2]
                elif len(tokens) >= 3 and tokens[1] == "seed":
                    seed = _int(tokens[2], path, lineno)
                continue
            if tokens[0] == "step":
                continue
            if tokens[0] == "s_series":
                s_series = [_int(t, path, lineno) for t in tokens[1:]]
                continue
            if len(tokens) != 2:
                raise InputError(f"{path}:{lineno}: expected 'step removed'")
            step, v = _int(tokens[0], path, lineno), _int(tokens[1], path, lineno)
            if step != len(removed) + 1:
                raise InputError(f"{path}:{lineno}: step {step} out of sequence")
            removed.append(v)
    if s_series is None:
        raise InputError(f"{path}: missing s_series line")
    return AttackTrace(removed, s_series, strategy, seed)
