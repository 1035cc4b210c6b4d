"""Pairwise matrices and nearest-concept rankings.

Concept order is always label byte-order, so output never depends on the
order concepts appeared in the input file.  Matrix rows can be spread over
worker processes; each worker computes whole rows of the upper triangle and
the result is mirrored, so the worker count cannot change a single value.
"""

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from taxsim.measures import MeasureKind, evaluate
from taxsim.errors import MissingIcTable
from taxsim.paths import path_infos_from


def format_value(x):
    """Six decimals.  ``format`` rounds the exact binary value, ties to even."""
    return f"{x:.6f}"


def sorted_concepts(tax, concepts=None):
    ids = range(len(tax.labels)) if concepts is None else {tax.resolve(c) for c in concepts}
    return sorted(ids, key=lambda c: tax.labels[c].encode("utf-8"))


def _prepare(tax, kind, ic, depth):
    kind = MeasureKind.parse(kind)
    if kind.needs_ic and ic is None:
        raise MissingIcTable(f"measure {kind.value!r} needs a frequency table")
    return kind, tax.max_depth if depth is None else depth


def _rows(tax, kind, ic, d, ids, start, stop):
    out = []
    for i in range(start, stop):
        infos = path_infos_from(tax, ids[i], ids[i:])
        out.append([evaluate(kind, info, ic, d) for info in infos])
    return out


def similarity_matrix(tax, kind, ic=None, concepts=None, workers=1, depth=None):
    """Symmetric matrix of pairwise similarities.

    Returns
    -------
    labels : list of str
        Row/column labels in byte order.
    values : ndarray of shape (n, n)
    """
    kind, d = _prepare(tax, kind, ic, depth)
    ids = sorted_concepts(tax, concepts)
    n = len(ids)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or n < 2:
        rows = _rows(tax, kind, ic, d, ids, 0, n)
    else:
        bounds = np.linspace(0, n, min(workers, n) * 4 + 1).astype(int)
        chunks = [(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_rows, tax, kind, ic, d, ids, a, b) for a, b in chunks]
            rows = [row for f in futures for row in f.result()]
    values = np.empty((n, n), dtype=np.float64)
    for i, row in enumerate(rows):
        values[i, i:] = row
        values[i:, i] = row
    return [tax.labels[c] for c in ids], values


def matrix_csv(labels, values):
    lines = [",".join(["concept", *labels])]
    for label, row in zip(labels, values):
        lines.append(",".join([label, *(format_value(x) for x in row)]))
    return "\n".join(lines) + "\n"


def top_k(tax, anchor, k, kind, ic=None, depth=None):
    """The ``k`` concepts most similar to ``anchor``, as ``(label, value)`` pairs.

    Sorted by descending value, ties by label byte order; the anchor itself is
    excluded.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    kind, d = _prepare(tax, kind, ic, depth)
    anchor = tax.resolve(anchor)
    others = [c for c in range(len(tax.labels)) if c != anchor]
    scored = [
        (tax.labels[info.c2], evaluate(kind, info, ic, d))
        for info in path_infos_from(tax, anchor, others)
    ]
    scored.sort(key=lambda item: (-item[1], item[0].encode("utf-8")))
    return scored[:k]
