"""Exact M(q) by maximum-clique search on the Diophantine graph."""

from dataclasses import dataclass
import json
import os
import threading

import numpy as np

from . import diophantine
from ._kernels import kernels
from .errors import SizePolicyError

DEFAULT_MAX_Q = 5000


@dataclass(frozen=True)
class DiophantineGraph:
    field: object
    adjacency: np.ndarray  # (q-1)x(q-1), row/column i is the code i+1

    @property
    def vertices(self):
        return range(1, self.field.q)

    def has_edge(self, a, b):
        return a != b and bool(self.adjacency[a - 1, b - 1])

    def edges(self):
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(i) + 1, int(j) + 1) for i, j in zip(iu, ju)]

    def edge_count(self):
        return int(np.triu(self.adjacency, 1).sum())


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple
    nodes_explored: int

    def to_json(self, F):
        return {"q": F.q, "field": F.ident, "M": self.size,
                "witness": list(self.witness), "nodes": self.nodes_explored}


def build_graph(F, max_q=DEFAULT_MAX_Q):
    if F.q > max_q:
        raise SizePolicyError(
            f"q={F.q} exceeds the oracle limit {max_q}; raise --max-q if you really mean it")
    adj = kernels.adjacency(F.p, F.n, F.tail, F.chi_table)
    adj.setflags(write=False)
    return DiophantineGraph(F, adj)


def max_clique(graph):
    """Exact maximum clique; the witness is the lexicographically least one."""
    size, witness, nodes = kernels.max_clique(graph.adjacency)
    return CliqueResult(size, tuple(v + 1 for v in witness), nodes)


class _Cache:
    def __init__(self):
        self.memo = {}
        self.lock = threading.Lock()


_cache = _Cache()


def _load_cache_file(path):
    out = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    rec = json.loads(line)
                    out[rec["field"]] = rec
    return out


def exact_M(F, max_q=DEFAULT_MAX_Q, cache_path=None):
    """M(q) with a lexicographically least witness; cached by field identity.

    With ``cache_path`` the result is also looked up in / appended to a JSON
    Lines file, one record per field.  File hits are re-verified.
    """
    key = F.ident
    with _cache.lock:
        hit = _cache.memo.get(key)
    if hit is None and cache_path:
        rec = _load_cache_file(cache_path).get(key)
        if rec is not None and diophantine.verify_tuple(F, rec["witness"]).ok:
            hit = CliqueResult(rec["M"], tuple(rec["witness"]), rec["nodes"])
    if hit is None:
        hit = max_clique(build_graph(F, max_q))
        if cache_path:
            with open(cache_path, "a") as fh:
                fh.write(json.dumps(hit.to_json(F)) + "\n")
    with _cache.lock:
        _cache.memo.setdefault(key, hit)
    return hit
