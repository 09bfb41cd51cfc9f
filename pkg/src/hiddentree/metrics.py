"""Distribution and small-world statistics for generated graphs.

Covers the complementary cumulative in-degree distribution, a log-log
least-squares power-law fit (with a Hill-style maximum-likelihood
exponent as a secondary estimate), average local clustering, and
average shortest path length with optional source sampling.
"""

from __future__ import annotations

import math
import random
from collections import Counter, deque
from dataclasses import dataclass
from typing import Optional, Union

from .errors import (
    ConnectivityError,
    EmptyDistributionError,
    InsufficientDataError,
    ParameterError,
)
from .graph import DirectedGraph, UndirectedGraph, giant_component, undirected_projection

__all__ = [
    "Ccdf",
    "PowerLawFit",
    "MetricsReport",
    "degree_ccdf",
    "default_fit_kmax",
    "fit_power_law",
    "fit_power_law_mle",
    "avg_clustering",
    "avg_shortest_path",
    "compute_report",
    "write_ccdf",
    "report_to_dict",
    "format_report",
]

#: Sentinel for exact all-sources shortest-path averaging.
ALL = "all"

# Tail points backed by fewer than this many nodes belong to the
# finite-size cutoff region and are excluded from the default fit range.
_CUTOFF_MIN_NODES = 10


@dataclass(frozen=True)
class Ccdf:
    """Cumulative in-degree distribution: (k, fraction of nodes with degree >= k).

    Degree-zero nodes are excluded from the normalization, so every p is a
    ratio of positive integer counts to ``positive_nodes``.
    """

    points: tuple[tuple[int, float], ...]
    positive_nodes: int

    def count_at_least(self, k: int) -> int:
        """Exact number of nodes with degree >= k, for k in ``points``."""
        for kk, p in self.points:
            if kk == k:
                return round(p * self.positive_nodes)
        raise KeyError(f"degree {k} not present in distribution")


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares line through (log k, log p) and the implied density exponent."""

    gamma: float
    ccdf_slope: float
    r_squared: float
    k_min: int
    k_max: int


@dataclass(frozen=True)
class MetricsReport:
    """Aggregate statistics for one generated graph.

    ``fit`` is None when the distribution has too few points in the fit
    range (tiny graphs); everything else is always populated.
    """

    fit: Optional[PowerLawFit]
    avg_clustering: float
    avg_shortest_path: float
    giant_component_fraction: float
    max_in_degree: int


def degree_ccdf(degrees: list[int]) -> Ccdf:
    """CCDF over the positive entries of a degree sequence.

    p(k) = |{i : degree_i >= k}| / |{i : degree_i >= 1}| for each distinct
    positive degree k present, ascending.
    """
    if not degrees:
        raise EmptyDistributionError("empty degree sequence")
    counts = Counter(d for d in degrees if d > 0)
    if not counts:
        raise EmptyDistributionError("all degrees are zero")
    total = sum(counts.values())
    points = []
    at_least = total
    prev = 0
    for k in sorted(counts):
        # at_least currently counts nodes with degree >= previous k; peel
        # off the bucket below k before emitting.
        at_least -= prev
        points.append((k, at_least / total))
        prev = counts[k]
    return Ccdf(points=tuple(points), positive_nodes=total)


def default_fit_kmax(ccdf: Ccdf) -> int:
    """Largest degree still backed by at least 10 nodes (cutoff excluded)."""
    best = ccdf.points[0][0]
    for k, p in ccdf.points:
        if round(p * ccdf.positive_nodes) >= _CUTOFF_MIN_NODES:
            best = k
    return best


def fit_power_law(ccdf: Ccdf, k_min: int, k_max: int) -> PowerLawFit:
    """Ordinary least squares on (log k, log p) over points with k_min <= k <= k_max.

    The fitted slope is the CCDF exponent; the density exponent is
    gamma = 1 - slope.
    """
    xs = []
    ys = []
    for k, p in ccdf.points:
        if k_min <= k <= k_max:
            xs.append(math.log(k))
            ys.append(math.log(p))
    if len(xs) < 5:
        raise InsufficientDataError(
            f"need >= 5 distribution points in [{k_min}, {k_max}], found {len(xs)}"
        )
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    sxx = sum((x - mean_x) ** 2 for x in xs)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    syy = sum((y - mean_y) ** 2 for y in ys)
    if sxx == 0:
        raise InsufficientDataError("degenerate fit range: single distinct degree")
    slope = sxy / sxx
    if syy == 0:
        r_squared = 1.0
    else:
        ss_res = syy - slope * sxy
        r_squared = max(0.0, 1.0 - ss_res / syy)
    return PowerLawFit(
        gamma=1.0 - slope,
        ccdf_slope=slope,
        r_squared=r_squared,
        k_min=k_min,
        k_max=k_max,
    )


def fit_power_law_mle(degrees: list[int], k_min: int) -> float:
    """Secondary density-exponent estimate: discrete Hill estimator over the tail.

    gamma = 1 + n / sum(ln(k_i / (k_min - 1/2))) over degrees >= k_min.
    Informational only; the least-squares fit drives all gates.
    """
    if k_min < 1:
        raise ParameterError(f"k_min must be >= 1, got {k_min}")
    tail = [d for d in degrees if d >= k_min]
    if not tail:
        raise InsufficientDataError(f"no degrees >= {k_min}")
    return 1.0 + len(tail) / sum(math.log(d / (k_min - 0.5)) for d in tail)


def avg_clustering(g: UndirectedGraph) -> float:
    """Mean local clustering over all nodes; degree-<2 nodes contribute 0."""
    n = g.node_count
    neighbor_sets = [set(nbrs) for nbrs in g.neighbors]
    total = 0.0
    for i in range(n):
        nbrs = g.neighbors[i]
        d = len(nbrs)
        if d < 2:
            continue
        links = 0
        for a_idx in range(d):
            set_a = neighbor_sets[nbrs[a_idx]]
            for b_idx in range(a_idx + 1, d):
                if nbrs[b_idx] in set_a:
                    links += 1
        total += 2.0 * links / (d * (d - 1))
    return total / n


def _bfs_distance_sum(g: UndirectedGraph, source: int) -> tuple[int, int]:
    """Sum of BFS distances from source and the number of nodes reached."""
    dist = [-1] * g.node_count
    dist[source] = 0
    queue = deque([source])
    total = 0
    reached = 1
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.neighbors[u]:
            if dist[v] == -1:
                dist[v] = du + 1
                total += du + 1
                reached += 1
                queue.append(v)
    return total, reached


def avg_shortest_path(
    g: UndirectedGraph,
    sample_sources: Union[int, str] = ALL,
    seed: int = 0,
) -> float:
    """Mean shortest-path distance over ordered node pairs of a connected graph.

    Exact with ``sample_sources=ALL``; otherwise averaged over BFS trees
    from that many uniformly drawn sources (seeded, deterministic).
    """
    n = g.node_count
    if n < 2:
        raise ParameterError("average shortest path needs at least 2 nodes")

    if sample_sources == ALL:
        sources = list(range(n))
    else:
        if not isinstance(sample_sources, int) or sample_sources < 1:
            raise ParameterError("sample_sources must be ALL or a positive int")
        if sample_sources >= n:
            sources = list(range(n))
        else:
            sources = sorted(random.Random(seed).sample(range(n), sample_sources))

    total = 0
    for src in sources:
        dist_sum, reached = _bfs_distance_sum(g, src)
        if reached != n:
            raise ConnectivityError(
                f"graph is disconnected: BFS from {src} reached {reached} of {n} nodes"
            )
        total += dist_sum
    return total / (len(sources) * (n - 1))


def compute_report(
    g: DirectedGraph,
    fit_kmin: int = 2,
    fit_kmax: Optional[int] = None,
    path_samples: Union[int, str] = 200,
    path_seed: int = 0,
) -> MetricsReport:
    """Assemble all metrics: CCDF fit on in-degrees, clustering and path
    length on the giant component of the undirected projection.

    ``fit_kmax=None`` selects the automatic cutoff bound.
    """
    in_degrees = list(g.in_degree)
    ccdf = degree_ccdf(in_degrees)
    if fit_kmax is None:
        fit_kmax = default_fit_kmax(ccdf)
    try:
        fit = fit_power_law(ccdf, fit_kmin, fit_kmax)
    except InsufficientDataError:
        fit = None

    projection = undirected_projection(g)
    members, giant = giant_component(projection)
    clustering = avg_clustering(giant)
    path_len = avg_shortest_path(giant, path_samples, path_seed)
    return MetricsReport(
        fit=fit,
        avg_clustering=clustering,
        avg_shortest_path=path_len,
        giant_component_fraction=len(members) / g.node_count,
        max_in_degree=max(in_degrees),
    )


def write_ccdf(ccdf: Ccdf, stream) -> None:
    """Two tab-separated columns `k<TAB>p`, ascending k."""
    for k, p in ccdf.points:
        stream.write(f"{k}\t{p:.10g}\n")


def report_to_dict(report: MetricsReport) -> dict:
    """Flatten the report for machine consumption; absent fit maps to None."""
    d = {
        "gamma": report.fit.gamma if report.fit else None,
        "ccdf_slope": report.fit.ccdf_slope if report.fit else None,
        "r_squared": report.fit.r_squared if report.fit else None,
        "fit_kmin": report.fit.k_min if report.fit else None,
        "fit_kmax": report.fit.k_max if report.fit else None,
        "avg_clustering": report.avg_clustering,
        "avg_shortest_path": report.avg_shortest_path,
        "giant_component_fraction": report.giant_component_fraction,
        "max_in_degree": report.max_in_degree,
    }
    return d


def format_report(values: dict) -> str:
    """One `key = value` line per entry; None renders as NA."""
    lines = []
    for key, value in values.items():
        if value is None:
            rendered = "NA"
        elif isinstance(value, float):
            rendered = format(value, ".10g")
        else:
            rendered = str(value)
        lines.append(f"{key} = {rendered}")
    return "\n".join(lines) + "\n"
