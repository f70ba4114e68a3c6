"""Exact search for zero forcing numbers and propagation-time extrema.

Candidates are scanned in increasing size; within a size level masks are
tested in lexicographic order of their sorted vertex tuples, which makes
every witness and count reproducible.  Connected candidates come from a
seed-and-frontier enumeration that emits each connected set exactly once.

Work is metered in candidate evaluations (one closure per candidate, one
per propagation-time measurement).  Charging follows the deterministic
stream order, so budgets and reported counts do not depend on how many
worker processes evaluated the stream.
"""

from __future__ import annotations

import multiprocessing as mp
from dataclasses import dataclass
from itertools import combinations

from .forcing import _closure, _propagation_steps
from .graphs import Graph, components, vertices_of

DEFAULT_BUDGET = 10**8
_CHUNK = 4096


@dataclass(frozen=True)
class SolverLimits:
    """Resource limits for an exact solve."""

    max_closures: int = DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    """The closure-evaluation budget ran out before an exact answer."""

    def __init__(self, message: str, closures: int, best_known: dict | None = None):
        super().__init__(message)
        self.closures = closures
        self.best_known = best_known or {}


class WrongSize(ValueError):
    """An enumeration was requested at a size other than the true minimum."""


class _Meter:
    __slots__ = ("limit", "used", "note")

    def __init__(self, limits: SolverLimits | None):
        self.limit = (limits or SolverLimits()).max_closures
        self.used = 0
        self.note = ""

    def charge(self):
        self.used += 1
        if self.used > self.limit:
            self.used = self.limit
            raise BudgetExceeded(
                f"budget of {self.limit} closure evaluations exhausted ({self.note})",
                closures=self.limit,
            )


def _combo_masks(n: int, k: int) -> list[int]:
    out = []
    for combo in combinations(range(n), k):
        m = 0
        for v in combo:
            m |= 1 << v
        out.append(m)
    return out


def _zfs_chunk(args):
    adj, full, masks = args
    return [i for i, m in enumerate(masks) if _closure(adj, full, m) == full]


def _pt_chunk(args):
    adj, full, masks = args
    return [_propagation_steps(adj, full, m) for m in masks]


def _scan_masks(g: Graph, masks: list[int], meter: _Meter, pool) -> list[int]:
    """Masks whose closure covers g, in input order; charges one per mask."""
    adj, full = g.adj, g.full_mask
    hits = []
    if pool is None or len(masks) < 2 * _CHUNK:
        for m in masks:
            meter.charge()
            if _closure(adj, full, m) == full:
                hits.append(m)
        return hits
    batches = [masks[i : i + _CHUNK] for i in range(0, len(masks), _CHUNK)]
    results = pool.imap(_zfs_chunk, ((adj, full, b) for b in batches))
    for batch, hit_idx in zip(batches, results):
        idx = set(hit_idx)
        for i, m in enumerate(batch):
            meter.charge()
            if i in idx:
                hits.append(m)
    return hits


def _measure_pts(g: Graph, masks: list[int], meter: _Meter, pool) -> list[int]:
    adj, full = g.adj, g.full_mask
    if pool is None or len(masks) < 2 * _CHUNK:
        out = []
        for m in masks:
            meter.charge()
            out.append(_propagation_steps(adj, full, m))
        return out
    batches = [masks[i : i + _CHUNK] for i in range(0, len(masks), _CHUNK)]
    results = pool.imap(_pt_chunk, ((adj, full, b) for b in batches))
    out = []
    for batch, pts in zip(batches, results):
        for p in pts:
            meter.charge()
            out.append(p)
    return out


def connected_sets_by_size(g: Graph, cap: int) -> list[list[int]]:
    """All connected vertex sets of size 1..cap, grouped by size.

    Seed-and-frontier enumeration with an exclusive-extension rule: each
    connected set is generated exactly once, grown from its minimum vertex.
    """
    adj = g.adj
    out: list[list[int]] = [[] for _ in range(cap + 1)]

    def extend(sub: int, size: int, ext: int, nbhd: int, hi: int):
        out[size].append(sub)
        if size == cap:
            return
        while ext:
            wbit = ext & -ext
            ext ^= wbit
            nb_w = adj[wbit.bit_length() - 1]
            extend(sub | wbit, size + 1, ext | (nb_w & hi & ~nbhd), nbhd | nb_w, hi)

    if cap >= 1:
        for v in range(g.n):
            hi = -1 << (v + 1)
            extend(1 << v, 1, adj[v] & hi, adj[v] | (1 << v), hi)
    return out


def connected_in_components_sets(g: Graph, k: int) -> list[int]:
    """Size-k sets connected in components, sorted by vertex tuple.

    A set qualifies when its intersection with every component it meets
    induces a connected subgraph; components it misses do not veto.
    """
    if k < 1:
        return []
    by_size = connected_sets_by_size(g, k)
    comps = components(g)
    if len(comps) == 1:
        level = by_size[k]
        level.sort(key=vertices_of)
        return level
    buckets: list[list[list[int]]] = [[[] for _ in range(k + 1)] for _ in comps]
    comp_index = {}
    for ci, comp in enumerate(comps):
        for v in vertices_of(comp):
            comp_index[v] = ci
    for size in range(1, k + 1):
        for m in by_size[size]:
            buckets[comp_index[(m & -m).bit_length() - 1]][size].append(m)
    out: list[int] = []

    def compose(ci: int, remaining: int, acc: int):
        if ci == len(comps):
            if remaining == 0 and acc:
                out.append(acc)
            return
        if remaining == 0:
            if acc:
                out.append(acc)
            return
        compose(ci + 1, remaining, acc)
        for size in range(1, remaining + 1):
            for m in buckets[ci][size]:
                compose(ci + 1, remaining - size, acc | m)

    compose(0, k, 0)
    out.sort(key=vertices_of)
    return out


def _zfs_lower_bound(g: Graph) -> int:
    return max(1, min(g.degree(v) for v in range(g.n)))


def zero_forcing_number(g: Graph, limits: SolverLimits | None = None) -> tuple[int, int]:
    """Smallest size of a zero forcing set, with its lexicographically
    least witness mask."""
    meter = _Meter(limits)
    meter.note = "zero forcing number"
    adj, full = g.adj, g.full_mask
    for k in range(_zfs_lower_bound(g), g.n + 1):
        try:
            for m in _combo_masks(g.n, k):
                meter.charge()
                if _closure(adj, full, m) == full:
                    return k, m
        except BudgetExceeded as exc:
            exc.best_known["z_lower_bound"] = k
            raise
    raise AssertionError("the full vertex set always forces")


def connected_zero_forcing_number(
    g: Graph, limits: SolverLimits | None = None
) -> tuple[int, int]:
    """Smallest size of a connected zero forcing set, with the
    lexicographically least witness mask."""
    meter = _Meter(limits)
    meter.note = "connected zero forcing number"
    adj, full = g.adj, g.full_mask
    for k in range(_zfs_lower_bound(g), g.n + 1):
        try:
            for m in connected_in_components_sets(g, k):
                meter.charge()
                if _closure(adj, full, m) == full:
                    return k, m
        except BudgetExceeded as exc:
            exc.best_known["z_c_lower_bound"] = k
            raise
    raise AssertionError("the full vertex set always forces")


def enumerate_min_zfs(g: Graph, k: int, limits: SolverLimits | None = None):
    """Yield every minimum zero forcing set, lexicographic order.

    ``k`` must equal the zero forcing number; WrongSize otherwise.
    """
    z, _ = zero_forcing_number(g, limits)
    if k != z:
        raise WrongSize(f"minimum zero forcing sets have size {z}, not {k}")
    adj, full = g.adj, g.full_mask
    for m in _combo_masks(g.n, k):
        if _closure(adj, full, m) == full:
            yield m


def enumerate_min_czfs(g: Graph, k: int, limits: SolverLimits | None = None):
    """Yield every minimum connected zero forcing set, lexicographic order."""
    zc, _ = connected_zero_forcing_number(g, limits)
    if k != zc:
        raise WrongSize(f"minimum connected zero forcing sets have size {zc}, not {k}")
    adj, full = g.adj, g.full_mask
    for m in connected_in_components_sets(g, k):
        if _closure(adj, full, m) == full:
            yield m


def propagation_extrema(
    g: Graph, connected: bool = False, limits: SolverLimits | None = None
) -> tuple[tuple[int, int], tuple[int, int]]:
    """((min pt, witness), (max pt, witness)) over all minimum (connected)
    zero forcing sets; witnesses are the first attaining sets in stream order."""
    rep = solve_report(g, limits=limits)
    if rep.budget_exceeded:
        raise BudgetExceeded(
            "budget exhausted before the extrema were determined",
            closures=rep.closures,
        )
    if connected:
        return (
            (rep.ptc_min, rep.witnesses["pt_c"]),
            (rep.ptc_max, rep.witnesses["PT_c"]),
        )
    return (rep.pt_min, rep.witnesses["pt"]), (rep.pt_max, rep.witnesses["PT"])


@dataclass(frozen=True)
class SolveReport:
    """All six parameters with witnesses, counts, and metering stats.

    Fields are None when a budget ran out before they were determined.
    """

    n: int
    m: int
    z: int | None
    z_c: int | None
    pt_min: int | None
    pt_max: int | None
    ptc_min: int | None
    ptc_max: int | None
    witnesses: dict
    min_zfs_count: int | None
    min_czfs_count: int | None
    closures: int
    budget_exceeded: bool

    def __post_init__(self):
        if self.z is not None and self.z_c is not None:
            assert self.z <= self.z_c
        if self.pt_min is not None and self.pt_max is not None:
            assert self.pt_min <= self.pt_max <= self.n - self.z
        if self.ptc_min is not None and self.ptc_max is not None:
            assert self.ptc_min <= self.ptc_max <= self.n - self.z_c

    def to_json_dict(self) -> dict:
        def wit(key):
            m = self.witnesses.get(key)
            return None if m is None else list(vertices_of(m))

        return {
            "n": self.n,
            "m": self.m,
            "z": self.z,
            "z_c": self.z_c,
            "pt": self.pt_min,
            "PT": self.pt_max,
            "pt_c": self.ptc_min,
            "PT_c": self.ptc_max,
            "witnesses": {
                "z": wit("z"),
                "z_c": wit("z_c"),
                "pt": wit("pt"),
                "PT": wit("PT"),
                "pt_c": wit("pt_c"),
                "PT_c": wit("PT_c"),
            },
            "counts": {
                "min_zfs": self.min_zfs_count,
                "min_czfs": self.min_czfs_count,
            },
            "budget": {"closures": self.closures, "exceeded": self.budget_exceeded},
        }


def _find_min_level(g, level_masks_fn, meter, pool, start):
    for k in range(start, g.n + 1):
        hits = _scan_masks(g, level_masks_fn(k), meter, pool)
        if hits:
            return k, hits
    raise AssertionError("the full vertex set always forces")


def _extrema(masks, pts):
    tmin = tmax = None
    wmin = wmax = None
    for m, t in zip(masks, pts):
        if tmin is None or t < tmin:
            tmin, wmin = t, m
        if tmax is None or t > tmax:
            tmax, wmax = t, m
    return tmin, wmin, tmax, wmax


def solve_report(
    g: Graph, limits: SolverLimits | None = None, jobs: int = 1
) -> SolveReport:
    """Compute Z, Z_c, and all four propagation-time extrema with witnesses.

    ``jobs`` > 1 evaluates candidate chunks in worker processes; chunk
    results are reduced in stream order, so the report is byte-identical
    to a single-process run.
    """
    meter = _Meter(limits)
    fields = {
        "z": None,
        "z_c": None,
        "pt_min": None,
        "pt_max": None,
        "ptc_min": None,
        "ptc_max": None,
        "min_zfs_count": None,
        "min_czfs_count": None,
    }
    witnesses = {k: None for k in ("z", "z_c", "pt", "PT", "pt_c", "PT_c")}
    exceeded = False
    pool = None
    try:
        if jobs > 1:
            pool = mp.get_context("fork").Pool(jobs)
        try:
            meter.note = "zero forcing number"
            z, z_hits = _find_min_level(
                g, lambda k: _combo_masks(g.n, k), meter, pool, _zfs_lower_bound(g)
            )
            fields["z"] = z
            fields["min_zfs_count"] = len(z_hits)
            witnesses["z"] = z_hits[0]

            meter.note = "propagation extrema"
            pts = _measure_pts(g, z_hits, meter, pool)
            tmin, wmin, tmax, wmax = _extrema(z_hits, pts)
            fields["pt_min"], fields["pt_max"] = tmin, tmax
            witnesses["pt"], witnesses["PT"] = wmin, wmax

            meter.note = "connected zero forcing number"
            z_c, zc_hits = _find_min_level(
                g, lambda k: connected_in_components_sets(g, k), meter, pool, z
            )
            fields["z_c"] = z_c
            fields["min_czfs_count"] = len(zc_hits)
            witnesses["z_c"] = zc_hits[0]

            meter.note = "connected propagation extrema"
            pts = _measure_pts(g, zc_hits, meter, pool)
            tmin, wmin, tmax, wmax = _extrema(zc_hits, pts)
            fields["ptc_min"], fields["ptc_max"] = tmin, tmax
            witnesses["pt_c"], witnesses["PT_c"] = wmin, wmax
        except BudgetExceeded:
            exceeded = True
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return SolveReport(
        n=g.n,
        m=g.edge_count(),
        z=fields["z"],
        z_c=fields["z_c"],
        pt_min=fields["pt_min"],
        pt_max=fields["pt_max"],
        ptc_min=fields["ptc_min"],
        ptc_max=fields["ptc_max"],
        witnesses=witnesses,
        min_zfs_count=fields["min_zfs_count"],
        min_czfs_count=fields["min_czfs_count"],
        closures=meter.used,
        budget_exceeded=exceeded,
    )
