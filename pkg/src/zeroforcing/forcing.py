"""The color-change rule: one-round forces, closures, and round traces.

A black vertex with exactly one white neighbor forces that neighbor black.
``derived_coloring`` runs the rule to its (unique) fixpoint with a dirty-set
worklist; ``propagation_trace`` runs simultaneous rounds and records every
force, which doubles as an independent round-based closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import EndpointOutOfRange, Graph, is_connected_in_components, vertices_of


class NotForcing(ValueError):
    """The given set does not force the whole graph."""


def _check_mask(g: Graph, mask: int):
    if mask & ~g.full_mask:
        raise EndpointOutOfRange("vertex set mentions ids outside the graph")


def _closure(adj, full: int, black: int) -> int:
    """Fixpoint of the color-change rule, worklist kernel on raw adjacency."""
    if black == full:
        return full
    pending = black
    while pending:
        ubit = pending & -pending
        pending ^= ubit
        white = adj[ubit.bit_length() - 1] & ~black
        if not white or white & (white - 1):
            continue
        black |= white
        if black == full:
            return full
        pending |= white | (adj[white.bit_length() - 1] & black)
    return black


def _round_forces(adj, black: int):
    """All forces available against ``black`` simultaneously, forcer-ascending."""
    out = []
    todo = black
    while todo:
        ubit = todo & -todo
        todo ^= ubit
        u = ubit.bit_length() - 1
        white = adj[u] & ~black
        if white and not white & (white - 1):
            out.append((u, white.bit_length() - 1))
    return out


def _propagation_steps(adj, full: int, black: int) -> int | None:
    """Number of simultaneous rounds to blacken everything, or None if stuck."""
    steps = 0
    while black != full:
        add = 0
        todo = black
        while todo:
            ubit = todo & -todo
            todo ^= ubit
            white = adj[ubit.bit_length() - 1] & ~black
            if white and not white & (white - 1):
                add |= white
        if not add:
            return None
        black |= add
        steps += 1
    return steps


def forces_one_round(g: Graph, black: int) -> list[tuple[int, int]]:
    """All (forcer, forced) pairs available in one simultaneous round.

    Computed against the input coloring; multiple forcers of the same
    vertex are all reported.  Pairs come in increasing forcer order.
    """
    _check_mask(g, black)
    return _round_forces(g.adj, black)


def derived_coloring(g: Graph, black: int) -> int:
    """The unique fixpoint der(B) reached from the mask ``black``."""
    _check_mask(g, black)
    return _closure(g.adj, g.full_mask, black)


def derived_coloring_sequential(g: Graph, black: int, rng) -> int:
    """Fixpoint reached by applying one rng-chosen force at a time.

    Equals ``derived_coloring`` for every order; exists to demonstrate
    order-independence of the closure.
    """
    _check_mask(g, black)
    adj = g.adj
    while True:
        avail = _round_forces(adj, black)
        if not avail:
            return black
        _, v = avail[rng.randrange(len(avail))]
        black |= 1 << v


def is_zfs(g: Graph, black: int) -> bool:
    """True iff ``black`` is a zero forcing set of g."""
    _check_mask(g, black)
    return _closure(g.adj, g.full_mask, black) == g.full_mask


def is_czfs(g: Graph, black: int) -> bool:
    """True iff ``black`` is a zero forcing set that is connected in components."""
    _check_mask(g, black)
    if not black:
        return False
    return is_zfs(g, black) and is_connected_in_components(g, black)


@dataclass(frozen=True)
class ForcingTrace:
    """Round-structured record of a forcing run.

    ``rounds[t]`` holds the forces applied in round t+1, each a
    (forcer, forced) pair, sorted by forced vertex; when several black
    vertices could force the same vertex the smallest forcer id is kept.
    ``pt`` is the round count when ``final`` covers the graph, else None.
    """

    initial: int
    rounds: tuple[tuple[tuple[int, int], ...], ...]
    final: int
    pt: int | None

    def forced_masks(self) -> list[int]:
        """Mask of newly forced vertices per round."""
        out = []
        for rnd in self.rounds:
            m = 0
            for _, v in rnd:
                m |= 1 << v
            out.append(m)
        return out

    def to_json_dict(self) -> dict:
        return {
            "initial": list(vertices_of(self.initial)),
            "rounds": [
                [{"forcer": u, "forced": v} for u, v in rnd] for rnd in self.rounds
            ],
            "final": list(vertices_of(self.final)),
            "pt": self.pt,
        }


def propagation_trace(g: Graph, black: int) -> ForcingTrace:
    """Simultaneous-round propagation from ``black`` until fixpoint."""
    _check_mask(g, black)
    adj = g.adj
    initial = black
    rounds = []
    while True:
        forces = _round_forces(adj, black)
        if not forces:
            break
        chosen: dict[int, int] = {}
        for u, v in forces:
            if v not in chosen or u < chosen[v]:
                chosen[v] = u
        rnd = tuple((chosen[v], v) for v in sorted(chosen))
        rounds.append(rnd)
        for _, v in rnd:
            black |= 1 << v
    pt = len(rounds) if black == g.full_mask else None
    return ForcingTrace(initial, tuple(rounds), black, pt)


def propagation_time(g: Graph, black: int) -> int:
    """Rounds needed for the zero forcing set ``black`` to cover g."""
    _check_mask(g, black)
    steps = _propagation_steps(g.adj, g.full_mask, black)
    if steps is None:
        raise NotForcing("the set does not force the whole graph")
    return steps


def replay_trace(g: Graph, trace: ForcingTrace) -> bool:
    """Re-validate every force of a trace against the color-change rule."""
    if trace.initial & ~g.full_mask:
        return False
    black = trace.initial
    seen_forced = 0
    for rnd in trace.rounds:
        add = 0
        for u, v in rnd:
            if not black >> u & 1 or black >> v & 1:
                return False
            white = g.adj[u] & ~black
            if white != 1 << v:
                return False
            if seen_forced >> v & 1:
                return False
            add |= 1 << v
            seen_forced |= 1 << v
        if not add:
            return False
        black |= add
    if black != trace.final:
        return False
    if trace.pt is not None:
        return trace.final == g.full_mask and trace.pt == len(trace.rounds)
    return trace.final != g.full_mask
