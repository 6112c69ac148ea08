"""Orbits, cycles, and whole-graph analysis for the deterministic variants.

Every variant's step is a function on a finite set of states, so each
trajectory is eventually periodic and the state graph splits into
components, one cycle per component.  This module walks orbits, finds the
cycles, counts components, measures tails, and locates Garden of Eden
states (states with no predecessor), plus the classical checks: staircase
convergence, the k(k-1) convergence exponent, the extremal starting
partition, and reachability of every cycle from a Garden of Eden state.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .operators import (
    AustrianState,
    MultiplayerState,
    PointerState,
    austrian_step,
    bulgarian_step,
    carolina_step,
    dual_step,
    janetzko_step,
    montreal_step,
    multiplayer_step,
    servedio_yeh_step,
)
from .partitions import (
    Partition,
    conjugate,
    enumerate_compositions,
    enumerate_montreal_compositions,
    enumerate_partitions,
    format_parts,
    parts_to_json,
    staircase,
)

State = Any
StepFn = Callable[[State], State]


class StepBoundError(RuntimeError):
    """An orbit failed to repeat within the step bound (internal error)."""


def state_total(state: State) -> int:
    """Total number of cards in a state of any variant."""
    if isinstance(state, tuple):
        return sum(state)
    return state.total


def state_to_jsonable(state: State) -> dict:
    if isinstance(state, tuple):
        return parts_to_json(state)
    if isinstance(state, MultiplayerState):
        return {"players": [list(lam) for lam in state.players]}
    return state.to_jsonable()


def state_label(state: State) -> str:
    if isinstance(state, tuple):
        return format_parts(state)
    if isinstance(state, AustrianState):
        return f"{format_parts(state.piles)};bank={state.bank}"
    if isinstance(state, PointerState):
        return f"{format_parts(state.piles)};ptr={state.pointer}"
    return "|".join(format_parts(lam) for lam in state.players)


def default_step_bound(state: State) -> int:
    # 4n^2 sits far above the proven k(k-1) convergence exponent; seats and
    # player counts add positional freedom beyond the card count
    n = state_total(state)
    if isinstance(state, PointerState):
        n += len(state.piles)
    elif isinstance(state, MultiplayerState):
        n += len(state.players)
    return max(4 * n * n, 8)


@dataclass(frozen=True)
class OrbitResult:
    """A trajectory from its start through the first repeated state."""

    path: tuple[State, ...]
    tail: int
    cycle: tuple[State, ...]

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)


def orbit(start: State, step: StepFn, step_bound: int | None = None) -> OrbitResult:
    """Iterate step until the first state repetition.

    path holds tail + cycle_length + 1 states (the repeat included);
    exceeding step_bound raises StepBoundError, which signals a
    configuration error since these state spaces are finite.
    """
    if step_bound is None:
        step_bound = default_step_bound(start)
    seen = {start: 0}
    path = [start]
    while True:
        x = step(path[-1])
        path.append(x)
        if x in seen:
            first = seen[x]
            return OrbitResult(tuple(path), first, tuple(path[first:-1]))
        if len(path) - 1 >= step_bound:
            raise StepBoundError(
                f"no repetition within {step_bound} steps from {state_label(start)}"
            )
        seen[x] = len(path) - 1


def floyd_tail_cycle(start: State, step: StepFn) -> tuple[int, int]:
    """Constant-memory tortoise-and-hare; returns (tail, cycle_length)."""
    tortoise = step(start)
    hare = step(step(start))
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(step(hare))
    tail = 0
    tortoise = start
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        tail += 1
    length = 1
    hare = step(tortoise)
    while tortoise != hare:
        hare = step(hare)
        length += 1
    return tail, length


def orbit_json_lines(result: OrbitResult) -> list[str]:
    """One compact JSON object per path state."""
    return [
        json.dumps(state_to_jsonable(s), separators=(",", ":")) for s in result.path
    ]


# --- variant registry ---

@dataclass(frozen=True)
class Variant:
    name: str
    step: StepFn
    state_kind: str
    enumerate_states: Callable[[int, int | None], Iterator[State]] | None = None

    @property
    def enumerable(self) -> bool:
        return self.enumerate_states is not None


def _enum_partitions(n: int, max_n: int | None) -> Iterator[State]:
    return enumerate_partitions(n, max_n=max_n)


def _enum_compositions(n: int, max_n: int | None) -> Iterator[State]:
    return enumerate_compositions(n, max_n=max_n)


def _enum_montreal(n: int, max_n: int | None) -> Iterator[State]:
    return enumerate_montreal_compositions(n)


def _make_austrian_enum(L: int):
    def enum(n: int, max_n: int | None) -> Iterator[State]:
        for bank in range(min(L - 1, n) + 1):
            for piles in enumerate_partitions(n - bank, max_part=L, max_n=max_n):
                yield AustrianState(piles, bank, L)

    return enum


def get_variant(name: str, *, L: int | None = None) -> Variant:
    """Look up a deterministic variant by identifier.

    The Austrian game needs the machine lifetime L; the circular games
    (servedio_yeh, janetzko) and the multiplayer game have no single-n
    state enumeration, so they support orbits but not whole-graph analysis.
    """
    if name == "austrian":
        if L is None:
            raise ValueError("the austrian variant requires L")
        return Variant("austrian", austrian_step, "austrian", _make_austrian_enum(L))
    fixed = {
        "bulgarian": Variant("bulgarian", bulgarian_step, "partition", _enum_partitions),
        "dual": Variant("dual", dual_step, "partition", _enum_partitions),
        "carolina": Variant("carolina", carolina_step, "strict", _enum_compositions),
        "montreal": Variant("montreal", montreal_step, "montreal", _enum_montreal),
        "servedio_yeh": Variant("servedio_yeh", servedio_yeh_step, "circular"),
        "janetzko": Variant("janetzko", janetzko_step, "pointer"),
        "multiplayer": Variant("multiplayer", multiplayer_step, "multiplayer"),
    }
    if name not in fixed:
        raise ValueError(f"unknown variant {name!r}; choose from {sorted(fixed) + ['austrian']}")
    return fixed[name]


# --- full graph analysis ---

def _explore(seeds, step):
    """Walk every seed to its cycle, memoizing across seeds.

    Returns (succ, dist, comp_of, cycles): the successor of every visited
    state, its distance to the cycle, the component key it belongs to
    (the smallest state of the component's cycle), and the cycles keyed
    the same way, each rotated to start at its smallest state.
    """
    succ: dict = {}
    dist: dict = {}
    comp_of: dict = {}
    cycles: dict = {}
    for seed in seeds:
        path: list = []
        pos: dict = {}
        x = seed
        while x not in comp_of and x not in pos:
            pos[x] = len(path)
            path.append(x)
            nxt = succ.get(x)
            if nxt is None:
                nxt = succ[x] = step(x)
            x = nxt
        if x in pos:  # closed a brand-new cycle inside the current path
            start = pos[x]
            cyc = path[start:]
            key = min(cyc)
            pivot = cyc.index(key)
            cycles[key] = tuple(cyc[pivot:] + cyc[:pivot])
            for s in cyc:
                comp_of[s] = key
                dist[s] = 0
            path = path[:start]
            base = 0
        else:
            key = comp_of[x]
            base = dist[x]
        for back, s in enumerate(reversed(path), 1):
            comp_of[s] = key
            dist[s] = base + back
    return succ, dist, comp_of, cycles


def _explore_chunk(args):
    variant_name, L, seeds = args
    variant = get_variant(variant_name, L=L)
    succ, dist, _, cycles = _explore(seeds, variant.step)
    return succ, dist, cycles


@dataclass(frozen=True)
class GraphSummary:
    """Exact structure of one variant's state graph on all states of size n."""

    n: int
    variant: str
    state_count: int
    cycles: tuple[tuple[State, ...], ...]
    max_tail: int
    ge_states: tuple[State, ...]
    edges: tuple[tuple[State, State], ...] | None = field(default=None, repr=False)

    @property
    def component_count(self) -> int:
        return len(self.cycles)

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def to_json(self, indent: int | None = None) -> str:
        data = {
            "n": self.n,
            "variant": self.variant,
            "state_count": self.state_count,
            "component_count": self.component_count,
            "max_tail": self.max_tail,
            "cycles": [[state_to_jsonable(s) for s in cyc] for cyc in self.cycles],
            "ge_states": [state_to_jsonable(s) for s in self.ge_states],
        }
        return json.dumps(data, indent=indent)

    def to_dot(self) -> str:
        """DOT digraph with one edge per state; GE nodes are marked."""
        if self.edges is None:
            raise ValueError("summary was built without keep_edges=True")
        lines = [f"digraph {self.variant}_n{self.n} {{"]
        for s in self.ge_states:
            lines.append(f'  "{state_label(s)}" [ge=true, style=dashed];')
        for a, b in self.edges:
            lines.append(f'  "{state_label(a)}" -> "{state_label(b)}";')
        lines.append("}")
        return "\n".join(lines)


def analyze_state_space(
    n: int,
    variant: str = "bulgarian",
    *,
    L: int | None = None,
    workers: int = 1,
    keep_edges: bool = False,
    max_n: int | None = None,
) -> GraphSummary:
    """Exhaustively analyze every state of total n under one variant.

    Orbits may pass through states outside the seed enumeration (the
    Montreal stratum is not closed under its step); everything visited is
    included in the counts.  Results are identical for any worker count.
    """
    game = get_variant(variant, L=L)
    if not game.enumerable:
        raise ValueError(f"variant {variant!r} has no state enumeration")
    seeds = list(game.enumerate_states(n, max_n))
    if workers <= 1:
        succ, dist, _, cycles = _explore(seeds, game.step)
    else:
        chunk = max(1, -(-len(seeds) // workers))
        jobs = [
            (variant, L, seeds[i : i + chunk]) for i in range(0, len(seeds), chunk)
        ]
        succ, dist, cycles = {}, {}, {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part_succ, part_dist, part_cycles in pool.map(_explore_chunk, jobs):
                succ.update(part_succ)
                dist.update(part_dist)
                cycles.update(part_cycles)
    indeg = Counter(succ.values())
    ge = tuple(sorted(s for s in succ if indeg[s] == 0))
    ordered_cycles = tuple(cycles[key] for key in sorted(cycles))
    return GraphSummary(
        n=n,
        variant=variant,
        state_count=len(succ),
        cycles=ordered_cycles,
        max_tail=max(dist.values(), default=0),
        ge_states=ge,
        edges=tuple(sorted(succ.items())) if keep_edges else None,
    )


# --- Garden of Eden ---

def garden_of_eden_test(lam: Partition) -> bool:
    """True iff lam has no predecessor: its largest part is below s - 1,
    where s is the number of parts."""
    if not lam:
        raise ValueError("empty partition")
    return lam[0] < len(lam) - 1


# --- classical-results reports ---

@dataclass(frozen=True)
class KnuthReport:
    """Does every partition of k(k+1)/2 reach the staircase in k(k-1) steps?"""

    k: int
    n: int
    exponent: int
    states_checked: int
    witnesses: tuple[Partition, ...]  # exceptions; empty when the claim holds

    @property
    def holds(self) -> bool:
        return not self.witnesses


def knuth_exponent_check(k: int, *, max_n: int | None = None) -> KnuthReport:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    n = k * (k + 1) // 2
    sigma = staircase(k)
    exponent = k * (k - 1)
    bad = []
    checked = 0
    for lam in enumerate_partitions(n, max_n=max_n):
        checked += 1
        x = lam
        for _ in range(exponent):
            if x == sigma:  # the staircase is fixed, no need to continue
                break
            x = bulgarian_step(x)
        if x != sigma:
            bad.append(lam)
    return KnuthReport(k, n, exponent, checked, tuple(bad))


@dataclass(frozen=True)
class ToomReport:
    """Longest-known approach to the staircase, with its mirror symmetry."""

    k: int
    tau: Partition
    minimal_steps: int
    expected_steps: int
    conjugacy_holds: bool
    path: tuple[Partition, ...]

    @property
    def holds(self) -> bool:
        return self.minimal_steps == self.expected_steps and self.conjugacy_holds


def toom_path(k: int) -> ToomReport:
    """Iterate from tau = (k-1, k-1, k-2, ..., 2, 1, 1) to the staircase.

    Checks that the trip takes exactly k(k-1) moves and that states i and
    k(k-1)-i-1 along the way are conjugate partitions.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    tau = (k - 1,) + staircase(k - 1) + (1,)
    sigma = staircase(k)
    expected = k * (k - 1)
    path = [tau]
    bound = default_step_bound(tau)
    while path[-1] != sigma:
        path.append(bulgarian_step(path[-1]))
        if len(path) > bound:
            raise StepBoundError(f"staircase not reached from {tau} within {bound} steps")
    s = len(path) - 1
    conjugacy = s == expected and all(
        path[i] == conjugate(path[s - i - 1]) for i in range(s)
    )
    return ToomReport(k, tau, s, expected, conjugacy, tuple(path))


@dataclass(frozen=True)
class CycleWitness:
    """A Garden of Eden state whose orbit lands on the given cycle."""

    cycle: tuple[Partition, ...]
    ge_state: Partition | None
    path: tuple[Partition, ...]


@dataclass(frozen=True)
class ReachabilityReport:
    n: int
    holds: bool
    witnesses: tuple[CycleWitness, ...]


def ge_reachability_check(n: int, *, max_n: int | None = None) -> ReachabilityReport:
    """Verify every cycle of the Bulgarian graph is entered by some
    Garden of Eden orbit.  Defined for n >= 3: the two smallest card
    counts have no Garden of Eden states at all."""
    if n < 3:
        raise ValueError(f"defined for n >= 3, got {n}")
    seeds = list(enumerate_partitions(n, max_n=max_n))
    succ, _, comp_of, cycles = _explore(seeds, bulgarian_step)
    indeg = Counter(succ.values())
    ge_by_comp: dict = {}
    for s in seeds:
        if indeg[s] == 0:
            key = comp_of[s]
            if key not in ge_by_comp or s < ge_by_comp[key]:
                ge_by_comp[key] = s
    witnesses = []
    holds = True
    for key in sorted(cycles):
        ge = ge_by_comp.get(key)
        if ge is None:
            holds = False
            witnesses.append(CycleWitness(cycles[key], None, ()))
        else:
            witnesses.append(CycleWitness(cycles[key], ge, orbit(ge, bulgarian_step).path))
    return ReachabilityReport(n, holds, tuple(witnesses))
