"""Enumeration of the lowest three-dimensional states and their degeneracy groups.

Energies grow with n and with delta, and delta grows with each transverse quantum number,
so a cube of quantum numbers is complete below the cheapest state on its outer faces.
"""

from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Callable, Hashable, Sequence

import structlog

from pdmchannel.errors import InvalidParam
from pdmchannel.model3d.box import box_state
from pdmchannel.model3d.cylinder import cyl_state
from pdmchannel.models.spectrum import BoxState, CylState, DegeneracyGroup
from pdmchannel.wavefn.fields import check_params

log = structlog.get_logger(__name__)

MODELS = ("box", "cyl")

State = BoxState | CylState


def _box_states(bound: int, k: float, q: float) -> list[BoxState]:
    return [
        box_state(n, l, m, k, q)
        for n in range(bound + 1)
        for l in range(bound + 1)
        for m in range(bound + 1)
    ]


def _box_outside(bound: int, k: float, q: float) -> float:
    return min(box_state(bound + 1, 0, 0, k, q).E, box_state(0, bound + 1, 0, k, q).E)


def _cyl_states(bound: int, k: float, q: float, R: float) -> list[CylState]:
    out = []
    for n in range(bound + 1):
        for am in range(bound + 1):
            for s in range(1, bound + 2):
                for m in sorted({am, -am}):
                    out.append(cyl_state(n, m, s, k, q, R))
    return out


def _cyl_outside(bound: int, k: float, q: float, R: float) -> float:
    return min(
        cyl_state(bound + 1, 0, 1, k, q, R).E,
        cyl_state(0, bound + 1, 1, k, q, R).E,
        cyl_state(0, 0, bound + 2, k, q, R).E,
    )


def quantum_numbers(state: State) -> tuple[int, int, int]:
    if isinstance(state, BoxState):
        return (state.n, state.l, state.m)
    return (state.n, state.m, state.s)


def _sorted(states: list[State]) -> list[State]:
    return sorted(states, key=lambda st: (st.E, quantum_numbers(st)))


def _cube(model: str, bound: int, k: float, q: float, R: float) -> tuple[list[State], float]:
    """States with every quantum number below ``bound`` and the cheapest state outside."""
    if model == "box":
        return _sorted(_box_states(bound, k, q)), _box_outside(bound, k, q)
    return _sorted(_cyl_states(bound, k, q, R)), _cyl_outside(bound, k, q, R)


def _enumerate_below(model: str, e_max: float, k: float, q: float, R: float) -> list[State]:
    bound = 1
    while True:
        states, outside = _cube(model, bound, k, q, R)
        if outside > e_max:
            return [st for st in states if st.E <= e_max]
        bound *= 2


def spectrum3d(model: str, count: int, *, k: float, q: float, R: float = 1.0) -> list[State]:
    """Lowest ``count`` states ordered by (E, quantum numbers)."""
    check_params(k, q)
    if model not in MODELS:
        raise InvalidParam(f"model must be one of {MODELS}, got {model!r}")
    if count < 1:
        raise InvalidParam(f"count must be >= 1, got {count}")
    bound = 1
    while True:
        states, outside = _cube(model, bound, k, q, R)
        if len(states) >= count and states[count - 1].E < outside:
            log.debug("spectrum3d_enumerated", model=model, count=count, bound=bound)
            return states[:count]
        bound *= 2


def _box_key(state: BoxState) -> tuple[int, int]:
    return (state.n, state.delta_sq)


def _cyl_key(state: CylState) -> tuple[int, int, int]:
    return (state.n, abs(state.m), state.s)


def _box_kind(members: Sequence[tuple[int, ...]]) -> str:
    pairs = {tuple(sorted(qn[1:])) for qn in members}
    if len(members) == 1:
        return "single"
    return "swap" if len(pairs) == 1 else "accidental"


def _cyl_kind(members: Sequence[tuple[int, ...]]) -> str:
    return "sign" if len(members) > 1 else "single"


def group_states(
    states: Sequence[State],
    key: Callable[[State], Hashable],
    kind: Callable[[Sequence[tuple[int, ...]]], str],
    label: Callable[[Hashable], str],
) -> list[DegeneracyGroup]:
    """Group by an exact key; group ids follow ascending energy."""
    buckets: dict[Hashable, list[State]] = defaultdict(list)
    for st in states:
        buckets[key(st)].append(st)
    ordered = sorted(buckets.items(), key=lambda kv: (kv[1][0].E, kv[0]))
    groups = []
    for gid, (k_, members) in enumerate(ordered):
        qns = sorted(quantum_numbers(st) for st in members)
        group = DegeneracyGroup(
            group_id=gid, kind=kind(qns), key=label(k_), E=members[0].E, members=qns
        )
        groups.append(group)
    return groups


def box_groups(states: Sequence[BoxState]) -> list[DegeneracyGroup]:
    return group_states(
        states, _box_key, _box_kind, lambda key: f"n={key[0]},delta_sq={key[1]}"
    )


def cyl_groups(states: Sequence[CylState]) -> list[DegeneracyGroup]:
    return group_states(
        states, _cyl_key, _cyl_kind, lambda key: f"n={key[0]},abs_m={key[1]},s={key[2]}"
    )


def _check_e_max(e_max: float) -> None:
    if not math.isfinite(e_max):
        raise InvalidParam(f"E_max must be finite, got {e_max}")


def box_degeneracy_scan(e_max: float, k: float, q: float) -> list[DegeneracyGroup]:
    """Degeneracy groups of every box state with E <= e_max.

    States share a group exactly when n and the integer delta^2 agree. A group holding
    more than one unordered (l, m) pair is an accidental degeneracy, e.g. (1, 8) and (5, 6)
    with delta^2 = 85.
    """
    _check_e_max(e_max)
    check_params(k, q)
    groups = box_groups(_enumerate_below("box", e_max, k, q, 1.0))
    log.info(
        "box_degeneracy_scan",
        e_max=e_max,
        groups=len(groups),
        accidental=sum(g.kind == "accidental" for g in groups),
    )
    return groups


def cyl_degeneracy_scan(e_max: float, k: float, q: float, R: float) -> list[DegeneracyGroup]:
    """Groups of the cylinder below e_max; only the sign of m is ever degenerate."""
    _check_e_max(e_max)
    check_params(k, q)
    groups = cyl_groups(_enumerate_below("cyl", e_max, k, q, R))
    log.info("cyl_degeneracy_scan", e_max=e_max, R=R, groups=len(groups))
    return groups


def groups_for(model: str, states: Sequence[State]) -> list[DegeneracyGroup]:
    return box_groups(states) if model == "box" else cyl_groups(states)

