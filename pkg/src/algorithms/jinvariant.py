"""
From a maximal order O to the minimal polynomial of j(O) over F_p

Each primitive y in O^T of norm d is an optimal embedding of the order of
discriminant -d, so j(O) is a root of H_{-d} mod p, with multiplicity eps * m
when d occurs m times. Intersecting the H_{-d_n} (or the right derivative,
when d repeats) over the primitive vectors in norm order narrows G down
to a single root or a conjugate pair.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from config import get_setting
from src.algorithms.units import unit_group
from src.classpoly.cache import ClassPolyCache, default_cache
from src.classpoly.forms import fundamental_discriminant
from src.errors import NotMaximalError, UndecidedError
from src.finitepoly.fppoly import FpPoly, JOutcome, classify_output, derivative, poly_gcd
from src.lattices.enumeration import Coords
from src.lattices.gross import GrossLattice, gross_lattice, primitive_stream
from src.lattices.lattice import Order, is_maximal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceStep:
    """One pass through the gcd update."""

    n: int
    y: Coords
    d: int
    eps: int
    k: int
    degree: int
    G: Tuple[int, ...]

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Alg1State:
    p: int
    n: int = 0
    k: int = 0
    C: int = 0
    G: Optional[FpPoly] = None
    used: List[Tuple[Coords, int]] = field(default_factory=list)
    trace: List[TraceStep] = field(default_factory=list)

    def __post_init__(self):
        if self.G is None:
            self.G = FpPoly.zero(self.p)

    @property
    def last_d(self) -> Optional[int]:
        return self.used[-1][1] if self.used else None


@dataclass(frozen=True)
class Alg1Result:
    outcome: Optional[JOutcome]
    state: Alg1State
    reason: str = ""

    @property
    def decided(self) -> bool:
        return self.outcome is not None


def _canonical(coords: Sequence[int]) -> Coords:
    lead = next((c for c in coords if c), 0)
    return tuple(coords) if lead > 0 else tuple(-c for c in coords)


def epsilon(d: int, p: int) -> int:
    """2 if p divides the discriminant of Q(sqrt(-d)), else 1."""
    return 2 if fundamental_discriminant(d) % p == 0 else 1


def _update(state: Alg1State, y: Coords, d: int, polys: ClassPolyCache):
    p = state.p
    eps = epsilon(d, p)
    state.k = state.k + eps if d == state.last_d else eps - 1
    state.n += 1
    state.used.append((y, d))

    H = polys.mod_p(d, p)
    if eps == 2 and state.k == 1:
        state.G = poly_gcd(state.G, H, derivative(H))
    else:
        state.G = poly_gcd(state.G, derivative(H, state.k))

    step = TraceStep(state.n, tuple(y), d, eps, state.k, state.G.degree, state.G.coeffs)
    state.trace.append(step)
    logger.debug("step %d: d = %d, eps = %d, k = %d, G = %s", step.n, d, eps, state.k, state.G)


def _step5_sum(lattice: GrossLattice, y1: Coords, y2: Coords) -> Tuple[Coords, Coords]:
    """(y1 +- y2 of least norm, the other sign); + wins ties."""
    plus = tuple(a + b for a, b in zip(y1, y2))
    minus = tuple(a - b for a, b in zip(y1, y2))
    if lattice.norm(minus) < lattice.norm(plus):
        return minus, plus
    return plus, minus


def _outside_plane(lattice: GrossLattice, y1: Coords, y2: Coords, cap) -> Optional[Tuple[Coords, int]]:
    """Least-norm vector not in the span of y1 and y2; it is automatically primitive."""
    for coords, norm in primitive_stream(lattice, cap):
        m = (y1, y2, coords)
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det:
            return coords, norm
    return None


def _branch_to_step5(state: Alg1State, p: int) -> bool:
    if state.C == 1:
        return True
    if state.n != 2:
        return False
    d1, d2 = state.used[0][1], state.used[1][1]
    return 15 <= d1 and 3 * d1 * d2 < 16 * p


def _unit_shortcut(order: Order) -> Optional[JOutcome]:
    units = unit_group(order)
    p = order.p
    if units.max_order == 4:
        return JOutcome(FpPoly.x_minus(1728, p), root=1728 % p)
    if units.max_order in (3, 6):
        return JOutcome(FpPoly.x_minus(0, p), root=0)
    return None


def run_algorithm1(
    order: Order,
    norm_cap: Optional[int] = None,
    polys: Optional[ClassPolyCache] = None,
) -> Alg1Result:
    """Run the algorithm until it outputs or the norms pass norm_cap.

    Never raises on budget exhaustion; the returned result is then
    undecided and carries the state (Algorithm 2 uses the partial G).
    """
    if not is_maximal(order):
        raise NotMaximalError(f"order has discriminant {order.disc}, expected {order.p ** 2}; is_maximal failed")
    p = order.p
    polys = polys or default_cache()
    cap = norm_cap or get_setting("norm_cap_factor") * p
    state = Alg1State(p)

    shortcut = _unit_shortcut(order)
    if shortcut is not None:
        logger.debug("p = %d: extra units give %s", p, shortcut.describe())
        return Alg1Result(shortcut, state, "units")

    lattice = gross_lattice(order)
    stream: Iterator[Tuple[Coords, int]] = primitive_stream(lattice, cap)
    seen = set()
    queued: List[Tuple[Coords, int]] = []

    while True:
        if queued:
            y, d = queued.pop(0)
        else:
            y, d = next(((c, n) for c, n in stream if c not in seen), (None, None))
            if y is None:
                return Alg1Result(None, state, f"no primitive vector of norm <= {cap} left")
        if d > cap:
            return Alg1Result(None, state, f"next norm {d} exceeds the cap {cap}")
        seen.add(_canonical(y))
        _update(state, y, d, polys)

        outcome = classify_output(state.G)
        if outcome is not None:
            return Alg1Result(outcome, state, "decided")

        if _branch_to_step5(state, p):
            y1, y2 = state.used[0][0], state.used[1][0]
            if state.n == 2:
                state.C = 1
                best, _ = _step5_sum(lattice, y1, y2)
                queued.append((best, int(lattice.norm(best))))
            elif state.n == 3:
                _, other = _step5_sum(lattice, y1, y2)
                queued.append((other, int(lattice.norm(other))))
            elif state.n == 4:
                found = _outside_plane(lattice, y1, y2, cap)
                if found is None:
                    return Alg1Result(None, state, f"no vector outside <y1, y2> of norm <= {cap}")
                queued.append(found)
            # from n = 5 on, fall back to the primitive stream


def algorithm1(
    order: Order,
    norm_cap: Optional[int] = None,
    polys: Optional[ClassPolyCache] = None,
) -> Alg1Result:
    """Minimal polynomial of j(O) over F_p.

    Raises:
        NotMaximalError: if O is not maximal
        UndecidedError: if the norm cap is reached first; carries the state
    """
    result = run_algorithm1(order, norm_cap, polys)
    if not result.decided:
        raise UndecidedError(f"undecided at p = {order.p}: {result.reason}", result.state)
    logger.info("p = %d: %s after %d steps", order.p, result.outcome.describe(), result.state.n)
    return result
