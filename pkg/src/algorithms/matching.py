"""
Matching every maximal order type of B_p with its supersingular j-invariants

Algorithm 1 runs on every type up to norm cap * p. Orders that stay
undecided keep their partial G_i; the K_j already found are divided out of
them round after round until each G_i is linear or an irreducible quadratic.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from config import get_setting
from src.algorithms.jinvariant import Alg1Result, run_algorithm1
from src.algorithms.types import TypeSet, enumerate_types
from src.classpoly.cache import ClassPolyCache
from src.errors import OracleMismatchError
from src.finitepoly.fppoly import FpPoly, JOutcome, classify_output, frobenius_part, poly_gcd
from src.lattices.lattice import Order
from src.oracle.supersingular import SupersingularSet, expected_supersingular_counts

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Leftover:
    """A type whose G_i never isolated a single factor."""

    index: int
    order: Order
    G: FpPoly


@dataclass
class MatchResult:
    p: int
    types: TypeSet
    restricted: bool
    pairs: List[Tuple[Order, JOutcome]] = field(default_factory=list)
    indices: List[int] = field(default_factory=list)
    leftover: List[Leftover] = field(default_factory=list)
    rounds: int = 0

    @property
    def decided(self) -> bool:
        return not self.leftover

    def product(self) -> FpPoly:
        total = FpPoly.from_ints([1], self.p)
        for _, outcome in self.pairs:
            total = total * outcome.minpoly
        return total


def _capped_run(order: Order, cap: int) -> Alg1Result:
    return run_algorithm1(order, cap)


def _accept(G: FpPoly, restricted: bool) -> Optional[JOutcome]:
    outcome = classify_output(G)
    if restricted and outcome is not None and outcome.is_pair:
        return None
    return outcome


def _strip(G: FpPoly, K: FpPoly) -> FpPoly:
    """Divide out every common factor of G and K."""
    while True:
        g = poly_gcd(G, K)
        if g.degree < 1:
            return G
        G = G // g


def algorithm2(
    p: int,
    restrict_to_Fp: bool = False,
    jobs: Optional[int] = None,
    polys: Optional[ClassPolyCache] = None,
    types: Optional[TypeSet] = None,
) -> MatchResult:
    """Pair every type (or every type with j in F_p) with K_i(X)."""
    types = types or enumerate_types(p)
    jobs = jobs or get_setting("jobs")
    cap = get_setting("norm_cap_factor") * p

    indices = [i for i in range(len(types)) if types.in_fp[i] or not restrict_to_Fp]
    orders = [types.orders[i] for i in indices]
    if jobs > 1 and polys is None:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            runs = list(pool.map(_capped_run, orders, [cap] * len(orders)))
    else:
        runs = [run_algorithm1(order, cap, polys) for order in orders]

    G: Dict[int, FpPoly] = {}
    K: Dict[int, JOutcome] = {}
    for i, run in zip(indices, runs):
        if restrict_to_Fp and not run.decided:
            G[i] = frobenius_part(run.state.G)
            outcome = _accept(G[i], True)
        else:
            G[i] = run.state.G
            outcome = run.outcome
        if outcome is not None:
            K[i] = outcome
    logger.info("p = %d: %d of %d orders decided by Algorithm 1 alone", p, len(K), len(indices))

    rounds = 0
    while len(K) < len(indices) and rounds <= len(indices):
        rounds += 1
        progress = False
        for i in indices:
            if i in K:
                continue
            for j, outcome in list(K.items()):
                G[i] = _strip(G[i], outcome.minpoly)
            outcome = _accept(G[i], restrict_to_Fp)
            if outcome is not None:
                K[i] = outcome
                progress = True
        logger.debug("p = %d: round %d, %d decided", p, rounds, len(K))
        if not progress:
            break

    result = MatchResult(p, types, restrict_to_Fp, rounds=rounds)
    for i in indices:
        if i in K:
            result.pairs.append((types.orders[i], K[i]))
            result.indices.append(i)
        else:
            result.leftover.append(Leftover(i, types.orders[i], G[i]))
    if result.leftover:
        logger.warning("p = %d: %d types left undecided after %d rounds", p, len(result.leftover), rounds)
    return result


def oracle_check(result: MatchResult, oracle: SupersingularSet) -> None:
    """Compare the matching with the brute-force supersingular set.

    Raises:
        OracleMismatchError: on any disagreement
    """
    if result.leftover:
        raise OracleMismatchError(f"p = {result.p}: {len(result.leftover)} types undecided")
    if result.restricted:
        found = sorted(outcome.root for _, outcome in result.pairs)
        if found != sorted(oracle.roots_in_Fp):
            raise OracleMismatchError(f"p = {result.p}: roots {found} vs oracle {sorted(oracle.roots_in_Fp)}")
    elif result.product() != oracle.polynomial.monic():
        raise OracleMismatchError(f"p = {result.p}: product of K_i is {result.product()}, oracle has {oracle.polynomial}")

    total, in_fp = expected_supersingular_counts(result.p)
    logger.info("p = %d: oracle agrees (%d supersingular j expected, %s in F_p)", result.p, total, in_fp)
