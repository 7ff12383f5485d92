"""
Empirical checks over all maximal order types of B_p

- the distinguishing theorem for orders with small D1 D2 (pairs of types)
- optimal domination between theta' tables
- structural properties of every Gross lattice
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

from config import get_setting
from src.algorithms.matching import MatchResult
from src.algorithms.types import TypeSet, enumerate_types, expected_mass
from src.algorithms.units import unit_group
from src.classpoly.cache import ClassPolyCache, default_cache
from src.classpoly.forms import check_discriminant
from src.errors import CounterexampleError, InputError, InvariantError
from src.lattices.enumeration import short_vectors
from src.lattices.gross import (
    ThetaTable,
    gross_lattice,
    hermite_bounds_hold,
    reconstruct_order,
    successive_minima,
    theta_table,
    trace_zero_index,
)
from src.lattices.linalg import determinant
from src.algorithms.jinvariant import epsilon

logger = logging.getLogger(__name__)

THEOREM_MIN_P = 286
MULTIPLICITY_MAX_D = 100


def conditions_hold(D1: int, D2: int, p: int) -> bool:
    """15 <= D1, 286 < p and D1 D2 < 16p/3."""
    return 15 <= D1 and p > THEOREM_MIN_P and 3 * D1 * D2 < 16 * p


@dataclass(frozen=True)
class PairVerdict:
    first: int
    second: int
    status: str
    failed: Optional[str] = None


@dataclass
class Theorem1Report:
    p: int
    verdicts: List[PairVerdict] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(1 for v in self.verdicts if v.status == "distinguished")

    @property
    def passed(self) -> bool:
        return all(v.status != "counterexample" for v in self.verdicts)

    def to_dict(self) -> dict:
        return {"p": self.p, "passed": self.passed, "verdicts": [asdict(v) for v in self.verdicts]}


def _table(types: TypeSet, i: int, bound: int) -> ThetaTable:
    table = types.theta_keys[i]
    if table.bound >= bound:
        return table
    return theta_table(gross_lattice(types.orders[i]), bound)


def verify_theorem1(p: int, types: Optional[TypeSet] = None) -> Theorem1Report:
    """Check that the five-quantity hypothesis never holds across distinct types.

    Raises:
        CounterexampleError: if it does
    """
    types = types or enumerate_types(p)
    report = Theorem1Report(p)
    for i, order in enumerate(types.orders):
        lattice = gross_lattice(order)
        m = successive_minima(lattice)
        if p <= THEOREM_MIN_P:
            status = "vacuous-p"
        elif not conditions_hold(m.D1, m.D2, p):
            status = "vacuous-conditions"
        else:
            status = None
        plus = int(lattice.norm(tuple(a + b for a, b in zip(m.x, m.y))))
        minus = int(lattice.norm(tuple(a - b for a, b in zip(m.x, m.y))))
        quantities = [("D1", m.D1), ("D2", m.D2), ("Nr(x+y)", plus), ("Nr(x-y)", minus), ("D3", m.D3)]
        bound = max(q for _, q in quantities)
        own = _table(types, i, bound)

        for k in range(len(types)):
            if k == i:
                continue
            if status is not None:
                report.verdicts.append(PairVerdict(i, k, status))
                continue
            other = _table(types, k, bound)
            failed = next((name for name, q in quantities if not other.represents_optimally(q)), None)
            if failed is None and own.optimal(m.D3) > other.optimal(m.D3):
                failed = "theta'(D3)"
            if failed is None:
                report.verdicts.append(PairVerdict(i, k, "counterexample"))
                raise CounterexampleError(f"p = {p}: types {i} and {k} satisfy every hypothesis")
            report.verdicts.append(PairVerdict(i, k, "distinguished", failed))

    logger.info("p = %d: %d ordered pairs distinguished", p, report.checked)
    return report


@dataclass
class DominanceReport:
    p: int
    bound: int
    relation: List[List[bool]]

    @property
    def strict(self) -> List[Tuple[int, int]]:
        """Pairs (i, k), i != k, with type i dominated by type k but not conversely."""
        n = len(self.relation)
        return [
            (i, k) for i in range(n) for k in range(n)
            if i != k and self.relation[i][k] and not self.relation[k][i]
        ]

    @property
    def symmetric(self) -> List[Tuple[int, int]]:
        n = len(self.relation)
        return [(i, k) for i in range(n) for k in range(i + 1, n) if self.relation[i][k] and self.relation[k][i]]

    @property
    def antisymmetric(self) -> bool:
        return not self.symmetric

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "bound": self.bound,
            "antisymmetric": self.antisymmetric,
            "strict": self.strict,
            "symmetric": self.symmetric,
        }


def dominance_poset(p: int, bound: int, types: Optional[TypeSet] = None) -> DominanceReport:
    """theta'-domination between all types up to bound.

    Raises:
        InvariantError: if two distinct types dominate each other at a bound
            past fingerprint_factor * p
    """
    if bound < 1:
        raise InputError(f"bound must be positive, got {bound}")
    types = types or enumerate_types(p)
    tables = [_table(types, i, bound) for i in range(len(types))]
    relation = [[a.dominated_by(b, bound) for b in tables] for a in tables]
    report = DominanceReport(p, bound, relation)
    if bound >= get_setting("fingerprint_factor") * p and not report.antisymmetric:
        raise InvariantError(f"p = {p}: domination is not antisymmetric at bound {bound}: {report.symmetric}")
    logger.info("p = %d: %d strict dominations up to %d", p, len(report.strict), bound)
    return report


def conjecture_probe(p: int, bound: int, types: Optional[TypeSet] = None) -> List[Tuple[int, int]]:
    """Distinct types where one theta' table is dominated by the other up to bound."""
    return dominance_poset(p, bound, types).strict


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    type_index: Optional[int] = None
    witness: str = ""


@dataclass
class PropertyReport:
    p: int
    results: List[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[PropertyResult]:
        return [r for r in self.results if not r.passed]

    def add(self, name: str, passed: bool, index: Optional[int] = None, witness: str = ""):
        self.results.append(PropertyResult(name, bool(passed), index, "" if passed else witness))

    def to_dict(self) -> dict:
        return {"p": self.p, "passed": self.passed, "results": [asdict(r) for r in self.results]}


def _next_shortest_ok(lattice, m) -> bool:
    """x + y is the shortest vector of <x, y> outside <x> apart from +-y."""
    t = lattice.pairing(m.x, m.y)
    gram = [[2 * m.D1, t], [t, 2 * m.D2]]
    target = m.D1 + m.D2 + t
    for (a, b), norm in short_vectors(gram, target):
        if b == 0 or (a, b) in ((0, 1), (0, -1)):
            continue
        if norm < target:
            return False
    return True


def _products_close(lattice, order) -> bool:
    """w = uv - Tr(uv)/2 lies in O^T and is orthogonal to u and v."""
    x, y, z = successive_minima(lattice).witnesses
    for u, v in ((x, y), (x, z), (y, z)):
        uv = u * v
        w = uv - uv.trace() / 2
        if not lattice.contains(w):
            return False
        for s in (u, v):
            if (w * s.conj()).trace() != 0:
                return False
    return True


def _multiplicity_check(report: PropertyReport, types: TypeSet, match: MatchResult, polys: ClassPolyCache):
    p = types.p
    for i, outcome in zip(match.indices, (o for _, o in match.pairs)):
        if types.units[i].size != 2:
            continue
        table = _table(types, i, MULTIPLICITY_MAX_D)
        for d in range(5, MULTIPLICITY_MAX_D + 1):
            if d % 4 not in (0, 3):
                continue
            check_discriminant(d)
            got = polys.mod_p(d, p).multiplicity(outcome.minpoly)
            want = epsilon(d, p) * table.optimal(d)
            if got != want:
                report.add("multiplicity", False, i, f"d = {d}: multiplicity {got}, expected {want}")
                break
        else:
            report.add("multiplicity", True, i)


def verify_properties(
    p: int,
    types: Optional[TypeSet] = None,
    match: Optional[MatchResult] = None,
    polys: Optional[ClassPolyCache] = None,
) -> PropertyReport:
    """Run the structural checks on every type; multiplicities need a matching."""
    types = types or enumerate_types(p)
    report = PropertyReport(p)
    report.add("mass", types.mass == expected_mass(p), None, f"mass {types.mass}")

    for i, order in enumerate(types.orders):
        lattice = gross_lattice(order)
        m = successive_minima(lattice)
        det = lattice.determinant()
        report.add("det_gram", det == 32 * p * p, i, f"det {det}")
        report.add("hermite", hermite_bounds_hold(m, p), i, f"D1 D2 D3 = {m.product}")
        coords = determinant([list(m.x), list(m.y), list(m.z)])
        report.add("minima_basis", abs(coords) == 1, i, f"index {coords}")
        report.add("theta_consistency", types.theta_keys[i].is_consistent(), i)

        t = lattice.pairing(m.x, m.y)
        M = 4 * m.D1 * m.D2 - t * t
        report.add("divisibility", M >= 16 * p and M % (16 * p) == 0, i, f"4 D1 D2 - t^2 = {M}")
        if p > THEOREM_MIN_P and m.D1 >= 8:
            report.add("mu_range", -1 < m.mu <= 0 and m.D1 != m.D2, i, f"mu = {m.mu}")
        if -1 < m.mu <= 0:
            report.add("next_shortest", _next_shortest_ok(lattice, m), i)
        report.add("product_closure", _products_close(lattice, order), i)

        if types.in_fp[i]:
            report.add("kaneko", 3 * m.D1 * m.D1 <= 16 * p, i, f"D1 = {m.D1}")
            if conditions_hold(m.D1, m.D2, p):
                report.add("small_pair", 4 * p <= m.D1 * m.D2 and 3 * p <= 4 * m.D3 < 8 * p, i,
                           f"D1 D2 = {m.D1 * m.D2}, D3 = {m.D3}")

        report.add("strict_trace_zero", trace_zero_index(order) > 1, i)
        report.add("reconstruct", reconstruct_order(lattice) == order, i)
        report.add("units", unit_group(order) == types.units[i], i)

    for i in range(len(types)):
        for k in range(i + 1, len(types)):
            a, b = types.theta_keys[i], types.theta_keys[k]
            same_theta = a.theta == b.theta
            same_opt = a.theta_opt == b.theta_opt
            report.add("theta_vs_optimal", same_theta == same_opt, i, f"against type {k}")

    if match is not None:
        _multiplicity_check(report, types, match, polys or default_cache())

    logger.info("p = %d: %d checks, %d failed", p, len(report.results), len(report.failures))
    return report
