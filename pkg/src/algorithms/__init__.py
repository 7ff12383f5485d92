"""Orders to j-invariants, type enumeration and the verifiers."""

from .units import UnitGroup, unit_group, unit_group_order
from .ibukiyama import ibukiyama_order
from .neighbors import neighbors
from .types import TypeSet, class_number, enumerate_types
from .jinvariant import Alg1Result, Alg1State, TraceStep, algorithm1, run_algorithm1
from .matching import MatchResult, algorithm2, oracle_check
from .verify import conjecture_probe, dominance_poset, verify_properties, verify_theorem1

__all__ = [
    'UnitGroup', 'unit_group', 'unit_group_order',
    'ibukiyama_order', 'neighbors',
    'TypeSet', 'class_number', 'enumerate_types',
    'Alg1Result', 'Alg1State', 'TraceStep', 'algorithm1', 'run_algorithm1',
    'MatchResult', 'algorithm2', 'oracle_check',
    'conjecture_probe', 'dominance_poset', 'verify_properties', 'verify_theorem1',
]
