"""
Collation of Local Data

Combines the per-prime sets of attainable point counts into the list of
possible global torsion orders. Torsion of order prime to p injects into
the special fibre at p, so N survives at p when its prime-to-p part
divides some attainable count.

Key Features:
- Admissible orders with a witness count for every (N, p)
- Intermediate lists from the bare Weil intervals
- 2-adic presentation N = 2^a * y of a candidate list
- Undecided orders after removing the attained ones
- Elliptic-curve report with the globally excluded orders annotated
"""

from typing import Dict, Iterable, List, Optional, Tuple

from ..config.attained_orders import GLOBALLY_EXCLUDED
from ..enums import CensusMode
from ..models import CandidateList, CollationInput
from ..utils.error_handler import DomainError
from .honda_tate import elliptic_counts, surface_counts
from .local_bounds import global_collation_bound, weil_cap

COLLATION_PRIMES = (2, 3, 5)


def prime_to_p_part(N: int, p: int) -> int:
    """Largest divisor of N coprime to p."""
    if N < 1:
        raise DomainError("N must be positive", {"N": N})
    while N % p == 0:
        N //= p
    return N


def _witness(N: int, p: int, orders: List[int]) -> Optional[int]:
    part = prime_to_p_part(N, p)
    for order in orders:
        if order % part == 0:
            return order
    return None


def admissible_orders(
    data: CollationInput, cap: int, annotations: Optional[Dict[int, str]] = None
) -> CandidateList:
    """
    Orders N <= cap compatible with every local constraint.

    Args:
        data: Attainable orders D_p per prime
        cap: Largest order considered
        annotations: Optional notes attached to surviving orders

    Returns:
        CandidateList with the smallest witness in D_p for each (N, p)
    """
    if cap < 1:
        raise DomainError("cap must be positive", {"cap": cap})
    admissible: List[int] = []
    witnesses: Dict[int, Dict[int, int]] = {}
    for N in range(1, cap + 1):
        found = {}
        for p, orders in data.per_prime.items():
            witness = _witness(N, p, orders)
            if witness is None:
                break
            found[p] = witness
        else:
            admissible.append(N)
            witnesses[N] = found
    notes = {N: note for N, note in (annotations or {}).items() if N in witnesses}
    return CandidateList(
        admissible_orders=admissible, witnesses=witnesses, annotations=notes, cap=cap
    )


def undecided_report(final: CandidateList, attained: Iterable[int]) -> List[int]:
    """Candidates not yet known to occur."""
    attained = set(attained)
    extra = attained.difference(final.admissible_orders)
    if extra:
        raise DomainError("attained orders outside the candidate list", {"orders": sorted(extra)})
    return [N for N in final.admissible_orders if N not in attained]


def weil_interval_input(primes: Iterable[int], d: int) -> CollationInput:
    """D_p = {1, ..., weil_cap(p, d)}: the constraint from the Weil bound alone."""
    return CollationInput(
        per_prime={p: list(range(1, weil_cap(p, d) + 1)) for p in primes}, dimension=d
    )


def two_adic_decomposition(candidates: CandidateList) -> Tuple[int, List[int]]:
    """(largest a, sorted odd parts y) over the candidates N = 2^a * y."""
    max_a, odd = 0, set()
    for N in candidates.admissible_orders:
        a = 0
        while N % 2 == 0:
            N //= 2
            a += 1
        max_a = max(max_a, a)
        odd.add(N)
    return max_a, sorted(odd)


def dimension_one_input(primes: Iterable[int] = COLLATION_PRIMES) -> CollationInput:
    return CollationInput(per_prime={p: elliptic_counts(p) for p in primes}, dimension=1)


def surface_input(
    primes: Iterable[int] = COLLATION_PRIMES, mode: CensusMode = CensusMode.COMPLETE
) -> CollationInput:
    return CollationInput(
        per_prime={p: surface_counts(p, mode).counts for p in primes}, dimension=2
    )


def dimension_one_report() -> CandidateList:
    """Candidate orders for elliptic curves over Q with integral j."""
    return admissible_orders(
        dimension_one_input(),
        global_collation_bound(1, 1),
        annotations=GLOBALLY_EXCLUDED.get(1),
    )


def surface_report(
    primes: Iterable[int] = COLLATION_PRIMES, mode: CensusMode = CensusMode.COMPLETE
) -> CandidateList:
    """Candidate orders for abelian surfaces over Q with everywhere potentially good reduction."""
    return admissible_orders(surface_input(primes, mode), global_collation_bound(2, 1))
