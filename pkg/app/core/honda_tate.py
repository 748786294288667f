"""
Honda-Tate Census

Enumerates isogeny classes of elliptic curves and abelian surfaces over a
prime field F_p by their Frobenius (Weil) polynomials, and collects the
point counts #A(F_p) = P(1) they attain.

Key Features:
- Elliptic traces with the small-p supersingular cases
- Type I (products), Type II ((T^2 - p)^2) and Type III (quartic CM) surfaces
- Exact inequality tests for |a| + |b|sqrt(d) < 2sqrt(p) by squaring
- Census modes for the Type III search range
- Provenance of every count, versioned census records
- Exhaustive enumeration oracle over all Weierstrass models for small p
"""

from collections import defaultdict
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional

import numpy as np
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from ..config.search_limits import SEARCH_LIMITS
from ..enums import CensusMode, WeilType
from ..exact.polynomials import Poly, dense_coeffs
from ..exact.scalars import is_squarefree, isqrt
from ..models import CountCensus, WeilDatum
from ..utils.error_handler import DomainError, UnsupportedRangeError

_T_RING, _T = ring("T", ZZ)


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise DomainError(f"{p} is not prime", {"p": p})


def _below_weil_bound(two_a: int, two_b: int, d: int, p: int) -> bool:
    """Exact test of |2a| + |2b|sqrt(d) < 4sqrt(p)."""
    x, y = abs(two_a), abs(two_b)
    rest = 16 * p - x * x - y * y * d
    if rest <= 0:
        return False
    return 4 * x * x * y * y * d < rest * rest


def admissible_trace(p: int, a: int) -> bool:
    """Whether x^2 - a x + p is the Frobenius polynomial of an elliptic curve over F_p."""
    if a * a > 4 * p:
        return False
    return a % p != 0 or a == 0 or a * a in (2 * p, 3 * p)


def elliptic_traces(p: int) -> List[int]:
    _require_prime(p)
    bound = isqrt(4 * p)
    return [a for a in range(-bound, bound + 1) if admissible_trace(p, a)]


def elliptic_counts(p: int) -> List[int]:
    """Sorted point counts p + 1 - a of elliptic curves over F_p."""
    return sorted({p + 1 - a for a in elliptic_traces(p)})


def brute_force_elliptic_counts(p: int) -> List[int]:
    """
    Point counts of every nonsingular long Weierstrass model over F_p.

    Enumerates all p^5 coefficient vectors with numpy and counts affine
    solutions over the full (x, y) grid.
    """
    _require_prime(p)
    if p > 7:
        raise UnsupportedRangeError("exhaustive enumeration supports p <= 7", {"p": p})
    coeffs = np.array(list(product(range(p), repeat=5)), dtype=np.int64)
    a1, a2, a3, a4, a6 = coeffs.T
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    nonsingular = np.mod(disc, p) != 0

    counts = np.ones(len(coeffs), dtype=np.int64)
    for x, y in product(range(p), repeat=2):
        lhs = y * y + a1 * x * y + a3 * y
        rhs = x**3 + a2 * x * x + a4 * x + a6
        counts += np.mod(lhs - rhs, p) == 0
    return sorted(set(int(n) for n in counts[nonsingular]))


def validate_datum(w: WeilDatum) -> WeilDatum:
    """Raise DomainError unless ``w`` describes an isogeny class over F_p."""
    p = w.p
    if w.kind is WeilType.TYPE_I:
        if w.a1 is None or w.a2 is None:
            raise DomainError("Type I needs traces a1 and a2", {"datum": w.descriptor()})
        for a in (w.a1, w.a2):
            if not admissible_trace(p, a):
                raise DomainError(f"trace {a} is not admissible over F_{p}")
    elif w.kind is WeilType.TYPE_III:
        d, two_a, two_b = w.d, w.two_a, w.two_b
        if d is None or two_a is None or two_b is None:
            raise DomainError("Type III needs d, 2a and 2b", {"datum": w.descriptor()})
        if d <= 1 or not is_squarefree(d):
            raise DomainError("d must be a squarefree integer > 1", {"d": d})
        if two_b == 0:
            raise DomainError("b must be nonzero")
        if (two_a - two_b) % 2:
            raise DomainError("2a and 2b must have the same parity")
        if two_a % 2 and d % 4 != 1:
            raise DomainError("half-integral a + b sqrt(d) needs d = 1 mod 4", {"d": d})
        if not _below_weil_bound(two_a, two_b, d, p):
            raise DomainError("|a| + |b| sqrt(d) must be below 2 sqrt(p)", {"datum": w.descriptor()})
    return w


def frobenius_poly(w: WeilDatum) -> Poly:
    """Frobenius polynomial P(T) of the isogeny class, over Z."""
    validate_datum(w)
    p, T = w.p, _T
    if w.kind is WeilType.TYPE_I:
        return (T**2 - w.a1 * T + p) * (T**2 - w.a2 * T + p)
    if w.kind is WeilType.TYPE_II:
        return (T**2 - p) ** 2
    # a^2 - d b^2 is the norm of an algebraic integer
    middle = (w.two_a**2 - w.d * w.two_b**2) // 4 + 2 * p
    return T**4 - w.two_a * T**3 + middle * T**2 - w.two_a * p * T + p * p


def point_count(w: WeilDatum) -> int:
    """#A(F_p) = P(1)."""
    return int(frobenius_poly(w).evaluate(_T, 1))


def _type_iii_data(p: int, mode: CensusMode) -> List[WeilDatum]:
    factor = SEARCH_LIMITS["type_iii_bound_factor"][mode.value]
    data = []
    for d in range(2, factor * p):
        if not is_squarefree(d):
            continue
        two_b = 1
        while two_b * two_b * d < 16 * p:
            span = isqrt(16 * p)
            for two_a in range(-span, span + 1):
                candidate = (two_a - two_b) % 2 == 0 and (two_a % 2 == 0 or d % 4 == 1)
                if candidate and _below_weil_bound(two_a, two_b, d, p):
                    data.append(
                        WeilDatum(p=p, kind=WeilType.TYPE_III, d=d, two_a=two_a, two_b=two_b)
                    )
            two_b += 1
    return data


def surface_isogeny_classes(
    p: int, mode: CensusMode = CensusMode.COMPLETE
) -> List[WeilDatum]:
    """
    Every abelian-surface isogeny class over F_p, in a fixed order.

    Args:
        p: Prime field characteristic
        mode: Type III search range: d < 16p (complete, the default) or
            d < 4p (published, the range of the printed census for p <= 5)

    Returns:
        Type I pairs (a1 <= a2), then Type II, then Type III ordered by
        (d, 2b, 2a). Only 2b > 0 is listed since b and -b give the same class.
    """
    _require_prime(p)
    data = [
        WeilDatum(p=p, kind=WeilType.TYPE_I, a1=a1, a2=a2)
        for a1, a2 in combinations_with_replacement(elliptic_traces(p), 2)
    ]
    data.append(WeilDatum(p=p, kind=WeilType.TYPE_II))
    data.extend(_type_iii_data(p, mode))
    return data


def _census(p: int, dimension: int, entries, mode: CensusMode) -> CountCensus:
    provenance: Dict[int, List[str]] = defaultdict(list)
    for count, label in entries:
        provenance[count].append(label)
    return CountCensus(
        p=p,
        dimension=dimension,
        counts=sorted(provenance),
        provenance={count: provenance[count] for count in sorted(provenance)},
        mode=mode,
    )


def elliptic_census(p: int) -> CountCensus:
    entries = [(p + 1 - a, f"E({a})") for a in elliptic_traces(p)]
    return _census(p, 1, entries, CensusMode.COMPLETE)


def surface_counts(p: int, mode: CensusMode = CensusMode.COMPLETE) -> CountCensus:
    """Census of #A(F_p) over all abelian surfaces A/F_p."""
    entries = [(point_count(w), w.descriptor()) for w in surface_isogeny_classes(p, mode)]
    return _census(p, 2, entries, mode)


def census(p: int, dimension: int, mode: CensusMode = CensusMode.COMPLETE) -> CountCensus:
    if dimension == 1:
        return elliptic_census(p)
    if dimension == 2:
        return surface_counts(p, mode)
    raise UnsupportedRangeError("census supports dimensions 1 and 2", {"dimension": dimension})


def census_records(p: int, dimension: int = 2, mode: CensusMode = CensusMode.COMPLETE) -> List[Dict]:
    """One record per isogeny class: p, kind, parameters, P(T) coefficients, count."""
    if dimension == 1:
        return [
            {
                "p": p,
                "kind": "E",
                "params": f"E({a})",
                "poly": ",".join(str(c) for c in (1, -a, p)),
                "count": p + 1 - a,
            }
            for a in elliptic_traces(p)
        ]
    records = []
    for w in surface_isogeny_classes(p, mode):
        records.append(
            {
                "p": p,
                "kind": w.kind.value,
                "params": w.descriptor(),
                "poly": ",".join(str(int(c)) for c in dense_coeffs(frobenius_poly(w))),
                "count": point_count(w),
            }
        )
    return records


def read_census(path: str, mode: Optional[CensusMode] = None) -> CountCensus:
    """Rebuild a census from a file written from ``census_records``."""
    from ..data.records import read_records

    kind, records = read_records(path)
    if kind != "census" or not records:
        raise DomainError("not a census record file", {"path": path, "kind": kind})
    primes = {int(record["p"]) for record in records}
    if len(primes) != 1:
        raise DomainError("census file mixes primes", {"primes": sorted(primes)})
    dimension = 1 if all(record["kind"] == "E" for record in records) else 2
    entries = [(int(record["count"]), record["params"]) for record in records]
    return _census(primes.pop(), dimension, entries, mode or CensusMode.COMPLETE)
