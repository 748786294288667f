"""
Search budgets and limits.

Every finite search in the library reads its cap from here.
"""

from typing import Any, Dict

SEARCH_LIMITS: Dict[str, Any] = {
    # m_p(D): primes searched up to max(floor, 4*D*D + 1)
    "m_p_prime_floor": 200,
    # brute-force guard for m_p over all moduli N <= this value
    "m_p_brute_force_limit": 200,
    # residue fields used for point counting must have q <= this value
    "max_residue_field_size": 10**4,
    # rational primes examined by torsion_subgroup
    "torsion_prime_budget": 200,
    # first rational prime tried for reduction
    "torsion_first_prime": 5,
    # number fields accepted by torsion_subgroup
    "torsion_max_field_degree": 6,
    # linear changes of variables u = b + lambda*c tried by the fiber engine
    "elimination_retries": 8,
    # Trager norm shifts tried by nf_roots
    "norm_shift_retries": 20,
    # primes tried for irreducibility certification mod p
    "irreducibility_primes": 12,
    # nonvanishing certificates on fiber points are checked modulo primes above this
    "certificate_prime_floor": 10**4,
    # primes tried before falling back to exact arithmetic in the residue field
    "certificate_primes": 4,
    # Type III squarefree d bound as a multiple of p, per census mode
    "type_iii_bound_factor": {"published": 4, "complete": 16},
    # supported N for order-N relations on the Kubert family
    "kubert_levels": (4, 13),
    # supported M for Z/2 x Z/2M structures
    "two_torsion_levels": (2, 4),
    # working decimal digits for the certified Silverberg mantissa
    "silverberg_digits": 40,
}
