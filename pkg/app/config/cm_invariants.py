"""
The thirteen rational CM j-invariants, in the order used by the
degree-sequence tables, with their discriminants.
"""

from typing import Dict, List

# (discriminant, j)
CM_J_TABLE: List[Dict[str, int]] = [
    {"discriminant": -3, "j": 0},
    {"discriminant": -4, "j": 1728},
    {"discriminant": -12, "j": 2**4 * 3**3 * 5**3},
    {"discriminant": -27, "j": -(2**15) * 3 * 5**3},
    {"discriminant": -16, "j": 2**3 * 3**3 * 11**3},
    {"discriminant": -7, "j": -(3**3) * 5**3},
    {"discriminant": -28, "j": 3**3 * 5**3 * 17**3},
    {"discriminant": -8, "j": 2**6 * 5**3},
    {"discriminant": -11, "j": -(2**15)},
    {"discriminant": -19, "j": -(2**15) * 3**3},
    {"discriminant": -43, "j": -(2**18) * 3**3 * 5**3},
    {"discriminant": -67, "j": -(2**15) * 3**3 * 5**3 * 11**3},
    {"discriminant": -163, "j": -(2**18) * 3**3 * 5**3 * 23**3 * 29**3},
]

CM_J_INVARIANTS: List[int] = [entry["j"] for entry in CM_J_TABLE]

# ramification of X_1(N) -> X(1) above the two elliptic points
RAMIFIED_J: Dict[int, int] = {0: 3, 1728: 2}
