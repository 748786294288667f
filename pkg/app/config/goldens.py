"""
Golden fixture catalogue.

Maps each fixture file in the golden directory to the record kind it holds.
"""

from typing import Dict, List

GOLDEN_FIXTURES: Dict[str, str] = {
    "bounds.txt": "bound",
    "census.txt": "census",
    "collation.txt": "collation",
    "degree_sequences.txt": "degseq",
    "torsion.txt": "torsion",
}

# relative tolerance accepted for the Silverberg mantissa
SILVERBERG_TOLERANCE = 5e-4

# Kubert curves over cubic fields with large torsion
EXAMPLE_CURVES: List[Dict[str, str]] = [
    {"name": "cubic14a", "modulus": "d^3-d^2-2*d+1", "generator": "d", "b": "2*d-1", "c": "d^2-d"},
    {"name": "cubic14b", "modulus": "d^3-15*d^2+12*d+1", "generator": "d", "b": "14*d^2-12*d-1", "c": "d^2-d"},
    {"name": "cubic9", "modulus": "f^3-3*f^2+1", "generator": "f", "b": "13*f^2-f-5", "c": "2*f^2-1"},
]
