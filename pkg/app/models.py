"""
Pydantic Data Models

Validated, immutable records exchanged between the computational modules,
the report renderers and the command line.

Key Features:
- Local field contexts and bound reports for the torsion bounds
- Isogeny-class data and point-count censuses over prime fields
- Collation inputs, candidate lists and witnesses
- Degree sequences and torsion groups
- Run configuration with per-command parameter validation
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime

from .enums import CensusMode, Command, OutputFormat, WeilType


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


def _check_prime(value: int) -> int:
    if not isprime(value):
        raise ValueError(f"{value} is not prime")
    return value


# Bounds
class LocalContext(_Frozen):
    p: int
    f: int = Field(default=1, ge=1)
    e: int = Field(default=1, ge=1)
    d: int = Field(default=1, ge=1)

    @field_validator("p")
    @classmethod
    def p_is_prime(cls, value: int) -> int:
        return _check_prime(value)

    @property
    def q(self) -> int:
        return self.p**self.f


class BoundReport(_Frozen):
    context: LocalContext
    prime_to_p_bound: int = Field(ge=1)
    formal_group_factor: int = Field(ge=1)
    component_factor: int = Field(ge=1)
    special_fiber_factor: int = Field(ge=1)
    total_bound: int = Field(ge=1)
    additive_prime_support: List[int]

    @property
    def p_part_factors(self) -> Tuple[int, int, int]:
        return (
            self.formal_group_factor,
            self.component_factor,
            self.special_fiber_factor,
        )


# Honda-Tate
class WeilDatum(_Frozen):
    """An abelian-surface isogeny class over F_p.

    Type III stores 2a and 2b so that half-integers stay exact.
    """

    p: int
    kind: WeilType
    a1: Optional[int] = None
    a2: Optional[int] = None
    d: Optional[int] = None
    two_a: Optional[int] = None
    two_b: Optional[int] = None

    @field_validator("p")
    @classmethod
    def p_is_prime(cls, value: int) -> int:
        return _check_prime(value)

    def descriptor(self) -> str:
        if self.kind is WeilType.TYPE_I:
            return f"I({self.a1},{self.a2})"
        if self.kind is WeilType.TYPE_II:
            return "II"
        return f"III({self.d},{self.two_a},{self.two_b})"


class CountCensus(_Frozen):
    p: int
    dimension: int = Field(ge=1, le=2)
    counts: List[int]
    provenance: Dict[int, List[str]] = Field(default_factory=dict)
    mode: CensusMode = CensusMode.COMPLETE

    @field_validator("p")
    @classmethod
    def p_is_prime(cls, value: int) -> int:
        return _check_prime(value)

    @field_validator("counts")
    @classmethod
    def sorted_positive(cls, counts: List[int]) -> List[int]:
        if any(count < 1 for count in counts):
            raise ValueError("point counts must be positive")
        return sorted(set(counts))


# Collation
class CollationInput(_Frozen):
    per_prime: Dict[int, List[int]]
    dimension: int = Field(default=1, ge=1)

    @field_validator("per_prime")
    @classmethod
    def nonempty_orders(cls, per_prime: Dict[int, List[int]]) -> Dict[int, List[int]]:
        for p, orders in per_prime.items():
            _check_prime(p)
            if not orders or any(order < 1 for order in orders):
                raise ValueError(f"D_{p} must be a nonempty set of positive orders")
        return {p: sorted(set(orders)) for p, orders in sorted(per_prime.items())}


class CandidateList(_Frozen):
    admissible_orders: List[int]
    witnesses: Dict[int, Dict[int, int]] = Field(default_factory=dict)
    annotations: Dict[int, str] = Field(default_factory=dict)
    cap: int = 0


# Modular curves
class DegreeSequence(_Frozen):
    degrees: List[int]
    level: int = 0
    j: str = ""
    label: str = ""
    shift: int = 0

    @field_validator("degrees")
    @classmethod
    def ascending(cls, degrees: List[int]) -> List[int]:
        if any(degree < 1 for degree in degrees):
            raise ValueError("degrees must be positive")
        return sorted(degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def render(self) -> str:
        return "(" + ",".join(str(degree) for degree in self.degrees) + ")"


# Torsion
class TorsionGroup(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    structure: Tuple[int, int]
    generators: Tuple[Any, ...] = ()
    generator_orders: Tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return self.structure[0] * self.structure[1]

    def label(self) -> str:
        n1, n2 = self.structure
        return f"Z/{n1}" if n2 == 1 else f"Z/{n2} x Z/{n1}"


class CurveSpec(_Frozen):
    """Kubert curve over Q[generator]/(modulus) given by polynomial strings."""

    modulus: str
    generator: str = "t"
    b: str
    c: str
    name: str = ""


# CLI
REQUIRED_PARAMETERS: Dict[Command, Tuple[str, ...]] = {
    Command.BOUND: ("d", "p"),
    Command.CENSUS: ("p",),
    Command.COLLATE: (),
    Command.DEGSEQ: ("N",),
    Command.TORSION: (),
    Command.REPORT: (),
    Command.VERIFY: (),
}


class RunConfig(_Frozen):
    command: Command
    parameters: Dict[str, Any] = Field(default_factory=dict)
    output_path: Optional[str] = None
    format: OutputFormat = OutputFormat.RECORDS
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def required_parameters(self) -> "RunConfig":
        missing = [
            name
            for name in REQUIRED_PARAMETERS[self.command]
            if self.parameters.get(name) is None
        ]
        if missing:
            raise ValueError(f"{self.command.value} needs --" + ", --".join(missing))
        return self


class GoldenResult(_Frozen):
    fixture: str
    key: str
    expected: str
    got: str
    # relative tolerance on a mantissa written as <mantissa>e<exponent>
    tolerance: float = 0.0

    @property
    def passed(self) -> bool:
        if self.expected == self.got:
            return True
        if not self.tolerance:
            return False
        try:
            expected_m, expected_e = self.expected.split("e")
            got_m, got_e = self.got.split("e")
        except ValueError:
            return False
        if expected_e != got_e:
            return False
        return abs(float(got_m) - float(expected_m)) <= self.tolerance * abs(float(expected_m))
