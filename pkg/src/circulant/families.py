"""Constructors for the parameterized circulant families."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from src.circulant.graph import CirculantGraph, make_circulant
from src.exceptions import ParameterDomainError


class FamilyKind(StrEnum):
    POWER_OF_CYCLE = "power-of-cycle"
    UPPER_INTERVAL = "upper-interval"
    OMIT_ONE = "omit-one"
    ONE_PAIRED = "one-paired"
    CUBIC = "cubic"
    PLAIN_CYCLE = "plain-cycle"


class FamilyInstance(BaseModel):
    """A named family member together with its defining graph."""

    model_config = ConfigDict(frozen=True)

    family: FamilyKind
    params: dict[str, int] = Field(..., description="Named family parameters")
    graph: CirculantGraph

    @property
    def label(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family.value}({args})"


def _require(condition: bool, message: str, **params: int) -> None:
    if not condition:
        raise ParameterDomainError(message, params)


def power_of_cycle(n: int, d: int) -> FamilyInstance:
    """C_n(1, ..., d) with n >= 2d >= 2."""
    _require(d >= 1 and n >= 2 * d, f"power_of_cycle needs n >= 2d >= 2, got n={n}, d={d}", n=n, d=d)
    graph = make_circulant(n, range(1, d + 1))
    return FamilyInstance(family=FamilyKind.POWER_OF_CYCLE, params={"n": n, "d": d}, graph=graph)


def plain_cycle(n: int) -> FamilyInstance:
    _require(n >= 3, f"plain_cycle needs n >= 3, got n={n}", n=n)
    return FamilyInstance(family=FamilyKind.PLAIN_CYCLE, params={"n": n}, graph=make_circulant(n, [1]))


def upper_interval(n: int, d: int) -> FamilyInstance:
    """C_n(d+1, ..., n//2) with n >= 2d+2 and d >= 1."""
    _require(d >= 1 and n >= 2 * d + 2, f"upper_interval needs n >= 2d+2, d >= 1, got n={n}, d={d}", n=n, d=d)
    graph = make_circulant(n, range(d + 1, n // 2 + 1))
    return FamilyInstance(family=FamilyKind.UPPER_INTERVAL, params={"n": n, "d": d}, graph=graph)


def omit_one(n: int, i: int) -> FamilyInstance:
    """C_n(1, ..., n//2) with the distance i removed."""
    _require(n >= 3 and 1 <= i <= n // 2, f"omit_one needs n >= 3 and 1 <= i <= n//2, got n={n}, i={i}", n=n, i=i)
    gens = [s for s in range(1, n // 2 + 1) if s != i]
    return FamilyInstance(family=FamilyKind.OMIT_ONE, params={"n": n, "i": i}, graph=make_circulant(n, gens))


def one_paired(n: int, a: int, b: int) -> FamilyInstance:
    """C(n; a, b): distances divisible by a but not by ab; requires ab | n."""
    _require(a >= 1 and b >= 2, f"one_paired needs a >= 1 and b >= 2, got a={a}, b={b}", n=n, a=a, b=b)
    _require(n >= 1 and n % (a * b) == 0, f"one_paired needs ab | n, got n={n}, a={a}, b={b}", n=n, a=a, b=b)
    gens = [s for s in range(1, n // 2 + 1) if s % a == 0 and s % (a * b) != 0]
    return FamilyInstance(
        family=FamilyKind.ONE_PAIRED, params={"n": n, "a": a, "b": b}, graph=make_circulant(n, gens)
    )


def cubic(two_n: int, a: int) -> FamilyInstance:
    """C_{2n}(a, n) with 1 <= a < n."""
    _require(two_n >= 2 and two_n % 2 == 0, f"cubic needs an even vertex count, got {two_n}", two_n=two_n, a=a)
    n = two_n // 2
    _require(1 <= a < n, f"cubic needs 1 <= a < n={n}, got a={a}", two_n=two_n, a=a)
    return FamilyInstance(
        family=FamilyKind.CUBIC, params={"two_n": two_n, "a": a}, graph=make_circulant(two_n, [a, n])
    )


def build_family(family: FamilyKind | str, **params: int) -> FamilyInstance:
    """Dispatch by family name; used by the CLI."""
    kind = FamilyKind(family)
    builders = {
        FamilyKind.POWER_OF_CYCLE: lambda p: power_of_cycle(p["n"], p["d"]),
        FamilyKind.UPPER_INTERVAL: lambda p: upper_interval(p["n"], p["d"]),
        FamilyKind.OMIT_ONE: lambda p: omit_one(p["n"], p["i"]),
        FamilyKind.ONE_PAIRED: lambda p: one_paired(p["n"], p["a"], p["b"]),
        FamilyKind.CUBIC: lambda p: cubic(p["two_n"], p["a"]),
        FamilyKind.PLAIN_CYCLE: lambda p: plain_cycle(p["n"]),
    }
    try:
        return builders[kind](params)
    except KeyError as e:
        raise ParameterDomainError(f"Family {kind.value} is missing parameter {e.args[0]}", params) from e
