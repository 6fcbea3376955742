"""
Homeomorphism types of real loci.

Each tag is a frozen dataclass with a short name and its Euler
characteristic, which tests compare against beta(-1).
"""
from dataclasses import dataclass
from typing import Optional


class TopologicalType:
    """Base class of the tagged union."""

    def euler_characteristic(self) -> Optional[int]:
        return 0

    def describe(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class Empty(TopologicalType):
    def describe(self) -> str:
        return "empty"


@dataclass(frozen=True)
class Circle(TopologicalType):
    def describe(self) -> str:
        return "circle"


@dataclass(frozen=True)
class Torus(TopologicalType):
    """(S^1)^k."""

    k: int

    def describe(self) -> str:
        return f"torus T^{self.k}"


@dataclass(frozen=True)
class NonOrientableSurface(TopologicalType):
    """Connected sum of h projective planes."""

    h: int

    def euler_characteristic(self) -> int:
        return 2 - self.h

    def describe(self) -> str:
        return f"non-orientable surface #{self.h} RP2"


@dataclass(frozen=True)
class Sphere(TopologicalType):
    d: int

    def euler_characteristic(self) -> int:
        return 1 + (-1) ** self.d

    def describe(self) -> str:
        return f"sphere S^{self.d}"


@dataclass(frozen=True)
class ProjectivePlane(TopologicalType):
    def euler_characteristic(self) -> int:
        return 1

    def describe(self) -> str:
        return "projective plane"


@dataclass(frozen=True)
class KleinBottle(TopologicalType):
    def describe(self) -> str:
        return "Klein bottle"


@dataclass(frozen=True)
class ProductWithCircle(TopologicalType):
    inner: TopologicalType

    def describe(self) -> str:
        return f"({self.inner.describe()}) x S^1"


@dataclass(frozen=True)
class LensSpace(TopologicalType):
    """L(p;q) with p even and q normalised into [1, p/2]."""

    p: int
    q: int

    def describe(self) -> str:
        return f"lens space L({self.p};{self.q})"


@dataclass(frozen=True)
class ConnectedSum3(TopologicalType):
    """#h (S2 x S1) # k (RP2 x S1) # l RP3."""

    h: int
    k: int
    l: int

    def describe(self) -> str:
        return f"#{self.h}(S2xS1) #{self.k}(RP2xS1) #{self.l}RP3"


@dataclass(frozen=True)
class KleinFiberProduct(TopologicalType):
    """Fibre product of two Klein bottles over a circle (the pillow case)."""

    def describe(self) -> str:
        return "fibre product of two Klein bottles"


@dataclass(frozen=True)
class MappingTorusOverCircle(TopologicalType):
    """Circle-action manifold over the fibre, identified by its e*-polynomial."""

    fibre: TopologicalType
    descriptor: str

    def describe(self) -> str:
        return f"mapping torus over S^1 with fibre {self.fibre.describe()} (e* = {self.descriptor})"


@dataclass(frozen=True)
class Unsupported(TopologicalType):
    reason: str

    def euler_characteristic(self) -> Optional[int]:
        return None

    def describe(self) -> str:
        return f"unsupported: {self.reason}"
