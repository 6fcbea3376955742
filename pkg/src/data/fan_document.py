"""
Fan documents: the JSON serialisation of a real toric variety.

A document holds the rank, the involution tau (row-major), the maximal
cones as lists of integer generators and an optional twist vector:

    {"rank": 1, "tau": [[1]], "cones": [[[1]], [[-1]]], "twist": [0]}

Only maximal cones are written; faces are recomputed on load.
"""
import json
import os
from dataclasses import dataclass, field
from typing import List, Optional

from fans.cone import Cone
from fans.fan import EquivariantFan, validate_fan
from utils.errors import (
    InvalidInvolution,
    NotAntiInvariant,
    NotStronglyConvex,
    ParseError,
    ValidationError,
)
from variety.real_toric import RealToricVariety
from zlattice.involution import InvolutiveLattice

DEFAULT_MAX_RANK = 8
DEFAULT_MAX_CONES = 64


def default_max_rank() -> int:
    """RETORIC_MAX_RANK from the environment, else 8."""
    value = os.environ.get("RETORIC_MAX_RANK")
    if value is None:
        return DEFAULT_MAX_RANK
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"RETORIC_MAX_RANK must be an integer, got {value!r}")


def _int(value, where: str) -> int:
    # bool is an int subclass; true/false in a matrix is a typo
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}", f"{where} is an integer")
    return value


def _vector(value, length: int, where: str) -> List[int]:
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list, got {value!r}", f"{where} is a list")
    if len(value) != length:
        raise ParseError(f"{where}: expected length {length}, got {len(value)}", f"len({where}) == rank")
    return [_int(x, f"{where}[{i}]") for i, x in enumerate(value)]


@dataclass
class FanDocument:
    """
    Attributes:
        rank: Rank of the cocharacter lattice
        tau: Involution as a list of rows
        cones: Maximal cones, each a list of generators
        twist: Anti-invariant twist vector (zero when absent)
    """

    rank: int
    tau: List[List[int]]
    cones: List[List[List[int]]] = field(default_factory=list)
    twist: Optional[List[int]] = None

    @classmethod
    def from_text(cls, text: str) -> "FanDocument":
        """
        Raises:
            ParseError: malformed JSON or fields of the wrong shape
        """
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}", "valid JSON")
        if not isinstance(raw, dict):
            raise ParseError("document must be a JSON object", "document is an object")
        for key in ("rank", "tau", "cones"):
            if key not in raw:
                raise ParseError(f"missing field '{key}'", f"field '{key}' present")
        unknown = set(raw) - {"rank", "tau", "cones", "twist"}
        if unknown:
            raise ParseError(f"unknown fields {sorted(unknown)}", "fields in {rank, tau, cones, twist}")

        rank = _int(raw["rank"], "rank")
        if rank < 0:
            raise ParseError(f"rank: must be non-negative, got {rank}", "rank >= 0")
        tau_rows = raw["tau"]
        if not isinstance(tau_rows, list) or len(tau_rows) != rank:
            raise ParseError(f"tau: expected {rank} rows", "tau is rank x rank")
        tau = [_vector(row, rank, f"tau[{i}]") for i, row in enumerate(tau_rows)]
        if not isinstance(raw["cones"], list):
            raise ParseError("cones: expected a list of cones", "cones is a list")
        cones = []
        for i, cone in enumerate(raw["cones"]):
            if not isinstance(cone, list):
                raise ParseError(f"cones[{i}]: expected a list of generators", f"cones[{i}] is a list")
            cones.append([_vector(g, rank, f"cones[{i}][{j}]") for j, g in enumerate(cone)])
        twist = raw.get("twist")
        if twist is not None:
            twist = _vector(twist, rank, "twist")
        return cls(rank, tau, cones, twist)

    def to_variety(self, max_rank: Optional[int] = None, max_cones: int = DEFAULT_MAX_CONES) -> RealToricVariety:
        """
        Raises:
            ValidationError: naming the violated invariant
        """
        max_rank = default_max_rank() if max_rank is None else max_rank
        if self.rank > max_rank:
            raise ValidationError(f"rank {self.rank} exceeds the limit {max_rank}", "rank <= RETORIC_MAX_RANK")
        if len(self.cones) > max_cones:
            raise ValidationError(f"{len(self.cones)} cones exceed the limit {max_cones}",
                                  "number of cones <= max_cones")
        try:
            lattice = InvolutiveLattice.from_rows(self.tau, self.rank)
        except InvalidInvolution as e:
            raise ValidationError(str(e), e.predicate)
        cones = []
        for i, gens in enumerate(self.cones):
            try:
                cones.append(Cone.spanned_by(gens, self.rank))
            except NotStronglyConvex as e:
                raise ValidationError(f"cones[{i}]: {e}", e.predicate)
        fan = EquivariantFan(lattice, cones)
        report = validate_fan(fan)
        if not report.ok:
            kind, detail = report.first
            raise ValidationError(detail, kind)
        try:
            return RealToricVariety(lattice, fan, self.twist)
        except NotAntiInvariant as e:
            raise ValidationError(f"twist: {e}", "(1 + tau) twist == 0")

    @classmethod
    def from_variety(cls, X: RealToricVariety) -> "FanDocument":
        return cls(
            rank=X.dim,
            tau=[[int(x) for x in row] for row in X.lattice.tau],
            cones=[[list(g) for g in c.generators] for c in X.fan.maximal_cones],
            twist=list(X.twist.key()),
        )

    def to_text(self) -> str:
        """Canonical JSON: fixed key order, one maximal cone per line."""
        lines = ["{",
                 f'  "rank": {self.rank},',
                 f'  "tau": {json.dumps(self.tau)},']
        if self.cones:
            lines.append('  "cones": [')
            body = [f"    {json.dumps(c)}" for c in self.cones]
            lines.append(",\n".join(body))
            lines.append("  ],")
        else:
            lines.append('  "cones": [],')
        lines.append(f'  "twist": {json.dumps(self.twist or [0] * self.rank)}')
        lines.append("}")
        return "\n".join(lines) + "\n"


def parse(text: str, max_rank: Optional[int] = None) -> RealToricVariety:
    return FanDocument.from_text(text).to_variety(max_rank)


def emit(X: RealToricVariety) -> str:
    return FanDocument.from_variety(X).to_text()
