"""Gate sequences and their conjugation action on Pauli sums.

A circuit with gates ``G1, ..., Gm`` (listed in the order they act on states)
has the matrix ``U = Gm ... G1``. :func:`conjugate` returns ``U^-1 h U``; for
unitary circuits this is ``U^dagger h U``, so ``T H T^dagger`` identities are
the unitary special case with ``T = U^dagger``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator

from pauli_duality.circuits.gates import Gate
from pauli_duality.core.exceptions import DimensionError, ParseError
from pauli_duality.core.pauli import PauliSum

logger = logging.getLogger(__name__)


class Boundary(str, Enum):
    OPEN = "open"
    PERIODIC = "periodic"


@dataclass(frozen=True, eq=False)
class Circuit:
    """Immutable ordered gate list on ``L`` sites."""

    L: int
    gates: tuple[Gate, ...] = ()
    boundary: Boundary = Boundary.OPEN

    def __post_init__(self) -> None:
        if self.L <= 0:
            raise DimensionError(f"Circuit length must be positive, got {self.L}")
        gates = tuple(self.gates)
        for gate in gates:
            gate.check_sites(self.L)
        object.__setattr__(self, "gates", gates)
        object.__setattr__(self, "boundary", Boundary(self.boundary))

    def site(self, k: int) -> int:
        """Normalize a 0-based site index; wraps only for periodic circuits."""
        if self.boundary is Boundary.PERIODIC:
            return k % self.L
        if not 0 <= k < self.L:
            raise DimensionError(f"Site {k + 1} outside open chain of length {self.L}")
        return k

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def then(self, other: "Circuit") -> "Circuit":
        """This circuit followed by ``other`` (acting on states)."""
        if other.L != self.L:
            raise DimensionError(f"Length mismatch: {self.L} vs {other.L}")
        return Circuit(self.L, self.gates + other.gates, self.boundary)

    def __add__(self, other: "Circuit") -> "Circuit":
        return self.then(other)

    @property
    def is_unitary(self) -> bool:
        return all(gate.unitary for gate in self.gates)

    def inverse(self) -> "Circuit":
        return Circuit(self.L, tuple(g.inverse() for g in reversed(self.gates)), self.boundary)

    def conjugate(self, h: PauliSum) -> PauliSum:
        return conjugate(self, h)

    # text form ----------------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        if self.boundary is Boundary.PERIODIC:
            lines.append("BOUNDARY periodic")
        lines.extend(gate.to_text() for gate in self.gates)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, L: int) -> "Circuit":
        """Parse one gate per line (1-based sites); ``#`` starts a comment."""
        boundary = Boundary.OPEN
        gates: list[Gate] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.upper().startswith("BOUNDARY"):
                try:
                    boundary = Boundary(line.split()[1].lower())
                except (IndexError, ValueError):
                    raise ParseError(f"line {lineno}: bad boundary line {raw!r}")
                continue
            try:
                gates.append(Gate.from_text(line))
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc.detail}")
        # periodic files may name site L + 1 for site 1
        frame = cls(L, boundary=boundary)
        return cls(
            L,
            tuple(replace(g, sites=tuple(frame.site(s) for s in g.sites)) for g in gates),
            boundary,
        )


def conjugate(c: Circuit, h: PauliSum) -> PauliSum:
    """Return ``U^-1 h U`` for the circuit matrix ``U``.

    Gates are processed from the last one to the first; Clifford gates map each
    string to one string with an exact phase, LOCAL gates to at most four.
    """
    if c.L != h.L:
        raise DimensionError(f"Circuit acts on {c.L} sites, operator on {h.L}")
    current = h
    for gate in reversed(c.gates):
        acc: dict[tuple[int, int], complex] = {}
        for string, coeff in current.items():
            for factor, image in gate.conjugate_string(string):
                key = (image.x, image.z)
                acc[key] = acc.get(key, 0j) + coeff * factor * image.coefficient
        current = PauliSum(c.L, acc)
    logger.debug(f"Conjugated {len(h)} terms through {len(c)} gates into {len(current)} terms")
    return current
