"""Generator sets of generalized stabilizer states."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

from pauli_duality.core.exceptions import DimensionError, FixedPointError, ParseError
from pauli_duality.core.local_ops import (
    OperatorString,
    commutator_is_zero,
    fixed_space_chain,
    fixed_space_dimension,
    independence_check,
)
from pauli_duality.core.pauli import PauliString

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Exactly ``L`` operator strings g_1 ... g_L on ``L`` sites."""

    L: int
    generators: tuple[OperatorString, ...]
    label: str = ""

    def __post_init__(self) -> None:
        generators = tuple(self.generators)
        if len(generators) != self.L:
            raise DimensionError(f"Need {self.L} generators on {self.L} sites, got {len(generators)}")
        for g in generators:
            if g.L != self.L:
                raise DimensionError(f"Generator on {g.L} sites in a set for {self.L}")
        object.__setattr__(self, "generators", generators)

    @classmethod
    def from_paulis(cls, labels: Sequence[str], label: str = "") -> "GeneratorSet":
        """Standard stabilizers from labels like ``"ZI"`` or ``"-XX"``."""
        strings = []
        for text in labels:
            sign = -1 if text.startswith("-") else 1
            strings.append(PauliString.from_label(text.lstrip("+-")))
            if sign < 0:
                strings[-1] = -strings[-1]
        if not strings:
            raise ParseError("empty generator list")
        return cls(strings[0].L, tuple(OperatorString.from_pauli_string(s) for s in strings), label)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[OperatorString]:
        return iter(self.generators)

    def commuting(self, tol: float | None = None) -> bool:
        for (i, a), (j, b) in itertools.combinations(enumerate(self.generators), 2):
            if not commutator_is_zero(a, b, tol):
                logger.debug(f"Generators {i + 1} and {j + 1} do not commute")
                return False
        return True

    def independent(self, tol: float | None = None) -> bool:
        return independence_check(self.generators, tol)

    def chain(self, tol: float | None = None) -> list[int]:
        return fixed_space_chain(self.generators, tol)

    def fixed_space_dimension(self, tol: float | None = None) -> int:
        return fixed_space_dimension(self.generators, self.L, tol)

    def check(self, tol: float | None = None) -> "GeneratorSet":
        """Raise :class:`FixedPointError` unless commuting with a one-dimensional fixed space."""
        if not self.commuting():
            raise FixedPointError(f"generators of {self.label or 'set'} do not commute")
        dim = self.fixed_space_dimension(tol)
        if dim != 1:
            raise FixedPointError(f"joint +1 eigenspace has dimension {dim}")
        return self

    def conjugated_by(self, M: OperatorString) -> "GeneratorSet":
        """M g M^-1 for every generator; fixes M|psi> when the set fixes |psi>."""
        return GeneratorSet(self.L, tuple(g.conjugated_by(M) for g in self.generators), self.label)

    # text form ----------------------------------------------------------------

    def to_text(self) -> str:
        header = f"# {self.label}\n" if self.label else ""
        return header + "".join(g.to_text() + "\n" for g in self.generators)

    @classmethod
    def from_text(cls, text: str, label: str = "") -> "GeneratorSet":
        """One operator string per line; ``#`` starts a comment."""
        generators = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                generators.append(OperatorString.from_text(line))
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc.detail}")
        if not generators:
            raise ParseError("no generators found")
        return cls(generators[0].L, tuple(generators), label)
