"""Exact algebra of Pauli strings and complex-weighted Pauli sums.

A Pauli string on ``L`` qubits is stored as two ``L``-bit masks and a phase
exponent::

    P = i**phase * sigma(x_0, z_0) (x) ... (x) sigma(x_{L-1}, z_{L-1})

with ``sigma(0, 0) = I``, ``sigma(1, 0) = X``, ``sigma(0, 1) = Z`` and
``sigma(1, 1) = Y``. Bit ``k`` of a mask refers to site ``k`` (0-based), which
is also character ``k`` of a text label such as ``"IXZY"``.

Phases never leave the discrete set {1, i, -1, -i}. Pauli sums fold the phase
into the complex coefficient and key terms by the phase-free masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Union

from pauli_duality.core.exceptions import DimensionError, ParseError

# Coefficients at or below this magnitude are dropped from a PauliSum.
EPS_ZERO = 1e-14

_PHASE_VALUES = (1 + 0j, 1j, -1 + 0j, -1j)
_PHASE_LABELS = ("+", "+i", "-", "-i")

Scalar = Union[int, float, complex]


class PauliOp(str, Enum):
    """Single-qubit Pauli operator."""

    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def bits(self) -> tuple[int, int]:
        """(x, z) bits of the operator."""
        return _OP_BITS[self]

    @classmethod
    def from_bits(cls, x: int, z: int) -> "PauliOp":
        return _BITS_OP[(x & 1, z & 1)]


_OP_BITS = {PauliOp.I: (0, 0), PauliOp.X: (1, 0), PauliOp.Z: (0, 1), PauliOp.Y: (1, 1)}
_BITS_OP = {bits: op for op, bits in _OP_BITS.items()}


def _popcount(value: int) -> int:
    return value.bit_count()


@dataclass(frozen=True, slots=True)
class PauliString:
    """Phase times a tensor product of single-qubit Paulis."""

    L: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self) -> None:
        if self.L <= 0:
            raise DimensionError(f"Pauli string length must be positive, got {self.L}")
        limit = 1 << self.L
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise DimensionError(f"Masks do not fit in {self.L} sites")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, L: int) -> "PauliString":
        return cls(L)

    @classmethod
    def from_label(cls, label: str, phase: int = 0) -> "PauliString":
        """Build from a label like ``"IXZY"`` (character k is site k)."""
        if not label:
            raise ParseError("Empty Pauli label")
        x = z = 0
        for site, char in enumerate(label.upper()):
            try:
                bx, bz = PauliOp(char).bits
            except ValueError:
                raise ParseError(f"Invalid Pauli character {char!r} in {label!r}")
            x |= bx << site
            z |= bz << site
        return cls(len(label), x, z, phase)

    @classmethod
    def from_sites(
        cls, L: int, ops: Mapping[int, PauliOp | str], phase: int = 0
    ) -> "PauliString":
        """Build from a sparse ``{site: op}`` map; unlisted sites are identity."""
        x = z = 0
        for site, op in ops.items():
            if not 0 <= site < L:
                raise DimensionError(f"Site {site} outside chain of length {L}")
            bx, bz = PauliOp(op).bits
            x |= bx << site
            z |= bz << site
        return cls(L, x, z, phase)

    @classmethod
    def single(cls, L: int, site: int, op: PauliOp | str) -> "PauliString":
        return cls.from_sites(L, {site: op})

    def op(self, site: int) -> PauliOp:
        return PauliOp.from_bits(self.x >> site, self.z >> site)

    @property
    def label(self) -> str:
        return "".join(self.op(site).value for site in range(self.L))

    @property
    def coefficient(self) -> complex:
        return _PHASE_VALUES[self.phase]

    @property
    def support(self) -> tuple[int, ...]:
        mask = self.x | self.z
        return tuple(site for site in range(self.L) if (mask >> site) & 1)

    @property
    def weight(self) -> int:
        return _popcount(self.x | self.z)

    @property
    def is_hermitian(self) -> bool:
        return self.phase in (0, 2)

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def phase_free(self) -> "PauliString":
        return PauliString(self.L, self.x, self.z, 0)

    def with_phase(self, phase: int) -> "PauliString":
        return PauliString(self.L, self.x, self.z, phase)

    def commutes_with(self, other: "PauliString") -> bool:
        _check_length(self.L, other.L)
        return symplectic_product(self, other) == 0

    def translated(self, shift: int) -> "PauliString":
        """Cyclically move every site k to (k + shift) mod L."""
        return PauliString(
            self.L, _rotate(self.x, shift, self.L), _rotate(self.z, shift, self.L), self.phase
        )

    def __mul__(self, other: "PauliString") -> "PauliString":
        if not isinstance(other, PauliString):
            return NotImplemented
        return mul(self, other)

    def __neg__(self) -> "PauliString":
        return self.with_phase(self.phase + 2)

    def __str__(self) -> str:
        return f"{_PHASE_LABELS[self.phase]}{self.label}"


def _check_length(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"Length mismatch: {a} vs {b}")


def _rotate(mask: int, shift: int, L: int) -> int:
    shift %= L
    full = (1 << L) - 1
    return ((mask << shift) | (mask >> (L - shift))) & full


def symplectic_product(a: PauliString, b: PauliString) -> int:
    """1 if ``a`` and ``b`` anticommute, 0 if they commute."""
    return (_popcount(a.x & b.z) + _popcount(a.z & b.x)) & 1


def mul(a: PauliString, b: PauliString) -> PauliString:
    """Group product ``a * b`` with exact phase.

    Uses sigma(x, z) = i**|x&z| X**x Z**z and Z**za X**xb = (-1)**|za&xb| X**xb Z**za.
    """
    _check_length(a.L, b.L)
    x = a.x ^ b.x
    z = a.z ^ b.z
    exponent = (
        a.phase
        + b.phase
        + _popcount(a.x & a.z)
        + _popcount(b.x & b.z)
        + 2 * _popcount(a.z & b.x)
        - _popcount(x & z)
    )
    return PauliString(a.L, x, z, exponent)


Key = tuple[int, int]


def _sort_key(key: Key) -> tuple[int, int]:
    x, z = key
    return (z, x)


class PauliSum:
    """Finite complex-weighted sum of phase-free Pauli strings.

    Instances are immutable and always canonical: no coefficient with
    magnitude at or below ``EPS_ZERO`` and terms ordered by (z-mask, x-mask).
    """

    __slots__ = ("_L", "_terms")

    def __init__(self, L: int, terms: Mapping[Key, Scalar] | None = None):
        if L <= 0:
            raise DimensionError(f"Pauli sum length must be positive, got {L}")
        self._L = L
        cleaned = {
            key: complex(coeff)
            for key, coeff in (terms or {}).items()
            if abs(coeff) > EPS_ZERO
        }
        self._terms: dict[Key, complex] = {
            key: cleaned[key] for key in sorted(cleaned, key=_sort_key)
        }

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls, L: int) -> "PauliSum":
        return cls(L)

    @classmethod
    def identity(cls, L: int, coeff: Scalar = 1.0) -> "PauliSum":
        return cls(L, {(0, 0): coeff})

    @classmethod
    def from_string(cls, string: PauliString, coeff: Scalar = 1.0) -> "PauliSum":
        return cls(string.L, {(string.x, string.z): coeff * string.coefficient})

    @classmethod
    def from_label(cls, label: str, coeff: Scalar = 1.0) -> "PauliSum":
        return cls.from_string(PauliString.from_label(label), coeff)

    @classmethod
    def from_terms(cls, L: int, terms: Iterable[tuple[Scalar, PauliString]]) -> "PauliSum":
        """Sum ``coeff * string`` over the given pairs, merging duplicates."""
        acc: dict[Key, complex] = {}
        for coeff, string in terms:
            _check_length(L, string.L)
            key = (string.x, string.z)
            acc[key] = acc.get(key, 0j) + coeff * string.coefficient
        return cls(L, acc)

    # inspection -------------------------------------------------------------

    @property
    def L(self) -> int:
        return self._L

    @property
    def terms(self) -> Mapping[Key, complex]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[PauliString, complex]]:
        for (x, z), coeff in self._terms.items():
            yield PauliString(self._L, x, z), coeff

    def coefficient(self, string: PauliString) -> complex:
        """Coefficient of ``string`` in this sum, accounting for its phase."""
        _check_length(self._L, string.L)
        return self._terms.get((string.x, string.z), 0j) / string.coefficient

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[PauliString, complex]]:
        return self.items()

    def support(self) -> tuple[int, ...]:
        mask = 0
        for x, z in self._terms:
            mask |= x | z
        return tuple(site for site in range(self._L) if (mask >> site) & 1)

    def is_hermitian(self, tol: float = EPS_ZERO) -> bool:
        return all(abs(coeff.imag) <= tol for coeff in self._terms.values())

    def max_abs_coefficient(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    # algebra ----------------------------------------------------------------

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if not isinstance(other, PauliSum):
            return NotImplemented
        return sum_add(self, other)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        if not isinstance(other, PauliSum):
            return NotImplemented
        return sum_add(self, sum_scale(other, -1))

    def __neg__(self) -> "PauliSum":
        return sum_scale(self, -1)

    def __mul__(self, other: "PauliSum | PauliString | Scalar") -> "PauliSum":
        if isinstance(other, PauliSum):
            return sum_mul(self, other)
        if isinstance(other, PauliString):
            return sum_mul(self, PauliSum.from_string(other))
        if isinstance(other, (int, float, complex)):
            return sum_scale(self, other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "PauliSum":
        if isinstance(other, (int, float, complex)):
            return sum_scale(self, other)
        return NotImplemented

    def adjoint(self) -> "PauliSum":
        return PauliSum(self._L, {key: c.conjugate() for key, c in self._terms.items()})

    def translated(self, shift: int) -> "PauliSum":
        return PauliSum.from_terms(
            self._L, ((c, s.translated(shift)) for s, c in self.items())
        )

    def commutator(self, other: "PauliSum") -> "PauliSum":
        return sum_mul(self, other) - sum_mul(other, self)

    # comparison -------------------------------------------------------------

    def max_difference(self, other: "PauliSum") -> float:
        _check_length(self._L, other.L)
        keys = set(self._terms) | set(other._terms)
        return max(
            (abs(self._terms.get(k, 0j) - other._terms.get(k, 0j)) for k in keys),
            default=0.0,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self._L == other._L and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # text form --------------------------------------------------------------

    def to_text(self) -> str:
        """One term per line: ``<re> <im> <label>``."""
        return "".join(
            f"{c.real!r} {c.imag!r} {s.label}\n" for s, c in self.items()
        )

    @classmethod
    def from_text(cls, text: str) -> "PauliSum":
        terms: list[tuple[complex, PauliString]] = []
        length: int | None = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected '<re> <im> <string>', got {raw!r}")
            try:
                coeff = complex(float(parts[0]), float(parts[1]))
            except ValueError:
                raise ParseError(f"line {lineno}: bad coefficient in {raw!r}")
            string = PauliString.from_label(parts[2])
            if length is None:
                length = string.L
            elif string.L != length:
                raise ParseError(f"line {lineno}: string length {string.L} != {length}")
            terms.append((coeff, string))
        if length is None:
            raise ParseError("no terms found")
        return cls.from_terms(length, terms)

    def __repr__(self) -> str:
        if not self._terms:
            return f"PauliSum(L={self._L}, 0)"
        body = " + ".join(f"({c:g})*{s.label}" for s, c in self.items())
        return f"PauliSum(L={self._L}, {body})"


def sum_add(a: PauliSum, b: PauliSum) -> PauliSum:
    _check_length(a.L, b.L)
    acc = dict(a._terms)
    for key, coeff in b._terms.items():
        acc[key] = acc.get(key, 0j) + coeff
    return PauliSum(a.L, acc)


def sum_scale(a: PauliSum, factor: Scalar) -> PauliSum:
    return PauliSum(a.L, {key: coeff * factor for key, coeff in a._terms.items()})


def sum_mul(a: PauliSum, b: PauliSum) -> PauliSum:
    """Expand all cross terms with :func:`mul` and merge."""
    _check_length(a.L, b.L)
    acc: dict[Key, complex] = {}
    for sa, ca in a.items():
        for sb, cb in b.items():
            product = mul(sa, sb)
            key = (product.x, product.z)
            acc[key] = acc.get(key, 0j) + ca * cb * product.coefficient
    return PauliSum(a.L, acc)


def equal(a: PauliSum, b: PauliSum, tol: float = 1e-12) -> bool:
    """True iff the largest coefficient difference is at most ``tol``."""
    return a.max_difference(b) <= tol
