"""Projective n-qubit Pauli operators as symplectic GF(2) bit vectors.

An operator is a pair of int bitsets (x, z): qubit i carries I/X/Z/Y for
(x_i, z_i) = (0,0)/(1,0)/(0,1)/(1,1).  Phases are quotiented out: every value
represents an element of the Pauli group modulo <iI>, which is all the
distance, commutation and energy machinery ever needs.  The only
phase-sensitive case (P equal to minus a stabilizer) is a global phase on the
code space and is deliberately not distinguished.

The flat 2n-bit vector used by the group machinery is x | (z << n), so column
order is all X-bits then all Z-bits.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DimensionError
from .gf2 import parity

_LETTERS = ("I", "X", "Z", "Y")  # indexed by x + 2*z


class PauliOp:
    """Immutable projective Pauli operator on n qubits."""

    __slots__ = ("n", "x", "z")

    def __init__(self, n: int, x: int = 0, z: int = 0):
        mask = (1 << n) - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "x", x & mask)
        object.__setattr__(self, "z", z & mask)

    def __setattr__(self, name, value):
        raise AttributeError("PauliOp is immutable")

    @staticmethod
    def identity(n: int) -> "PauliOp":
        return PauliOp(n)

    @staticmethod
    def single(n: int, qubit: int, letter: str) -> "PauliOp":
        if not 0 <= qubit < n:
            raise DimensionError(f"qubit {qubit} outside 0..{n - 1}")
        letter = letter.upper()
        if letter == "X":
            return PauliOp(n, 1 << qubit, 0)
        if letter == "Z":
            return PauliOp(n, 0, 1 << qubit)
        if letter == "Y":
            return PauliOp(n, 1 << qubit, 1 << qubit)
        if letter == "I":
            return PauliOp(n)
        raise ValueError(f"unknown Pauli letter {letter!r}")

    @staticmethod
    def from_letters(n: int, letters: Iterable[tuple[int, str]]) -> "PauliOp":
        x = z = 0
        for qubit, letter in letters:
            if not 0 <= qubit < n:
                raise DimensionError(f"qubit {qubit} outside 0..{n - 1}")
            letter = letter.upper()
            if letter in ("X", "Y"):
                x |= 1 << qubit
            if letter in ("Z", "Y"):
                z |= 1 << qubit
        return PauliOp(n, x, z)

    @staticmethod
    def from_vector(n: int, vec: int) -> "PauliOp":
        mask = (1 << n) - 1
        return PauliOp(n, vec & mask, vec >> n)

    @property
    def vector(self) -> int:
        """Flat symplectic vector: X-bits in columns 0..n-1, Z-bits above."""
        return self.x | (self.z << self.n)

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def mul(self, other: "PauliOp") -> "PauliOp":
        if self.n != other.n:
            raise DimensionError(f"qubit counts differ: {self.n} vs {other.n}")
        return PauliOp(self.n, self.x ^ other.x, self.z ^ other.z)

    __mul__ = mul

    def commutes(self, other: "PauliOp") -> bool:
        if self.n != other.n:
            raise DimensionError(f"qubit counts differ: {self.n} vs {other.n}")
        return parity((self.x & other.z) ^ (self.z & other.x)) == 0

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def support(self) -> list[int]:
        s = self.x | self.z
        return [i for i in range(self.n) if (s >> i) & 1]

    def support_mask(self) -> int:
        return self.x | self.z

    def letter(self, qubit: int) -> str:
        return _LETTERS[((self.x >> qubit) & 1) + 2 * ((self.z >> qubit) & 1)]

    def restrict(self, qubits) -> "PauliOp":
        """Restriction onto a qubit subset (int mask or iterable of indices).

        Agrees with self on the subset, identity elsewhere; a homomorphism of
        the projective group.
        """
        if isinstance(qubits, int):
            mask = qubits
        else:
            mask = 0
            for q in qubits:
                mask |= 1 << q
        return PauliOp(self.n, self.x & mask, self.z & mask)

    def letters(self) -> Iterator[tuple[int, str]]:
        for q in self.support():
            yield q, self.letter(q)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliOp)
            and self.n == other.n
            and self.x == other.x
            and self.z == other.z
        )

    def __hash__(self) -> int:
        return hash((self.n, self.x, self.z))

    def __repr__(self) -> str:
        if self.is_identity:
            return f"PauliOp(n={self.n}, I)"
        body = " ".join(f"{letter}{q}" for q, letter in self.letters())
        return f"PauliOp(n={self.n}, {body})"


def symplectic_product(u: PauliOp, v: PauliOp) -> int:
    """0 when the operators commute, 1 when they anticommute."""
    if u.n != v.n:
        raise DimensionError(f"qubit counts differ: {u.n} vs {v.n}")
    return parity((u.x & v.z) ^ (u.z & v.x))


def omega(vec: int, n: int) -> int:
    """Swap the X/Z halves so that parity(omega(v) & w) is the symplectic form."""
    mask = (1 << n) - 1
    return (vec >> n) | ((vec & mask) << n)


def pair_with(vec: int, omega_row: int) -> int:
    return parity(vec & omega_row)
