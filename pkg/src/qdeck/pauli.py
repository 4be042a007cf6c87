"""Exact n-qubit Pauli algebra on bitmask pairs.

An n-qubit Pauli operator is stored as two n-bit masks plus a phase
exponent k, encoding

    P = i^k * sigma_{n-1} x ... x sigma_1 x sigma_0 ,

where the letter on site j is determined by bit j of the masks:
(x=0,z=0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y.  Site order in the
tensor product is qubit 0 = least significant bit.  With this encoding
Hermitian operators carry k in {0, 2} (sign +1 / -1), and the sitewise
products follow X*Z = -iY, Z*X = +iY, X*Y = iZ, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_QUBITS = 32

_LETTER = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_MASKS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_PHASE_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}


@dataclass(frozen=True)
class PauliOperator:
    """Immutable Pauli operator: i^phase_exp times a tensor of I/X/Y/Z."""

    n: int
    x_mask: int
    z_mask: int
    phase_exp: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count {self.n} outside 1..{MAX_QUBITS}")
        full = (1 << self.n) - 1
        if self.x_mask & ~full or self.z_mask & ~full:
            raise ValueError("mask has bits above position n-1")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # -- basic queries ----------------------------------------------------

    def weight(self) -> int:
        """Number of sites acted on non-trivially."""
        return (self.x_mask | self.z_mask).bit_count()

    def support(self) -> frozenset[int]:
        """Indices of the sites acted on non-trivially."""
        m = self.x_mask | self.z_mask
        return frozenset(i for i in range(self.n) if (m >> i) & 1)

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian operators."""
        if not self.is_hermitian:
            raise ValueError("operator is not Hermitian (phase is +-i)")
        return 1 if self.phase_exp == 0 else -1

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} != {other.n}")
        phase = _product_phase(
            self.x_mask, self.z_mask, self.phase_exp,
            other.x_mask, other.z_mask, other.phase_exp,
        )
        return PauliOperator(self.n, self.x_mask ^ other.x_mask,
                             self.z_mask ^ other.z_mask, phase)

    def commutes_with(self, other: "PauliOperator") -> bool:
        """True iff the symplectic form <x1,z2> + <z1,x2> vanishes mod 2."""
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} != {other.n}")
        a = (self.x_mask & other.z_mask).bit_count()
        b = (self.z_mask & other.x_mask).bit_count()
        return (a + b) % 2 == 0

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        letters = "".join(
            _LETTER[(self.x_mask >> j) & 1, (self.z_mask >> j) & 1]
            for j in reversed(range(self.n))
        )
        return _PHASE_PREFIX[self.phase_exp] + letters

    @classmethod
    def from_string(cls, text: str) -> "PauliOperator":
        """Parse "[+|-|i|-i|+i]{I,X,Y,Z}+", leftmost letter = highest qubit."""
        s = text.strip()
        phase = 0
        for prefix, k in (("-i", 3), ("+i", 1), ("i", 1), ("-", 2), ("+", 0)):
            if s.startswith(prefix):
                phase = k
                s = s[len(prefix):]
                break
        if not s or any(c not in _MASKS for c in s):
            raise ValueError(f"cannot parse Pauli string {text!r}")
        x = z = 0
        for j, c in enumerate(reversed(s)):
            xb, zb = _MASKS[c]
            x |= xb << j
            z |= zb << j
        return cls(len(s), x, z, phase)


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0, 0)


def single_site(n: int, site: int, letter: str) -> PauliOperator:
    """Pauli acting with `letter` on one site, identity elsewhere."""
    if not 0 <= site < n:
        raise IndexError(f"site {site} out of range for n={n}")
    xb, zb = _MASKS[letter]
    return PauliOperator(n, xb << site, zb << site, 0)


def _product_phase(x1: int, z1: int, k1: int, x2: int, z2: int, k2: int) -> int:
    # Work through the X^x Z^z normal form: P = i^(k+g) X^x Z^z with
    # g = |x & z|, and Z^z1 X^x2 = (-1)^|z1 & x2| X^x2 Z^z1.
    g1 = (x1 & z1).bit_count()
    g2 = (x2 & z2).bit_count()
    g12 = ((x1 ^ x2) & (z1 ^ z2)).bit_count()
    swap = (z1 & x2).bit_count()
    return (k1 + k2 + g1 + g2 - g12 + 2 * swap) % 4


def product_phase_exp(x1: int, z1: int, x2: int, z2: int) -> int:
    """Phase exponent of the product of two phase-free mask pairs.

    Mask-level fast path for bulk stabilizer sign bookkeeping; equivalent
    to (PauliOperator * PauliOperator).phase_exp with both phases zero.
    """
    return _product_phase(x1, z1, 0, x2, z2, 0)
