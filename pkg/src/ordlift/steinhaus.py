"""Steinhaus triangles over Z/nZ.

The triangle of a finite sequence is the multiset of all iterated pairwise
sums: each row is the mod-n sums of adjacent entries of the row above, and a
length-m sequence contributes m(m+1)/2 entries in total.  A sequence is
balanced when every residue class appears equally often.  Balance forces
n | m(m+1)/2, and the search here scans arithmetic progressions for witnesses
at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from ordlift import _backend

__all__ = [
    "TriangleSummary",
    "ZnSequence",
    "ap_sequence",
    "is_balanced",
    "length_admissible",
    "search_balanced_ap",
    "triangle",
]


@dataclass(frozen=True)
class ZnSequence:
    """A nonempty sequence of residues mod a positive modulus."""

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if len(self.elements) < 1:
            raise ValueError("sequence must have length >= 1")
        for x in self.elements:
            if not 0 <= x < self.modulus:
                raise ValueError(f"element {x} not a residue mod {self.modulus}")

    @classmethod
    def from_integers(cls, modulus: int, values) -> "ZnSequence":
        """Build a sequence by reducing arbitrary integers mod the modulus."""
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        return cls(modulus, tuple(v % modulus for v in values))

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class TriangleSummary:
    """Residue multiplicities of a triangle, plus the balance verdict.

    ``counts[r]`` is the multiplicity of residue r; the multiplicities always
    sum to length*(length+1)/2.
    """

    modulus: int
    length: int
    counts: tuple[int, ...]
    balanced: bool

    @property
    def total(self) -> int:
        return self.length * (self.length + 1) // 2


def triangle(seq: ZnSequence) -> TriangleSummary:
    """Triangle of a sequence, built row by row with pairwise sums."""
    counts = _backend.triangle_counts(seq.elements, seq.modulus)
    return TriangleSummary(
        modulus=seq.modulus,
        length=len(seq),
        counts=tuple(counts),
        balanced=min(counts) == max(counts),
    )


def is_balanced(seq: ZnSequence) -> bool:
    """True iff every residue class appears equally often in the triangle."""
    return triangle(seq).balanced


def length_admissible(m: int, n: int) -> bool:
    """True iff n divides m(m+1)/2, the entry count of a length-m triangle.

    This is necessary for a balanced sequence of length m to exist mod n.
    """
    if m < 1 or n < 1:
        raise ValueError(f"arguments must be >= 1, got ({m}, {n})")
    return (m * (m + 1) // 2) % n == 0


def ap_sequence(c: int, d: int, m: int, n: int) -> ZnSequence:
    """The arithmetic progression c, c+d, ..., c+(m-1)d reduced mod n."""
    if m < 1 or n < 1:
        raise ValueError(f"length and modulus must be >= 1, got ({m}, {n})")
    return ZnSequence(n, tuple((c + k * d) % n for k in range(m)))


def search_balanced_ap(n: int, m: int):
    """First (start, step) pair in [0,n)^2, in lexicographic order, whose
    length-m arithmetic progression is balanced mod n; None if there is none.

    Odd n only: that is where balanced progressions are known to exist for
    lengths in the right congruence classes, and the scan is not meaningful
    outside it.  Admissible lengths outside those classes may legitimately
    return None.
    """
    if n < 1 or m < 1:
        raise ValueError(f"arguments must be >= 1, got ({n}, {m})")
    if n % 2 == 0:
        raise ValueError(f"search_balanced_ap requires odd n, got {n}")
    return _backend.search_balanced_ap(n, m)
