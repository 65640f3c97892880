"""Principally specialized characters of standard A2(2) modules.

A dominant weight is given by its values ``(m0, m1)`` on ``h0`` and ``h1``;
the level is ``m0 + 2*m1``.  With ``phi = Lambda + rho`` and ``rho = (1, 1)``
the specialized character is

    chi(q) = H(q) * prod_{n in J} (1 - q^n)^-1 * prod_{n in K} (1 - q^n)

where ``H(q) = prod_{n = +-1 mod 6} (1 - q^n)^-1`` is the Heisenberg factor
and ``J``, ``K`` are residue classes mod ``2*phi(c)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .partitions import builtin_condition_set, count_series
from .qseries import TruncatedSeries, progression_product

__all__ = [
    "DominantWeight",
    "SpecializationData",
    "specialization_data",
    "heisenberg_character",
    "principal_character",
    "chi5",
    "borcea_compare",
    "dumps_character",
]


@dataclass(frozen=True)
class DominantWeight:
    m0: int
    m1: int

    def __post_init__(self):
        if self.m0 < 0 or self.m1 < 0:
            raise ValueError("weight values must be nonnegative")
        if self.level < 1:
            raise ValueError("level must be at least 1")

    @property
    def level(self) -> int:
        return self.m0 + 2 * self.m1

    @classmethod
    def parse(cls, text: str) -> "DominantWeight":
        """``"5,0"`` or ``"(5,0)"``."""
        parts = text.strip().strip("()").split(",")
        if len(parts) != 2:
            raise ValueError(f"bad weight: {text!r}")
        return cls(int(parts[0]), int(parts[1]))


@dataclass(frozen=True)
class SpecializationData:
    modulus: int
    j_residues: tuple
    k_residues: tuple

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "j_residues": list(self.j_residues),
            "k_residues": list(self.k_residues),
        }


def specialization_data(w: DominantWeight) -> SpecializationData:
    phi0 = w.m0 + 1
    phi1 = w.m1 + 1
    phic = phi0 + 2 * phi1
    mod = 2 * phic
    # phi(h0 + h1) is read as phi(h0) + phi(h1)
    excluded = {0, phic % mod}
    for v in (phi0, phi1, phi0 + phi1):
        excluded.add(v % mod)
        excluded.add(-v % mod)
    j = tuple(r for r in range(mod) if r not in excluded)
    k = tuple(sorted({phi0 % mod, -phi0 % mod})) if w.m0 == w.m1 else ()
    return SpecializationData(mod, j, k)


def heisenberg_character(order: int) -> TruncatedSeries:
    return progression_product(6, (1, 5), -1, order)


def principal_character(w: DominantWeight, order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    data = specialization_data(w)
    chi = heisenberg_character(order)
    if data.j_residues:
        chi = chi * progression_product(data.modulus, data.j_residues, -1, order)
    if data.k_residues:
        chi = chi * progression_product(data.modulus, data.k_residues, 1, order)
    return chi


def chi5(order: int) -> TruncatedSeries:
    """Heisenberg quotient of the level 5 vacuum character:
    ``prod_{j = +-2, +-3, +-4, +-5 mod 16} (1 - q^j)^-1``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return progression_product(16, (2, 3, 4, 5, 11, 12, 13, 14), -1, order)


def borcea_compare(order: int) -> list:
    """``(n, a1_count, chi_coeff)`` for ``n = 0 .. order``.

    The left column counts partitions under the level 2 A1(1) conditions;
    the duality says the two columns agree.
    """
    g = count_series(builtin_condition_set("a11-level2"), order)
    chi = chi5(order)
    return [(n, g[n], chi[n]) for n in range(order + 1)]


def dumps_character(w: DominantWeight, order: int) -> str:
    data = specialization_data(w)
    chi = principal_character(w, order)
    return json.dumps({
        "weight": [w.m0, w.m1],
        "level": w.level,
        **data.to_json(),
        "series": list(chi.coeffs),
    })
