"""Hypercomplex structures J1, J2, J3 = J1 J2 with the hyper-Hermitian and HKT conditions."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional, Sequence, Tuple

from src.geometry.complex import ComplexStructure, nijenhuis_witness
from src.geometry.hermitian import is_hermitian
from src.lie.algebra import LieAlgebra, bracket
from src.linalg.exact import RMatrix, inner, require_gram, unit_vector
from src.utils.errors import DimensionMismatch, PreconditionError


@dataclass(frozen=True)
class HypercomplexStructure:
    J1: ComplexStructure
    J2: ComplexStructure
    J3: ComplexStructure

    @property
    def structures(self) -> Tuple[ComplexStructure, ComplexStructure, ComplexStructure]:
        return self.J1, self.J2, self.J3


class HypercomplexCheck(NamedTuple):
    ok: bool
    violation: Optional[str] = None


def validate_hypercomplex(L: LieAlgebra, h: HypercomplexStructure) -> HypercomplexCheck:
    if any(J.dim != L.dim for J in h.structures):
        raise DimensionMismatch("hypercomplex structure and algebra dimensions differ")
    J1, J2, J3 = (J.J for J in h.structures)
    if J1 @ J2 != J3:
        return HypercomplexCheck(False, "J1 J2 != J3")
    if J2 @ J1 != -J3:
        return HypercomplexCheck(False, "J2 J1 != -J3")
    for alpha, J in enumerate(h.structures, start=1):
        witness = nijenhuis_witness(L, J)
        if witness is not None:
            i, j, value = witness
            return HypercomplexCheck(False, f"N_J{alpha}(e{i + 1}, e{j + 1}) = {[str(c) for c in value]}")
    return HypercomplexCheck(True)


def is_hyper_hermitian(h: HypercomplexStructure, g: RMatrix) -> bool:
    return all(is_hermitian(J, g) for J in h.structures)


def _cyclic_sum(L: LieAlgebra, J: ComplexStructure, g: RMatrix, x: Sequence[Fraction], y: Sequence[Fraction], z: Sequence[Fraction]) -> Fraction:
    Jx, Jy, Jz = J.apply(x), J.apply(y), J.apply(z)
    return inner(bracket(L, Jx, Jy), z, g) + inner(bracket(L, Jy, Jz), x, g) + inner(bracket(L, Jz, Jx), y, g)


def hkt_witness(L: LieAlgebra, h: HypercomplexStructure, g: RMatrix) -> Optional[Tuple[Tuple[int, int, int], Tuple[Fraction, Fraction, Fraction]]]:
    require_gram(g, L.dim)
    if not is_hyper_hermitian(h, g):
        raise PreconditionError("metric is not hyper-Hermitian")
    e = [unit_vector(L.dim, i) for i in range(L.dim)]
    for i, j, k in combinations(range(L.dim), 3):
        sums = tuple(_cyclic_sum(L, J, g, e[i], e[j], e[k]) for J in h.structures)
        if not sums[0] == sums[1] == sums[2]:
            return (i, j, k), sums
    return None


def is_hkt(L: LieAlgebra, h: HypercomplexStructure, g: RMatrix) -> bool:
    return hkt_witness(L, h, g) is None
