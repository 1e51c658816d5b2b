"""Complex structures on free 2-step nilpotent algebras.

f_r carries one when r ≡ 0, 3 (mod 4); otherwise R w0 ⊕ f_r does. V is split
as v_1..v_m, w_1..w_m (plus v0 when r is odd); Λ²V gets the basis

    α±_ij = w_i∧v_j ± v_i∧w_j,  β±_ij = w_i∧w_j ± v_i∧v_j,
    γ_i = v_i∧w_i,  ε_i = v0∧v_i,  δ_i = v0∧w_i

and J pairs Jv_i = w_i, Jα+ = β-, Jα- = β+, Jγ_{2i-1} = γ_{2i}, Jε_i = δ_i.
A leftover γ goes to v0 (r ≡ 3) or to w0 (r ≡ 2); for r ≡ 1, Jv0 = w0.
"""
from typing import List, Optional, Sequence, Tuple

from fractions import Fraction
from loguru import logger

from src.constructors.basic import free_two_step
from src.geometry.complex import ComplexStructure
from src.lie.algebra import LieAlgebra, bracket, direct_sum
from src.linalg.exact import Vector, unit_vector, vec_add, vec_sub
from src.utils.errors import PreconditionError


def free_complex_structure(r: int) -> Tuple[LieAlgebra, ComplexStructure]:
    if r < 2:
        raise PreconditionError("free 2-step algebra needs r >= 2")
    residue = r % 4
    has_v0 = residue in (1, 3)
    has_w0 = residue in (1, 2)
    m = (r - 1) // 2 if has_v0 else r // 2
    f = free_two_step(r)
    L = direct_sum(LieAlgebra.abelian(1), f, name=f"R+f{r}") if has_w0 else f
    shift = 1 if has_w0 else 0
    n = L.dim

    def e(idx: int) -> Vector:
        return unit_vector(n, shift + idx)

    first = 1 if has_v0 else 0
    v0 = e(0) if has_v0 else None
    v = [e(first + i) for i in range(m)]
    w = [e(first + m + i) for i in range(m)]

    def wedge(x: Vector, y: Vector) -> Vector:
        return bracket(L, x, y)

    gamma = [wedge(v[i], w[i]) for i in range(m)]
    pairs: List[Tuple[Sequence[Fraction], Sequence[Fraction]]] = []
    pairs += [(v[i], w[i]) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            alpha_p = vec_add(wedge(w[i], v[j]), wedge(v[i], w[j]))
            alpha_m = vec_sub(wedge(w[i], v[j]), wedge(v[i], w[j]))
            beta_p = vec_add(wedge(w[i], w[j]), wedge(v[i], v[j]))
            beta_m = vec_sub(wedge(w[i], w[j]), wedge(v[i], v[j]))
            pairs += [(alpha_p, beta_m), (alpha_m, beta_p)]
    pairs += [(gamma[2 * i], gamma[2 * i + 1]) for i in range(m // 2)]
    if has_v0:
        pairs += [(wedge(v0, v[i]), wedge(v0, w[i])) for i in range(m)]
    w0: Optional[Vector] = unit_vector(n, 0) if has_w0 else None
    if residue == 3:
        pairs.append((v0, gamma[m - 1]))
    elif residue == 2:
        pairs.append((gamma[m - 1], w0))
    elif residue == 1:
        pairs.append((v0, w0))
    J = ComplexStructure.from_pairs(n, pairs)
    logger.debug(f"complex structure on {L.name}: dim {n}, {len(pairs)} pairs")
    return L, J
