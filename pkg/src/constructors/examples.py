"""Parameterized example families of 2-step and 3-step data."""
from fractions import Fraction
from typing import Optional, Sequence

from src.constructors.three_step import Complex3StepData
from src.constructors.two_step import Complex2StepData, algebra_from_j, standard_j_v
from src.linalg.exact import RMatrix, Scalar, Subspace, to_rational
from src.utils.errors import PreconditionError

VARIANTS = ("abelian", "biinvariant", "mixed")


def _rotation(n: int, first: int, second: int, scale: Scalar = 1) -> RMatrix:
    """e_first -> scale e_second, e_second -> -scale e_first on R^{2n}."""
    c = to_rational(scale)
    rows = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    rows[second][first] = c
    rows[first][second] = -c
    return RMatrix.from_rows(rows, cols=2 * n)


def example_2step(variant: str = "mixed", n: int = 2) -> Complex2StepData:
    """n0 = Rx ⊕ v with dim v = 2n, z1 = 0 and a single bracket operator j0(x).

    abelian:     j0(x) = J_v, psi(x) a rotation of u(n)          -> abelian J
    biinvariant: j0(x) anticommutes with J_v, psi = 0            -> bi-invariant J
    mixed:       j0(x) rotates the (e1, e2) plane, psi(x) = J_v -> neither
    """
    if variant not in VARIANTS:
        raise PreconditionError(f"unknown 2-step example {variant!r}; expected one of {', '.join(VARIANTS)}")
    if n < 2:
        raise PreconditionError("the 2-step examples need n >= 2")
    J_v = standard_j_v(n)
    # rotating (e1, e2) and (e_{n+1}, e_{n+2}) together commutes with J_v
    r_low, r_high = _rotation(n, 0, 1), _rotation(n, n, n + 1)
    if variant == "abelian":
        j0, psi = J_v, r_low + r_high
    elif variant == "biinvariant":
        j0, psi = r_low - r_high, RMatrix.zeros(2 * n, 2 * n)
    else:
        j0, psi = r_low, J_v
    dim = 1 + 2 * n
    n0 = algebra_from_j(RMatrix.identity(1), RMatrix.identity(2 * n), [j0], name=f"n0({variant})")
    x_line = Subspace.coordinate(dim, [0])
    none = Subspace.zero(dim)
    pieces = {
        "abelian": (x_line, none, none),
        "biinvariant": (none, x_line, none),
        "mixed": (none, none, x_line),
    }[variant]
    return Complex2StepData(
        n0=n0,
        g0=RMatrix.identity(dim),
        J_v=J_v,
        z1_dim=0,
        gram_z1=RMatrix.identity(0),
        psi=(psi,),
        p_plus=pieces[0],
        p_minus=pieces[1],
        a1=pieces[2],
    )


def example_3step(
    n: int = 3,
    a: Optional[Sequence[Scalar]] = None,
    b: Optional[Sequence[Scalar]] = None,
    c1: Scalar = 0,
    c2: Scalar = 0,
    alpha: Optional[Sequence[RMatrix]] = None,
) -> Complex3StepData:
    """The family on R y ⊕ R x ⊕ q ⊕ v with dim v = 2n - 4 and q = span(f1, f2).

    mu(e_k, e_{k+n-2}) = x, J x = y, J f1 = f2, rho(y) = [[a, -b], [b, a]] and
    alpha(e_k, e_{k+n-2}) = c1 f1 + c2 f2. Defaults: a = (1, 0, ...), b = 0.
    An explicit alpha, given as its f1 and f2 components (alternating
    matrices on v), replaces the c1, c2 form.
    """
    if n < 3:
        raise PreconditionError("the 3-step example needs n >= 3")
    m = n - 2
    a = [to_rational(s) for s in (a if a is not None else [1] + [0] * (m - 1))]
    b = [to_rational(s) for s in (b if b is not None else [0] * m)]
    if len(a) != m or len(b) != m:
        raise PreconditionError(f"a and b need {m} entries each")
    if alpha is not None and (c1 or c2):
        raise PreconditionError("give either alpha or c1, c2")
    if alpha is not None and (len(alpha) != 2 or any(c.shape != (2 * m, 2 * m) for c in alpha)):
        raise PreconditionError(f"alpha needs two {2 * m}x{2 * m} components")
    size = 2 * m
    pair_form = [[Fraction(0)] * size for _ in range(size)]
    for k in range(m):
        pair_form[k][k + m] = Fraction(1)
        pair_form[k + m][k] = Fraction(-1)
    omega = RMatrix.from_rows(pair_form, cols=size)
    rho = RMatrix.from_rows([a + [-s for s in b], b + a], cols=size)
    return Complex3StepData(
        J_v=standard_j_v(m),
        gram_v=RMatrix.identity(size),
        J_0=standard_j_v(1),
        gram_q=RMatrix.identity(2),
        z1_dim=1,
        u_dim=1,
        gram_h=RMatrix.identity(2),
        alpha=tuple(alpha) if alpha is not None else (omega.scale(c1), omega.scale(c2)),
        mu=(omega,),
        rho=(rho,),
    )
