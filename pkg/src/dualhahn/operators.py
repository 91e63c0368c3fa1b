"""Difference and Dunkl-shift operators, and the generalized Leonard pair.

The dual -1 Hahn polynomials are eigenfunctions of a five-diagonal
operator on the grid (eigenvalue ``2n``). The same operator acts directly on
polynomials as a combination of shifts by +-4 and reflected shifts by +-2 with
rational coefficients. Those coefficients have poles at ``x = +-1, +-3`` that
can sit on grid points, so the x-space operator is only ever applied through
exact polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import to_scalar
from .errors import DenominatorPole, NonExactDivision, SingularEvaluationMatrix
from .m1hahn import M1HahnParams, evaluation_matrix, m1_grid
from .poly import Polynomial, RationalFunction, poly_lcm
from .structures import Stencil, bandwidth
from .tables import dunkl_coefficients, stencil_factors


class FiveDiagStencil(Stencil):
    """Stencil with offsets +2, +1, -2, -1 named ``u2, u1, v2, v1``."""

    @property
    def u2(self):
        return self.coeffs[2]

    @property
    def u1(self):
        return self.coeffs[1]

    @property
    def v2(self):
        return self.coeffs[-2]

    @property
    def v1(self):
        return self.coeffs[-1]


def classical_L1_stencil(alpha, beta, N: int) -> Stencil:
    """Tridiagonal operator of the classical dual Hahn family, eigenvalues ``-n``."""
    a, b = to_scalar(alpha), to_scalar(beta)
    up, down = [], []
    for s in range(N + 1):
        num_b = (s + a + b + 1) * (s + a + 1) * (N - s)
        den_b = (2 * s + a + b + 1) * (2 * s + a + b + 2)
        num_d = s * (s + b) * (s + a + b + N + 1)
        den_d = (2 * s + a + b + 1) * (2 * s + a + b)
        for num, den in ((num_b, den_b), (num_d, den_d)):
            if num != 0 and den == 0:
                raise DenominatorPole(f"classical stencil denominator vanishes at s={s}", where=s)
        up.append(num_b / den_b if num_b != 0 else Fraction(0))
        down.append(num_d / den_d if num_d != 0 else Fraction(0))
    return Stencil({1: up, -1: down})


def m1_stencil(params: M1HahnParams) -> FiveDiagStencil:
    rows = {2: [], 1: [], -2: [], -1: []}
    for s in range(params.N + 1):
        for offset, ratio in stencil_factors(params.N, s).items():
            rows[offset].append(ratio.evaluate(params.alpha, params.beta, where=s))
    return FiveDiagStencil(rows)


def apply_stencil(stencil: Stencil, f) -> list:
    return stencil.apply(list(f))


# (coefficient index, scale, shift): E1 -> f(x+4), E2 -> f(x-4), G1 -> f(-x-2), G2 -> f(-x+2)
_ACTIONS = ((0, 1, 4), (1, 1, -4), (2, -1, -2), (3, -1, 2))


@dataclass(frozen=True)
class DunklShiftOperator:
    """``E1 T^4 + E2 T^-4 + G1 T^2 R + G2 T^-2 R - (E1 + E2 + G1 + G2) I``."""

    e1: RationalFunction
    e2: RationalFunction
    g1: RationalFunction
    g2: RationalFunction

    @property
    def coefficients(self) -> tuple:
        return (self.e1, self.e2, self.g1, self.g2)

    def actions(self):
        """Pairs ``(coefficient, (scale, shift))`` meaning ``coefficient(x) * f(scale*x + shift)``."""
        for idx, scale, shift in _ACTIONS:
            yield self.coefficients[idx], (scale, shift)

    def common_denominator(self) -> Polynomial:
        den = Polynomial.constant(1)
        for c in self.coefficients:
            den = poly_lcm(den, c.den)
        return den


def dunkl_operator(params: M1HahnParams) -> DunklShiftOperator:
    return DunklShiftOperator(*dunkl_coefficients(params.alpha, params.beta, params.N))


def apply_dunkl_to_polynomial(op: DunklShiftOperator, p: Polynomial) -> Polynomial:
    """``H p`` computed over the common denominator, then divided out exactly."""
    den = op.common_denominator()
    numerator = Polynomial()
    for coeff, (scale, shift) in op.actions():
        if coeff.is_zero():
            continue
        cofactor = den.exact_div(coeff.den)
        numerator = numerator + coeff.num * cofactor * (p.compose_affine(scale, shift) - p)
    quotient, remainder = numerator.divmod(den)
    if not remainder.is_zero():
        raise NonExactDivision(f"H p is not a polynomial (remainder {remainder})")
    return quotient


@dataclass(frozen=True)
class LeonardPairRep:
    """Matrices ``A`` (grid basis, five-diagonal) and ``B = diag(y_s)``.

    ``E[s][n] = R_n(y_s)`` with monic ``R_n``. ``a_poly = E^-1 A E`` is
    ``diag(2n)``; ``b_poly = E^-1 B E`` is tridiagonal.
    """

    A: tuple
    B: tuple
    E: tuple
    a_poly: tuple
    b_poly: tuple

    @property
    def bandwidths(self) -> dict:
        return {
            "A_grid": bandwidth(self.A),
            "B_grid": bandwidth(self.B),
            "A_poly": bandwidth(self.a_poly),
            "B_poly": bandwidth(self.b_poly),
        }


def _to_domain(rows):
    from sympy.polys.domains import QQ
    from sympy.polys.matrices import DomainMatrix

    n = len(rows)
    return DomainMatrix([[QQ(int(v.numerator), int(v.denominator)) for v in row] for row in rows], (n, n), QQ)


def _from_domain(dm) -> tuple:
    return tuple(
        tuple(Fraction(int(v.numerator), int(v.denominator)) for v in row) for row in dm.to_list()
    )


def conjugate(E, M):
    """Exact ``E^-1 M E`` for square matrices of Fractions."""
    e = _to_domain(E)
    if e.rank() < len(E):
        raise SingularEvaluationMatrix("evaluation matrix is singular")
    return _from_domain(e.inv() * _to_domain(M) * e)


def leonard_pair(params: M1HahnParams) -> LeonardPairRep:
    A = tuple(tuple(Fraction(v) for v in row) for row in m1_stencil(params).matrix())
    grid = m1_grid(params)
    n = len(grid)
    B = tuple(tuple(grid[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))
    E = tuple(tuple(row) for row in evaluation_matrix(params))
    return LeonardPairRep(A, B, E, conjugate(E, A), conjugate(E, B))
