"""Exact Sylvester-Rosenblum equations on finite-dimensional bimodules.

The equation a x - x b = c on a bimodule M becomes, after fixing a basis,
the linear system (L - R) x = c where L and R are the commuting matrices of
left multiplication by a and right multiplication by b.  When the two
operators have disjoint spectra (in the algebraic closure) the system has a
unique solution for every right-hand side.

Disjointness is certified without computing eigenvalues: two rational
polynomials share a root in the closure iff their gcd over the rationals is
non-constant, so coprimality of the characteristic polynomials is the exact
test.  :func:`find_shift` searches the deterministic sequence
0, 1, -1, 2, -2, ... for a scalar shift of the left operator that makes the
spectra disjoint; only finitely many shifts can fail, so it always
terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    DimensionMismatch,
    Matrix,
    char_poly,
    frac,
    poly_gcd,
    solve_linear,
    vector,
    vzero,
)

__all__ = [
    "NoncommutingOperators",
    "BimoduleProblem",
    "SylvesterSolution",
    "spectra_disjoint",
    "solve_sylvester",
    "find_shift",
    "shift_candidates",
]


class NoncommutingOperators(ValueError):
    """left_op and right_op must commute: the bimodule law (a m) b = a (m b)."""


class BimoduleProblem:
    """a x - x b = c posed on a based bimodule.

    ``left_op`` and ``right_op`` are the matrices of L_a and R_b on the
    chosen basis of M, ``rhs`` the coordinates of c.  The constructor
    enforces that the operators commute; anything else does not come from a
    bimodule and is a hard error.
    """

    __slots__ = ("m_dim", "left_op", "right_op", "rhs")

    def __init__(self, left_op: Matrix, right_op: Matrix, rhs):
        if not (left_op.is_square and right_op.is_square):
            raise DimensionMismatch("operators must be square")
        if left_op.rows != right_op.rows:
            raise DimensionMismatch("operators must act on the same space")
        m = left_op.rows
        r = vector(rhs)
        if len(r) != m:
            raise DimensionMismatch(f"rhs length {len(r)} != bimodule dimension {m}")
        if left_op * right_op != right_op * left_op:
            raise NoncommutingOperators(
                "left and right operators do not commute")
        object.__setattr__(self, "m_dim", m)
        object.__setattr__(self, "left_op", left_op)
        object.__setattr__(self, "right_op", right_op)
        object.__setattr__(self, "rhs", r)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("BimoduleProblem is immutable")

    def __repr__(self):
        return f"BimoduleProblem(m_dim={self.m_dim})"


@dataclass(frozen=True)
class SylvesterSolution:
    """Classification of the solution set of (L - R) x = c."""

    status: str  # "unique" | "non_unique" | "no_solution"
    x: tuple | None
    kernel: tuple

    @property
    def is_unique(self) -> bool:
        return self.status == "unique"


def spectra_disjoint(left_op: Matrix, right_op: Matrix) -> bool:
    """True iff the operators share no eigenvalue in the algebraic closure.

    Decided by coprimality of the characteristic polynomials over the
    rationals (gcd constant <=> no common root anywhere).
    """
    if not (left_op.is_square and right_op.is_square):
        raise DimensionMismatch("operators must be square")
    if left_op.rows != right_op.rows:
        raise DimensionMismatch("operators must have the same size")
    g, _, _ = poly_gcd(char_poly(left_op), char_poly(right_op))
    return g.is_constant


def solve_sylvester(problem: BimoduleProblem) -> SylvesterSolution:
    """Solve (left_op - right_op) x = rhs exactly and classify the outcome.

    With disjoint spectra the difference operator is invertible, so the
    status is always "unique" in that case; otherwise the solution set is
    classified by direct elimination.
    """
    diff = problem.left_op - problem.right_op
    sol = solve_linear(diff, problem.rhs)
    if sol is None:
        hom = solve_linear(diff, vzero(problem.m_dim))
        return SylvesterSolution("no_solution", None, hom.kernel)
    if sol.kernel:
        return SylvesterSolution("non_unique", sol.solution, sol.kernel)
    return SylvesterSolution("unique", sol.solution, ())


def shift_candidates():
    """The fixed enumeration 0, 1, -1, 2, -2, ... used by find_shift."""
    yield frac(0)
    k = 1
    while True:
        yield frac(k)
        yield frac(-k)
        k += 1


def find_shift(left_op: Matrix, right_op: Matrix):
    """Smallest shift in the enumeration making the spectra disjoint.

    Returns the first scalar in 0, 1, -1, 2, -2, ... such that
    left_op + shift * I and right_op have disjoint spectra.  A candidate
    fails only when its negative equals a difference of a right and a left
    eigenvalue, so at most deg * deg candidates fail and the search
    terminates.
    """
    if not (left_op.is_square and right_op.is_square):
        raise DimensionMismatch("operators must be square")
    if left_op.rows != right_op.rows:
        raise DimensionMismatch("operators must have the same size")
    p_left = char_poly(left_op)
    p_right = char_poly(right_op)
    for lam in shift_candidates():
        # char poly of (left + lam I) evaluated at t is p_left(t - lam)
        g, _, _ = poly_gcd(p_left.shifted(-lam), p_right)
        if g.is_constant:
            return lam
    raise AssertionError("unreachable: only finitely many shifts can fail")
