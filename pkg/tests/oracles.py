"""Independent cross-check routines used only by the tests.

The library computes signatures by congruence diagonalization; here the same
number is recovered from the characteristic polynomial instead.  For a
symmetric matrix all eigenvalues are real, so Descartes' rule of signs is
exact: the number of positive eigenvalues equals the sign variations of
p(t), the number of negative ones the variations of p(-t).
"""

from __future__ import annotations

from fractions import Fraction

from lefsig.ratlinalg import Matrix


def charpoly(m: Matrix) -> list[Fraction]:
    """Coefficients of det(tI - M), ascending order, leading coefficient 1.

    Faddeev-LeVerrier recursion; exact over Fraction.
    """
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(coeffs[n - k + 1])) if k > 1 else m
        trace = sum((mk.at(i, i) for i in range(n)), Fraction(0))
        coeffs[n - k] = -trace / k
    return coeffs


def _variations(seq: list[Fraction]) -> int:
    signs = [1 if x > 0 else -1 for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signature_via_charpoly(s: Matrix) -> int:
    """Signature of a symmetric matrix via Descartes sign counting."""
    assert s == s.transpose()
    p = charpoly(s)
    pos = _variations(p)
    neg = _variations([c if k % 2 == 0 else -c for k, c in enumerate(p)])
    return pos - neg
