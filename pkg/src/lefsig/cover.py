"""Signatures of cyclic branched covers of a fibration, branched over a fiber.

For the n-fold cover of a fibration with total monodromy phi and signature
sigma, the covers satisfy

    sigma(cover_n) = n * sigma - sum_{m=1}^{n-1} correction(m),

where correction(m) is the signature of the symmetric integer matrix

    S_m = sum_{i=1}^{m} ((phi^T)^i J - J phi^i).

S_m represents a pairing that descends to the quotient by the fixed space of
phi^{m+1}; fixed vectors land in the radical of S_m (checked in the tests),
so the ambient signature already is the quotient signature.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalConsistencyError
from .ratlinalg import Matrix, signature_symmetric
from .symplectic import SymplecticSpace, is_symplectic


@dataclass(frozen=True)
class CorrectionTerm:
    power: int
    matrix: Matrix
    sigma: int


def correction_sigma(space: SymplecticSpace, phi: Matrix, m: int) -> CorrectionTerm:
    """Correction term for gluing the (m+1)-st sheet, m >= 1."""
    if m < 1:
        raise InputError("correction power must be >= 1")
    if not is_symplectic(space, phi):
        raise InputError("monodromy matrix is not symplectic for this space")
    j = space.form
    total = Matrix.zeros(space.dim, space.dim)
    p = Matrix.identity(space.dim)
    for _ in range(m):
        p = p @ phi
        total = total + (p.transpose() @ j - j @ p)
    if total != total.transpose():
        raise InternalConsistencyError("correction matrix is not symmetric")
    return CorrectionTerm(m, total, signature_symmetric(total))


def cover_signature(base_sigma: int, phi: Matrix, n: int) -> int:
    """Signature of the n-fold cyclic cover branched over a regular fiber."""
    if n < 1:
        raise InputError("fold count must be >= 1")
    if not phi.is_square() or phi.rows % 2 != 0:
        raise InputError("monodromy matrix must be square of even size")
    space = SymplecticSpace.standard(phi.rows // 2)
    total = n * base_sigma
    for m in range(1, n):
        total -= correction_sigma(space, phi, m).sigma
    return total
