"""Ternary Maslov index of Lagrangian triples and the fiber-sum defect.

For Lagrangians A, B, C of a symplectic space (V, Q) the index tau(A, B, C)
is the signature of a symmetric form Psi on

    W = B ∩ (C + A) / ((B ∩ C) + (B ∩ A)).

Given b in B ∩ (C + A), write a' + b + c' = 0 with a' in A, c' in C; then
Psi(b1, b2) = Q(b1, c'2).  The subspace (B ∩ C) + (B ∩ A) lies in the radical
of Psi, the induced form on the quotient is symmetric and nonsingular, and
its signature is the index.  Everything is computed exactly over Q with
deterministic pivot choices, and the guaranteed properties (symmetry, radical
containment, nonsingularity) are asserted at runtime rather than trusted.

Normalization: in the plane with Q((x1,x2),(y1,y2)) = x1 y2 - x2 y1,
tau(span(1,0), span(1,1), span(0,1)) = -1.

The geometric use: gluing two fibrations over half-disks along a fiber costs
a signature defect.  With boundary monodromies phi_minus and phi_plus the
defect is tau of (graph(phi_minus), graph(id), conj-graph(phi_plus)) in the
doubled space, and the Meyer cocycle is its negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalConsistencyError
from .ratlinalg import (
    Matrix,
    Vector,
    in_span,
    intersect_spans,
    rank,
    signature_symmetric,
    solve_many,
    sum_spans,
    vec_add,
    vec_dot,
    vec_scale,
    zero_vector,
)
from .symplectic import Lagrangian, SymplecticSpace, graph_lagrangians, is_symplectic


@dataclass(frozen=True)
class WallSpace:
    """The correction space W of a Lagrangian triple, made concrete.

    `representatives` are ambient vectors whose cosets form a basis of W;
    `form_matrix` is Psi evaluated on them.  Its signature is the index.
    """

    ambient: SymplecticSpace
    representatives: tuple[Vector, ...]
    form_matrix: Matrix


def _same_space(a: Lagrangian, b: Lagrangian, c: Lagrangian) -> SymplecticSpace:
    if a.space != b.space or b.space != c.space:
        raise InputError("Lagrangian triple must share one ambient space")
    return a.space


def wall_space(a: Lagrangian, b: Lagrangian, c: Lagrangian) -> WallSpace:
    """Construct W and the matrix of Psi for a Lagrangian triple."""
    space = _same_space(a, b, c)
    dim = space.dim
    if dim == 0:
        return WallSpace(space, (), Matrix.zeros(0, 0))

    circle = intersect_spans(b.basis, sum_spans(c.basis, a.basis, dim), dim)
    if not circle:
        return WallSpace(space, (), Matrix.zeros(0, 0))

    # For each generator d of B ∩ (C + A), split -d = a' + c' with a' in A,
    # c' in C, keeping only c'.  The split solves [A | C] (s, t) = -d; the
    # first-pivot rule makes the chosen c' deterministic.
    ac_columns = Matrix.from_columns(list(a.basis) + list(c.basis), rows=dim)
    splits = solve_many(ac_columns, [vec_scale(Fraction(-1), d) for d in circle])
    c_parts: list[Vector] = []
    for sol in splits:
        if sol is None:
            raise InternalConsistencyError("membership in C + A failed during split")
        c_part = zero_vector(dim)
        for coeff, vec in zip(sol[len(a.basis):], c.basis):
            c_part = vec_add(c_part, vec_scale(coeff, vec))
        c_parts.append(c_part)

    k = len(circle)
    images = [space.form.apply(cp) for cp in c_parts]
    psi = Matrix(
        tuple(
            tuple(vec_dot(circle[i], images[j]) for j in range(k))
            for i in range(k)
        ),
        k,
    )
    if psi != psi.transpose():
        raise InternalConsistencyError("Psi did not come out symmetric")

    # Coordinates (w.r.t. the `circle` basis) of the would-be radical
    # U = (B ∩ C) + (B ∩ A); it must actually annihilate Psi.
    u = sum_spans(
        intersect_spans(b.basis, c.basis, dim),
        intersect_spans(b.basis, a.basis, dim),
        dim,
    )
    circle_columns = Matrix.from_columns(circle, rows=dim)
    u_coords: list[Vector] = []
    for sol in solve_many(circle_columns, list(u)):
        if sol is None:
            raise InternalConsistencyError("radical summand escaped B ∩ (C + A)")
        u_coords.append(sol)
        if any(x != 0 for x in psi.apply(sol)):
            raise InternalConsistencyError("(B∩C) + (B∩A) is not in the radical of Psi")

    # Deterministic complement: first standard coordinate vectors extending U.
    chosen: list[int] = []
    spanning = list(u_coords)
    for i in range(k):
        if len(chosen) == k - len(u_coords):
            break
        e = tuple(Fraction(1 if j == i else 0) for j in range(k))
        if not in_span(tuple(spanning), e, k):
            chosen.append(i)
            spanning.append(e)
    if len(chosen) != k - len(u):
        raise InternalConsistencyError("complement of the radical has wrong dimension")

    reps = tuple(circle[i] for i in chosen)
    induced = Matrix(
        tuple(tuple(psi.at(i, j) for j in chosen) for i in chosen),
        len(chosen),
    )
    if induced.rows > 0 and rank(induced) != induced.rows:
        raise InternalConsistencyError("induced form on W is singular")
    return WallSpace(space, reps, induced)


def maslov_index(a: Lagrangian, b: Lagrangian, c: Lagrangian) -> int:
    """Signature of Psi on W.  Zero for the zero-dimensional ambient space."""
    return signature_symmetric(wall_space(a, b, c).form_matrix)


def fiber_sum_defect(space: SymplecticSpace, phi_minus: Matrix, phi_plus: Matrix) -> int:
    """Signature defect of gluing fibrations with boundary monodromies
    phi_minus (later piece) and phi_plus (earlier piece):

        tau(graph(phi_minus), graph(id), conj-graph(phi_plus))

    in (V + V, Q + -Q).  The glued total monodromy is phi_minus @ phi_plus.
    """
    for name, m in (("phi_minus", phi_minus), ("phi_plus", phi_plus)):
        if not is_symplectic(space, m):
            raise InputError(f"{name} is not symplectic for this space")
    graph_minus, _ = graph_lagrangians(space, phi_minus)
    graph_id, _ = graph_lagrangians(space, Matrix.identity(space.dim))
    _, conj_plus = graph_lagrangians(space, phi_plus)
    return maslov_index(graph_minus, graph_id, conj_plus)


def meyer_cocycle(space: SymplecticSpace, m1: Matrix, m2: Matrix) -> int:
    """Meyer's 2-cocycle on the symplectic group: minus the fiber-sum defect."""
    return -fiber_sum_defect(space, m1, m2)
