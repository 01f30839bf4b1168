"""Ternary index of Lagrangian triples and the gluing defect."""

import itertools
import random

import pytest

from lefsig import (
    InputError,
    Lagrangian,
    Matrix,
    SymplecticSpace,
    fiber_sum_defect,
    maslov_index,
    map_lagrangian,
    meyer_cocycle,
    wall_space,
)
from lefsig.symplectic import direct_sum_lagrangian

from .fixtures import (
    BLOCK_ACTION,
    DELTA_STAR,
    MATSUMOTO_PHI,
    random_lagrangian,
    random_symplectic,
)

PLANE = SymplecticSpace.standard(1)
A_LINE = Lagrangian.span(PLANE, [(1, 0)])
DIAG = Lagrangian.span(PLANE, [(1, 1)])
B_LINE = Lagrangian.span(PLANE, [(0, 1)])


def symplectic_inverse(space: SymplecticSpace, m: Matrix) -> Matrix:
    return (-space.form) @ m.transpose() @ space.form


def test_normalization():
    assert maslov_index(A_LINE, DIAG, B_LINE) == -1
    assert maslov_index(B_LINE, DIAG, A_LINE) == 1


def test_wall_space_of_normalization_triple():
    w = wall_space(A_LINE, DIAG, B_LINE)
    assert w.representatives == ((1, 1),)
    assert w.form_matrix == Matrix.from_rows([[-1]])


def test_repeated_argument_vanishes():
    for triple in [(A_LINE, A_LINE, B_LINE), (A_LINE, B_LINE, B_LINE),
                   (A_LINE, B_LINE, A_LINE), (DIAG, DIAG, DIAG)]:
        assert maslov_index(*triple) == 0


def test_zero_dimensional_space():
    pt = SymplecticSpace.standard(0)
    empty = Lagrangian.span(pt, [])
    assert maslov_index(empty, empty, empty) == 0


def test_mixed_ambient_spaces_rejected():
    other = Lagrangian.span(SymplecticSpace.standard(2),
                            [(1, 0, 0, 0), (0, 0, 1, 0)])
    with pytest.raises(InputError, match="ambient"):
        maslov_index(A_LINE, DIAG, other)


def test_antisymmetry_under_all_permutations():
    rng = random.Random(501)
    for _ in range(15):
        space = SymplecticSpace.standard(rng.choice([1, 2]))
        lags = [random_lagrangian(rng, space) for _ in range(3)]
        base = maslov_index(*lags)
        for perm in itertools.permutations(range(3)):
            sign = 1 if perm in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] else -1
            assert maslov_index(*(lags[i] for i in perm)) == sign * base


def test_symplectic_invariance():
    rng = random.Random(2024)
    space = SymplecticSpace.standard(2)
    for _ in range(5):
        lags = [random_lagrangian(rng, space) for _ in range(3)]
        base = maslov_index(*lags)
        m = random_symplectic(rng, space)
        moved = [map_lagrangian(m, lag) for lag in lags]
        assert maslov_index(*moved) == base


def test_direct_sum_additivity():
    rng = random.Random(77)
    for _ in range(8):
        sa = SymplecticSpace.standard(1)
        sb = SymplecticSpace.standard(rng.choice([1, 2]))
        ta = [random_lagrangian(rng, sa) for _ in range(3)]
        tb = [random_lagrangian(rng, sb) for _ in range(3)]
        combined = [direct_sum_lagrangian(x, y) for x, y in zip(ta, tb)]
        assert maslov_index(*combined) == maslov_index(*ta) + maslov_index(*tb)


def test_index_bounded_by_half_dimension():
    rng = random.Random(303)
    for _ in range(25):
        space = SymplecticSpace.standard(rng.choice([1, 2, 3]))
        lags = [random_lagrangian(rng, space) for _ in range(3)]
        assert abs(maslov_index(*lags)) <= space.half_dim


def test_defect_separating_twist_with_itself():
    sp = SymplecticSpace.standard(2)
    assert fiber_sum_defect(sp, DELTA_STAR, DELTA_STAR) == 1


def test_defect_vanishes_with_identity():
    sp = SymplecticSpace.standard(2)
    ident = Matrix.identity(4)
    assert fiber_sum_defect(sp, ident, MATSUMOTO_PHI) == 0
    assert fiber_sum_defect(sp, MATSUMOTO_PHI, ident) == 0
    assert fiber_sum_defect(sp, ident, ident) == 0


def test_defect_vanishes_for_inverse_pairs():
    rng = random.Random(7)
    for _ in range(10):
        space = SymplecticSpace.standard(rng.choice([1, 2]))
        m = random_symplectic(rng, space)
        assert fiber_sum_defect(space, m, symplectic_inverse(space, m)) == 0
    assert fiber_sum_defect(
        PLANE, BLOCK_ACTION, symplectic_inverse(PLANE, BLOCK_ACTION)) == 0


def test_meyer_is_negated_defect():
    rng = random.Random(19)
    space = SymplecticSpace.standard(2)
    for _ in range(6):
        g = random_symplectic(rng, space)
        h = random_symplectic(rng, space)
        assert meyer_cocycle(space, g, h) == -fiber_sum_defect(space, g, h)


def test_meyer_cocycle_identity():
    # c(g, h) + c(gh, k) == c(g, hk) + c(h, k)
    rng = random.Random(4242)
    for _ in range(10):
        space = SymplecticSpace.standard(rng.choice([1, 2]))
        g = random_symplectic(rng, space)
        h = random_symplectic(rng, space)
        k = random_symplectic(rng, space)
        lhs = meyer_cocycle(space, g, h) + meyer_cocycle(space, g @ h, k)
        rhs = meyer_cocycle(space, g, h @ k) + meyer_cocycle(space, h, k)
        assert lhs == rhs


def test_defect_requires_symplectic_inputs():
    with pytest.raises(InputError, match="phi_minus"):
        fiber_sum_defect(PLANE, Matrix.from_rows([[2, 0], [0, 2]]),
                         Matrix.identity(2))
    with pytest.raises(InputError, match="phi_plus"):
        fiber_sum_defect(PLANE, Matrix.identity(2),
                         Matrix.from_rows([[1, 1], [1, 1]]))
