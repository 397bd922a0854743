import random
from fractions import Fraction

import pytest

from kummerlat.isometries import (
    LatticeIsometry,
    check_square_theorem,
    check_unimodular_corollary,
    coinvariant_lattice,
    compute_invariants,
    conjugate_isometry,
    invariant_lattice,
    is_perfect_square,
    overlattice_by_glue,
    overlattice_with_basis,
    transport_isometry,
)
from kummerlat.lattices import Lattice, cartan_a, direct_sum, make_standard, signature
from kummerlat.matrix import Matrix, block_diag, identity
from kummerlat.pool import (
    a_n_glue,
    base_pool,
    block_permutation,
    cyclic_rotation,
    extended_pool,
    random_unimodular,
)

U = make_standard("U")
A4M = make_standard("A4(-1)")
C5 = cyclic_rotation(4)


def test_isometry_validation():
    with pytest.raises(ValueError):
        LatticeIsometry(U, identity(2), 2)  # identity rejected
    with pytest.raises(ValueError):
        LatticeIsometry(U, Matrix([[1, 1], [0, 1]]), 2)  # not an isometry
    with pytest.raises(ValueError):
        LatticeIsometry(A4M, C5, 4)  # order must be prime
    with pytest.raises(ValueError):
        LatticeIsometry(A4M, C5, 3)  # wrong order


def test_invariant_lattice_examples():
    # cyclic rotation of A4(-1) fixes nothing
    iso = LatticeIsometry(A4M, C5, 5)
    assert invariant_lattice(iso).rank == 0
    # -id fixes nothing
    assert invariant_lattice(LatticeIsometry(U, -identity(2), 2)).rank == 0
    # swapping the two U summands fixes the diagonal
    uu = direct_sum(U, U)
    swap = block_permutation(2, 2)
    t = invariant_lattice(LatticeIsometry(uu, swap, 2))
    assert t.rank == 2
    for col in range(2):
        v = t.basis.col(col)
        assert v[0] == v[2] and v[1] == v[3]


def test_coinvariant_lattice_examples():
    iso = LatticeIsometry(A4M, C5, 5)
    s = coinvariant_lattice(iso)
    assert s.rank == 4 and s.basis == identity(4)
    s2 = coinvariant_lattice(LatticeIsometry(U, -identity(2), 2))
    assert s2.rank == 2
    uu = direct_sum(U, U)
    s3 = coinvariant_lattice(LatticeIsometry(uu, block_permutation(2, 2), 2))
    assert s3.rank == 2
    for col in range(2):
        v = s3.basis.col(col)
        assert v[0] == -v[2] and v[1] == -v[3]


def test_compute_invariants_examples():
    # with T of rank 0 the glue index is 1, so a = 0
    inv = compute_invariants(LatticeIsometry(A4M, C5, 5))
    assert (inv.m, inv.a) == (1, 0)
    assert inv.disc_s == 5 and inv.index == 1
    inv2 = compute_invariants(LatticeIsometry(U, -identity(2), 2))
    assert (inv2.m, inv2.a) == (2, 0)
    # glued overlattice realizes a = 1
    glue = [a_n_glue(4) + tuple(2 * x for x in a_n_glue(4))]
    over, basis = overlattice_with_basis(direct_sum(A4M, A4M), glue)
    phi = transport_isometry(basis, block_diag(identity(4), C5))
    inv3 = compute_invariants(LatticeIsometry(over, phi, 5))
    assert (inv3.m, inv3.a) == (1, 1)
    assert inv3.index == 5 and inv3.disc_s == 5
    phi_cc = transport_isometry(basis, block_diag(C5, C5))
    inv4 = compute_invariants(LatticeIsometry(over, phi_cc, 5))
    assert (inv4.m, inv4.a) == (2, 0)


def test_square_theorem_examples():
    inv = compute_invariants(LatticeIsometry(A4M, C5, 5))
    assert check_square_theorem(inv, 5)  # 5 * 5 = 25
    with pytest.raises(ValueError):
        check_square_theorem(inv, 2)
    # the coinvariant lattice U + H5 of the (1,1) row: 5^1 * 5 = 25
    s_lattice = direct_sum(U, make_standard("H5"))
    assert abs(s_lattice.det) == 5
    assert is_perfect_square(5 * abs(s_lattice.det))


def test_unimodular_corollary():
    inv = compute_invariants(LatticeIsometry(A4M, C5, 5))
    with pytest.raises(ValueError):
        check_unimodular_corollary(inv, 5, A4M)  # disc 5, not unimodular
    # order 3 rotation glued inside a rank 4 unimodular lattice
    a2 = Lattice(cartan_a(2))
    a2m = Lattice(-cartan_a(2))
    over, basis = overlattice_with_basis(direct_sum(a2, a2m), [a_n_glue(2) + a_n_glue(2)])
    assert over.is_unimodular and signature(over) == (2, 2)
    phi = transport_isometry(basis, block_diag(cyclic_rotation(2), identity(2)))
    inv2 = compute_invariants(LatticeIsometry(over, phi, 3))
    assert check_unimodular_corollary(inv2, 3, over)
    assert (inv2.m, inv2.a, inv2.disc_s) == (1, 1, 3)
    # E8(-1)-shaped gluing with Phi_3 minimal polynomial: m = 4, a = 0
    zero2 = (Fraction(0), Fraction(0))
    g2 = a_n_glue(2)
    tetra = [g2 + g2 + g2 + zero2, zero2 + g2 + tuple(2 * x for x in g2) + g2]
    pieces = direct_sum(a2m, a2m, a2m, a2m)
    over8, basis8 = overlattice_with_basis(pieces, tetra)
    assert over8.is_unimodular and signature(over8) == (0, 8)
    c3 = cyclic_rotation(2)
    phi8 = transport_isometry(basis8, block_diag(c3, c3, c3, c3))
    inv8 = compute_invariants(LatticeIsometry(over8, phi8, 3))
    assert (inv8.m, inv8.a, inv8.disc_s) == (4, 0, 1)
    assert check_unimodular_corollary(inv8, 3, over8)


def test_overlattice_by_glue():
    with pytest.raises(ValueError):
        overlattice_by_glue(make_standard("U(5)"), [(Fraction(1, 5), Fraction(1, 5))])
    glue = [a_n_glue(4) + tuple(2 * x for x in a_n_glue(4))]
    over = overlattice_by_glue(direct_sum(A4M, A4M), glue)
    assert over.rank == 8
    assert abs(over.det) == 1  # index 5 in a determinant 25 lattice
    # the q-value decides evenness: (e1 + e2)/2 has q = 0 in <2> + <-2>
    # (accepted) but q = 1 in <2> + <2> (odd overlattice, rejected)
    mixed = direct_sum(Lattice(Matrix([[2]])), make_standard("<-2>"))
    half = [(Fraction(1, 2), Fraction(1, 2))]
    assert abs(overlattice_by_glue(mixed, half).det) == 1
    plus_plus = direct_sum(Lattice(Matrix([[2]])), Lattice(Matrix([[2]])))
    with pytest.raises(ValueError):
        overlattice_by_glue(plus_plus, half)


def test_transport_rejects_nonpreserving():
    glue = [a_n_glue(4) + tuple(2 * x for x in a_n_glue(4))]
    _, basis = overlattice_with_basis(direct_sum(A4M, A4M), glue)
    # the diagram flip negates the glue group on one factor only, moving the
    # glue class out of the overlattice
    flip = Matrix([[int(i + j == 3) for j in range(4)] for i in range(4)])
    assert flip.transpose() @ A4M.gram @ flip == A4M.gram
    with pytest.raises(ValueError):
        transport_isometry(basis, block_diag(flip, identity(4)))


def test_pool_structure_invariants():
    for entry in base_pool():
        iso = entry.isometry
        inv = compute_invariants(iso)
        t, s = inv.invariant, inv.coinvariant
        assert t.rank + s.rank == iso.lattice.rank, entry.name
        pairing = t.basis.transpose() @ iso.lattice.gram @ s.basis
        assert all(x == 0 for row in pairing.data for x in row), entry.name
        assert s.rank % (iso.order - 1) == 0, entry.name
        assert inv.a <= inv.m, entry.name


def test_invariants_are_basis_independent():
    rng = random.Random(3)
    for entry in base_pool():
        iso = entry.isometry
        if iso.lattice.rank > 10:
            continue
        inv = compute_invariants(iso)
        conj = conjugate_isometry(iso, random_unimodular(rng, iso.lattice.rank))
        inv2 = compute_invariants(conj)
        assert (inv.m, inv.a, inv.disc_s) == (inv2.m, inv2.a, inv2.disc_s), entry.name


def test_extended_pool_reaches_count():
    pool = extended_pool(seed=1, count=30)
    assert len(pool) >= 30
