"""Prime order isometries of even lattices and their numeric invariants.

For an isometry phi of prime order p, the invariant lattice T is the kernel
of (phi - 1), the coinvariant lattice S is its orthogonal complement (equal
to the kernel of the p-th cyclotomic polynomial evaluated at phi), and the
pair (m, a) records rank(S) = (p-1) m together with the index
[L : T + S] = p^a of the glued decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .cyclotomic import is_prime
from .lattices import (
    Lattice,
    Sublattice,
    lattice_from_rational_gram,
    orthogonal_complement,
)
from .matrix import (
    Matrix,
    column_hermite_basis,
    exact_det,
    hstack,
    identity,
    integer_kernel,
    smith_normal_form,
)


@dataclass(frozen=True)
class LatticeIsometry:
    """An isometry of prime order p, validated on construction."""

    lattice: Lattice
    matrix: Matrix
    order: int

    def __post_init__(self):
        phi, g = self.matrix, self.lattice.gram
        n = self.lattice.rank
        if phi.shape != (n, n):
            raise ValueError("isometry matrix size does not match the lattice rank")
        if not phi.is_integral:
            raise ValueError("isometry matrix must be integral")
        if not is_prime(self.order):
            raise ValueError("order must be prime, matrix != identity")
        if phi.transpose() @ g @ phi != g:
            raise ValueError("matrix is not an isometry: it does not preserve the Gram matrix")
        if phi == identity(n):
            raise ValueError("order must be prime, matrix != identity")
        if phi ** self.order != identity(n):
            raise ValueError(f"matrix does not have order {self.order}")


@dataclass(frozen=True)
class IsometryInvariants:
    invariant: Sublattice
    coinvariant: Sublattice
    m: int
    a: int
    disc_s: int
    index: int


def invariant_lattice(iso: LatticeIsometry) -> Sublattice:
    """Saturated kernel of (phi - 1); the form restricts nondegenerately."""
    n = iso.lattice.rank
    basis = integer_kernel(iso.matrix - identity(n))
    sub = Sublattice(iso.lattice, basis)
    if sub.rank and exact_det(sub.induced_gram) == 0:
        raise ValueError("form degenerates on the invariant lattice; input is not an isometry")
    return sub


def coinvariant_lattice(iso: LatticeIsometry) -> Sublattice:
    """Orthogonal complement of the invariant lattice.

    Cross validated against the saturated kernel of Phi_p(phi); a mismatch
    means the input violates the prime order isometry contract.
    """
    t = invariant_lattice(iso)
    s = orthogonal_complement(t)
    n = iso.lattice.rank
    phi_p = identity(n)
    power = identity(n)
    for _ in range(iso.order - 1):
        power = power @ iso.matrix
        phi_p = phi_p + power
    s_poly = integer_kernel(phi_p)
    if s.basis != s_poly:
        raise AssertionError(
            "coinvariant mismatch: orthogonal complement differs from ker Phi_p(phi)"
        )
    if s.rank % (iso.order - 1):
        raise AssertionError("coinvariant rank is not divisible by p - 1")
    return s


def compute_invariants(iso: LatticeIsometry) -> IsometryInvariants:
    """Compute (T, S, m, a, disc S) for a prime order isometry.

    The index [L : T + S] is the absolute determinant of the stacked basis;
    it must be a power p^a, and the quotient must be p-elementary, which is
    verified through the Smith form of the stacked basis.
    """
    p = iso.order
    t = invariant_lattice(iso)
    s = coinvariant_lattice(iso)
    n = iso.lattice.rank
    if t.rank + s.rank != n:
        raise AssertionError("rank(T) + rank(S) != rank(L)")
    m = s.rank // (p - 1)
    combined = hstack(t.basis, s.basis)
    index = abs(exact_det(combined))
    a = 0
    x = index
    while x % p == 0:
        x //= p
        a += 1
    if x != 1:
        raise ValueError(f"index [L : T + S] = {index} is not a power of p = {p}")
    _, d, _ = smith_normal_form(combined)
    factors = [d.data[i][i] for i in range(n)]
    if any(f not in (1, p) for f in factors):
        raise ValueError("quotient L/(T + S) is not p-elementary")
    disc_s = abs(exact_det(s.induced_gram))
    return IsometryInvariants(t, s, m, a, disc_s, index)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def check_square_theorem(inv: IsometryInvariants, p: int) -> bool:
    """Whether p^m * disc(S) is a perfect square; defined for odd primes only."""
    if p == 2:
        raise ValueError("the square criterion requires prime order p != 2")
    return is_perfect_square(p ** inv.m * inv.disc_s)


def check_unimodular_corollary(inv: IsometryInvariants, p: int, lattice: Lattice) -> bool:
    """On a unimodular ambient lattice: disc(S) = p^a and a = m mod 2."""
    if p == 2:
        raise ValueError("the corollary requires prime order p != 2")
    if not lattice.is_unimodular:
        raise ValueError("ambient lattice is not unimodular")
    return inv.disc_s == p ** inv.a and (inv.a - inv.m) % 2 == 0


def overlattice_with_basis(pieces: Lattice, glue_vectors) -> tuple[Lattice, Matrix]:
    """Even integral overlattice generated by ``pieces`` and rational glue vectors.

    Returns the overlattice together with its basis expressed in the
    coordinates of ``pieces`` (a rational matrix with unit-free denominator).
    """
    n = pieces.rank
    if not glue_vectors:
        return pieces, identity(n)
    cols = [tuple(Fraction(x) for x in v) for v in glue_vectors]
    if any(len(v) != n for v in cols):
        raise ValueError("glue vector length does not match the lattice rank")
    den = 1
    for v in cols:
        for x in v:
            den = lcm(den, x.denominator)
    scaled_cols = [[int(x * den) for x in v] for v in cols]
    gen = [[den * int(i == j) for j in range(n)] for i in range(n)]
    for v in scaled_cols:
        for i in range(n):
            gen[i].append(v[i])
    basis_scaled = column_hermite_basis(Matrix(gen, cols=n + len(cols)))
    if basis_scaled.cols != n:
        raise AssertionError("overlattice basis has wrong rank")
    basis = basis_scaled.map(lambda x: Fraction(x, den))
    gram = basis.transpose() @ pieces.gram @ basis
    try:
        lattice = lattice_from_rational_gram(gram)
    except ValueError as exc:
        raise ValueError(f"glue vectors do not define an even integral overlattice: {exc}")
    return lattice, basis


def overlattice_by_glue(pieces: Lattice, glue_vectors, name: str | None = None) -> Lattice:
    lattice, _ = overlattice_with_basis(pieces, glue_vectors)
    if name is not None:
        lattice = Lattice(lattice.gram, name)
    return lattice


def transport_isometry(basis: Matrix, phi: Matrix) -> Matrix:
    """Rewrite an isometry in overlattice coordinates: basis^-1 phi basis.

    Raises if the isometry does not preserve the overlattice.
    """
    from .matrix import exact_inverse

    moved = exact_inverse(basis) @ phi @ basis
    if not moved.is_integral:
        raise ValueError("isometry does not preserve the overlattice")
    return moved


def conjugate_isometry(iso: LatticeIsometry, p_matrix: Matrix) -> LatticeIsometry:
    """Change of basis x = P x': the Gram becomes P^T G P, phi becomes P^-1 phi P."""
    from .matrix import exact_inverse, is_unimodular

    if not is_unimodular(p_matrix):
        raise ValueError("basis change must be unimodular")
    new_gram = p_matrix.transpose() @ iso.lattice.gram @ p_matrix
    new_phi = exact_inverse(p_matrix) @ iso.matrix @ p_matrix
    return LatticeIsometry(Lattice(new_gram, iso.lattice.name), new_phi, iso.order)
