"""Even integral lattices given by Gram matrices.

Provides the standard named lattices (U, E8(-1), A4(-1), H5, ...), direct
sums and rescalings, exact signatures, discriminant groups and forms, and
isomorphism testing of finite quadratic forms by pruned brute force on the
p-primary parts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import prod

from .matrix import (
    Matrix,
    block_diag,
    exact_det,
    exact_inverse,
    integer_kernel,
    saturate_columns,
    smith_normal_form,
)

FQF_ORDER_CAP = 10000


@dataclass(frozen=True)
class Lattice:
    """An even integral lattice with a nondegenerate symmetric Gram matrix."""

    gram: Matrix
    name: str | None = None

    def __post_init__(self):
        g = self.gram
        if not g.is_square:
            raise ValueError("Gram matrix must be square")
        if not g.is_integral:
            raise ValueError("Gram matrix must be integral")
        if not g.is_symmetric:
            raise ValueError("Gram matrix must be symmetric")
        if any(g.data[i][i] % 2 for i in range(g.rows)):
            raise ValueError("lattice is not even: odd diagonal entry in Gram matrix")
        if g.rows > 0 and exact_det(g) == 0:
            raise ValueError("Gram matrix is degenerate")

    @property
    def rank(self) -> int:
        return self.gram.rows

    @cached_property
    def det(self) -> int:
        return exact_det(self.gram)

    @property
    def disc(self) -> int:
        """Order of the discriminant group, |det(Gram)|."""
        return abs(self.det)

    @property
    def is_unimodular(self) -> bool:
        return self.disc == 1

    def pairing(self, x, y):
        return sum(
            xi * self.gram.data[i][j] * yj
            for i, xi in enumerate(x)
            for j, yj in enumerate(y)
            if xi and self.gram.data[i][j] and yj
        )

    def __repr__(self):
        label = self.name or f"rank {self.rank} lattice"
        return f"Lattice({label}, det={self.det})"


def lattice_from_rational_gram(gram: Matrix, name: str | None = None) -> Lattice:
    """Build a Lattice from a rational Gram matrix that must be integral and even."""
    if not gram.is_integral:
        raise ValueError("Gram matrix is not integral")
    return Lattice(gram, name)


_CARTAN_E8 = Matrix(
    [
        [2, 0, -1, 0, 0, 0, 0, 0],
        [0, 2, 0, -1, 0, 0, 0, 0],
        [-1, 0, 2, -1, 0, 0, 0, 0],
        [0, -1, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, 0, -1, 2],
    ]
)


def cartan_a(n: int) -> Matrix:
    """Cartan matrix of the root system A_n (positive definite, det n+1)."""
    return Matrix(
        [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    )


def hyperbolic_plane(scale: int = 1) -> Matrix:
    return Matrix([[0, scale], [scale, 0]])


_NAME_RE_U = re.compile(r"^U(?:\((-?\d+)\))?$")
_NAME_RE_RANK1 = re.compile(r"^<(-?\d+)>$")


def make_standard(name: str) -> Lattice:
    """Build a named standard lattice.

    Accepted names: "U", "U(k)", "E8(-1)", "A4(-1)", "A4(-5)", "A4*(-5)",
    "H5", and "<k>" for even nonzero k.
    """
    name = name.strip()
    m = _NAME_RE_U.match(name)
    if m:
        k = int(m.group(1)) if m.group(1) else 1
        if k == 0:
            raise ValueError("U(0) is degenerate")
        return Lattice(hyperbolic_plane(k), name)
    m = _NAME_RE_RANK1.match(name)
    if m:
        k = int(m.group(1))
        if k == 0 or k % 2:
            raise ValueError(f"rank one lattice <{k}> must have even nonzero square")
        return Lattice(Matrix([[k]]), name)
    if name == "E8(-1)":
        return Lattice(-_CARTAN_E8, name)
    if name == "A4(-1)":
        return Lattice(-cartan_a(4), name)
    if name == "A4(-5)":
        return Lattice(cartan_a(4).scale(-5), name)
    if name == "A4*(-5)":
        dual = exact_inverse(cartan_a(4)).scale(-5)
        return lattice_from_rational_gram(dual, name)
    if name == "H5":
        return Lattice(Matrix([[2, 1], [1, -2]]), name)
    raise ValueError(f"unknown standard lattice name: {name!r}")


def direct_sum(*lattices: Lattice, name: str | None = None) -> Lattice:
    if not lattices:
        return Lattice(Matrix([]), name)
    if name is None:
        parts = [lat.name for lat in lattices]
        if all(parts):
            name = " + ".join(parts)
    return Lattice(block_diag(*(lat.gram for lat in lattices)), name)


def rescale(lat: Lattice, k: int, name: str | None = None) -> Lattice:
    if k == 0:
        raise ValueError("rescaling factor must be nonzero")
    return lattice_from_rational_gram(lat.gram.scale(k), name)


def dual_rescaled(lat: Lattice, k: int, name: str | None = None) -> Lattice:
    """The dual lattice with its form multiplied by k; must come out integral and even."""
    if k == 0:
        raise ValueError("rescaling factor must be nonzero")
    return lattice_from_rational_gram(exact_inverse(lat.gram).scale(k), name)


def signature(lat: Lattice) -> tuple[int, int]:
    """Exact inertia (n_plus, n_minus), via symmetric block diagonalization.

    Uses 1x1 pivots when a nonzero diagonal entry is available and hyperbolic
    2x2 blocks otherwise; all arithmetic is rational.
    """
    n = lat.rank
    a = [[Fraction(x) for x in row] for row in lat.gram.data]
    active = list(range(n))
    plus = minus = 0
    while active:
        d = next((i for i in active if a[i][i] != 0), None)
        if d is not None:
            if a[d][d] > 0:
                plus += 1
            else:
                minus += 1
            inv = 1 / a[d][d]
            active.remove(d)
            coeff = {k: a[k][d] * inv for k in active if a[k][d]}
            for k, f in coeff.items():
                for l in active:
                    if a[d][l]:
                        a[k][l] -= f * a[d][l]
            continue
        pair = None
        for idx, i in enumerate(active):
            for j in active[idx + 1 :]:
                if a[i][j] != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        plus += 1
        minus += 1
        active.remove(i)
        active.remove(j)
        rows_i = {k: a[k][i] for k in active if a[k][i]}
        rows_j = {k: a[k][j] for k in active if a[k][j]}
        for k in active:
            ki = rows_i.get(k, 0)
            kj = rows_j.get(k, 0)
            if ki or kj:
                for l in active:
                    il = a[i][l]
                    jl = a[j][l]
                    if il or jl:
                        a[k][l] -= (ki * jl + kj * il) / b
    return (plus, minus)


@dataclass(frozen=True)
class DiscriminantGroup:
    """Invariant factor decomposition of dual/lattice, with explicit generators.

    Generators are vectors in L tensor Q (lattice coordinates); generator i
    has the stated order in the quotient.
    """

    orders: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return prod(self.orders) if self.orders else 1

    @property
    def is_trivial(self) -> bool:
        return not self.orders


def discriminant_group(lat: Lattice) -> DiscriminantGroup:
    """Invariant factors and dual-vector generators of the discriminant group.

    With U G V = D in Smith form, the class of column j of V divided by d_j
    generates a cyclic factor of order d_j.
    """
    _, d, v = smith_normal_form(lat.gram)
    orders = []
    gens = []
    for j in range(lat.rank):
        dj = d.data[j][j]
        if dj > 1:
            orders.append(dj)
            gens.append(tuple(Fraction(v.data[i][j], dj) for i in range(lat.rank)))
    return DiscriminantGroup(tuple(orders), tuple(gens))


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """A finite quadratic form presented by generators.

    q takes values in Q/2Z (stored in [0,2)), the associated bilinear form b
    in Q/Z (stored in [0,1)).  Generator orders are presentation data; they
    form the invariant factor chain when produced by discriminant_form but
    may be an arbitrary diagonal presentation for hand-built targets.
    """

    orders: tuple[int, ...]
    q_values: tuple[Fraction, ...]
    b_matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        k = len(self.orders)
        if len(self.q_values) != k or len(self.b_matrix) != k:
            raise ValueError("inconsistent generator data")
        if any(o < 2 for o in self.orders):
            raise ValueError("generator orders must be >= 2")
        for i in range(k):
            if len(self.b_matrix[i]) != k:
                raise ValueError("bilinear matrix is not square")
            if self.b_matrix[i][i] != self.q_values[i] % 1:
                raise ValueError("diagonal of b must equal q mod 1")
            for j in range(k):
                if self.b_matrix[i][j] != self.b_matrix[j][i]:
                    raise ValueError("bilinear matrix must be symmetric")

    @property
    def group_order(self) -> int:
        return prod(self.orders) if self.orders else 1

    @property
    def is_trivial(self) -> bool:
        return not self.orders


def fqf_from_generators(orders, q_values, b_matrix) -> FiniteQuadraticForm:
    k = len(orders)
    q = tuple(Fraction(x) % 2 for x in q_values)
    b = tuple(tuple(Fraction(b_matrix[i][j]) % 1 for j in range(k)) for i in range(k))
    return FiniteQuadraticForm(tuple(int(o) for o in orders), q, b)


def fqf_from_diagonal(pairs) -> FiniteQuadraticForm:
    """Orthogonal sum of cyclic forms Z/d(q) from a list of (d, q) pairs."""
    orders = [d for d, _ in pairs]
    qs = [Fraction(q) % 2 for _, q in pairs]
    k = len(orders)
    b = [[qs[i] % 1 if i == j else Fraction(0) for j in range(k)] for i in range(k)]
    return fqf_from_generators(orders, qs, b)


def fqf_direct_sum(a: FiniteQuadraticForm, b: FiniteQuadraticForm) -> FiniteQuadraticForm:
    ka, kb = len(a.orders), len(b.orders)
    orders = a.orders + b.orders
    qs = a.q_values + b.q_values
    bm = [[Fraction(0)] * (ka + kb) for _ in range(ka + kb)]
    for i in range(ka):
        for j in range(ka):
            bm[i][j] = a.b_matrix[i][j]
    for i in range(kb):
        for j in range(kb):
            bm[ka + i][ka + j] = b.b_matrix[i][j]
    return fqf_from_generators(orders, qs, bm)


def discriminant_form(lat: Lattice) -> FiniteQuadraticForm:
    """The discriminant quadratic form of an even lattice."""
    group = discriminant_group(lat)
    gens = group.generators
    k = len(gens)
    q = [lat.pairing(g, g) % 2 for g in gens]
    b = [[lat.pairing(gens[i], gens[j]) % 1 for j in range(k)] for i in range(k)]
    return fqf_from_generators(group.orders, q, b)


def is_p_elementary(lat: Lattice, p: int) -> tuple[bool, int | None]:
    """Whether D_L is (Z/p)^a; returns (flag, a) with a = 0 for unimodular."""
    orders = discriminant_group(lat).orders
    if all(o == p for o in orders):
        return True, len(orders)
    return False, None


@dataclass(frozen=True)
class Sublattice:
    """A sublattice given by basis columns in ambient coordinates."""

    ambient: Lattice
    basis: Matrix

    def __post_init__(self):
        if self.basis.rows != self.ambient.rank:
            raise ValueError("basis rows must match ambient rank")
        if not self.basis.is_integral:
            raise ValueError("sublattice basis must be integral")
        if integer_kernel(self.basis).cols != 0:
            raise ValueError("basis columns are dependent")

    @property
    def rank(self) -> int:
        return self.basis.cols

    @cached_property
    def induced_gram(self) -> Matrix:
        return self.basis.transpose() @ self.ambient.gram @ self.basis

    def induced_lattice(self, name: str | None = None) -> Lattice:
        return Lattice(self.induced_gram, name)


def sublattice(ambient: Lattice, basis: Matrix) -> Sublattice:
    return Sublattice(ambient, basis)


def saturate(sub: Sublattice) -> Sublattice:
    """Primitive closure: the largest sublattice with the same rational span."""
    return Sublattice(sub.ambient, saturate_columns(sub.basis))


def orthogonal_complement(sub: Sublattice) -> Sublattice:
    """All ambient vectors pairing to zero with the sublattice; always saturated."""
    pairings = sub.basis.transpose() @ sub.ambient.gram
    return Sublattice(sub.ambient, integer_kernel(pairings))


# ---------------------------------------------------------------------------
# finite quadratic form isomorphism


def _padic_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _prime_factors(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def group_signature(orders) -> dict[int, tuple[int, ...]]:
    """Multiset of prime power exponents per prime; classifies the abelian group."""
    sig: dict[int, list[int]] = {}
    for o in orders:
        for p in _prime_factors(o):
            sig.setdefault(p, []).append(_padic_valuation(o, p))
    return {p: tuple(sorted(v)) for p, v in sig.items()}


def p_primary_part(form: FiniteQuadraticForm, p: int) -> FiniteQuadraticForm:
    """Restriction of the form to the p-primary component of the group."""
    idx = [i for i, o in enumerate(form.orders) if o % p == 0]
    vals = [_padic_valuation(form.orders[i], p) for i in idx]
    cof = [form.orders[i] // p ** v for i, v in zip(idx, vals)]
    order_key = sorted(range(len(idx)), key=lambda t: (p ** vals[t], idx[t]))
    idx = [idx[t] for t in order_key]
    vals = [vals[t] for t in order_key]
    cof = [cof[t] for t in order_key]
    orders = [p ** v for v in vals]
    qs = [(cof[t] ** 2 * form.q_values[idx[t]]) % 2 for t in range(len(idx))]
    bm = [
        [(cof[s] * cof[t] * form.b_matrix[idx[s]][idx[t]]) % 1 for t in range(len(idx))]
        for s in range(len(idx))
    ]
    return fqf_from_generators(orders, qs, bm)


def _element_order(elem, orders, p):
    o = 1
    for a, d in zip(elem, orders):
        if a % d:
            g = d // _gcd_int(a % d, d)
            if g > o:
                o = g
    return o


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _q_of(elem, form: FiniteQuadraticForm) -> Fraction:
    total = Fraction(0)
    k = len(elem)
    for i in range(k):
        ai = elem[i]
        if ai:
            total += ai * ai * form.q_values[i]
            for j in range(i + 1, k):
                if elem[j]:
                    total += 2 * ai * elem[j] * form.b_matrix[i][j]
    return total % 2


def _b_of(x, y, form: FiniteQuadraticForm) -> Fraction:
    total = Fraction(0)
    for i, xi in enumerate(x):
        if xi:
            row = form.b_matrix[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    total += xi * yj * row[j]
    return total % 1


def _det_mod_p(rows, p) -> int:
    a = [[x % p for x in row] for row in rows]
    n = len(a)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] % p), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det = (det * a[k][k]) % p
        inv = pow(a[k][k], -1, p)
        for i in range(k + 1, n):
            if a[i][k]:
                f = (a[i][k] * inv) % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[k])]
    return det % p


def _p_forms_isomorphic(f1: FiniteQuadraticForm, f2: FiniteQuadraticForm, p: int) -> bool:
    k = len(f1.orders)
    if f1.orders != f2.orders:
        return False
    if k == 0:
        return True
    elements = list(product(*(range(o) for o in f2.orders)))
    by_order_q: dict[tuple[int, Fraction], list] = {}
    for e in elements:
        key = (_element_order(e, f2.orders, p), _q_of(e, f2))
        by_order_q.setdefault(key, []).append(e)

    targets_b = f1.b_matrix
    source_orders = f1.orders

    chosen: list = []

    def backtrack(i: int) -> bool:
        if i == k:
            return _det_mod_p([list(e) for e in zip(*chosen)], p) != 0
        key = (source_orders[i], f1.q_values[i])
        for cand in by_order_q.get(key, ()):
            ok = True
            for j in range(i):
                if _b_of(cand, chosen[j], f2) != targets_b[i][j] % 1:
                    ok = False
                    break
            if ok:
                chosen.append(cand)
                if backtrack(i + 1):
                    return True
                chosen.pop()
        return False

    return backtrack(0)


def fqf_isomorphic(f1: FiniteQuadraticForm, f2: FiniteQuadraticForm) -> bool:
    """Decide isomorphism of finite quadratic forms.

    Splits both forms into p-primary parts and searches generator images with
    pruning by element order and q value; a candidate assignment is accepted
    when the images generate (checked modulo p).
    """
    if max(f1.group_order, f2.group_order) > FQF_ORDER_CAP:
        raise ValueError(f"group order exceeds cap {FQF_ORDER_CAP}")
    if f1.group_order != f2.group_order:
        return False
    sig1, sig2 = group_signature(f1.orders), group_signature(f2.orders)
    if sig1 != sig2:
        return False
    for p in sig1:
        if not _p_forms_isomorphic(p_primary_part(f1, p), p_primary_part(f2, p), p):
            return False
    return True


# ---------------------------------------------------------------------------
# serialization


def lattice_to_dict(lat: Lattice) -> dict:
    d = {"gram": lat.gram.to_lists()}
    if lat.name:
        d["name"] = lat.name
    return d


def lattice_from_dict(d: dict) -> Lattice:
    if "gram" not in d:
        raise ValueError("lattice object needs a 'gram' field")
    gram = d["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise ValueError("'gram' must be a list of rows")
    return Lattice(Matrix(gram), d.get("name"))
