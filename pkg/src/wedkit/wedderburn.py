"""Constructive splitting of the projection A -> A/rad(A).

``lift_section`` starts from the canonical linear section (unit vectors
on the pivot-free coordinates of the radical) and repairs it one radical
layer at a time: at stage m the multiplication defect

    gamma(x, y) = sigma(x y) - sigma(x) sigma(y)

lies in R^m, and a correction rho with values in R^m is found by solving
the linear system

    gamma(x, y) = rho(x y) - sigma(x) rho(y) - rho(x) sigma(y)   mod R^(m+1)

after which sigma - rho is multiplicative modulo R^(m+1).  Because all
linear solves are canonical (free variables pinned to zero) the whole
pipeline is deterministic.

The same layer-by-layer scheme conjugates two sections into each other
(``conjugate_sections``) and moves a section until it fixes a prescribed
semisimple subalgebra pointwise (``lift_section_fixing``).

The defect systems are solvable whenever the semisimple quotient is a
product of matrix algebras over Q; inputs whose quotient has an unsplit
block are rejected up front rather than mishandled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, Subspace
from .errors import InputError, InternalError, NotSemisimple, UnsplitQuotient
from .linalg import Matrix, Vector, ZERO, ONE, solve, vector


@dataclass(frozen=True)
class Section:
    """A multiplicative section of the projection onto A/rad(A).

    ``matrix`` has one column per quotient basis element, holding its
    representative in A.  Invariants (checked by :meth:`verify`):
    projection o matrix = identity, matrix is multiplicative on all
    basis pairs, and the quotient unit maps to the unit of A.
    """

    algebra: Algebra
    quotient: Algebra
    projection: Matrix
    matrix: Matrix

    def image(self, x) -> Vector:
        return self.matrix.apply(x)

    def image_subspace(self) -> Subspace:
        cols = [self.matrix.col(j) for j in range(self.matrix.cols)]
        return Subspace(self.algebra.dim, cols)

    def verify(self) -> None:
        a, q = self.algebra, self.quotient
        if self.projection * self.matrix != Matrix.identity(q.dim):
            raise InternalError("section is not a right inverse of the projection")
        cols = [self.matrix.col(j) for j in range(q.dim)]
        for i in range(q.dim):
            for j in range(q.dim):
                lifted = self.matrix.apply(q.table[i][j])
                if a.mult(cols[i], cols[j]) != lifted:
                    raise InternalError(
                        f"section not multiplicative on basis pair ({i},{j})"
                    )
        if self.matrix.apply(q.unit) != a.unit:
            raise InternalError("section does not send the unit to the unit")

    def is_valid(self) -> bool:
        try:
            self.verify()
        except InternalError:
            return False
        return True

    def to_json(self) -> dict:
        return {
            "section": self.matrix.to_json(),
            "verification": {"projection": True, "multiplicative": True},
        }


def _quotient_is_split(quotient: Algebra) -> bool:
    report = quotient.semisimple_decompose()
    return all(b.matrix_size is not None and b.center_dim == 1 for b in report.blocks)


def _radical_filtration(a: Algebra) -> list[Subspace]:
    """R, R^2, ..., ending with the zero subspace."""
    return a.ideal_powers(a.radical())


def _identity_section(a: Algebra) -> Section:
    q, proj = a.quotient(Subspace(a.dim))
    return Section(a, q, proj, Matrix.identity(a.dim))


def lift_section(a: Algebra) -> Section:
    """Multiplicative section of A -> A/rad(A), computed layer by layer.

    Requires every block of the semisimple quotient to split as a matrix
    algebra over Q (true for path algebra quotients and triangular
    algebras); raises :class:`UnsplitQuotient` otherwise.
    """
    rad = a.radical()
    if rad.is_zero():
        return _identity_section(a)
    quotient, proj = a.quotient(rad)
    if not _quotient_is_split(quotient):
        raise UnsplitQuotient(
            "semisimple quotient has a block not split as M_n(Q); "
            "section lifting requires a split quotient"
        )
    powers = _radical_filtration(a)  # powers[m-1] = R^m, last entry zero
    free = rad.free_positions()
    s = quotient.dim
    d = a.dim

    # canonical linear section: unit vectors at the pivot-free coordinates
    sigma_cols: list[Vector] = [a.basis_vector(f) for f in free]

    for m in range(1, len(powers)):
        r_m = powers[m - 1]
        r_m1 = powers[m]
        gamma: dict[tuple[int, int], Vector] = {}
        all_zero = True
        for i in range(s):
            for j in range(s):
                lifted = _apply_cols(sigma_cols, quotient.table[i][j], d)
                g = tuple(
                    x - y
                    for x, y in zip(lifted, a.mult(sigma_cols[i], sigma_cols[j]))
                )
                if any(c != 0 for c in g):
                    all_zero = False
                    if not r_m.contains(g):
                        raise InternalError(
                            f"multiplication defect escaped radical layer {m}"
                        )
                gamma[(i, j)] = g
        if all_zero:
            break  # already multiplicative, exactly
        rho = _solve_two_cocycle(a, quotient, sigma_cols, gamma, r_m, r_m1)
        sigma_cols = [
            tuple(x - y for x, y in zip(col, corr)) for col, corr in zip(sigma_cols, rho)
        ]

    section = Section(
        a,
        quotient,
        proj,
        Matrix(d, s, [sigma_cols[j][i] for i in range(d) for j in range(s)]),
    )
    section.verify()
    return section


def _apply_cols(cols: list[Vector], coeffs, d: int) -> Vector:
    out = [ZERO] * d
    for c, col in zip(coeffs, cols):
        if c:
            for i in range(d):
                if col[i]:
                    out[i] += c * col[i]
    return tuple(out)


def _solve_two_cocycle(
    a: Algebra,
    quotient: Algebra,
    sigma_cols: list[Vector],
    gamma: dict[tuple[int, int], Vector],
    r_m: Subspace,
    r_m1: Subspace,
) -> list[Vector]:
    """Solve gamma(i,j) = rho(e_i e_j) - sigma_i rho_j - rho_i sigma_j mod R^(m+1).

    Unknowns are the coordinates of each rho_j on the basis of R^m; the
    equations live in the canonical complement coordinates of R^(m+1).
    """
    s = quotient.dim
    d = a.dim
    w = list(r_m.basis)
    t = len(w)
    free_m1 = r_m1.free_positions()
    qdim = len(free_m1)

    def mod_coords(vec) -> list[Fraction]:
        reduced = r_m1.reduce(vec)
        return [reduced[p] for p in free_m1]

    left_mats = [a.left_regular(sigma_cols[i]) for i in range(s)]
    right_mats = [a.right_regular(sigma_cols[j]) for j in range(s)]
    # precompute the action of each unknown basis vector
    left_images = [[m.apply(wv) for wv in w] for m in left_mats]
    right_images = [[m.apply(wv) for wv in w] for m in right_mats]

    nunk = s * t
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(s):
        for j in range(s):
            cvec = quotient.table[i][j]
            # assemble the coefficient of unknown (k, alpha) in this equation
            block_cols: list[list[Fraction]] = []
            for k in range(s):
                for alpha in range(t):
                    contrib = [ZERO] * d
                    ck = cvec[k]
                    if ck:
                        for idx in range(d):
                            if w[alpha][idx]:
                                contrib[idx] += ck * w[alpha][idx]
                    if k == j:
                        img = left_images[i][alpha]
                        for idx in range(d):
                            if img[idx]:
                                contrib[idx] -= img[idx]
                    if k == i:
                        img = right_images[j][alpha]
                        for idx in range(d):
                            if img[idx]:
                                contrib[idx] -= img[idx]
                    block_cols.append(mod_coords(contrib))
            g = mod_coords(gamma[(i, j)])
            for row_idx in range(qdim):
                rows.append([block_cols[u][row_idx] for u in range(nunk)])
                rhs.append(g[row_idx])
    system = Matrix(len(rows), nunk, [e for row in rows for e in row])
    y = solve(system, rhs)
    if y is None:
        raise InternalError("inconsistent two-cocycle system for a split quotient")
    rho: list[Vector] = []
    for j in range(s):
        acc = [ZERO] * d
        for alpha in range(t):
            c = y[j * t + alpha]
            if c:
                for idx in range(d):
                    if w[alpha][idx]:
                        acc[idx] += c * w[alpha][idx]
        rho.append(tuple(acc))
    return rho


def _solve_one_cocycle(
    a: Algebra,
    targets: list[Vector],
    delta: list[Vector],
    r_m: Subspace,
    r_m1: Subspace,
) -> Vector:
    """Solve delta_l = n * targets_l - targets_l * n mod R^(m+1) for n in R^m."""
    d = a.dim
    w = list(r_m.basis)
    t = len(w)
    free_m1 = r_m1.free_positions()

    def mod_coords(vec) -> list[Fraction]:
        reduced = r_m1.reduce(vec)
        return [reduced[p] for p in free_m1]

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for l, target in enumerate(targets):
        cols = []
        for alpha in range(t):
            commutator = tuple(
                x - y
                for x, y in zip(a.mult(w[alpha], target), a.mult(target, w[alpha]))
            )
            cols.append(mod_coords(commutator))
        g = mod_coords(delta[l])
        for row_idx in range(len(free_m1)):
            rows.append([cols[alpha][row_idx] for alpha in range(t)])
            rhs.append(g[row_idx])
    system = Matrix(len(rows), t, [e for row in rows for e in row])
    y = solve(system, rhs)
    if y is None:
        raise InternalError("inconsistent one-cocycle system for a separable source")
    acc = [ZERO] * d
    for alpha in range(t):
        if y[alpha]:
            for idx in range(d):
                if w[alpha][idx]:
                    acc[idx] += y[alpha] * w[alpha][idx]
    return tuple(acc)


def unipotent_inverse(a: Algebra, u) -> Vector:
    """Exact inverse of u = 1 + n with n nilpotent."""
    return _unipotent_inverse(a, vector(u))


def _unipotent_inverse(a: Algebra, u: Vector) -> Vector:
    """Inverse of u = 1 + n, n nilpotent: 1 - n + n^2 - ..."""
    n = tuple(x - y for x, y in zip(u, a.unit))
    acc = list(a.unit)
    term = n
    sign = -1
    steps = 0
    while any(c != 0 for c in term):
        for i in range(a.dim):
            if term[i]:
                acc[i] += sign * term[i]
        term = a.mult(term, n)
        sign = -sign
        steps += 1
        if steps > a.dim + 1:
            raise InputError("element is not unipotent")
    return tuple(acc)


def conjugate_sections(a: Algebra, s1: Section, s2: Section) -> Vector:
    """Find u in 1 + rad(A) with s2(x) = u s1(x) u^{-1} for every x.

    Both inputs must be valid sections of ``a``; the conjugator is found
    layer by layer through the radical filtration and the identity is
    verified exactly before returning.
    """
    for sec in (s1, s2):
        if sec.algebra is not a and sec.algebra.table != a.table:
            raise InputError("sections do not belong to the given algebra")
        try:
            sec.verify()
        except InternalError as exc:
            raise InputError(f"invalid section: {exc}") from exc
    rad = a.radical()
    if rad.is_zero():
        return a.unit
    powers = _radical_filtration(a)
    s = s1.quotient.dim
    targets = [s1.matrix.col(j) for j in range(s)]
    current = [s2.matrix.col(j) for j in range(s)]
    u = a.unit
    for m in range(1, len(powers)):
        r_m = powers[m - 1]
        r_m1 = powers[m]
        delta = [tuple(x - y for x, y in zip(c, t)) for c, t in zip(current, targets)]
        if all(all(c == 0 for c in dv) for dv in delta):
            break
        for dv in delta:
            if not r_m.contains(dv):
                raise InternalError(f"section difference escaped radical layer {m}")
        n = _solve_one_cocycle(a, targets, delta, r_m, r_m1)
        one_plus = tuple(x + y for x, y in zip(a.unit, n))
        inv = _unipotent_inverse(a, one_plus)
        current = [a.mult(inv, a.mult(c, one_plus)) for c in current]
        u = a.mult(u, one_plus)
    # exact verification of the conjugation identity
    if current != targets:
        raise InternalError("conjugation iteration did not converge")
    u_inv = _unipotent_inverse(a, u)
    for j in range(s):
        lhs = s2.matrix.col(j)
        rhs = a.mult(u, a.mult(s1.matrix.col(j), u_inv))
        if tuple(lhs) != rhs:
            raise InternalError("conjugation identity failed exact verification")
    if not rad.contains(tuple(x - y for x, y in zip(u, a.unit))):
        raise InternalError("conjugator is not unipotent")
    return u


def subalgebra_structure(a: Algebra, b: Subspace) -> Algebra:
    """Algebra structure induced on a unital subalgebra given by a subspace."""
    if not b.contains(a.unit):
        raise InputError("subalgebra must contain the unit")
    for x in b.basis:
        for y in b.basis:
            if not b.contains(a.mult(x, y)):
                raise InputError("subspace is not closed under multiplication")
    table = []
    for x in b.basis:
        row = []
        for y in b.basis:
            coords = b.coordinates(a.mult(x, y))
            row.append(coords)
        table.append(row)
    unit = b.coordinates(a.unit)
    return Algebra(b.dim, unit, table)


def lift_section_fixing(a: Algebra, b: Subspace) -> Section:
    """Section whose image contains the semisimple subalgebra b pointwise.

    Starts from ``lift_section`` and conjugates it so that s(pi(x)) = x
    for every x in b.  Raises on a non-subalgebra or non-semisimple b.
    """
    b_alg = subalgebra_structure(a, b)
    if not b_alg.radical().is_zero():
        raise NotSemisimple("prescribed subalgebra has a nonzero radical")
    base = lift_section(a)
    rad = a.radical()
    if rad.is_zero():
        return base
    powers = _radical_filtration(a)
    # two homomorphisms from b into a: the inclusion, and s o pi
    inclusion = [vector(x) for x in b.basis]
    current = [base.matrix.apply(base.projection.apply(x)) for x in b.basis]
    u = a.unit
    for m in range(1, len(powers)):
        r_m = powers[m - 1]
        r_m1 = powers[m]
        delta = [
            tuple(x - y for x, y in zip(inc, cur))
            for inc, cur in zip(inclusion, current)
        ]
        if all(all(c == 0 for c in dv) for dv in delta):
            break
        for dv in delta:
            if not r_m.contains(dv):
                raise InternalError(f"homomorphism difference escaped layer {m}")
        n = _solve_one_cocycle(a, current, delta, r_m, r_m1)
        one_plus = tuple(x + y for x, y in zip(a.unit, n))
        inv = _unipotent_inverse(a, one_plus)
        current = [a.mult(one_plus, a.mult(c, inv)) for c in current]
        u = a.mult(one_plus, u)
    if current != inclusion:
        raise InternalError("fixing iteration did not converge")
    u_inv = _unipotent_inverse(a, u)
    d = a.dim
    s = base.quotient.dim
    cols = [a.mult(u, a.mult(base.matrix.col(j), u_inv)) for j in range(s)]
    fixed = Section(
        a,
        base.quotient,
        base.projection,
        Matrix(d, s, [cols[j][i] for i in range(d) for j in range(s)]),
    )
    fixed.verify()
    for x in b.basis:
        if fixed.matrix.apply(fixed.projection.apply(x)) != tuple(vector(x)):
            raise InternalError("returned section does not fix the subalgebra")
    return fixed
