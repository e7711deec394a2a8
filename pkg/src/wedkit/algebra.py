"""Finite-dimensional associative unital algebras over Q.

An :class:`Algebra` is given by structure constants: ``table[i][j]`` holds
the coordinates of ``e_i * e_j`` in the chosen basis.  Associativity and
the unit laws are checked at construction time.

The base field is fixed to Q.  In characteristic zero the Jacobson
radical of a finite-dimensional algebra is the kernel of the trace form
``(x, y) -> tr(L_{xy})`` of the (faithful) left regular representation,
which is how :meth:`Algebra.radical` computes it.  Over Q every
semisimple algebra is separable, so the Wedderburn predicate reduces to
data reporting; see :meth:`Algebra.is_wedderburn`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    InputError,
    InternalError,
    NotAnIdeal,
    NotNilpotent,
    NotSemisimple,
)
from .linalg import (
    Matrix,
    Vector,
    ZERO,
    ONE,
    format_rational,
    kernel_basis,
    rational,
    rref,
    vector,
)


class Subspace:
    """Subspace of Q^n with a canonical reduced-echelon basis.

    Two equal subspaces always carry the identical representation, so
    ``==`` is meaningful and cheap.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence] = ()):
        basis = rref(vectors) if vectors else []
        for v in basis:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector length does not match ambient dimension")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(basis))
        pivots = []
        for v in basis:
            for j, e in enumerate(v):
                if e:
                    pivots.append(j)
                    break
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def reduce(self, vec: Sequence) -> Vector:
        """Subtract the basis to zero out all pivot coordinates.

        The remainder is the canonical representative of ``vec`` modulo
        this subspace, supported on the pivot-free coordinates.
        """
        v = [rational(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        for b, p in zip(self.basis, self._pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if b[j]:
                        v[j] -= c * b[j]
        return tuple(v)

    def contains(self, vec: Sequence) -> bool:
        return all(e == 0 for e in self.reduce(vec))

    def coordinates(self, vec: Sequence) -> Vector | None:
        """Coefficients of ``vec`` on the echelon basis, or None if outside."""
        v = [rational(x) for x in vec]
        coords = []
        for b, p in zip(self.basis, self._pivots):
            c = v[p]
            coords.append(c)
            if c:
                for j in range(p, self.ambient_dim):
                    if b[j]:
                        v[j] -= c * b[j]
        if any(e != 0 for e in v):
            return None
        return tuple(coords)

    def free_positions(self) -> list[int]:
        """Coordinates not used as pivots; they span a canonical complement."""
        pivot_set = set(self._pivots)
        return [j for j in range(self.ambient_dim) if j not in pivot_set]

    def add(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class Block:
    """One simple two-sided summand of a semisimple algebra.

    ``matrix_size`` is n when the block was split as M_n over its center
    field, None when the deterministic idempotent search failed.
    """

    dim: int
    center_dim: int
    matrix_size: int | None

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "center_dim": self.center_dim,
            "matrix_size": self.matrix_size if self.matrix_size is not None else "unsplit",
        }


@dataclass(frozen=True)
class SemisimpleReport:
    blocks: tuple[Block, ...]
    total_dim: int

    def to_json(self) -> dict:
        return {
            "total_dim": self.total_dim,
            "blocks": [b.to_json() for b in self.blocks],
        }


@dataclass(frozen=True)
class WedderburnReport:
    is_wedderburn: bool
    radical_dim: int
    radical_index: int
    quotient: SemisimpleReport

    def to_json(self) -> dict:
        return {
            "is_wedderburn": self.is_wedderburn,
            "radical_dim": self.radical_dim,
            "radical_index": self.radical_index,
            "quotient": self.quotient.to_json(),
        }


class Algebra:
    """Associative unital algebra over Q given by structure constants."""

    __slots__ = ("dim", "unit", "table", "_sparse", "_radical", "_center")

    def __init__(self, dim: int, unit: Sequence, table: Sequence, check: bool = True):
        if dim < 1:
            raise InputError("the zero algebra is rejected: a unit is required")
        unit_v = vector(unit)
        if len(unit_v) != dim:
            raise DimensionMismatch("unit vector length does not match dim")
        tab = tuple(tuple(vector(table[i][j]) for j in range(dim)) for i in range(dim))
        for i in range(dim):
            for j in range(dim):
                if len(tab[i][j]) != dim:
                    raise DimensionMismatch("structure constant vector of wrong length")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "unit", unit_v)
        object.__setattr__(self, "table", tab)
        sparse = tuple(
            tuple({k: c for k, c in enumerate(tab[i][j]) if c} for j in range(dim))
            for i in range(dim)
        )
        object.__setattr__(self, "_sparse", sparse)
        object.__setattr__(self, "_radical", None)
        object.__setattr__(self, "_center", None)
        if check:
            self._check_axioms()

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    # -- axioms --------------------------------------------------------

    def _check_axioms(self):
        d = self.dim
        for j in range(d):
            ej = tuple(ONE if k == j else ZERO for k in range(d))
            if self.mult(self.unit, ej) != ej or self.mult(ej, self.unit) != ej:
                raise InputError(f"unit law fails on basis element {j}")
        sparse = self._sparse
        for j in range(d):
            for k in range(d):
                right = sparse[j][k]  # e_j e_k
                for i in range(d):
                    left = sparse[i][j]  # e_i e_j
                    lhs: dict[int, Fraction] = {}
                    for l, c in left.items():
                        for m, cc in sparse[l][k].items():
                            lhs[m] = lhs.get(m, ZERO) + c * cc
                    rhs: dict[int, Fraction] = {}
                    for l, c in right.items():
                        for m, cc in sparse[i][l].items():
                            rhs[m] = rhs.get(m, ZERO) + c * cc
                    for m in set(lhs) | set(rhs):
                        if lhs.get(m, ZERO) != rhs.get(m, ZERO):
                            raise InputError(
                                f"associativity fails on basis triple ({i},{j},{k})"
                            )

    # -- multiplication -------------------------------------------------

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def mult(self, x: Sequence, y: Sequence) -> Vector:
        """Product of two coordinate vectors."""
        d = self.dim
        out = [ZERO] * d
        sparse = self._sparse
        xs = [(i, rational(c)) for i, c in enumerate(x) if c]
        ys = [(j, rational(c)) for j, c in enumerate(y) if c]
        for i, ci in xs:
            row = sparse[i]
            for j, cj in ys:
                cij = ci * cj
                for k, c in row[j].items():
                    out[k] += cij * c
        return tuple(out)

    def power(self, x: Sequence, k: int) -> Vector:
        if k < 1:
            raise InputError("algebra powers start at 1")
        acc = vector(x)
        for _ in range(k - 1):
            acc = self.mult(acc, x)
        return acc

    def left_regular(self, x: Sequence) -> Matrix:
        """Matrix of y -> x y on coordinates."""
        x = vector(x)
        if len(x) != self.dim:
            raise DimensionMismatch("element length does not match dim")
        cols = [self.mult(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix(
            self.dim, self.dim, [cols[j][i] for i in range(self.dim) for j in range(self.dim)]
        )

    def right_regular(self, x: Sequence) -> Matrix:
        x = vector(x)
        cols = [self.mult(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix(
            self.dim, self.dim, [cols[j][i] for i in range(self.dim) for j in range(self.dim)]
        )

    def is_nilpotent_element(self, x: Sequence) -> bool:
        acc = vector(x)
        for _ in range(self.dim):
            if all(e == 0 for e in acc):
                return True
            acc = self.mult(acc, x)
        return all(e == 0 for e in acc)

    # -- radical ---------------------------------------------------------

    def trace_form_matrix(self) -> Matrix:
        """Gram matrix G[i][j] = tr(L_{e_i e_j}) of the regular trace form."""
        d = self.dim
        tau = [sum((self.table[m][j][j] for j in range(d)), ZERO) for m in range(d)]
        entries = []
        for i in range(d):
            for j in range(d):
                g = ZERO
                for m, c in self._sparse[i][j].items():
                    if tau[m]:
                        g += c * tau[m]
                entries.append(g)
        return Matrix(d, d, entries)

    def radical(self) -> Subspace:
        """Jacobson radical as the kernel of the regular trace form.

        Valid over Q (characteristic zero, left regular representation
        faithful).  The result is a two-sided nilpotent ideal.
        """
        cached = self._radical
        if cached is not None:
            return cached
        result = Subspace(self.dim, kernel_basis(self.trace_form_matrix()))
        object.__setattr__(self, "_radical", result)
        return result

    def is_ideal(self, sub: Subspace, two_sided: bool = True) -> bool:
        for b in sub.basis:
            for j in range(self.dim):
                ej = self.basis_vector(j)
                if not sub.contains(self.mult(ej, b)):
                    return False
                if two_sided and not sub.contains(self.mult(b, ej)):
                    return False
        return True

    def subspace_product(self, u: Subspace, v: Subspace) -> Subspace:
        prods = [self.mult(x, y) for x in u.basis for y in v.basis]
        return Subspace(self.dim, prods)

    def ideal_powers(self, ideal: Subspace) -> list[Subspace]:
        """The chain I, I^2, ... down to zero (zero subspace included)."""
        powers = [ideal]
        while not powers[-1].is_zero():
            if len(powers) > self.dim + 1:
                raise NotNilpotent("subspace is not nilpotent")
            powers.append(self.subspace_product(powers[-1], ideal))
        return powers

    def nilpotency_index(self, ideal: Subspace) -> int:
        """Smallest r >= 1 with I^r = 0."""
        if not self.is_ideal(ideal):
            raise NotAnIdeal("nilpotency index is defined for ideals")
        return len(self.ideal_powers(ideal))

    # -- quotient ----------------------------------------------------------

    def quotient(self, ideal: Subspace) -> tuple["Algebra", Matrix]:
        """Quotient algebra on the canonical complement basis, with projection.

        The complement is spanned by the unit coordinate vectors at the
        pivot-free positions of the ideal's echelon basis; the returned
        matrix sends coordinates in this algebra to quotient coordinates.
        """
        if ideal.ambient_dim != self.dim:
            raise DimensionMismatch("ideal lives in the wrong space")
        if not self.is_ideal(ideal):
            raise NotAnIdeal("quotient requires a two-sided ideal")
        free = ideal.free_positions()
        qdim = len(free)
        if qdim == 0:
            raise InputError("quotient by the whole algebra is the zero algebra")

        def project(vec: Sequence) -> Vector:
            reduced = ideal.reduce(vec)
            return tuple(reduced[p] for p in free)

        unit_q = project(self.unit)
        table = [
            [
                project(self.mult(self.basis_vector(free[i]), self.basis_vector(free[j])))
                for j in range(qdim)
            ]
            for i in range(qdim)
        ]
        quotient_alg = Algebra(qdim, unit_q, table)
        proj_cols = [project(self.basis_vector(j)) for j in range(self.dim)]
        proj = Matrix(
            qdim, self.dim, [proj_cols[j][i] for i in range(qdim) for j in range(self.dim)]
        )
        return quotient_alg, proj

    # -- center and semisimple structure ------------------------------------

    def center(self) -> Subspace:
        cached = self._center
        if cached is not None:
            return cached
        d = self.dim
        rows = []
        for i in range(d):
            li = self.left_regular(self.basis_vector(i))
            ri = self.right_regular(self.basis_vector(i))
            diff = li - ri
            rows.extend(diff.row_list())
        result = Subspace(d, kernel_basis(Matrix(d * d, d, [e for r in rows for e in r])))
        object.__setattr__(self, "_center", result)
        return result

    def _minimal_polynomial(self, x: Vector, unit: Vector) -> list[Fraction]:
        """Monic minimal polynomial of x in the corner algebra with the given unit.

        Returned as an ascending coefficient list [c_0, ..., c_{k-1}, 1].
        """
        from .linalg import solve as lin_solve

        powers = [unit]
        while True:
            k = len(powers)
            nxt = self.mult(powers[-1], x)
            m = Matrix(
                self.dim, k, [powers[j][i] for i in range(self.dim) for j in range(k)]
            )
            coeffs = lin_solve(m, nxt)
            if coeffs is not None:
                return [-c for c in coeffs] + [ONE]
            if k > self.dim:
                raise InternalError("minimal polynomial search did not terminate")
            powers.append(nxt)

    @staticmethod
    def _factor_poly(coeffs: list[Fraction]) -> list[tuple[list[Fraction], int]]:
        """Factor a monic polynomial over Q via sympy; [(factor coeffs, mult)]."""
        import sympy

        t = sympy.Symbol("t")
        poly = sum(
            sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(coeffs)
        )
        _, factors = sympy.Poly(poly, t, domain="QQ").factor_list()
        out = []
        for fac, mult in factors:
            fc = fac.all_coeffs()[::-1]  # ascending
            lead = fc[-1]
            frac = [Fraction(int((c / lead).p), int((c / lead).q)) for c in fc]
            out.append((frac, int(mult)))
        return out

    def _poly_eval(self, coeffs: Sequence[Fraction], x: Vector, unit: Vector) -> Vector:
        """Evaluate a polynomial at x, using ``unit`` for the constant term."""
        acc = tuple(ZERO for _ in range(self.dim))
        power = unit
        for c in coeffs:
            if c:
                acc = tuple(a + c * p for a, p in zip(acc, power))
            power = self.mult(power, x)
        return acc

    def _split_by_element(self, e: Vector, x: Vector) -> list[Vector]:
        """Orthogonal idempotents refining e along the factorization of x's
        minimal polynomial in the corner eAe."""
        mu = self._minimal_polynomial(x, e)
        factors = self._factor_poly(mu)
        if len(factors) == 1 and factors[0][1] == 1:
            return [e]
        idems = []
        for fac, mult in factors:
            # cofactor h = mu / fac^mult, then invert h modulo fac^mult
            h = _poly_div(mu, _poly_pow(fac, mult))
            u = _poly_invmod(h, _poly_pow(fac, mult))
            idem = self._poly_eval(_poly_mul(u, h), x, e)
            if any(c != 0 for c in idem):
                idems.append(idem)
        return idems

    def central_idempotents(self) -> list[Vector]:
        """Primitive central idempotents, assuming zero radical.

        Refines the unit along the minimal polynomials of central basis
        elements until every corner of the center is a field; sweeps
        repeat until stable, which is guaranteed to terminate.
        """
        if not self.radical().is_zero():
            raise NotSemisimple("central idempotent decomposition needs zero radical")
        center = self.center()
        idems: list[Vector] = [self.unit]
        changed = True
        while changed:
            changed = False
            for z in center.basis:
                refined: list[Vector] = []
                for e in idems:
                    x = self.mult(e, z)
                    parts = self._split_by_element(e, x)
                    if len(parts) > 1:
                        changed = True
                    refined.extend(parts)
                idems = refined
        idems.sort()
        return idems

    def semisimple_decompose(self) -> SemisimpleReport:
        """Simple two-sided blocks via primitive central idempotents.

        Per block the center dimension is reported, plus the matrix size n
        when the deterministic rank-one idempotent search certifies the
        block as M_n over its center field; otherwise "unsplit".
        """
        idems = self.central_idempotents()
        center = self.center()
        blocks = []
        for e in idems:
            block_vecs = [self.mult(e, self.basis_vector(i)) for i in range(self.dim)]
            block = Subspace(self.dim, block_vecs)
            center_vecs = [self.mult(e, z) for z in center.basis]
            cdim = Subspace(self.dim, center_vecs).dim
            msize = self._split_block(e, block, cdim)
            blocks.append(Block(block.dim, cdim, msize))
        blocks.sort(key=lambda b: (b.dim, b.center_dim))
        report = SemisimpleReport(tuple(blocks), self.dim)
        if sum(b.dim for b in blocks) != self.dim:
            raise InternalError("block dimensions do not sum to the algebra dimension")
        return report

    def _split_block(self, e: Vector, block: Subspace, center_dim: int) -> int | None:
        """Deterministic sweep for a rank-one idempotent inside one block.

        Candidates are the block basis vectors and their pairwise sums;
        idempotents come from factoring minimal polynomials.  The minimal
        rank r found splits the block as M_n iff r^2 = dim * center_dim.
        """
        candidates = list(block.basis)
        nb = len(block.basis)
        for i in range(nb):
            for j in range(i + 1, nb):
                candidates.append(
                    tuple(a + b for a, b in zip(block.basis[i], block.basis[j]))
                )
        best: int | None = None
        target = block.dim * center_dim
        for x in candidates:
            for idem in self._split_by_element(e, x):
                r = Subspace(
                    self.dim, [self.mult(idem, self.basis_vector(k)) for k in range(self.dim)]
                ).dim
                if best is None or r < best:
                    best = r
                if best * best == target:
                    break
            if best is not None and best * best == target:
                break
        if best is not None and best * best == target and block.dim % best == 0:
            return block.dim // best
        return None

    def is_wedderburn(self) -> WedderburnReport:
        """Radical nilpotency index plus the block data of the quotient.

        Over Q the quotient by the radical is automatically separable, so
        the verdict is always True; the report carries the data.
        """
        rad = self.radical()
        index = len(self.ideal_powers(rad)) if not rad.is_zero() else 1
        if rad.is_zero():
            quotient_report = self.semisimple_decompose()
        else:
            qalg, _ = self.quotient(rad)
            if not qalg.radical().is_zero():
                raise InternalError("radical is not idempotent under quotient")
            quotient_report = qalg.semisimple_decompose()
        return WedderburnReport(True, rad.dim, index, quotient_report)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "unit": [format_rational(c) for c in self.unit],
            "table": [
                [[format_rational(c) for c in self.table[i][j]] for j in range(self.dim)]
                for i in range(self.dim)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Algebra":
        try:
            dim = data["dim"]
            unit = data["unit"]
            table = data["table"]
        except (TypeError, KeyError) as exc:
            raise InputError("algebra JSON needs 'dim', 'unit', 'table'") from exc
        return cls(dim, unit, table)


# ---------------------------------------------------------------------------
# polynomial helpers (dense ascending coefficient lists over Fraction)
# ---------------------------------------------------------------------------


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return _poly_trim(out)


def _poly_pow(p: Sequence[Fraction], k: int) -> list[Fraction]:
    out = [ONE]
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


def _poly_divmod(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    p = list(p)
    q = _poly_trim(list(q))
    if q == [ZERO]:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [ZERO] * max(1, len(p) - len(q) + 1)
    while len(p) >= len(q) and any(c != 0 for c in p):
        p = _poly_trim(p)
        if len(p) < len(q):
            break
        shift = len(p) - len(q)
        c = p[-1] / q[-1]
        quot[shift] += c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p = _poly_trim(p)
    return _poly_trim(quot), _poly_trim(p)


def _poly_div(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    quot, rem = _poly_divmod(p, q)
    if rem != [ZERO]:
        raise InternalError("inexact polynomial division")
    return quot


def _poly_sub(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(p), len(q))
    p = list(p) + [ZERO] * (n - len(p))
    q = list(q) + [ZERO] * (n - len(q))
    return _poly_trim([a - b for a, b in zip(p, q)])


def _poly_invmod(p: Sequence[Fraction], mod: Sequence[Fraction]) -> list[Fraction]:
    """Inverse of p modulo mod via extended Euclid (inputs must be coprime)."""
    r0, r1 = _poly_trim(list(mod)), _poly_trim(list(p))
    s0, s1 = [ZERO], [ONE]
    while r1 != [ZERO]:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if len(r0) != 1:
        raise InternalError("polynomials are not coprime in inverse computation")
    inv_lead = ONE / r0[0]
    return _poly_trim([c * inv_lead for c in s0])


# ---------------------------------------------------------------------------
# standard constructions
# ---------------------------------------------------------------------------


def _table_from_matrices(basis: list[Matrix]) -> tuple[int, list[list[Vector]], Matrix]:
    """Structure constants of a matrix algebra from a linearly independent
    spanning set, plus the coordinate matrix used to express products."""
    d = len(basis)
    size = basis[0].rows * basis[0].cols
    coord = Matrix(size, d, [basis[j].entries[i] for i in range(size) for j in range(d)])
    from .linalg import solve as lin_solve

    table = []
    for i in range(d):
        row = []
        for j in range(d):
            prod = basis[i] * basis[j]
            coords = lin_solve(coord, prod.entries)
            if coords is None:
                raise InputError("matrix span is not closed under multiplication")
            row.append(tuple(coords))
        table.append(row)
    return d, table, coord


def algebra_from_matrices(basis: list[Matrix], unit: Matrix) -> Algebra:
    """Algebra structure on a linearly independent list of square matrices."""
    d, table, coord = _table_from_matrices(basis)
    from .linalg import solve as lin_solve

    unit_coords = lin_solve(coord, unit.entries)
    if unit_coords is None:
        raise InputError("unit is not in the span of the basis")
    return Algebra(d, unit_coords, table)


def triangular_algebra(n: int) -> Algebra:
    """Upper triangular n x n matrices; basis E_ij (i <= j) in row-major order."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {p: k for k, p in enumerate(pairs)}
    d = len(pairs)
    table = [[tuple(ZERO for _ in range(d)) for _ in range(d)] for _ in range(d)]
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            if j == k:
                out = [ZERO] * d
                out[index[(i, l)]] = ONE
                table[a][b] = tuple(out)
    unit = [ZERO] * d
    for i in range(n):
        unit[index[(i, i)]] = ONE
    return Algebra(d, unit, table)


def full_matrix_algebra(n: int) -> Algebra:
    """M_n(Q); basis E_ij in row-major order."""
    pairs = [(i, j) for i in range(n) for j in range(n)]
    index = {p: k for k, p in enumerate(pairs)}
    d = n * n
    table = [[tuple(ZERO for _ in range(d)) for _ in range(d)] for _ in range(d)]
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            if j == k:
                out = [ZERO] * d
                out[index[(i, l)]] = ONE
                table[a][b] = tuple(out)
    unit = [ZERO] * d
    for i in range(n):
        unit[index[(i, i)]] = ONE
    return Algebra(d, unit, table)


def polynomial_quotient_algebra(modulus: Sequence) -> Algebra:
    """Q[t]/(f) for a monic f, on the basis 1, t, ..., t^(deg-1)."""
    coeffs = [rational(c) for c in modulus]
    if not coeffs or coeffs[-1] != 1:
        raise InputError("modulus must be monic, ascending coefficients")
    d = len(coeffs) - 1
    if d < 1:
        raise InputError("modulus must have degree at least 1")

    def reduce_poly(p: list[Fraction]) -> Vector:
        p = list(p) + [ZERO] * max(0, d + 1 - len(p))
        for k in range(len(p) - 1, d - 1, -1):
            c = p[k]
            if c:
                for i in range(d + 1):
                    p[k - d + i] -= c * coeffs[i]
        return tuple(p[:d])

    table = []
    for i in range(d):
        row = []
        for j in range(d):
            p = [ZERO] * (i + j) + [ONE]
            row.append(reduce_poly(p))
        table.append(row)
    unit = [ONE] + [ZERO] * (d - 1)
    return Algebra(d, unit, table)


def group_algebra(mult_table: Sequence[Sequence[int]], identity: int = 0) -> Algebra:
    """Q[G] from a group multiplication table (indices of products)."""
    d = len(mult_table)
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            out = [ZERO] * d
            out[mult_table[i][j]] = ONE
            row.append(tuple(out))
        table.append(row)
    unit = [ZERO] * d
    unit[identity] = ONE
    return Algebra(d, unit, table)


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(n: int) -> list[list[int]]:
    """Multiplication table of S_n on itertools ordering of permutations."""
    from itertools import permutations

    perms = list(permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    # composition (p*q)(x) = p(q(x))
    return [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]


def product_algebra(a: Algebra, b: Algebra) -> Algebra:
    """Direct product A x B on the concatenated basis."""
    d = a.dim + b.dim
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            out = [ZERO] * d
            if i < a.dim and j < a.dim:
                for k, c in enumerate(a.table[i][j]):
                    out[k] = c
            elif i >= a.dim and j >= a.dim:
                for k, c in enumerate(b.table[i - a.dim][j - a.dim]):
                    out[a.dim + k] = c
            row.append(tuple(out))
        table.append(row)
    unit = list(a.unit) + list(b.unit)
    return Algebra(d, unit, table)
