"""Representations of the additive group over Q as nilpotent matrices.

A representation is stored by its nilpotent generator N (the map t ->
exp(tN) is the group action); indecomposables are Jordan blocks, and the
block of size m+1 plays the role of the m-th symmetric power of the
standard two-dimensional representation.  All structure reduces to
Jordan combinatorics:

* Hom spaces between blocks of sizes m+1 and n+1 have dimension
  min(m, n) + 1, the size of the set
  P(m, n) = { j : |m-n| <= j <= m+n, j = m+n mod 2 }.
* Tensor products decompose by the same P(m, n), with the tensor product
  of representations generated by N x 1 + 1 x N.
* The radical of the hom category is spanned blockwise: everything
  between blocks of different sizes, and the positive powers of N
  between blocks of equal size.

These match the irreducible theory of SL2 (dimensions and tensor
decompositions), which :func:`sl2_consistency` checks wholesale, along
with the equality of the category radical and the trace-pairing kernel
on endomorphism algebras.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Subspace
from .errors import DimensionMismatch, InputError, InternalError, NotNilpotent
from .linalg import Matrix, ONE, ZERO, kernel_basis, kron, rank as matrix_rank, solve
from .tensor import pairing_kernel


def jordan_block(size: int) -> Matrix:
    """Nilpotent Jordan block: e_j -> e_{j+1}, the last basis vector to 0."""
    return Matrix(
        size, size, [ONE if i == j + 1 else ZERO for i in range(size) for j in range(size)]
    )


@dataclass(frozen=True)
class JordanType:
    """Weakly decreasing partition of the dimension by block sizes."""

    partition: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.partition)
        if any(p < 1 for p in parts):
            raise InputError("partition parts must be positive")
        if list(parts) != sorted(parts, reverse=True):
            raise InputError("partition must be weakly decreasing")
        object.__setattr__(self, "partition", parts)

    @property
    def dim(self) -> int:
        return sum(self.partition)


class GaRep:
    """Additive-group representation: a nilpotent matrix N of size dim."""

    __slots__ = ("dim", "nilpotent")

    def __init__(self, nilpotent: Matrix):
        if not nilpotent.is_square():
            raise DimensionMismatch("representation matrix must be square")
        d = nilpotent.rows
        if d >= 1 and not (nilpotent**d).is_zero():
            raise NotNilpotent("matrix is not nilpotent")
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "nilpotent", nilpotent)

    def __setattr__(self, name, value):
        raise AttributeError("GaRep is immutable")

    def __eq__(self, other):
        return isinstance(other, GaRep) and self.nilpotent == other.nilpotent

    def __repr__(self):
        return f"GaRep(dim {self.dim})"

    @classmethod
    def from_partition(cls, partition) -> "GaRep":
        """Canonical block-diagonal representation for a partition."""
        parts = tuple(sorted((int(p) for p in partition), reverse=True))
        d = sum(parts)
        entries = [[ZERO] * d for _ in range(d)]
        offset = 0
        for p in parts:
            for k in range(1, p):
                entries[offset + k][offset + k - 1] = ONE
            offset += p
        return cls(Matrix(d, d, [e for row in entries for e in row]))

    @classmethod
    def symmetric_power(cls, m: int) -> "GaRep":
        """The indecomposable of dimension m + 1 (a single Jordan block)."""
        if m < 0:
            raise InputError("symmetric power index must be nonnegative")
        return cls(jordan_block(m + 1))

    def is_canonical(self) -> bool:
        return self.nilpotent == GaRep.from_partition(
            jordan_type(self).partition
        ).nilpotent


def jordan_type(rep: GaRep) -> JordanType:
    """Block-size partition from the ranks of the powers of N."""
    n = rep.nilpotent
    d = rep.dim
    ranks = [d]
    power = Matrix.identity(d)
    while True:
        power = power * n
        r = matrix_rank(power)
        ranks.append(r)
        if r == 0:
            break
    counts = []
    for k in range(1, len(ranks)):
        # number of blocks of size >= k
        counts.append(ranks[k - 1] - ranks[k])
    partition = []
    for size in range(len(counts), 0, -1):
        mult = counts[size - 1] - (counts[size] if size < len(counts) else 0)
        partition.extend([size] * mult)
    partition.sort(reverse=True)
    return JordanType(tuple(partition))


def direct_sum(reps) -> GaRep:
    reps = list(reps)
    d = sum(r.dim for r in reps)
    entries = [[ZERO] * d for _ in range(d)]
    offset = 0
    for r in reps:
        for i in range(r.dim):
            for j in range(r.dim):
                e = r.nilpotent[i, j]
                if e:
                    entries[offset + i][offset + j] = e
        offset += r.dim
    return GaRep(Matrix(d, d, [e for row in entries for e in row]))


def tensor_rep(a: GaRep, b: GaRep) -> GaRep:
    """Tensor product: generated by N x 1 + 1 x N."""
    n = kron(a.nilpotent, Matrix.identity(b.dim)) + kron(
        Matrix.identity(a.dim), b.nilpotent
    )
    return GaRep(n)


# ---------------------------------------------------------------------------
# hom spaces and Clebsch-Gordan
# ---------------------------------------------------------------------------


def clebsch_gordan_set(m: int, n: int) -> list[int]:
    """P(m, n) = { j : |m-n| <= j <= m+n, j = m+n mod 2 }, ascending."""
    if m < 0 or n < 0:
        raise InputError("indices must be nonnegative")
    return list(range(abs(m - n), m + n + 1, 2))


def hom_dim(m: int, n: int) -> int:
    """Dimension of the intertwiner space between the indecomposables of
    dimensions m+1 and n+1: the size of P(m, n), i.e. min(m, n) + 1."""
    return len(clebsch_gordan_set(m, n))


def intertwiner_basis(a: GaRep, b: GaRep) -> list[Matrix]:
    """Echelon basis of { f : f N_a = N_b f } as matrices b.dim x a.dim."""
    da, db = a.dim, b.dim
    cols = []
    for i in range(db):
        for j in range(da):
            unit = Matrix(
                db, da, [ONE if (r, c) == (i, j) else ZERO for r in range(db) for c in range(da)]
            )
            image = unit * a.nilpotent - b.nilpotent * unit
            cols.append(image.entries)
    system = Matrix(
        db * da, db * da, [cols[c][r] for r in range(db * da) for c in range(db * da)]
    )
    return [Matrix(db, da, v) for v in kernel_basis(system)]


def hom_dim_oracle(m: int, n: int) -> int:
    """Independent computation of hom_dim by solving f N = N f exactly."""
    return len(
        intertwiner_basis(GaRep.symmetric_power(m), GaRep.symmetric_power(n))
    )


def clebsch_gordan(m: int, n: int) -> list[int]:
    """Tensor decomposition: the indecomposable summands of S^m x S^n,
    each with multiplicity one, as the list P(m, n)."""
    return clebsch_gordan_set(m, n)


def clebsch_gordan_oracle(m: int, n: int) -> list[int]:
    """Jordan-type oracle: block sizes of N x 1 + 1 x N, shifted back."""
    product = tensor_rep(GaRep.symmetric_power(m), GaRep.symmetric_power(n))
    partition = jordan_type(product).partition
    return sorted(p - 1 for p in partition)


# ---------------------------------------------------------------------------
# category radical
# ---------------------------------------------------------------------------


def _jordan_chain_basis(rep: GaRep) -> tuple[Matrix, tuple[int, ...]]:
    """Change of basis Q with Q^{-1} N Q canonical block-diagonal.

    Chains are built from the top: new chain tops at level k are chosen
    as the canonical complement of (ker N^{k-1} + N ker N^{k+...}) inside
    ker N^k, then propagated downward by N.
    """
    n = rep.nilpotent
    d = rep.dim
    if d == 0:
        raise InputError("empty representation")
    kernels = [Subspace(d)]  # ker N^0 = 0
    power = Matrix.identity(d)
    while kernels[-1].dim < d:
        power = power * n
        kernels.append(Subspace(d, kernel_basis(power)))
    s = len(kernels) - 1  # nilpotency index
    chains: list[list] = []
    tops_by_level: dict[int, list] = {}
    for k in range(s, 0, -1):
        span_vecs = list(kernels[k - 1].basis)
        for level in range(k + 1, s + 1):
            for top in tops_by_level.get(level, []):
                # push down into ker N^k: N^(level - k) applied to the top
                vec = top
                for _ in range(level - k):
                    vec = n.apply(vec)
                span_vecs.append(vec)
        blocked = Subspace(d, span_vecs)
        new_tops = []
        for cand in kernels[k].basis:
            if not blocked.contains(cand):
                new_tops.append(cand)
                blocked = blocked.add(Subspace(d, [cand]))
        tops_by_level[k] = new_tops
        for top in new_tops:
            chains.append(list(_chain_from_top(n, top, k)))
    chains.sort(key=len, reverse=True)
    cols = [v for chain in chains for v in chain]
    q = Matrix(d, d, [cols[j][i] for i in range(d) for j in range(d)])
    partition = tuple(sorted((len(c) for c in chains), reverse=True))
    if sum(partition) != d:
        raise InternalError("Jordan chain basis does not span")
    return q, partition


def _chain_from_top(n: Matrix, top, length: int):
    vec = tuple(top)
    out = [vec]
    for _ in range(length - 1):
        vec = n.apply(vec)
        out.append(vec)
    return out


def _invert(m: Matrix) -> Matrix:
    d = m.rows
    cols = []
    for j in range(d):
        e = [ONE if i == j else ZERO for i in range(d)]
        x = solve(m, e)
        if x is None:
            raise InputError("matrix is not invertible")
        cols.append(x)
    return Matrix(d, d, [cols[j][i] for i in range(d) for j in range(d)])


def _block_offsets(partition) -> list[int]:
    out = [0]
    for p in partition:
        out.append(out[-1] + p)
    return out[:-1]


def category_radical(a: GaRep, b: GaRep) -> Subspace:
    """Radical of Hom(a, b) as a subspace of vectorized b.dim x a.dim matrices.

    Blockwise over the Jordan decompositions: components between blocks
    of different sizes contribute their full intertwiner space,
    components between equal sizes contribute the positive powers of the
    Jordan block (everything except the isomorphism line).
    """
    qa, parts_a = _jordan_chain_basis(a)
    qb, parts_b = _jordan_chain_basis(b)
    qa_inv = _invert(qa)
    qb_inv = _invert(qb)
    offs_a = _block_offsets(parts_a)
    offs_b = _block_offsets(parts_b)
    da, db = a.dim, b.dim
    vecs = []
    for bi, pb in enumerate(parts_b):
        for ai, pa in enumerate(parts_a):
            if pa == pb:
                local = [jordan_block(pa) ** k for k in range(1, pa)]
            else:
                local = intertwiner_basis(
                    GaRep(jordan_block(pa)), GaRep(jordan_block(pb))
                )
            for f in local:
                big = [[ZERO] * da for _ in range(db)]
                for i in range(pb):
                    for j in range(pa):
                        e = f[i, j]
                        if e:
                            big[offs_b[bi] + i][offs_a[ai] + j] = e
                embedded = Matrix(db, da, [e for row in big for e in row])
                original = qb * embedded * qa_inv
                vecs.append(original.entries)
    return Subspace(db * da, vecs)


def is_radical_morphism(a: GaRep, b: GaRep, f: Matrix) -> bool:
    if f.rows != b.dim or f.cols != a.dim:
        raise DimensionMismatch("morphism shape does not match the representations")
    if f * a.nilpotent != b.nilpotent * f:
        raise InputError("matrix is not an intertwiner")
    return category_radical(a, b).contains(f.entries)


def radical_chain_vanishing(max_target: int, reps, mats) -> bool:
    """Compose a chain of verified radical morphisms and test for zero.

    ``reps`` lists the stations (one more than ``mats``); every map must
    intertwine consecutive stations and lie in the category radical, the
    final station must be the indecomposable of dimension max_target + 1,
    and the empty chain is rejected.  Chains of length > max_target
    starting at the trivial representation always compose to zero, which
    :func:`search_chain_counterexample` probes at random.
    """
    reps = list(reps)
    mats = list(mats)
    if not mats:
        raise InputError("empty chain: the identity is not a radical morphism")
    if len(reps) != len(mats) + 1:
        raise InputError("need one more representation than morphisms")
    target = reps[-1]
    if jordan_type(target).partition != (max_target + 1,):
        raise InputError("chain must end at the indecomposable of the stated index")
    for idx, f in enumerate(mats):
        src, dst = reps[idx], reps[idx + 1]
        if not is_radical_morphism(src, dst, f):
            raise InputError(f"chain member {idx} is not a radical morphism")
    comp = mats[0]
    for f in mats[1:]:
        comp = f * comp
    return comp.is_zero()


def _random_radical_morphism(a: GaRep, b: GaRep, rng: random.Random) -> Matrix:
    basis = category_radical(a, b).basis
    da, db = a.dim, b.dim
    acc = Matrix.zeros(db, da)
    for v in basis:
        c = rng.randint(-3, 3)
        if c:
            acc = acc + Matrix(db, da, v).scale(c)
    return acc


def search_chain_counterexample(
    max_target: int, trials: int = 50, seed: int = 0
) -> dict:
    """Random search for a nonzero composite of > max_target radical maps
    from the trivial representation to S^(max_target).

    Returns a report; ``counterexamples`` must stay 0 (the composite
    always vanishes at this length).  The report also notes whether some
    shorter chain composes to a nonzero map, i.e. whether the bound is
    tight at this target.
    """
    rng = random.Random(seed)
    length = max_target + 1
    counterexamples = 0
    tight_witness = False
    for _ in range(trials):
        middles = [rng.randint(0, max_target + 2) for _ in range(length - 1)]
        stations = [0] + middles + [max_target]
        reps = [GaRep.symmetric_power(m) for m in stations]
        mats = [
            _random_radical_morphism(reps[i], reps[i + 1], rng)
            for i in range(len(reps) - 1)
        ]
        comp = mats[0]
        for f in mats[1:]:
            comp = f * comp
        if not comp.is_zero():
            counterexamples += 1
    if max_target >= 1:
        # strictly increasing chain of length max_target can be nonzero
        for _ in range(trials):
            stations = list(range(max_target + 1))
            reps = [GaRep.symmetric_power(m) for m in stations]
            mats = [
                _random_radical_morphism(reps[i], reps[i + 1], rng)
                for i in range(len(reps) - 1)
            ]
            if not mats:
                break
            comp = mats[0]
            for f in mats[1:]:
                comp = f * comp
            if not comp.is_zero():
                tight_witness = True
                break
    return {
        "max_target": max_target,
        "chain_length": length,
        "trials": trials,
        "counterexamples": counterexamples,
        "shorter_chain_nonzero": tight_witness,
    }


# ---------------------------------------------------------------------------
# SL2 consistency
# ---------------------------------------------------------------------------


def _end_algebra_basis(rep: GaRep) -> list[Matrix]:
    """Blockwise echelon basis of the endomorphism algebra of a canonical rep."""
    partition = jordan_type(rep).partition
    if not rep.is_canonical():
        raise InputError("endomorphism basis needs the canonical block form")
    offs = _block_offsets(partition)
    d = rep.dim
    out = []
    for bi, pb in enumerate(partition):
        for ai, pa in enumerate(partition):
            local = intertwiner_basis(
                GaRep(jordan_block(pa)), GaRep(jordan_block(pb))
            )
            for f in local:
                big = [[ZERO] * d for _ in range(d)]
                for i in range(pb):
                    for j in range(pa):
                        e = f[i, j]
                        if e:
                            big[offs[bi] + i][offs[ai] + j] = e
                out.append(Matrix(d, d, [e for row in big for e in row]))
    return out


@dataclass(frozen=True)
class Sl2Report:
    m_max: int
    dimensions_match: bool
    clebsch_gordan_matches: bool
    hom_dims_match: bool
    radical_equals_trace_kernel: bool
    pairs_checked: int
    end_dim: int
    radical_dim: int

    @property
    def consistent(self) -> bool:
        return (
            self.dimensions_match
            and self.clebsch_gordan_matches
            and self.hom_dims_match
            and self.radical_equals_trace_kernel
        )

    def to_json(self) -> dict:
        return {
            "m_max": self.m_max,
            "consistent": self.consistent,
            "dimensions_match": self.dimensions_match,
            "clebsch_gordan_matches": self.clebsch_gordan_matches,
            "hom_dims_match": self.hom_dims_match,
            "radical_equals_trace_kernel": self.radical_equals_trace_kernel,
            "pairs_checked": self.pairs_checked,
            "end_dim": self.end_dim,
            "radical_dim": self.radical_dim,
        }


def sl2_consistency(m_max: int) -> Sl2Report:
    """Check the indecomposable/irreducible correspondence up to m_max.

    Dimensions (m+1 on both sides), tensor decompositions (the Jordan
    oracle against the classical P(m, n)), hom dimensions (the formula
    against the exact intertwiner solve), plus the equality of the
    category radical with the kernel of the trace pairing on the
    endomorphism algebra of the direct sum of all indecomposables.
    """
    if m_max < 0:
        raise InputError("m_max must be nonnegative")
    dims_ok = all(
        GaRep.symmetric_power(m).dim == m + 1 for m in range(m_max + 1)
    )
    pairs = 0
    cg_ok = True
    hom_ok = True
    for m in range(m_max + 1):
        for n in range(m_max + 1):
            pairs += 1
            if clebsch_gordan(m, n) != clebsch_gordan_oracle(m, n):
                cg_ok = False
            if hom_dim(m, n) != hom_dim_oracle(m, n) or hom_dim(m, n) != min(m, n) + 1:
                hom_ok = False
    big = GaRep.from_partition([m + 1 for m in range(m_max + 1)])
    end_basis = _end_algebra_basis(big)
    rad = category_radical(big, big)
    nker = pairing_kernel(end_basis, end_basis)
    # convert coefficient vectors over the end basis into matrix space
    d = big.dim
    nvecs = []
    for coeffs in nker.basis:
        acc = Matrix.zeros(d, d)
        for c, f in zip(coeffs, end_basis):
            if c:
                acc = acc + f.scale(c)
        nvecs.append(acc.entries)
    numerical = Subspace(d * d, nvecs)
    rn_ok = numerical == rad
    return Sl2Report(
        m_max,
        dims_ok,
        cg_ok,
        hom_ok,
        rn_ok,
        pairs,
        len(end_basis),
        rad.dim,
    )
