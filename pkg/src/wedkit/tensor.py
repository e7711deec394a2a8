"""Symmetric-group actions on tensor powers and the trace calculus.

Conventions, fixed once:

* The basis of a graded object (p, q) lists the p even vectors first,
  then the q odd ones.  Tensor-power bases are ordered with the first
  factor most significant, matching :func:`wedkit.linalg.kron`.
* A permutation acts by ``e_I -> sign * e_J`` with ``J[k] = I[sigma(k)]``,
  the sign being -1 per pair of odd factors whose relative order flips
  (Koszul rule); ungraded objects never produce signs.
* The twisted trace of ``sigma^{-1} o (f_1 x ... x f_n)`` factors as the
  product over the cycles of sigma of the trace of the composite along
  each cycle; an independent brute-force contraction over multi-indices
  verifies every call at moderate size.

S_n sums are enumerated explicitly, so ``n`` is capped (default 7,
override with the WEDKIT_MAX_N environment variable).  Results are
bit-identical across runs.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import Subspace
from .errors import (
    DimensionMismatch,
    ExponentHypothesisFails,
    InputError,
    InternalError,
)
from .linalg import Matrix, ONE, ZERO, kernel_basis, kron, rank as matrix_rank


def max_sn() -> int:
    """Cap for explicit symmetric-group enumeration (env WEDKIT_MAX_N)."""
    raw = os.environ.get("WEDKIT_MAX_N", "7")
    try:
        return max(1, int(raw))
    except ValueError:
        return 7


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


class Permutation:
    """Permutation of {0, ..., n-1} stored as the image list i -> images[i]."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, j in enumerate(self.images):
            out[j] = i
        return Permutation(out)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self o other)(i) = self(other(i))."""
        if self.n != other.n:
            raise DimensionMismatch("permutation sizes differ")
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.n)))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            cur = self.images[start]
            while cur != start:
                cyc.append(cur)
                seen[cur] = True
                cur = self.images[cur]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles())) % 2 else 1

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse 0-based cycle notation like "(0 1 2)(3 4)"; "" is identity."""
        images = list(range(n))
        text = text.strip()
        if text in ("", "id", "()"):
            return cls(images)
        if text.count("(") != text.count(")") or not text.startswith("("):
            raise InputError(f"bad cycle notation: {text!r}")
        chunks = [c for c in text.replace(")", ")|").split("|") if c.strip()]
        for chunk in chunks:
            chunk = chunk.strip()
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise InputError(f"bad cycle chunk: {chunk!r}")
            body = chunk[1:-1].replace(",", " ").split()
            try:
                cyc = [int(x) for x in body]
            except ValueError as exc:
                raise InputError(f"bad cycle entry in {chunk!r}") from exc
            if len(set(cyc)) != len(cyc):
                raise InputError(f"repeated entry in cycle {chunk!r}")
            for x in cyc:
                if not 0 <= x < n:
                    raise InputError(f"cycle entry {x} out of range for n={n}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)


def all_permutations(n: int) -> list[Permutation]:
    if n > max_sn():
        raise InputError(
            f"n={n} exceeds the symmetric-group cap {max_sn()} (set WEDKIT_MAX_N)"
        )
    return [Permutation(p) for p in itertools.permutations(range(n))]


# ---------------------------------------------------------------------------
# graded objects and the permutation action
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedObject:
    """Z/2-graded space: even_dim even basis vectors, then odd_dim odd ones."""

    even_dim: int
    odd_dim: int = 0

    def __post_init__(self):
        if self.even_dim < 0 or self.odd_dim < 0:
            raise InputError("graded dimensions must be nonnegative")

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    @property
    def super_dim(self) -> int:
        return self.even_dim - self.odd_dim

    def parity(self, index: int) -> int:
        return 0 if index < self.even_dim else 1


def _index_of(word: tuple[int, ...], d: int) -> int:
    idx = 0
    for c in word:
        idx = idx * d + c
    return idx


def koszul_sign(obj: GradedObject, sigma: Permutation, word: tuple[int, ...]) -> int:
    """Sign of moving the factors of ``word`` by sigma: -1 per crossing odd pair.

    ``word`` indexes the source factors; the pair (sigma(k), sigma(l)) with
    k < l crosses iff sigma(k) > sigma(l).
    """
    sign = 1
    n = sigma.n
    for k in range(n):
        sk = sigma(k)
        if obj.parity(word[sk]) == 0:
            continue
        for l in range(k + 1, n):
            sl = sigma(l)
            if sk > sl and obj.parity(word[sl]) == 1:
                sign = -sign
    return sign


def perm_matrix(sigma: Permutation, obj: GradedObject, n: int | None = None) -> Matrix:
    """Signed permutation matrix of sigma acting on the n-th tensor power.

    e_I maps to sign * e_J with J[k] = I[sigma(k)]; for ungraded objects
    (odd_dim = 0) this is the plain permutation matrix.
    """
    if n is None:
        n = sigma.n
    if n != sigma.n:
        raise DimensionMismatch("permutation size does not match tensor degree")
    d = obj.dim
    size = d**n
    entries = [ZERO] * (size * size)
    for word in itertools.product(range(d), repeat=n):
        target = tuple(word[sigma(k)] for k in range(n))
        s = koszul_sign(obj, sigma, word)
        entries[_index_of(target, d) * size + _index_of(word, d)] = ONE if s == 1 else -ONE
    return Matrix(size, size, entries)


def supertrace(m: Matrix, obj: GradedObject) -> Fraction:
    """Trace weighted by parity: even diagonal entries count +, odd count -."""
    if m.rows != obj.dim or m.cols != obj.dim:
        raise DimensionMismatch("matrix size does not match the graded object")
    acc = ZERO
    for i in range(obj.dim):
        acc += m[i, i] if obj.parity(i) == 0 else -m[i, i]
    return acc


# ---------------------------------------------------------------------------
# twisted traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TensorMorphism:
    """Factors f_i : A_i -> A_{sigma(i)} plus the twisting permutation.

    For the one-object case all factors are square of equal size and
    ``dims`` may be omitted.  In general ``dims[i] = dim A_i`` and factor
    i must have shape (dims[sigma(i)], dims[i]); each cycle composite is
    then automatically square.
    """

    factors: tuple[Matrix, ...]
    perm: Permutation
    dims: tuple[int, ...] | None = None

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if len(factors) != self.perm.n:
            raise DimensionMismatch("number of factors must match the permutation size")
        if self.dims is None:
            sizes = {f.rows for f in factors}
            if any(f.rows != f.cols for f in factors) or len(sizes) != 1:
                raise DimensionMismatch(
                    "factors must be square of equal size, or supply dims"
                )
            object.__setattr__(self, "dims", (factors[0].rows,) * len(factors))
        else:
            dims = tuple(int(x) for x in self.dims)
            object.__setattr__(self, "dims", dims)
            if len(dims) != len(factors):
                raise DimensionMismatch("dims must have one entry per factor")
            for i, f in enumerate(factors):
                if f.cols != dims[i] or f.rows != dims[self.perm(i)]:
                    raise DimensionMismatch(
                        f"factor {i} must map A_{i} (dim {dims[i]}) to "
                        f"A_{self.perm(i)} (dim {dims[self.perm(i)]})"
                    )


def _cycle_composite(tm: TensorMorphism, cycle: tuple[int, ...]) -> Matrix:
    """Composite f_{sigma^(l-1)(i)} o ... o f_{sigma(i)} o f_i along a cycle."""
    i0 = cycle[0]
    comp = tm.factors[i0]
    cur = tm.perm(i0)
    while cur != i0:
        comp = tm.factors[cur] * comp
        cur = tm.perm(cur)
    return comp


def twisted_trace_bruteforce(tm: TensorMorphism) -> Fraction:
    """Trace of sigma^{-1} o (f_1 x ... x f_n) by direct contraction."""
    sigma = tm.perm
    n = sigma.n
    dims = tm.dims
    acc = ZERO
    for word in itertools.product(*(range(d) for d in dims)):
        term = ONE
        for k in range(n):
            e = tm.factors[k][word[sigma(k)], word[k]]
            if not e:
                term = ZERO
                break
            term *= e
        acc += term
    return acc


VERIFY_SIZE_LIMIT = 4096


def twisted_trace(tm: TensorMorphism, verify: bool | None = None) -> Fraction:
    """Exact trace of sigma^{-1} o (f_1 x ... x f_n) via the cycle formula.

    The value is the product over the cycles of sigma of tr(composite
    along the cycle).  Unless disabled, the independent multi-index
    contraction re-computes the value and both must agree.
    """
    value = ONE
    for cycle in tm.perm.cycles():
        value *= _cycle_composite(tm, cycle).trace()
    total = 1
    for d in tm.dims:
        total *= d
    if verify is None:
        verify = total <= VERIFY_SIZE_LIMIT
    if verify:
        other = twisted_trace_bruteforce(tm)
        if other != value:
            raise InternalError(
                f"cycle formula {value} disagrees with brute force {other}"
            )
    return value


def twisted_supertrace(
    tm: TensorMorphism, obj: GradedObject, verify: bool | None = None
) -> Fraction:
    """Graded variant: the supertrace of the composite along each cycle.

    All factors must be parity-preserving endomorphisms of the graded
    object (those are the morphisms of the graded category; the cycle
    formula is false for parity-mixing maps).  The oracle contracts
    against the Koszul-signed permutation action.
    """
    d = obj.dim
    if any(f.rows != d or f.cols != d for f in tm.factors):
        raise DimensionMismatch("graded twisted trace needs endomorphisms of obj")
    for idx, f in enumerate(tm.factors):
        for i in range(d):
            for j in range(d):
                if obj.parity(i) != obj.parity(j) and f[i, j] != 0:
                    raise InputError(
                        f"factor {idx} is not parity-preserving: entry ({i},{j})"
                    )
    value = ONE
    for cycle in tm.perm.cycles():
        value *= supertrace(_cycle_composite(tm, cycle), obj)
    n = tm.perm.n
    if verify is None:
        verify = d**n <= VERIFY_SIZE_LIMIT
    if verify:
        sigma = tm.perm
        sigma_inv = sigma.inverse()
        acc = ZERO
        for word in itertools.product(range(d), repeat=n):
            term = ONE
            for k in range(n):
                e = tm.factors[k][word[sigma(k)], word[k]]
                if not e:
                    term = ZERO
                    break
                term *= e
            if not term:
                continue
            parity = sum(obj.parity(c) for c in word) % 2
            source = tuple(word[sigma(k)] for k in range(n))
            s = koszul_sign(obj, sigma_inv, source)
            signed = term if s == 1 else -term
            acc += signed if parity == 0 else -signed
        if acc != value:
            raise InternalError(
                f"graded cycle formula {value} disagrees with brute force {acc}"
            )
    return value


# ---------------------------------------------------------------------------
# projectors
# ---------------------------------------------------------------------------


def _average_matrix(d: int, m: int, signed: bool) -> Matrix:
    """(1/m!) sum over S_m of (sign) times the plain permutation action
    on (Q^d)^(x m).  For m = 0 this is the identity on the unit object."""
    if m == 0:
        return Matrix.identity(1)
    size = d**m
    coeff = Fraction(1, factorial(m))
    acc: dict[int, Fraction] = {}
    for perm in itertools.permutations(range(m)):
        sigma = Permutation(perm)
        s = sigma.sign() if signed else 1
        c = coeff if s == 1 else -coeff
        for word in itertools.product(range(d), repeat=m):
            target = tuple(word[sigma(k)] for k in range(m))
            key = _index_of(target, d) * size + _index_of(word, d)
            acc[key] = acc.get(key, ZERO) + c
    entries = [ZERO] * (size * size)
    for key, val in acc.items():
        entries[key] = val
    return Matrix(size, size, entries)


def _graded_projector(obj: GradedObject, n: int, signed: bool) -> Matrix:
    """Block-sum projector whose image realizes the mixed n-th power.

    For the alternating kind the image has the dimension of
    sum over i+j=n of Lambda^i(even) x S^j(odd) computed with the Koszul
    rule; the plain kind is its symmetric counterpart.  Blocks live on
    the parity-sorted coordinate words (i evens then j odds), which are
    disjoint, so the sum of the block projectors is idempotent.
    """
    p, q = obj.even_dim, obj.odd_dim
    d = obj.dim
    size = d**n
    entries = [ZERO] * (size * size)
    for i in range(n + 1):
        j = n - i
        if (p == 0 and i > 0) or (q == 0 and j > 0):
            continue
        even_block = _average_matrix(p, i, signed)
        odd_block = _average_matrix(q, j, signed)
        block = kron(even_block, odd_block) if i and j else (even_block if j == 0 else odd_block)
        # embed: word = (even digits w1) + (odd digits offset by p)
        even_words = list(itertools.product(range(p), repeat=i))
        odd_words = list(itertools.product(range(q), repeat=j))
        globals_ = []
        for ew in even_words:
            for ow in odd_words:
                word = ew + tuple(p + c for c in ow)
                globals_.append(_index_of(word, d))
        bs = len(globals_)
        for a in range(bs):
            ga = globals_[a]
            for b in range(bs):
                e = block[a, b]
                if e:
                    entries[ga * size + globals_[b]] = e
    return Matrix(size, size, entries)


def antisymmetrizer(obj: GradedObject | int, n: int) -> Matrix:
    """Idempotent projector onto the n-th alternating power.

    Ungraded object of dimension d: the classical projector of rank
    C(d, n).  Graded object (p, q): the mixed projector whose rank is
    sum over i+j=n of C(p, i) * C(q, j) (Koszul rule on the odd part),
    vanishing first at n = p + q + 1.
    """
    obj = _as_object(obj)
    if n < 1:
        raise InputError("tensor degree must be at least 1")
    if n > max_sn():
        raise InputError(f"n={n} exceeds the symmetric-group cap {max_sn()}")
    if obj.odd_dim == 0:
        return _average_matrix(obj.even_dim, n, signed=True)
    if obj.even_dim == 0:
        # Koszul turns the unsigned average on pure odd into the signed one
        return _average_matrix(obj.odd_dim, n, signed=True)
    return _graded_projector(obj, n, signed=True)


def symmetrizer(obj: GradedObject | int, n: int) -> Matrix:
    """Idempotent projector onto the n-th symmetric power.

    Ungraded rank C(d+n-1, n); graded rank follows the mixed rule with
    even and odd roles exchanged.
    """
    obj = _as_object(obj)
    if n < 1:
        raise InputError("tensor degree must be at least 1")
    if n > max_sn():
        raise InputError(f"n={n} exceeds the symmetric-group cap {max_sn()}")
    if obj.odd_dim == 0:
        return _average_matrix(obj.even_dim, n, signed=False)
    if obj.even_dim == 0:
        return _average_matrix(obj.odd_dim, n, signed=False)
    return _graded_projector(obj, n, signed=False)


def _as_object(obj) -> GradedObject:
    if isinstance(obj, GradedObject):
        return obj
    return GradedObject(int(obj), 0)


def _relating_permutation(j_word, k_word) -> Permutation:
    """sigma with k_word[sigma(t)] = j_word[t], for words with distinct letters."""
    pos = {letter: idx for idx, letter in enumerate(k_word)}
    return Permutation(tuple(pos[letter] for letter in j_word))


def _pure_average_rank(d: int, m: int, signed: bool) -> int:
    """Rank of the S_m average on (Q^d)^(x m) by orbit-block elimination.

    The average only connects words with equal multisets, so the matrix
    is block diagonal over multiset orbits; each block is eliminated
    exactly.  Block entries are evaluated from the coset structure of
    the word stabilizer (a product of symmetric groups).
    """
    if m == 0:
        return 1
    if d == 0:
        return 0
    total = 0
    mfact = factorial(m)
    for multiset in itertools.combinations_with_replacement(range(d), m):
        counts: dict[int, int] = {}
        for c in multiset:
            counts[c] = counts.get(c, 0) + 1
        has_repeat = any(v > 1 for v in counts.values())
        if signed and has_repeat:
            continue  # stabilizer contains a transposition: the block is zero
        orbit = sorted(set(itertools.permutations(multiset)))
        bs = len(orbit)
        if signed:
            entries = []
            for jw in orbit:
                for kw in orbit:
                    s = _relating_permutation(jw, kw).sign()
                    entries.append(Fraction(s, mfact))
            block = Matrix(bs, bs, entries)
        else:
            stab = 1
            for v in counts.values():
                stab *= factorial(v)
            c = Fraction(stab, mfact)
            block = Matrix(bs, bs, [c] * (bs * bs))
        total += matrix_rank(block)
    return total


def projector_rank(obj: GradedObject | int, n: int, kind: str = "alt") -> int:
    """Exact rank of :func:`antisymmetrizer` / :func:`symmetrizer` without
    materializing the full matrix (orbit-blockwise elimination)."""
    obj = _as_object(obj)
    if kind not in ("alt", "sym"):
        raise InputError("kind must be 'alt' or 'sym'")
    signed = kind == "alt"
    p, q = obj.even_dim, obj.odd_dim
    if q == 0:
        return _pure_average_rank(p, n, signed)
    if p == 0:
        return _pure_average_rank(q, n, signed)
    total = 0
    for i in range(n + 1):
        j = n - i
        total += _pure_average_rank(p, i, signed) * _pure_average_rank(q, j, signed)
    return total


# ---------------------------------------------------------------------------
# power traces
# ---------------------------------------------------------------------------


def _partitions(n: int):
    """Partitions of n as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return

    def rec(remaining, maximum):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maximum), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def _cycle_type_count(partition: tuple[int, ...]) -> int:
    n = sum(partition)
    denom = 1
    mult: dict[int, int] = {}
    for part in partition:
        denom *= part
        mult[part] = mult.get(part, 0) + 1
    for v in mult.values():
        denom *= factorial(v)
    return factorial(n) // denom


def _power_trace_sum(f: Matrix, n: int, signed: bool) -> Fraction:
    if not f.is_square():
        raise DimensionMismatch("power traces need a square matrix")
    if n == 0:
        return ONE
    power_traces: dict[int, Fraction] = {}
    acc_power = f
    for k in range(1, n + 1):
        power_traces[k] = acc_power.trace()
        if k < n:
            acc_power = acc_power * f
    total = ZERO
    for partition in _partitions(n):
        term = Fraction(_cycle_type_count(partition), factorial(n))
        if signed and (n - len(partition)) % 2:
            term = -term
        for part in partition:
            term *= power_traces[part]
        total += term
    return total


def lambda_trace(f: Matrix, n: int) -> Fraction:
    """tr of the n-th alternating power of f, by the cycle-type sum
    (1/n!) sum over S_n of sgn(sigma) prod tr(f^(cycle length))."""
    return _power_trace_sum(f, n, signed=True)


def sym_trace(f: Matrix, n: int) -> Fraction:
    """tr of the n-th symmetric power of f (unsigned cycle-type sum)."""
    return _power_trace_sum(f, n, signed=False)


def power_traces_to_elementary(traces) -> list[Fraction]:
    """Newton identities: power traces t_1..t_n to alternating traces e_1..e_n."""
    t = [Fraction(x) if not isinstance(x, Fraction) else x for x in traces]
    n = len(t)
    e: list[Fraction] = [ONE]  # e_0
    for k in range(1, n + 1):
        acc = ZERO
        for i in range(1, k + 1):
            term = e[k - i] * t[i - 1]
            acc += term if (i - 1) % 2 == 0 else -term
        e.append(acc / k)
    return e[1:]


def elementary_to_power_traces(elementary) -> list[Fraction]:
    """Inverse Newton conversion: e_1..e_n back to power traces t_1..t_n."""
    e = [ONE] + [Fraction(x) if not isinstance(x, Fraction) else x for x in elementary]
    n = len(e) - 1
    t: list[Fraction] = []
    for k in range(1, n + 1):
        acc = Fraction(k) * e[k]
        if (k - 1) % 2:
            acc = -acc
        for i in range(1, k):
            term = e[i] * t[k - i - 1]
            acc += term if (i - 1) % 2 == 0 else -term
        t.append(acc)
    return t


# ---------------------------------------------------------------------------
# Kimura dimension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KimuraReport:
    kim: int
    super_dim: int
    first_vanishing: int

    def to_json(self) -> dict:
        return {
            "kim": self.kim,
            "super_dim": self.super_dim,
            "first_vanishing": self.first_vanishing,
        }


def slambda_dim(obj: GradedObject, n: int) -> int:
    """Dimension of the mixed n-th alternating power of (p, q)."""
    return projector_rank(obj, n, "alt")


def kimura_dim(obj: GradedObject) -> KimuraReport:
    """kim = p + q, with the first vanishing mixed power computed honestly.

    Scans n = 1, 2, ... for the first zero of :func:`slambda_dim` and
    asserts it equals kim + 1.
    """
    kim = obj.even_dim + obj.odd_dim
    n = 1
    while slambda_dim(obj, n) != 0:
        n += 1
        if n > kim + 2:
            raise InternalError("mixed alternating powers failed to vanish at kim+1")
    if n != kim + 1:
        raise InternalError(f"first vanishing at {n}, expected kim+1 = {kim + 1}")
    return KimuraReport(kim, obj.super_dim, n)


# ---------------------------------------------------------------------------
# trace pairing and the nil bound
# ---------------------------------------------------------------------------


def pairing_kernel(fs, gs, trace_fn=None) -> Subspace:
    """Kernel of the pairing (f, g) -> tr(g o f) on the given hom bases.

    ``fs`` spans Hom(A, B) and ``gs`` spans Hom(B, A); the result is the
    subspace of coefficient vectors over ``fs`` pairing to zero against
    every g.  Pass a custom ``trace_fn`` (e.g. a supertrace) to change
    the pairing.
    """
    fs = list(fs)
    gs = list(gs)
    if trace_fn is None:
        trace_fn = lambda m: m.trace()
    if not fs:
        return Subspace(0)
    entries = []
    for g in gs:
        for f in fs:
            entries.append(trace_fn(g * f))
    gram = Matrix(len(gs), len(fs), entries) if gs else Matrix.zeros(0, len(fs))
    if not gs:
        return Subspace.full(len(fs))
    return Subspace(len(fs), kernel_basis(gram))


@dataclass(frozen=True)
class NagataHigmanReport:
    exponent: int
    bound: int
    algebra_dim: int
    minimal_vanishing_length: int

    @property
    def holds(self) -> bool:
        return self.minimal_vanishing_length <= self.bound

    def to_json(self) -> dict:
        return {
            "exponent": self.exponent,
            "bound": self.bound,
            "algebra_dim": self.algebra_dim,
            "minimal_vanishing_length": self.minimal_vanishing_length,
            "holds": self.holds,
        }


def _span_matrices(mats, size: int) -> Subspace:
    return Subspace(size * size, [m.entries for m in mats])


def _subspace_matrices(sub: Subspace, size: int) -> list[Matrix]:
    return [Matrix(size, size, b) for b in sub.basis]


def nagata_higman_check(generators, n: int, max_witness_search: int = 200) -> NagataHigmanReport:
    """Verify the nil-bound: x^n = 0 identically forces R^(2^n - 1) = 0.

    First checks the hypothesis by full linearization over a basis of the
    degree <= n span of the generated algebra; a violation raises
    :class:`ExponentHypothesisFails` carrying a concrete witness x with
    x^n != 0.  Then computes actual powers of the generated (non-unital)
    algebra and reports the minimal vanishing length.
    """
    generators = list(generators)
    if n < 1:
        raise InputError("exponent must be at least 1")
    if not generators:
        raise InputError("need at least one generator")
    size = generators[0].rows
    for g in generators:
        if not g.is_square() or g.rows != size:
            raise DimensionMismatch("generators must be square matrices of equal size")

    # multiplicative closure of the generators (non-unital)
    span = _span_matrices(generators, size)
    while True:
        mats = _subspace_matrices(span, size)
        products = [a * b for a in mats for b in mats]
        bigger = span.add(_span_matrices(products, size))
        if bigger.dim == span.dim:
            break
        span = bigger
    basis_mats = _subspace_matrices(span, size)

    # degree <= n part for the linearized hypothesis check
    deg_span = _span_matrices(generators, size)
    gen_mats = list(generators)
    for _ in range(n - 1):
        mats = _subspace_matrices(deg_span, size)
        products = [a * g for a in mats for g in gen_mats]
        deg_span = deg_span.add(_span_matrices(products, size))
    check_basis = _subspace_matrices(deg_span, size)

    for tup in itertools.combinations_with_replacement(range(len(check_basis)), n):
        acc = Matrix.zeros(size, size)
        for perm in itertools.permutations(tup):
            prod = check_basis[perm[0]]
            for idx in perm[1:]:
                prod = prod * check_basis[idx]
            acc = acc + prod
        if not acc.is_zero():
            witness = _find_witness(check_basis, tup, n, size, max_witness_search)
            raise ExponentHypothesisFails(
                f"x^{n} = 0 fails on the generated algebra", witness=witness
            )

    # powers of the generated algebra
    power = span
    length = 1
    while not power.is_zero():
        if length > (2**n - 1) + 1:
            raise InternalError("nil bound exceeded despite verified hypothesis")
        next_mats = [
            a * b
            for a in _subspace_matrices(power, size)
            for b in basis_mats
        ]
        power = _span_matrices(next_mats, size)
        length += 1
    return NagataHigmanReport(n, 2**n - 1, span.dim, length)


def _find_witness(basis, tup, n, size, budget) -> Matrix:
    """Concrete x with x^n != 0, from a failing linearization tuple."""
    distinct = sorted(set(tup))
    mats = [basis[i] for i in distinct]
    for coeffs in itertools.product(range(1, n + 2), repeat=len(mats)):
        x = Matrix.zeros(size, size)
        for c, m in zip(coeffs, mats):
            x = x + m.scale(c)
        if not (x**n).is_zero():
            return x
        budget -= 1
        if budget <= 0:
            break
    raise InternalError("failed to extract a witness from a failing linearization")
