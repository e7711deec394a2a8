"""Acceptance suite: one test per criterion, exact equality throughout.

Each test prints a single PASS/FAIL line (run with ``pytest -s`` to see
them) and enforces its runtime budget.  All expected values are either
computed by an independent oracle inside this file or are closed-form
integers checked exactly; no tolerances anywhere.
"""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

import pytest

from wedkit.algebra import (
    Algebra,
    cyclic_group_table,
    group_algebra,
    symmetric_group_table,
    triangular_algebra,
)
from wedkit.errors import ExponentHypothesisFails
from wedkit.ga import (
    GaRep,
    clebsch_gordan,
    clebsch_gordan_oracle,
    clebsch_gordan_set,
    hom_dim,
    hom_dim_oracle,
    sl2_consistency,
)
from wedkit.linalg import Matrix, kron, rank, solve
from wedkit.quiver import Quiver, arrow_ideal, cartan_matrix, envelope, path_algebra, positive_roots
from wedkit.tensor import (
    GradedObject,
    Permutation,
    TensorMorphism,
    antisymmetrizer,
    kimura_dim,
    lambda_trace,
    nagata_higman_check,
    projector_rank,
    slambda_dim,
    symmetrizer,
    twisted_trace,
    twisted_trace_bruteforce,
)
from wedkit.wedderburn import Section, conjugate_sections, lift_section, unipotent_inverse

F = Fraction


@contextmanager
def criterion(number: int, description: str, budget_seconds: float):
    start = time.time()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number}: FAIL — {description}")
        raise
    elapsed = time.time() - start
    if elapsed >= budget_seconds:
        print(
            f"ACCEPTANCE {number}: FAIL — {description} "
            f"(runtime {elapsed:.2f} s exceeded {budget_seconds} s)"
        )
        raise AssertionError(f"criterion {number} exceeded its runtime budget")
    print(
        f"ACCEPTANCE {number}: PASS — {description} ({elapsed:.2f} s < {budget_seconds} s)"
    )


# -- criterion 1: A_n envelopes ------------------------------------------------


def test_criterion_1_an_envelope():
    with criterion(1, "A_n envelope equals prod M_k^(n+1-k) for n = 1..8", 1.0):
        for n in range(1, 9):
            rep = envelope(Quiver.linear(n))
            assert dict(rep.blocks) == {k: n + 1 - k for k in range(1, n + 1)}
            assert rep.block_count == n * (n + 1) // 2


# -- criterion 2: E6 envelope vs an independent reflection oracle ---------------


def _roots_by_reflection_orbit(letter: str, n: int) -> set:
    """Independent enumeration: close the simple roots under all simple
    reflections s_i(b) = b - <b, a_i^vee> a_i, then keep the positive ones."""
    c = cartan_matrix(letter, n)
    frontier = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    seen = set(frontier)
    while frontier:
        new = set()
        for beta in frontier:
            for i in range(n):
                pairing = sum(c[i][j] * beta[j] for j in range(n))
                image = list(beta)
                image[i] -= pairing
                image = tuple(image)
                if image not in seen:
                    seen.add(image)
                    new.add(image)
        frontier = new
    return {r for r in seen if all(x >= 0 for x in r)}


E6_ORIENTATIONS = [
    Quiver(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
    Quiver(6, [(1, 0), (2, 1), (3, 2), (4, 3), (5, 2)]),
    Quiver(6, [(0, 1), (2, 1), (2, 3), (4, 3), (2, 5)]),
]

# the closed-form product printed alongside the E6 discussion lists only
# 20 blocks; the 36-root height multiset below is the computed ground truth
E6_PRINTED_PRODUCT = {1: 6, 2: 3, 5: 1, 6: 2, 7: 3, 8: 2, 9: 1, 10: 1, 11: 1}


def test_criterion_2_e6_envelope():
    with criterion(2, "E6 envelope equals the 36-root height multiset", 1.0):
        oracle_roots = _roots_by_reflection_orbit("E", 6)
        assert len(oracle_roots) == 36
        oracle_heights = {}
        for r in oracle_roots:
            h = sum(r)
            oracle_heights[h] = oracle_heights.get(h, 0) + 1
        assert set(positive_roots("E", 6).positive_roots) == oracle_roots
        for q in E6_ORIENTATIONS:
            rep = envelope(q)
            assert dict(rep.blocks) == oracle_heights
            assert rep.block_count == 36
        # recorded side by side: the printed product disagrees (20 blocks)
        assert sum(E6_PRINTED_PRODUCT.values()) == 20
        assert oracle_heights != E6_PRINTED_PRODUCT
        assert oracle_heights == {
            1: 6, 2: 5, 3: 5, 4: 5, 5: 4, 6: 3, 7: 3, 8: 2, 9: 1, 10: 1, 11: 1,
        }


# -- criterion 3: twisted traces ------------------------------------------------


def test_criterion_3_twisted_trace():
    with criterion(3, "cycle formula = Kronecker contraction for all sigma, n <= 5", 30.0):
        rng = random.Random(31415)
        for n in range(1, 6):
            perms = [Permutation(p) for p in itertools.permutations(range(n))]
            tuples = []
            for _ in range(20):
                d = rng.randint(1, 4)
                tuples.append(
                    tuple(
                        Matrix(d, d, [F(rng.randint(-3, 3)) for _ in range(d * d)])
                        for _ in range(n)
                    )
                )
            for sigma in perms:
                for mats in tuples:
                    tm = TensorMorphism(mats, sigma)
                    assert twisted_trace(tm, verify=False) == twisted_trace_bruteforce(tm)
            # all-identity special case: value is d^(number of cycles)
            d = 3
            ident = tuple(Matrix.identity(d) for _ in range(n))
            for sigma in perms:
                tm = TensorMorphism(ident, sigma)
                value = twisted_trace(tm, verify=False)
                assert value == d ** len(sigma.cycles())
                assert value == twisted_trace_bruteforce(tm)


# -- criterion 4: projector ranks -------------------------------------------------


def test_criterion_4_projector_ranks():
    with criterion(4, "rank a_n = C(d,n), rank s_n = C(d+n-1,n); graded mixed dims", 60.0):
        for d in range(1, 6):
            for n in range(1, 6):
                assert projector_rank(d, n, "alt") == comb(d, n)
                assert projector_rank(d, n, "sym") == comb(d + n - 1, n)
                if d**n <= 256:
                    a = antisymmetrizer(d, n)
                    s = symmetrizer(d, n)
                    assert a * a == a and s * s == s
                    assert rank(a) == comb(d, n)
                    assert rank(s) == comb(d + n - 1, n)
        for p in range(0, 4):
            for q in range(0, 4):
                if p + q == 0:
                    continue
                obj = GradedObject(p, q)
                for n in range(1, p + q + 1):
                    expected = sum(comb(p, i) * comb(q, n - i) for i in range(n + 1))
                    assert expected == comb(p + q, n) != 0
                    assert slambda_dim(obj, n) == expected
                assert slambda_dim(obj, p + q + 1) == 0
                report = kimura_dim(obj)
                assert report.kim == p + q
                assert report.first_vanishing == p + q + 1
                assert report.super_dim == p - q


# -- criterion 5: section lifting and conjugacy ------------------------------------


ADE_ORIENTATIONS = {
    "A1": Quiver(1, []),
    "A2": Quiver.linear(2),
    "A3": Quiver.linear(3),
    "A4": Quiver.linear(4),
    "A5": Quiver.linear(5),
    "A6": Quiver.linear(6),
    "A7": Quiver.linear(7),
    "A8": Quiver.linear(8),
    "D4": Quiver(4, [(0, 1), (2, 1), (3, 1)]),
    "D5": Quiver(5, [(0, 1), (1, 2), (3, 2), (4, 2)]),
    "D6": Quiver(6, [(0, 1), (1, 2), (2, 3), (4, 3), (5, 3)]),
    "D7": Quiver(7, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 4), (6, 4)]),
    "D8": Quiver(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 5), (7, 5)]),
    "E6": Quiver(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
    "E7": Quiver(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]),
    "E8": Quiver(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]),
}


def random_split_plus_nilpotent(seed: int) -> Algebra:
    """Split semisimple diagonal (a product of matrix blocks) plus a
    transitive pattern of full lower blocks as the radical, with the
    semisimple basis directions skewed into the radical so the canonical
    complement is not multiplicative and the cocycle solves fire."""
    rng = random.Random(seed)
    levels = rng.choice([2, 3, 3])
    sizes = [rng.choice([1, 1, 2]) for _ in range(levels)]
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    total = offs[-1]
    all_pairs = [(l, k) for l in range(levels) for k in range(levels) if l > k]
    while True:
        pattern = {p for p in all_pairs if rng.random() < 0.7}
        transitive = all(
            (l, m) in pattern
            for (l, k) in pattern
            for (k2, m) in pattern
            if k2 == k
        )
        if pattern and transitive:
            break
    basis = []
    for l in range(levels):
        for i in range(sizes[l]):
            for j in range(sizes[l]):
                m = [[F(0)] * total for _ in range(total)]
                m[offs[l] + i][offs[l] + j] = F(1)
                basis.append(Matrix(total, total, [e for row in m for e in row]))
    rad_start = len(basis)
    for (l, k) in sorted(pattern):
        for i in range(sizes[l]):
            for j in range(sizes[k]):
                m = [[F(0)] * total for _ in range(total)]
                m[offs[l] + i][offs[k] + j] = F(1)
                basis.append(Matrix(total, total, [e for row in m for e in row]))
    skewed = []
    for idx, b in enumerate(basis):
        if idx < rad_start:
            acc = b
            for r in basis[rad_start:]:
                c = rng.randint(-1, 1)
                if c:
                    acc = acc + r.scale(c)
            skewed.append(acc)
        else:
            skewed.append(b)
    d = len(skewed)
    size2 = total * total
    coord = Matrix(size2, d, [skewed[j].entries[i] for i in range(size2) for j in range(d)])
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            coords = solve(coord, (skewed[i] * skewed[j]).entries)
            assert coords is not None
            row.append(coords)
        table.append(row)
    unit = solve(coord, Matrix.identity(total).entries)
    return Algebra(d, unit, table)


def _conjugated(a: Algebra, section: Section, n_vec) -> Section:
    one_plus = tuple(x + y for x, y in zip(a.unit, n_vec))
    inv = unipotent_inverse(a, one_plus)
    s = section.quotient.dim
    cols = [a.mult(one_plus, a.mult(section.matrix.col(j), inv)) for j in range(s)]
    return Section(
        a,
        section.quotient,
        section.projection,
        Matrix(a.dim, s, [cols[j][i] for i in range(a.dim) for j in range(s)]),
    )


def _check_split_and_conjugate(a: Algebra, rng: random.Random) -> None:
    section = lift_section(a)
    section.verify()
    rad = a.radical()
    n = [F(0)] * a.dim
    for b in rad.basis:
        c = F(rng.randint(-2, 2))
        n = [x + c * y for x, y in zip(n, b)]
    other = _conjugated(a, section, tuple(n))
    u = conjugate_sections(a, section, other)
    assert rad.contains(tuple(x - y for x, y in zip(u, a.unit)))
    u_inv = unipotent_inverse(a, u)
    for j in range(section.quotient.dim):
        assert tuple(other.matrix.col(j)) == a.mult(
            u, a.mult(section.matrix.col(j), u_inv)
        )


def test_criterion_5_wedderburn_splitting():
    with criterion(5, "verified sections and conjugators: T_n, ADE, 50 randomized", 120.0):
        rng = random.Random(2718)
        for n in range(2, 6):
            _check_split_and_conjugate(triangular_algebra(n), rng)
        for q in ADE_ORIENTATIONS.values():
            _check_split_and_conjugate(path_algebra(q), rng)
        for seed in range(50):
            _check_split_and_conjugate(random_split_plus_nilpotent(seed), rng)


# -- criterion 6: radical correctness ----------------------------------------------


def test_criterion_6_radical():
    with criterion(6, "radicals: T_n strict uppers, group algebras, arrow ideals", 30.0):
        for n in range(2, 6):
            a = triangular_algebra(n)
            rad = a.radical()
            pairs = [(i, j) for i in range(n) for j in range(i, n)]
            assert rad.dim == n * (n - 1) // 2
            for k, (i, j) in enumerate(pairs):
                vec = [F(0)] * a.dim
                vec[k] = F(1)
                assert rad.contains(vec) == (i != j)
            assert a.nilpotency_index(rad) == n
        for table in (cyclic_group_table(2), cyclic_group_table(3), symmetric_group_table(3)):
            assert group_algebra(table).radical().is_zero()
        rng = random.Random(161803)
        produced = 0
        while produced < 20:
            n = rng.randint(1, 6)
            arrows = []
            for _ in range(rng.randint(0, 8)):
                s = rng.randint(0, n - 1)
                t = rng.randint(0, n - 1)
                if s != t:
                    arrows.append((min(s, t), max(s, t)))
            q = Quiver(n, arrows)
            assert path_algebra(q).radical() == arrow_ideal(q)
            produced += 1


# -- criterion 7: additive-group combinatorics ---------------------------------------


def test_criterion_7_ga_combinatorics():
    with criterion(7, "hom dims (m,n <= 10), tensor decompositions (<= 8), SL2 report", 60.0):
        for m in range(11):
            for n in range(11):
                formula = hom_dim(m, n)
                assert formula == len(clebsch_gordan_set(m, n)) == min(m, n) + 1
                assert formula == hom_dim_oracle(m, n)
        for m in range(9):
            for n in range(9):
                assert clebsch_gordan(m, n) == clebsch_gordan_oracle(m, n)
        report5 = sl2_consistency(5)
        assert report5.consistent
        report4 = sl2_consistency(4)
        assert report4.radical_equals_trace_kernel  # R = N on End(sum of S^m, m <= 4)


# -- criterion 8: nil bound -----------------------------------------------------------


def _nil2_family(seed: int):
    """Generators with x^2 = 0 identically on the generated algebra:
    top row vectors a_i paired against J a_i (J the symplectic form), so
    a_i b_j + a_j b_i = 0 while products of two generators survive."""
    rng = random.Random(seed)
    half = rng.randint(1, 3)
    count = rng.randint(2, 4)
    size = 2 * half + 2
    gens = []
    for _ in range(count):
        a = [F(rng.randint(-3, 3)) for _ in range(2 * half)]
        b = [a[half + i] for i in range(half)] + [-a[i] for i in range(half)]
        rows = [[F(0)] * size for _ in range(size)]
        for j in range(2 * half):
            rows[0][1 + j] = a[j]
            rows[1 + j][size - 1] = b[j]
        gens.append(Matrix(size, size, [e for row in rows for e in row]))
    return gens


def test_criterion_8_nagata_higman():
    with criterion(8, "nil-of-exponent-2 families vanish at length 3; witnesses surface", 30.0):
        for seed in range(30):
            report = nagata_higman_check(_nil2_family(seed), 2)
            assert report.bound == 3
            assert report.holds
            assert report.minimal_vanishing_length <= 3
        with pytest.raises(ExponentHypothesisFails) as err:
            nagata_higman_check([Matrix.from_rows([[1, 1], [0, 0]])], 2)
        witness = err.value.witness
        assert witness is not None and not (witness * witness).is_zero()


# -- criterion 9: trace identities ------------------------------------------------------


def test_criterion_9_trace_identities():
    with criterion(9, "tr(gf)=tr(fg), tr(f x g)=tr(f)tr(g), alternating shift sums", 30.0):
        rng = random.Random(577215)
        for _ in range(50):
            d = rng.randint(1, 5)
            e = rng.randint(1, 5)
            f = Matrix(d, e, [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(d * e)])
            g = Matrix(e, d, [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(d * e)])
            assert (g * f).trace() == (f * g).trace()
            fsq = Matrix(d, d, [F(rng.randint(-4, 4)) for _ in range(d * d)])
            gsq = Matrix(e, e, [F(rng.randint(-4, 4)) for _ in range(e * e)])
            assert kron(fsq, gsq).trace() == fsq.trace() * gsq.trace()
        # the alternating-sum identity holds at full degree n = dim(A) <= 4
        for _ in range(50):
            n = rng.randint(1, 4)
            f = Matrix(n, n, [F(rng.randint(-3, 3)) for _ in range(n * n)])
            lhs = lambda_trace(Matrix.identity(n) + f, n)
            rhs = sum((lambda_trace(f, i) for i in range(1, n + 1)), F(1))
            assert lhs == rhs
            t = F(rng.randint(-3, 3), rng.randint(1, 3))
            lhs_t = lambda_trace(Matrix.identity(n) + f.scale(t), n)
            rhs_t = sum((t**i * lambda_trace(f, i) for i in range(1, n + 1)), F(1))
            assert lhs_t == rhs_t
