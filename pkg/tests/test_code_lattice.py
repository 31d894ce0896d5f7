import random

import pytest

from kisslat.binary_codes import is_self_orthogonal, parse_code, weight_distribution
from kisslat.code_lattice import (
    LatticeBasis,
    build_span_basis,
    closure_probe,
    enumerate_short,
    format_basis_file,
    hermite_form,
    lift,
    parse_basis_file,
    random_set_member,
    set_contains,
    verify_code_lattice,
)
from oracles import box_short_counts


def residue_word(row):
    return sum((v & 1) << i for i, v in enumerate(row))


def random_member(basis: LatticeBasis, rng: random.Random):
    coeffs = [rng.randrange(-3, 4) for _ in range(basis.n)]
    x = [0] * basis.n
    for c, row in zip(coeffs, basis.rows):
        for j in range(basis.n):
            x[j] += c * row[j]
    return tuple(x)


class TestSpanBasis:
    def test_rep21_hermite(self, rep21):
        b = build_span_basis(rep21)
        assert b.rows == ((1, 1), (0, 4))
        assert b.determinant() == 4

    def test_zero_code_is_scaled_cubic(self, zero2, zero4):
        assert build_span_basis(zero2).rows == ((4, 0), (0, 4))
        b4 = build_span_basis(zero4)
        assert all(b4.rows[i][i] == 16 for i in range(4))
        assert b4.determinant() == 16**4

    def test_e8_rows_reduce_into_code(self, e8):
        b = build_span_basis(e8)
        for row in b.rows:
            assert e8.contains(residue_word(row))

    def test_warns_on_non_self_orthogonal(self):
        c = parse_code("binary-code n=3 k=1\n111\n")
        with pytest.warns(UserWarning, match="not self-orthogonal"):
            build_span_basis(c)

    def test_contains_all_generators(self, corpus):
        for c in corpus.values():
            b = build_span_basis(c)
            n = c.n
            for w in c.codewords():
                assert b.contains(lift(w, n))
            for i in range(n):
                assert b.contains(tuple((1 << n) if j == i else 0 for j in range(n)))

    def test_determinant_power_of_two(self, corpus):
        for c in corpus.values():
            det = build_span_basis(c).determinant()
            assert det > 0 and det & (det - 1) == 0

    def test_hermite_canonical_under_generator_order(self, e8):
        gens = [lift(w, 8) for w in e8.codewords()]
        gens += [tuple(256 if j == i else 0 for j in range(8)) for i in range(8)]
        rng = random.Random(5)
        reference = hermite_form(8, gens)
        for _ in range(5):
            rng.shuffle(gens)
            assert hermite_form(8, gens) == reference

    def test_rank_deficient_rejected(self):
        with pytest.raises(ValueError, match="rank"):
            hermite_form(2, [(1, 1)])


class TestMembership:
    def test_span_examples(self, rep21):
        b = build_span_basis(rep21)
        assert b.contains((-1, 3))       # -1*(1,1) + 1*(0,4)
        assert b.contains((0, 0))
        assert not b.contains((1, -1))   # difference 2 not divisible by 4

    def test_set_examples(self, rep21, e8):
        assert set_contains(rep21, (1, 1))
        assert not set_contains(rep21, (1, 0))
        # sum of two lifted codewords: carry word 00110000 is not in the code
        x = tuple(a + b for a, b in zip(lift(0b00001111, 8), lift(0b00111100, 8)))
        assert not set_contains(e8, x)

    def test_set_handles_negatives(self, rep21):
        assert set_contains(rep21, (-1, -1))
        assert set_contains(rep21, (-4, 4))
        assert not set_contains(rep21, (-1, 0))

    def test_span_contains_set_sampled(self, corpus):
        for c in corpus.values():
            b = build_span_basis(c)
            rng = random.Random(17)
            for _ in range(1000):
                x = random_set_member(c, rng)
                assert set_contains(c, x)
                assert b.contains(x)

    def test_span_group_closure(self, corpus):
        for c in corpus.values():
            b = build_span_basis(c)
            rng = random.Random(23)
            for _ in range(1000):
                x = random_member(b, rng)
                y = random_member(b, rng)
                assert b.contains(tuple(a + v for a, v in zip(x, y)))
                assert b.contains(tuple(a - v for a, v in zip(x, y)))

    def test_residue_invariant(self, corpus):
        # every span member reduces mod 2 into the code
        for c in corpus.values():
            b = build_span_basis(c)
            for row in b.rows:
                assert c.contains(residue_word(row))
            rng = random.Random(29)
            for _ in range(200):
                assert c.contains(residue_word(random_member(b, rng)))


class TestEnumeration:
    def test_rep21(self, rep21):
        rep = enumerate_short(build_span_basis(rep21), 4)
        assert (rep.min_norm, rep.kissing) == (2, 2)
        assert rep.per_norm == {1: 0, 2: 2, 3: 0, 4: 0}

    def test_e8_oracle_confirms_112(self, e8):
        b = build_span_basis(e8)
        rep = enumerate_short(b, 4)
        assert rep.min_norm == 4
        assert rep.kissing >= weight_distribution(e8).A_d
        oracle = box_short_counts(b.rows, 4, box=2)
        assert rep.per_norm == oracle
        assert rep.kissing == 112

    def test_zero2_cap16(self, zero2):
        rep = enumerate_short(build_span_basis(zero2), 16)
        assert (rep.min_norm, rep.kissing) == (16, 4)

    def test_min_norm_le_d_and_kissing_ge_Ad(self, corpus):
        for name, c in corpus.items():
            if c.k == 0:
                continue
            wd = weight_distribution(c)
            b = build_span_basis(c)
            rep = enumerate_short(b, max(wd.d, 8), allow_large=wd.d > 16)
            assert rep.min_norm <= wd.d, name
            if rep.min_norm == wd.d:
                assert rep.kissing >= wd.A_d, name

    def test_box_oracle_agreement_small(self, small_corpus):
        for name, c in small_corpus.items():
            b = build_span_basis(c)
            cap = 16 if c.k == 0 else 8
            rep = enumerate_short(b, cap)
            assert rep.per_norm == box_short_counts(b.rows, cap), name

    def test_kissing_even(self, corpus):
        for c in corpus.values():
            wd = weight_distribution(c)
            cap = 16 if c.k == 0 else max(wd.d, 8)
            rep = enumerate_short(build_span_basis(c), cap, allow_large=cap > 16)
            if rep.min_norm is not None:
                assert rep.kissing % 2 == 0

    def test_worker_partition_determinism(self, corpus):
        for name, c in corpus.items():
            wd = weight_distribution(c)
            cap = 16 if c.k == 0 else max(wd.d, 8)
            b = build_span_basis(c)
            base = enumerate_short(b, cap, workers=1, allow_large=cap > 16)
            for w in (2, 4):
                rep = enumerate_short(b, cap, workers=w, allow_large=cap > 16)
                assert rep.per_norm == base.per_norm, (name, w)

    def test_order_independence(self, e8):
        from kisslat.code_lattice import _candidate_tasks, _count_tasks

        b = build_span_basis(e8)
        tasks = _candidate_tasks(b, 8)
        reference = _count_tasks((b.rows, b.n, tasks))
        shuffled = tasks[:]
        random.Random(31).shuffle(shuffled)
        assert _count_tasks((b.rows, b.n, shuffled)) == reference

    def test_guards(self, rep21):
        b = build_span_basis(rep21)
        with pytest.raises(ValueError, match="allow_large"):
            enumerate_short(b, 17)
        assert enumerate_short(b, 17, allow_large=True).per_norm[16] == 4


class TestClosureProbe:
    def test_rep21_closed(self, rep21):
        rep = closure_probe(rep21, trials=1000, seed=0)
        assert rep.closed and rep.passes == 1000

    def test_e8_finds_counterexamples(self, e8):
        rep = closure_probe(e8, trials=1000, seed=0)
        assert not rep.closed
        assert 0 < len(rep.counterexamples) <= 10
        for x in rep.counterexamples:
            assert not set_contains(e8, x)

    def test_zero_code_closed(self, zero2):
        assert closure_probe(zero2, trials=100, seed=0).closed

    def test_deterministic(self, e8):
        a = closure_probe(e8, trials=200, seed=4)
        b = closure_probe(e8, trials=200, seed=4)
        assert a == b


class TestVerify:
    def test_rep21(self, rep21):
        v = verify_code_lattice(rep21)
        assert v.set_closed_sampled
        assert v.norm_equals_d and v.min_norm == 2 == v.d
        assert v.kissing_ge_Ad and v.kissing == 2 and v.A_d == 1

    def test_e8(self, e8):
        v = verify_code_lattice(e8)
        assert not v.set_closed_sampled
        assert v.norm_equals_d and v.min_norm == 4
        assert v.kissing_ge_Ad and v.kissing == 112 and v.A_d == 14

    def test_rejects_non_self_orthogonal(self):
        c = parse_code("binary-code n=1 k=1\n1\n")
        with pytest.raises(ValueError, match="self-orthogonal"):
            verify_code_lattice(c)

    def test_rejects_zero_code(self, zero2):
        with pytest.raises(ValueError, match="zero code"):
            verify_code_lattice(zero2)


class TestBasisFile:
    def test_roundtrip(self, e8):
        b = build_span_basis(e8)
        parsed = parse_basis_file(format_basis_file(b))
        assert parsed.rows == b.rows and parsed.n == b.n

    def test_validation(self):
        with pytest.raises(ValueError, match="header"):
            parse_basis_file("basis n=2\n1 1\n0 4\n")
        with pytest.raises(ValueError, match="2 basis rows"):
            parse_basis_file("lattice n=2\n1 1\n")
        with pytest.raises(ValueError, match="triangular"):
            LatticeBasis(2, ((1, 1), (2, 4)))
        with pytest.raises(ValueError, match="positive"):
            LatticeBasis(2, ((1, 1), (0, -4)))
        with pytest.raises(ValueError, match="power of 2"):
            LatticeBasis(2, ((3, 1), (0, 4)))
