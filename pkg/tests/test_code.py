import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcdlab.code import LinearCode, make_code
from lcdlab.families import build_generator, family_a_vector
from lcdlab.gf2 import BitMatrix, matmul, rref


def bitmat(rows):
    return BitMatrix.from_rows(rows)


def random_code(rng, n=None, k=None) -> LinearCode:
    n = n or rng.randint(2, 10)
    k = k or rng.randint(1, min(n, 5))
    while True:
        rows = [rng.getrandbits(n) for _ in range(k)]
        m = BitMatrix(k, n, tuple(rows))
        if rref(m).rank == k:
            return make_code(m)


def test_make_code_full_space():
    c = make_code(BitMatrix.identity(5))
    assert (c.n, c.k, c.min_weight()) == (5, 5, 1)


def test_make_code_322():
    c = make_code(bitmat([[1, 0, 1], [0, 1, 1]]))
    assert (c.n, c.k, c.min_weight()) == (3, 2, 2)
    assert sorted(c.codewords()) == [0b000, 0b011, 0b101, 0b110]


def test_make_code_rejects_rank_deficient():
    with pytest.raises(ValueError):
        make_code(bitmat([[1, 1], [1, 1]]))


def test_dual_of_322():
    d = make_code(bitmat([[1, 0, 1], [0, 1, 1]])).dual()
    assert (d.n, d.k, d.min_weight()) == (3, 1, 3)
    assert d.generator.data == (0b111,)


def test_dual_self_dual_repetition():
    c = make_code(bitmat([[1, 1]]))
    assert c.dual() == c


def test_biduality_random():
    rng = random.Random(11)
    for _ in range(25):
        c = random_code(rng)
        assert c.dual().dual() == c
        assert c.k + c.dual().k == c.n


def test_lcd_status_examples():
    assert make_code(BitMatrix.identity(4)).lcd_status() == (0, True)
    assert make_code(bitmat([[1, 1]])).lcd_status() == (1, False)
    assert make_code(bitmat([[1, 0, 1], [0, 1, 1]])).lcd_status() == (0, True)


def test_lcd_status_generator_invariant():
    rng = random.Random(5)
    for _ in range(25):
        c = random_code(rng)
        status = c.lcd_status()
        # random invertible row transform
        while True:
            t = BitMatrix(c.k, c.k,
                          tuple(rng.getrandbits(c.k) for _ in range(c.k)))
            if rref(t).rank == c.k:
                break
        c2 = LinearCode(matmul(t, c.generator))
        assert c2 == c and c2.lcd_status() == status
        # random column permutation
        perm = list(range(c.n))
        rng.shuffle(perm)
        rows = tuple(sum(((r >> j) & 1) << perm[j] for j in range(c.n))
                     for r in c.generator.data)
        c3 = make_code(BitMatrix(c.k, c.n, rows))
        assert c3.lcd_status() == status


def test_hull_symmetry():
    rng = random.Random(7)
    for _ in range(25):
        c = random_code(rng)
        if c.k == c.n:
            continue
        assert c.hull_dim() == c.dual().hull_dim()


def test_weight_enumerator_examples():
    # identity block only: binomial counts
    c = make_code(build_generator(4, [0] * 15))
    assert c.weight_enumerator().as_dict() == {0: 1, 1: 4, 2: 6, 3: 4, 4: 1}
    c19 = make_code(build_generator(4, family_a_vector(4, 4, 1)))
    assert c19.min_weight() == 9
    assert make_code(bitmat([[1, 1]])).weight_enumerator().as_dict() == {0: 1, 2: 1}


def test_weight_enumerator_mass():
    rng = random.Random(3)
    for _ in range(25):
        c = random_code(rng)
        we = c.weight_enumerator()
        assert we.total() == 1 << c.k
        assert we.as_dict()[0] == 1
        assert c.min_weight() == min(w for w, _ in we.coeffs if w > 0)


def test_enumeration_cap():
    c = make_code(BitMatrix.identity(29))
    with pytest.raises(ValueError, match="enumeration cap"):
        c.weight_enumerator()


def test_shorten_examples():
    c = make_code(bitmat([[1, 0, 1], [0, 1, 1]]))
    s = c.shorten(2)
    assert (s.n, s.k, s.min_weight()) == (2, 1, 2)
    full = make_code(BitMatrix.identity(6))
    assert (full.shorten(3).n, full.shorten(3).k) == (5, 5)
    # shortening at a zero coordinate keeps the dimension
    z = make_code(bitmat([[1, 0, 0], [0, 1, 0]]))
    assert (z.shorten(2).n, z.shorten(2).k) == (2, 2)


def test_shorten_weight_property():
    rng = random.Random(13)
    for _ in range(30):
        c = random_code(rng)
        if c.min_weight() < 2:
            continue
        for i in range(c.n):
            s = c.shorten(i)
            if s.k == c.k - 1 and s.k >= 1:
                assert s.min_weight() >= c.min_weight()


def test_column_types():
    c = make_code(BitMatrix.identity(2))
    tm = c.column_types()
    assert tm.mult == {1: 1, 2: 1} and tm.zero_count == 0
    # permuting columns leaves the multiset alone
    c2 = make_code(bitmat([[0, 1], [1, 0]]))
    assert c2.column_types() == tm


def test_column_types_recover_family_vector():
    vec = family_a_vector(4, 3, 1)
    c = make_code(build_generator(4, vec))
    tm = c.column_types()
    assert tm.zero_count == 0 and tm.n == c.n
    # identity columns contribute one of each unit type on top of vec
    from lcdlab.tables import DIM4_COLUMN_TYPES
    expect = [0] * 16
    for t in (1, 2, 4, 8):
        expect[t] += 1
    for mult, t in zip(vec, DIM4_COLUMN_TYPES):
        expect[t] += mult
    assert tm.counts == tuple(expect)


def test_type_multiplicity_generator_roundtrip():
    rng = random.Random(17)
    for _ in range(20):
        c = random_code(rng)
        tm = c.column_types()
        rebuilt = make_code(tm.generator())
        assert rebuilt.column_types() == tm
        assert rebuilt.weight_enumerator() == c.weight_enumerator()


def test_equivalence_basics():
    c1 = make_code(bitmat([[1, 0, 1], [0, 1, 1]]))
    c2 = make_code(bitmat([[1, 1, 0], [0, 1, 1]]))
    assert c1.equivalent(c2)
    rng = random.Random(23)
    c = random_code(rng, n=8, k=3)
    while True:
        t = BitMatrix(3, 3, tuple(rng.getrandbits(3) for _ in range(3)))
        if rref(t).rank == 3:
            break
    assert LinearCode(matmul(t, c.generator)).canonical_key() == c.canonical_key()


def test_zero_dimensional_dual():
    c = make_code(BitMatrix.identity(4))
    d = c.dual()
    assert (d.n, d.k) == (4, 0)
    assert d.weight_enumerator().as_dict() == {0: 1}
    with pytest.raises(ValueError):
        d.min_weight()
    assert d.dual() == c


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(1, 4), st.integers(0, 2 ** 32 - 1))
def test_dim_sum_property(n, k, seed):
    rng = random.Random(seed)
    k = min(k, n)
    c = random_code(rng, n=n, k=k)
    assert c.k + c.dual().k == n
