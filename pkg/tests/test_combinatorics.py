import json
import math
import numpy as np
import pytest
from interferencepy.combinatorics_main import (
    distributive_product,
    distributive_sum,
    dump_matrices,
    enumerate_matrices,
    expanded_sum,
    lemma2_rhs,
    matrix_class_size,
    multiplicity,
    sum_product_brute_force
)
from tests.test_fixtures import rng

def _random_instance(generator, max_total):
    """Draw (U, f_list, p) with q <= 3, ||p||_1 <= max_total and |U| <= 6."""
    q = int(generator.integers(1, 4))
    while True:
        p = tuple(int(value) for value in generator.integers(0, max_total + 1, size=q))
        if 0 < sum(p) <= max_total:
            break
    size = int(generator.integers(1, 7))
    U = list(range(size))
    tables = generator.uniform(0.0, 2.0, size=(q, size))
    f_list = [lambda u, row=row: float(row[u]) for row in tables]
    return U, f_list, p

def test_enumerate_matrices_small_classes():
    """Test the smallest matrix classes."""
    assert enumerate_matrices((1,), 1) == [((1,),)]
    assert enumerate_matrices((2,), 2) == [((1, 1),)]
    assert enumerate_matrices((1, 1), 1) == [((1,), (1,))]
    # Column permutations are distinct members.
    assert enumerate_matrices((1, 1), 2) == [((0, 1), (1, 0)), ((1, 0), (0, 1))]
    assert len(enumerate_matrices((3,), 2)) == 2

def test_enumerate_matrices_members_are_valid():
    """Test that every member has the right row sums and no empty column."""
    p = (2, 1, 2)
    for l in range(1, sum(p) + 1):
        matrices = enumerate_matrices(p, l)
        assert len(matrices) == len(set(matrices))
        for M in matrices:
            assert tuple(sum(row) for row in M) == p
            assert all(len(row) == l for row in M)
            assert all(sum(M[i][j] for i in range(len(p))) > 0 for j in range(l))

@pytest.mark.parametrize("k", range(1, 9))
def test_scalar_class_sizes_are_binomials(k):
    """Test |M_l^(k)| = C(k - 1, l - 1) for every l."""
    for l in range(1, k + 1):
        assert matrix_class_size((k,), l) == math.comb(k - 1, l - 1)
        assert len(enumerate_matrices((k,), l)) == math.comb(k - 1, l - 1)

def test_matrix_class_size_matches_enumeration():
    """Test the counted size against the enumerated class for vector exponents."""
    for p in [(1, 1), (2, 1), (2, 2), (1, 2, 1), (3, 0, 2)]:
        for l in range(1, sum(p) + 1):
            assert matrix_class_size(p, l) == len(enumerate_matrices(p, l))

def test_enumerate_matrices_rejects_bad_input():
    """Test range and input errors."""
    with pytest.raises(ValueError, match="out of range"):
        enumerate_matrices((2,), 3)
    with pytest.raises(ValueError, match="out of range"):
        enumerate_matrices((2,), 0)
    with pytest.raises(ValueError, match=r"\|\|p\|\|_1 > 0"):
        enumerate_matrices((0, 0), 1)
    with pytest.raises(ValueError):
        enumerate_matrices((1, -1), 1)

def test_multiplicity_values():
    """Test multiplicity coefficients of small matrices."""
    assert multiplicity(((1,),)) == 1
    assert multiplicity(((1, 1),)) == 2
    assert multiplicity(((2,),)) == 1
    assert multiplicity(((2, 1), (0, 3))) == 3

def test_multiplicity_is_exact_for_large_entries():
    """Test that large coefficients are exact integers."""
    value = multiplicity(((30, 30),))
    assert isinstance(value, int)
    assert value == math.comb(60, 30)

def test_multiplicity_rejects_empty_column():
    with pytest.raises(ValueError, match="sums to zero"):
        multiplicity(((1, 0), (2, 0)))

def test_multiplicities_partition_the_tuples():
    """Test that C(4, l) times the summed multiplicities of M_l^(k), over all l, counts U^k for |U| = 4."""
    k = 5
    total = 0
    for l in range(1, k + 1):
        total += sum(multiplicity(M) for M in enumerate_matrices((k,), l)) * math.comb(4, l)
    assert total == 4 ** k

def test_sum_product_brute_force_examples():
    """Test the finite-set oracle on trivial inputs."""
    assert sum_product_brute_force([], [lambda u: 1.0], lambda u: 1.0, (2,)) == 0.0
    assert sum_product_brute_force(["u"], [lambda u: 2.0], lambda u: 0.5, (2,)) == 2.0

def test_sum_product_brute_force_rejects_large_sets():
    with pytest.raises(ValueError, match="at most"):
        sum_product_brute_force(list(range(13)), [lambda u: 1.0], lambda u: 1.0, (1,))

def test_lemma2_rhs_examples():
    """Test the regrouped sum on hand-checked cases."""
    assert lemma2_rhs(["a"], [lambda u: 3.0], (4,)) == pytest.approx(81.0)
    values = {"a": 1.0, "b": 2.0}
    assert lemma2_rhs(["a", "b"], [values.get], (2,)) == pytest.approx(9.0)
    assert lemma2_rhs(["a", "b"], [lambda u: 1.0, lambda u: 1.0], (1, 1)) == pytest.approx(4.0)

def test_lemma2_rhs_matches_brute_force_with_damping(rng):
    """Test that the regrouped sum times prod g equals the sum-product oracle."""
    U = list(range(5))
    f_values = rng.uniform(0.0, 2.0, size=(2, 5))
    g_values = rng.uniform(0.2, 1.0, size=5)
    f_list = [lambda u, row=row: float(row[u]) for row in f_values]
    g = lambda u: float(g_values[u])
    expected = sum_product_brute_force(U, f_list, g, (2, 1))
    assert lemma2_rhs(U, f_list, (2, 1)) * float(np.prod(g_values)) == pytest.approx(expected, rel=1e-12)

def test_lemma2_rhs_matches_expanded_sum(rng):
    """Test the regrouping identity on random instances."""
    for _ in range(100):
        U, f_list, p = _random_instance(rng, 4)
        expected = expanded_sum(U, f_list, p)
        assert lemma2_rhs(U, f_list, p) == pytest.approx(expected, rel=1e-12, abs=1e-12)

@pytest.mark.slow
def test_lemma2_rhs_matches_expanded_sum_full_grid(rng):
    """Test the regrouping identity on 500 instances with ||p||_1 <= 6."""
    for _ in range(500):
        U, f_list, p = _random_instance(rng, 6)
        expected = expanded_sum(U, f_list, p)
        assert lemma2_rhs(U, f_list, p) == pytest.approx(expected, rel=1e-12, abs=1e-12)

def test_distributive_sides_agree(rng):
    """Test sum over U^k of prod f_i(u_i) = prod sum f_i."""
    U = list(range(4))
    tables = rng.normal(size=(3, 4))
    f_list = [lambda u, row=row: float(row[u]) for row in tables]
    assert distributive_sum(U, f_list) == pytest.approx(distributive_product(U, f_list), rel=1e-12, abs=1e-12)

def test_dump_matrices_document():
    """Test the JSON dump of every class of p = (2, 1)."""
    document = json.loads(dump_matrices((2, 1)))
    assert document["p"] == [2, 1]
    assert [entry["l"] for entry in document["classes"]] == [1, 2, 3]
    for entry in document["classes"]:
        assert entry["size"] == len(entry["matrices"]) == matrix_class_size((2, 1), entry["l"])
    single = document["classes"][0]["matrices"]
    assert single == [{"entries": [[2], [1]], "multiplicity": 1}]
