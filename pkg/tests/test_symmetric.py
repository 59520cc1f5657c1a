import math

import pytest

from qkhilbert.prolong.linalg import LinearMap, kron
from qkhilbert.prolong.symmetric import (
    comultiplication,
    divided_product,
    iota,
    multi_indices,
    sym_dim,
    sym_space,
)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_dimensions(d):
    for m in range(6):
        assert sym_space(d, m).dim == sym_dim(d, m) == math.comb(d + m - 1, m)
        assert len(set(multi_indices(d, m))) == sym_space(d, m).dim


def test_multi_index_order():
    assert multi_indices(2, 2) == ((2, 0), (1, 1), (0, 2))


@pytest.mark.parametrize("d", [2, 3])
def test_coassociativity(d):
    for total in range(7):
        for a in range(total + 1):
            for b in range(total - a + 1):
                c = total - a - b
                left = kron(comultiplication(d, a, b), LinearMap.identity(sym_dim(d, c))) \
                    @ comultiplication(d, a + b, c)
                right = kron(LinearMap.identity(sym_dim(d, a)), comultiplication(d, b, c)) \
                    @ comultiplication(d, a, b + c)
                assert left == right


@pytest.mark.parametrize("d", [2, 3])
def test_iota_compatible_with_delta(d):
    # (iota_k (x) iota_l) o Delta_{k,l} = iota_{k+l} under V^(x)k (x) V^(x)l = V^(x)(k+l)
    for total in range(5):
        for k in range(total + 1):
            l = total - k
            lhs = kron(iota(d, k), iota(d, l)) @ comultiplication(d, k, l)
            assert lhs == iota(d, total)


def test_iota_is_injective_and_symmetric():
    d, k = 3, 3
    I = iota(d, k)
    assert I.rank() == sym_dim(d, k)
    for col in I.columns():
        assert all(v == 1 for v in col.values())


def test_divided_product_matches_monomials():
    # e^(a) = x^a / a!, so e^(a) e^(b) = (a+b)! / (a! b!) e^(a+b)
    assert divided_product((1, 0), (1, 0)) == (2, (2, 0))
    assert divided_product((1, 2), (0, 1)) == (3, (1, 3))
    fact = lambda a: math.prod(math.factorial(x) for x in a)
    for a in multi_indices(3, 2):
        for b in multi_indices(3, 2):
            c, s = divided_product(a, b)
            assert s == tuple(x + y for x, y in zip(a, b))
            assert c * fact(a) * fact(b) == fact(s)
