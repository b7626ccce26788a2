from math import comb

import numpy as np
import pytest

from kgraph_k import (
    IntMatrix,
    InvalidFamily,
    VertexMatrixFamily,
    build_complex,
    index_tuples,
    verify_complex,
)

from _oracles import random_commuting_family
from test_intlinalg import CUBE_D1, CUBE_D2, CUBE_D3, MIXED_D1, MIXED_D2, MIXED_D3
from test_model_construct import CUBE_M, MIXED_M


def closed_form_k2(fam):
    one = IntMatrix.identity(fam.n)
    t1, t2 = (one - m.T for m in fam.matrices)
    return IntMatrix.hstack([t1, t2]), IntMatrix.vstack([-t2, t1])


def closed_form_k3(fam):
    one = IntMatrix.identity(fam.n)
    z = IntMatrix.zeros(fam.n, fam.n)
    t1, t2, t3 = (one - m.T for m in fam.matrices)
    d1 = IntMatrix.hstack([t1, t2, t3])
    d2 = IntMatrix.block([[-t2, -t3, z], [t1, z, -t3], [z, t1, t2]])
    d3 = IntMatrix.vstack([t3, -t2, t1])
    return d1, d2, d3


def test_index_tuples():
    assert index_tuples(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert index_tuples(3, 0) == [()]


def test_k1():
    cx = build_complex(VertexMatrixFamily.from_lists([[[4]]]))
    assert cx.differentials == (IntMatrix.from_rows([[-3]]),)
    assert cx.ranks == (1, 1)
    assert verify_complex(cx)
    assert cx.d(0).shape == (0, 1) and cx.d(2).shape == (1, 0)


def test_k2_closed_form():
    fam = VertexMatrixFamily.from_lists([[[1, 1], [1, 1]], [[2, 0], [0, 2]]])
    cx = build_complex(fam)
    assert cx.differentials == closed_form_k2(fam)


def test_cube_hand_differentials():
    cx = build_complex(VertexMatrixFamily.from_lists(CUBE_M))
    assert [d.tolist() for d in cx.differentials] == [CUBE_D1, CUBE_D2, CUBE_D3]
    assert cx.basis_order[2] == ((1, 2), (1, 3), (2, 3))
    assert verify_complex(cx)


def test_mixed_hand_differentials():
    cx = build_complex(VertexMatrixFamily.from_lists(MIXED_M))
    assert [d.tolist() for d in cx.differentials] == [MIXED_D1, MIXED_D2, MIXED_D3]


def test_cube_composites_by_hand():
    d1, d2, d3 = (np.array(x) for x in (CUBE_D1, CUBE_D2, CUBE_D3))
    assert not (d1 @ d2).any() and not (d2 @ d3).any()


def test_noncommuting_detected():
    fam = VertexMatrixFamily.from_lists([[[0, 1], [1, 0]], [[1, 1], [1, 0]]])
    with pytest.raises(InvalidFamily):
        build_complex(fam)
    cx = build_complex(fam, check=False)
    assert not verify_complex(cx)
    m1, m2 = fam.matrices
    assert cx.d(1) @ cx.d(2) == (m1 @ m2 - m2 @ m1).T


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_random_shapes_and_squares(k):
    rng = np.random.default_rng(100 + k)
    for _ in range(8):
        fam = random_commuting_family(rng, k)
        cx = build_complex(fam)
        n = fam.n
        assert cx.ranks == tuple(comb(k, p) * n for p in range(k + 1))
        for p in range(1, k + 1):
            assert cx.d(p).shape == (comb(k, p - 1) * n, comb(k, p) * n)
        assert verify_complex(cx)
        if k == 2:
            assert cx.differentials == closed_form_k2(fam)
        if k == 3:
            assert cx.differentials == closed_form_k3(fam)
