import random
from fractions import Fraction

from wexc.cyclotomic import Cyclotomic, parse_cyclotomic, root_of_unity
from wexc.linalg import (
    IntMatrix,
    Matrix,
    Subspace,
    eigenspace,
    hermite_insert,
    int_determinant,
    kernel,
    smith_normal_form,
    tensor,
)

z = root_of_unity


def test_matrix_acts_on_columns():
    # the 3-cycle below sends e1 to e3, not e2; this pins the convention
    t = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert t.apply((1, 0, 0)) == (Cyclotomic.zero(), Cyclotomic.zero(), Cyclotomic.one())
    line = Subspace(3, [(1, 0, 0)])
    assert line.image(t) == Subspace(3, [(0, 0, 1)])


def test_product_inverse_determinant():
    w = z(3, 1)
    scale = parse_cyclotomic("1/(1+2*E(3))")
    v = Matrix([[1, 1, 1], [1, w, w**2], [1, w**2, w]]) * scale
    assert v.determinant() == 1
    assert v @ v.inverse() == Matrix.identity(3)
    t = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert t.determinant() == 1
    assert t.trace() == 0
    assert (t @ t @ t) == Matrix.identity(3)


def test_singular_matrix_rejected():
    m = Matrix([[1, 2], [2, 4]])
    assert m.determinant() == 0
    try:
        m.inverse()
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("singular inverse should fail")


def test_kernel_annihilates():
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    k = kernel(m)
    assert k.dim == 2
    for v in k.basis:
        assert all(x.is_zero() for x in m.apply(v))
    assert kernel(Matrix.identity(3)).dim == 0


def test_eigenspace():
    w = z(3, 1)
    d = Matrix.diagonal([w, w, 1])
    assert eigenspace(d, w) == Subspace(3, [(1, 0, 0), (0, 1, 0)])
    assert eigenspace(d, 1).dim == 1
    assert eigenspace(d, w**2).dim == 0


def test_tensor_is_two_sided_action():
    # tensor(A, B) on a flattened 2x2 array X matches A X B^T
    rng = random.Random(4)
    for _ in range(20):
        a = Matrix([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        b = Matrix([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        x = Matrix([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        flat = tuple(v for row in x.rows for v in row)
        lhs = tensor(a, b).apply(flat)
        rhs_m = a @ x @ b.transpose()
        assert lhs == tuple(v for row in rhs_m.rows for v in row)


def test_tensor_is_multiplicative():
    rng = random.Random(5)
    for _ in range(10):
        a1, a2, b1, b2 = (
            Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
            for _ in range(4)
        )
        assert tensor(a1 @ a2, b1 @ b2) == tensor(a1, b1) @ tensor(a2, b2)


def test_subspace_lattice():
    u1 = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    u2 = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    assert u1.sum(u2) == Subspace.full(3)
    assert u1.intersect(u2) == Subspace(3, [(0, 1, 0)])
    assert u1.contains((2, 3, 0))
    assert not u1.contains((0, 0, 1))
    assert u1.contains_subspace(Subspace(3, [(1, 1, 0)]))
    assert Subspace.trivial(3).dim == 0
    assert u1.intersect(Subspace.trivial(3)).dim == 0


def test_subspace_basis_is_canonical():
    # same space, different spanning sets, identical stored basis
    a = Subspace(3, [(1, 1, 0), (0, 2, 0)])
    b = Subspace(3, [(3, 0, 0), (1, 5, 0)])
    assert a == b
    assert a.basis == b.basis
    assert hash(a) == hash(b)


def test_subspace_with_cyclotomic_entries():
    i = z(4, 1)
    s = Subspace(2, [(1, i)])
    assert s.contains((i, -1))
    assert not s.contains((1, 1))


def test_smith_normal_form_invariants():
    assert smith_normal_form([[2, 0], [0, 3]]) == (1, 6)
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (1, 1, 1)
    # zero matrix: no invariants, cokernel is free of rank 2
    assert smith_normal_form([[0, 0], [0, 0]]) == ()


def _matmul_int(p, q):
    return [
        [sum(p[i][k] * q[k][j] for k in range(len(q))) for j in range(len(q[0]))]
        for i in range(len(p))
    ]


def test_smith_normal_form_transforms_random():
    rng = random.Random(3)
    for _ in range(120):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        inv, u, v = smith_normal_form(a, with_transforms=True)
        d = _matmul_int(_matmul_int(u, a), v)
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0
        diag = [d[i][i] for i in range(min(m, n)) if d[i][i]]
        assert tuple(diag) == inv
        for x, y in zip(diag, diag[1:]):
            assert y % x == 0
        assert abs(int_determinant(u)) == 1
        assert abs(int_determinant(v)) == 1


def test_hermite_insert_builds_lattice_basis():
    rows = []
    hermite_insert(rows, [2, 0, 4])
    hermite_insert(rows, [0, 3, 0])
    hermite_insert(rows, [1, 0, 2])
    assert rows == [[1, 0, 2], [0, 3, 0]]
    # inserting a vector already in the span changes nothing
    hermite_insert(rows, [2, 3, 4])
    assert rows == [[1, 0, 2], [0, 3, 0]]


def test_hermite_insert_matches_direct_snf():
    rng = random.Random(6)
    for _ in range(60):
        k = rng.randint(1, 4)
        vecs = [
            [rng.randint(-6, 6) for _ in range(k)] for _ in range(rng.randint(1, 6))
        ]
        rows = []
        for v in vecs:
            hermite_insert(rows, v)
        if not rows:
            continue
        assert smith_normal_form(rows) == smith_normal_form(vecs)


def test_int_matrix_wrapper():
    m = IntMatrix([[4, 0], [0, 6]])
    assert m.smith_normal_form() == (2, 12)


def test_matrix_shape_errors():
    try:
        Matrix([[1, 2], [3]])
    except ValueError:
        pass
    else:
        raise AssertionError("ragged input should be rejected")
    a = Matrix([[1, 2]])
    b = Matrix([[1, 2]])
    try:
        a @ b
    except ValueError:
        pass
    else:
        raise AssertionError("shape mismatch should be rejected")
