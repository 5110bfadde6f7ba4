import random
from fractions import Fraction

from wexc.cyclotomic import Cyclotomic, root_of_unity, sqrt_minus3
from wexc.linalg import Matrix, Subspace
from wexc.matgroup import MatGroup
from wexc.repthy import (
    Character,
    Polynomial,
    inner_product,
    min_semi_invariant_degree,
    monomial_exponents,
    norm_squared,
    semi_invariants,
    sym_cube_2x2,
    sym_power_matrix,
)

z = root_of_unity
w = z(3, 1)
T3 = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
S3 = Matrix.diagonal([1, w, w * w])


def heis27():
    return MatGroup([S3, T3], name="heis27")


def type_c():
    return MatGroup(
        [Matrix.diagonal([1, -1, -1]), Matrix.diagonal([-1, 1, -1]), T3],
        name="typeC",
    )


def quaternion8():
    i = z(4, 1)
    return MatGroup(
        [Matrix.diagonal([i, -i]), Matrix([[0, 1], [-1, 0]])], name="Q8"
    )


def test_monomial_order_is_lexicographic():
    assert monomial_exponents(2, 3) == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert monomial_exponents(3, 2) == [
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    ]
    assert len(monomial_exponents(4, 3)) == 20
    assert monomial_exponents(4, 2)[3] == (1, 0, 0, 1)  # x*v
    assert monomial_exponents(4, 2)[5] == (0, 1, 1, 0)  # y*u


def test_natural_character():
    g = heis27()
    chi = Character.natural(g)
    assert chi.value(0) == 3
    # class function: constant on conjugacy classes
    for cls in g.conjugacy_classes():
        vals = {chi.value(i) for i in cls}
        assert len(vals) == 1


def test_norms_detect_irreducibility():
    assert norm_squared(Character.natural(heis27())) == 1
    assert norm_squared(Character.natural(quaternion8())) == 1
    v = Matrix([[1, 1, 1], [1, w, w * w], [1, w * w, w]]) * sqrt_minus3().inverse()
    assert norm_squared(Character.natural(MatGroup([S3, T3, v]))) == 1
    # a diagonal group fixes every coordinate line
    assert norm_squared(Character.natural(MatGroup([S3]))) == 3


def test_inner_product_requires_same_group():
    a = Character.natural(heis27())
    b = Character.natural(quaternion8())
    try:
        inner_product(a, b)
    except ValueError:
        pass
    else:
        raise AssertionError("mixed-group pairing should be rejected")


def test_sym_power_degree_one_is_inverse_transpose():
    g = heis27()
    for i in (1, 5, 11):
        m = g.element(i)
        assert sym_power_matrix(m, 1) == m.inverse().transpose()


def test_sym_power_is_multiplicative():
    g = heis27()
    rng = random.Random(8)
    for d in (2, 3):
        for _ in range(10):
            a = g.element(rng.randrange(g.order))
            b = g.element(rng.randrange(g.order))
            assert sym_power_matrix(a @ b, d) == (
                sym_power_matrix(a, d) @ sym_power_matrix(b, d)
            )


def test_sym_cube_2x2_on_diagonal():
    t = z(8, 1)
    s = sym_cube_2x2(Matrix.diagonal([t, t**7]))
    assert s == Matrix.diagonal([t**3, t, t**7, t**5])


def test_semi_invariants_type_c():
    si = semi_invariants(type_c(), 2)
    assert si, "expected degree-2 semi-invariants"
    first_char, first_space = si[0]
    assert first_char.is_trivial
    assert first_space == Subspace(6, [(1, 0, 0, 1, 0, 1)])  # x^2+y^2+z^2
    assert min_semi_invariant_degree(type_c(), 4) == 2


def test_no_low_degree_semi_invariants_for_big_group():
    v = Matrix([[1, 1, 1], [1, w, w * w], [1, w * w, w]]) * sqrt_minus3().inverse()
    e108 = MatGroup([S3, T3, v], name="E108")
    assert min_semi_invariant_degree(e108, 2) is None


def _reynolds_projector(group, ch, degree):
    """Average of conj(lambda(g)) times the symmetric power, over all g."""
    width = len(monomial_exponents(group.dimension, degree))
    acc = Matrix.zeros(width, width)
    for i in range(group.order):
        weight = ch.value_at(i).conjugate()
        acc = acc + weight * sym_power_matrix(group.element(i), degree)
    return acc * Fraction(1, group.order)


def test_semi_invariants_match_reynolds_projector():
    # full-group averaging is an independent construction of the same spaces
    for group, degree in ((type_c(), 2), (quaternion8(), 2), (heis27(), 3)):
        spaces = dict(
            (ch.sort_key(), sp) for ch, sp in semi_invariants(group, degree)
        )
        width = len(monomial_exponents(group.dimension, degree))
        for ch in group.linear_characters():
            p = _reynolds_projector(group, ch, degree)
            assert p @ p == p
            image = Subspace(width, p.transpose().rows)
            expected = spaces.get(ch.sort_key())
            if expected is None:
                assert image.dim == 0
            else:
                assert image == expected


def test_semi_invariant_witness_transforms_correctly():
    group = type_c()
    for ch, space in semi_invariants(group, 2):
        f = Polynomial(3, 2, space.basis[0])
        for i, gen in enumerate(group.generators):
            moved = f.substitute(gen.inverse())
            assert moved == f.scaled(ch.on_generator(i))


def test_polynomial_printing():
    assert str(Polynomial(3, 2, [1, 0, 0, 1, 0, 1])) == "x^2+y^2+z^2"
    assert str(Polynomial(4, 2, [0, 0, 0, 1, 0, -1, 0, 0, 0, 0])) == "x*v-y*u"
    exps = monomial_exponents(4, 4)
    xyuv = [1 if e == (1, 1, 1, 1) else 0 for e in exps]
    assert str(Polynomial(4, 4, xyuv)) == "x*y*u*v"
    assert str(Polynomial(2, 1, [2, -3])) == "2*x-3*y"
    assert str(Polynomial(2, 1, [Fraction(1, 2), 0])) == "1/2*x"
    assert str(Polynomial(2, 1, [1 + w, 0])) == "(1+E(3))*x"
    assert str(Polynomial(2, 1, [-1, 0])) == "-x"
    assert str(Polynomial(2, 2, [0, 0, 0])) == "0"
    assert str(Polynomial(2, 3, [0, 4, 0, 0])) == "4*x^2*y"


def test_polynomial_substitution():
    p = Polynomial(3, 2, [1, 0, 0, 1, 0, 1])
    assert p.substitute(T3) == p
    d = Matrix.diagonal([w, 1, 1])
    px = Polynomial(3, 1, [1, 0, 0])
    assert px.substitute(d) == px.scaled(w)


def test_polynomial_shape_validation():
    try:
        Polynomial(3, 2, [1, 2, 3])
    except ValueError:
        pass
    else:
        raise AssertionError("wrong coefficient count should be rejected")
