import random
from fractions import Fraction

from wexc.cyclotomic import Cyclotomic, root_of_unity, sqrt_minus3, sqrt_minus7
from wexc.linalg import Matrix, Subspace, tensor
from wexc.matgroup import MatGroup
from wexc.repthy import sym_power_matrix
from wexc.errors import CapExceeded
from wexc.classify import (
    ActionClass,
    DEFAULT_CLASSIFICATION_CAP,
    IMPRIMITIVE_MONOMIAL,
    IMPRIMITIVE_NONMONOMIAL,
    INTRANSITIVE,
    PRIMITIVE,
    check_weakly_exceptional,
    classify_action,
    has_two_block_system,
    intransitivity_witness,
    is_a5_family,
    is_monomial,
    is_transitive,
)

z = root_of_unity
w = z(3, 1)

T3 = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
S3 = Matrix.diagonal([1, w, w * w])
V3 = Matrix([[1, 1, 1], [1, w, w * w], [1, w * w, w]]) * sqrt_minus3().inverse()

Dg = Matrix.diagonal([z(8, 2), -z(8, 2)])
J = Matrix([[0, 1], [-1, 0]])
F = Matrix([[z(8, 7), z(8, 7)], [z(8, 5), z(8, 1)]]) * (
    (z(8, 1) - z(8, 3)) * Cyclotomic(1, [Fraction(1, 2)])
)
G8 = Matrix([[0, z(8, 1)], [-z(8, 7), 0]])
A2 = Matrix.diagonal([z(4, 1), z(4, 3)])
A3 = Matrix.diagonal([z(6, 1), z(6, 5)])
I2 = Matrix.identity(2)
TAU = Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def heisenberg27():
    return MatGroup([S3, T3], name="heis27")


def sign_triple():
    return MatGroup(
        [Matrix.diagonal([1, -1, -1]), Matrix.diagonal([-1, 1, -1]), T3],
        name="typeC",
    )


def hessian108():
    return MatGroup([S3, T3, V3], name="E108")


def klein168():
    s7 = Matrix.diagonal([z(7, 1), z(7, 4), z(7, 2)])
    a, b, c = z(7, 1) - z(7, 6), z(7, 2) - z(7, 5), z(7, 4) - z(7, 3)
    h = Matrix([[a, b, c], [b, c, a], [c, a, b]]) * (
        sqrt_minus7() * Cyclotomic(1, [Fraction(1, 7)])
    )
    return MatGroup([s7, T3, h], name="K168")


def icosahedral_pair():
    s = Matrix.diagonal([z(5, 3), z(5, 2)])
    inv_sqrt5 = (Cyclotomic(1, [1]) + z(5, 1) * 2 + z(5, 4) * 2) * Cyclotomic(
        1, [Fraction(1, 5)]
    )
    t = Matrix(
        [
            [-z(5, 1) + z(5, 4), z(5, 2) - z(5, 3)],
            [z(5, 2) - z(5, 3), z(5, 1) - z(5, 4)],
        ]
    ) * inv_sqrt5
    return s, t


def icosahedral_dim3():
    s, t = icosahedral_pair()
    return MatGroup(
        [sym_power_matrix(s, 2), sym_power_matrix(t, 2)], name="A5dim3"
    )


def block_intransitive():
    return MatGroup(
        [tensor(A3, I2), tensor(I2, A3), tensor(A2, A2), tensor(J, J)],
        name="blocks-intransitive",
    )


def block_transitive():
    return MatGroup(
        [tensor(A3, I2), tensor(I2, A3), tensor(A2, J), tensor(J, A2)],
        name="blocks-transitive",
    )


def octa_pair_half():
    return MatGroup(
        [
            tensor(Dg, I2),
            tensor(J, I2),
            tensor(I2, Dg),
            tensor(I2, J),
            tensor(F, F),
            tensor(G8, G8),
        ],
        name="octa-pair-half",
    )


def octa_pair_extended():
    g = octa_pair_half()
    return MatGroup(list(g.generators) + [tensor(F, I2)], name="octa-extended")


def octa_pair_swap():
    return MatGroup(
        [
            TAU,
            tensor(Dg, I2),
            tensor(J, I2),
            tensor(I2, Dg),
            tensor(I2, J),
            tensor(F, F),
        ],
        name="octa-pair-swap",
    )


def plane_pair_group():
    return MatGroup(
        [
            tensor(I2, Dg),
            tensor(I2, J),
            tensor(I2, F),
            tensor(A3, I2),
            tensor(J, G8),
        ],
        name="plane-pair",
    )


def line(n, vec):
    return Subspace(n, [vec])


def test_transitivity_dim3():
    assert is_transitive(heisenberg27())
    assert is_transitive(hessian108())
    assert not is_transitive(MatGroup([S3], name="diag"))
    assert not is_transitive(MatGroup([T3], name="cycle"))


def test_intransitivity_witness_is_invariant():
    g = MatGroup([S3], name="diag")
    space = intransitivity_witness(g)
    assert space is not None
    assert 0 < space.dim < 3
    for m in g.generators:
        assert space.image(m) == space
    assert intransitivity_witness(hessian108()) is None


def test_classify_heisenberg_monomial():
    ac = classify_action(heisenberg27())
    assert ac.kind == IMPRIMITIVE_MONOMIAL
    assert len(ac.witness) == 3
    axes = {line(3, (1, 0, 0)), line(3, (0, 1, 0)), line(3, (0, 0, 1))}
    assert set(ac.witness) == axes


def test_classify_sign_triple_monomial():
    assert classify_action(sign_triple()).kind == IMPRIMITIVE_MONOMIAL


def test_classify_dim3_primitives():
    assert classify_action(hessian108()).kind == PRIMITIVE
    assert classify_action(klein168()).kind == PRIMITIVE
    g = icosahedral_dim3()
    g.close()
    assert g.order == 60
    assert classify_action(g).kind == PRIMITIVE


def test_classify_diagonal_intransitive():
    ac = classify_action(MatGroup([S3], name="diag"))
    assert ac.kind == INTRANSITIVE
    assert ac.witness == (line(3, (1, 0, 0)),)


def test_classify_block_intransitive():
    g = block_intransitive()
    g.close()
    assert g.order == 72
    ac = classify_action(g)
    assert ac.kind == INTRANSITIVE
    assert ac.witness == (Subspace(4, [(1, 0, 0, 0), (0, 0, 0, 1)]),)


def test_classify_block_transitive_monomial():
    g = block_transitive()
    g.close()
    assert g.order == 72
    ac = classify_action(g)
    assert ac.kind == IMPRIMITIVE_MONOMIAL
    axes = {
        line(4, (1, 0, 0, 0)),
        line(4, (0, 1, 0, 0)),
        line(4, (0, 0, 1, 0)),
        line(4, (0, 0, 0, 1)),
    }
    assert set(ac.witness) == axes


def test_classify_octa_pair_half_monomial():
    g = octa_pair_half()
    g.close()
    assert g.order == 192
    ac = classify_action(g)
    assert ac.kind == IMPRIMITIVE_MONOMIAL
    expected = {
        line(4, (0, 1, -1, 0)),
        line(4, (0, 1, 1, 0)),
        line(4, (1, 0, 0, 1)),
        line(4, (1, 0, 0, -1)),
    }
    assert set(ac.witness) == expected
    # the four lines really are permuted by every generator
    for m in g.generators:
        assert {s.image(m) for s in ac.witness} == expected


def test_classify_octa_extended_primitive():
    g = octa_pair_extended()
    g.close()
    assert g.order == 576
    ac = classify_action(g)
    assert ac.kind == PRIMITIVE
    assert ac.witness == ()


def test_classify_octa_pair_swap_monomial():
    g = octa_pair_swap()
    g.close()
    assert g.order == 192
    ac = classify_action(g)
    assert ac.kind == IMPRIMITIVE_MONOMIAL
    expected = {
        line(4, (0, 1, -1, 0)),
        line(4, (0, 1, 1, 0)),
        line(4, (1, 0, 0, 1)),
        line(4, (1, 0, 0, -1)),
    }
    assert set(ac.witness) == expected


def test_classify_plane_pair_nonmonomial():
    g = plane_pair_group()
    g.close()
    assert g.order == 144
    ac = classify_action(g)
    assert ac.kind == IMPRIMITIVE_NONMONOMIAL
    b1 = Subspace(4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    b2 = Subspace(4, [(0, 0, 1, 0), (0, 0, 0, 1)])
    assert set(ac.witness) == {b1, b2}
    for m in g.generators:
        images = {b1.image(m), b2.image(m)}
        assert images == {b1, b2}


def test_monomial_requires_spanning_lines():
    ok, lines = is_monomial(heisenberg27())
    assert ok
    total = lines[0]
    for s in lines[1:]:
        total = total.sum(s)
    assert total.dim == 3
    ok, lines = is_monomial(hessian108())
    assert not ok and lines is None


def test_two_block_system_errors_in_dim3():
    try:
        has_two_block_system(heisenberg27())
        assert False
    except ValueError:
        pass


def test_two_block_system_found_and_absent():
    found, blocks = has_two_block_system(plane_pair_group())
    assert found
    assert blocks[0].dim == 2 and blocks[1].dim == 2
    found, blocks = has_two_block_system(octa_pair_extended())
    assert not found and blocks is None


def test_classification_cap_spares_intransitive():
    g = block_intransitive()
    assert classify_action(g, cap=50).kind == INTRANSITIVE
    try:
        classify_action(block_transitive(), cap=50)
        assert False
    except CapExceeded:
        pass
    assert DEFAULT_CLASSIFICATION_CAP == 2000


def test_verdict_heisenberg():
    v = check_weakly_exceptional(heisenberg27(), 3)
    assert v.name == "heis27"
    assert v.order == 27
    assert v.transitive
    assert v.min_semi_invariant_degree is None
    assert v.weakly_exceptional
    assert v.a5_flag is None
    assert v.witness is None


def test_verdict_sign_triple():
    v = check_weakly_exceptional(sign_triple(), 3)
    assert v.order == 12
    assert v.transitive
    assert v.min_semi_invariant_degree == 2
    assert not v.weakly_exceptional
    assert v.witness == "x^2+y^2+z^2"


def test_verdict_dim3_exceptional_pair():
    for factory, order in ((hessian108, 108), (klein168, 168)):
        v = check_weakly_exceptional(factory(), 3)
        assert v.order == order
        assert v.weakly_exceptional
        assert v.min_semi_invariant_degree is None


def test_verdict_icosahedral_dim3():
    v = check_weakly_exceptional(icosahedral_dim3(), 3)
    assert v.order == 60
    assert v.transitive
    assert v.min_semi_invariant_degree == 2
    assert not v.weakly_exceptional
    assert v.witness == "x*z-1/4*y^2"


def test_verdict_dim4_quadric_families():
    cases = [
        (block_transitive, 72),
        (octa_pair_half, 192),
        (octa_pair_extended, 576),
        (octa_pair_swap, 192),
        (plane_pair_group, 144),
    ]
    for factory, order in cases:
        v = check_weakly_exceptional(factory(), 4)
        assert v.order == order
        assert v.transitive
        assert v.min_semi_invariant_degree == 2
        assert not v.weakly_exceptional
        assert v.a5_flag is None
        assert v.witness == "x*v-y*u"


def test_verdict_dim4_intransitive():
    v = check_weakly_exceptional(block_intransitive(), 4)
    assert not v.transitive
    assert not v.weakly_exceptional
    assert v.min_semi_invariant_degree == 2
    assert v.witness == "x*v"


def test_verdict_dimension_validation():
    try:
        check_weakly_exceptional(heisenberg27(), 4)
        assert False
    except ValueError:
        pass
    try:
        check_weakly_exceptional(heisenberg27(), 2)
        assert False
    except ValueError:
        pass


def test_a5_family_detection():
    assert is_a5_family(icosahedral_dim3())
    assert not is_a5_family(heisenberg27())
    assert not is_a5_family(klein168())


def test_transitive_matches_orbit_spans():
    # transitive actions move every nonzero vector across the whole space
    rng = random.Random(41)
    transitive = [hessian108(), block_transitive()]
    intransitive = [MatGroup([S3], name="diag"), block_intransitive()]
    for g in transitive:
        g.close()
        n = g.dimension
        for _ in range(6):
            vec = tuple(rng.randrange(-3, 4) for _ in range(n))
            if not any(vec):
                vec = (1,) * n
            space = Subspace(n, [vec])
            frontier = [vec]
            while frontier and space.dim < n:
                v = frontier.pop()
                for m in g.generators:
                    img = m.apply(v)
                    if not space.contains(img):
                        space = space.sum(Subspace(n, [img]))
                        frontier.append(img)
            assert space.dim == n
    for g in intransitive:
        assert intransitivity_witness(g) is not None


def test_action_class_is_frozen():
    ac = ActionClass(PRIMITIVE)
    try:
        ac.kind = INTRANSITIVE
        assert False
    except AttributeError:
        pass
