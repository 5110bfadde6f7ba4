"""Action taxonomy and weak-exceptionality verdicts in dimensions 3 and 4.

The taxonomy sorts a finite linear group action into four mutually
exclusive kinds: ``Intransitive`` (a proper invariant subspace exists),
``ImprimitiveMonomial`` (transitive, permuting a spanning set of
independent lines), ``ImprimitiveNonMonomial`` (transitive, permuting a
pair of two-dimensional blocks but no line system; dimension 4 only),
and ``Primitive``.

The weak-exceptionality verdict is separate from the taxonomy and is
never capped: a transitive action is weakly exceptional when it admits
no semi-invariant of degree below the dimension and, in dimension 4,
its projective image is not the simple group of order 60.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cyclotomic import root_of_unity
from .errors import CapExceeded, InternalInvariantError
from .linalg import Matrix, Subspace, eigenspace, kernel
from .matgroup import MatGroup
from .repthy import Character, Polynomial, norm_squared, semi_invariants

DEFAULT_CLASSIFICATION_CAP = 2000

INTRANSITIVE = "Intransitive"
IMPRIMITIVE_MONOMIAL = "ImprimitiveMonomial"
IMPRIMITIVE_NONMONOMIAL = "ImprimitiveNonMonomial"
PRIMITIVE = "Primitive"


@dataclass(frozen=True)
class ActionClass:
    """A taxonomy tag plus the subspaces that witness it.

    `witness` holds the invariant subspace (one entry) for an
    intransitive action, the permuted lines or blocks for an imprimitive
    one, and is empty for a primitive action or when no subspace witness
    was found.
    """

    kind: str
    witness: tuple[Subspace, ...] = ()


@dataclass(frozen=True)
class Verdict:
    name: str
    dimension: int
    order: int
    transitive: bool
    min_semi_invariant_degree: int | None
    weakly_exceptional: bool
    a5_flag: bool | None = None
    action_class: str | None = None
    witness: str | None = None


def is_transitive(group: MatGroup) -> bool:
    """Whether the natural action is transitive (no invariant subspace)."""
    return norm_squared(Character.natural(group)) == 1


def _orbit_span(group: MatGroup, start) -> Subspace:
    """Smallest invariant subspace containing `start`."""
    n = group.dimension
    space = Subspace(n, [start])
    frontier = [tuple(start)]
    while frontier and space.dim < n:
        v = frontier.pop()
        for g in group.generators:
            w = g.apply(v)
            if not space.contains(w):
                space = space.sum(Subspace(n, [w]))
                frontier.append(w)
    return space


def intransitivity_witness(group: MatGroup) -> Subspace | None:
    """A proper nonzero invariant subspace, if the seed scan finds one.

    Scans the orbit spans of the standard basis vectors and then of the
    all-ones vector.  For an intransitive action one of these usually
    generates a proper submodule; when none does, the caller reports
    intransitivity without a subspace witness.
    """
    n = group.dimension
    seeds = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seeds.append((1,) * n)
    for seed in seeds:
        space = _orbit_span(group, seed)
        if 0 < space.dim < n:
            return space
    return None


def _line_orbit(
    group: MatGroup, line: Subspace, count: int
) -> tuple[Subspace, ...] | None:
    """Orbit of a line under the generators, or None if it is not a
    system of `count` independent lines."""
    lines = [line]
    frontier = [line]
    while frontier:
        current = frontier.pop()
        for g in group.generators:
            img = current.image(g)
            if img not in lines:
                if len(lines) == count:
                    return None
                lines.append(img)
                frontier.append(img)
    if len(lines) != count:
        return None
    total = lines[0]
    for s in lines[1:]:
        total = total.sum(s)
    if total.dim != count:
        return None
    return tuple(lines)


def is_monomial(group: MatGroup) -> tuple[bool, tuple[Subspace, ...] | None]:
    """Whether a transitive action permutes N independent lines.

    Requires transitivity.  Searches the point stabilizers of the
    transitive actions on N points; for each, a linear character of the
    stabilizer whose eigenline exists gives a candidate line, and its
    orbit is validated as a spanning system of N lines.
    """
    group.close()
    n = group.dimension
    for action in group.enumerate_transitive_homs(n):
        stabilizer = action.point_stabilizer(0)
        for psi in stabilizer.linear_characters():
            rows = []
            for j, h in enumerate(stabilizer.generators):
                shifted = h - Matrix.scalar(n, psi.on_generator(j))
                rows.extend(shifted.rows)
            line = kernel(Matrix(rows))
            if line.dim != 1:
                continue
            lines = _line_orbit(group, line, n)
            if lines is not None:
                return True, lines
    return False, None


def _dim_two_splits(spaces: list[Subspace]):
    """Ways to split eigenspaces into two groups of total dimension 2."""
    for r in (1, 2):
        for combo in itertools.combinations(range(len(spaces)), r):
            if 0 not in combo:
                continue
            if sum(spaces[i].dim for i in combo) != 2:
                continue
            first = spaces[combo[0]]
            for i in combo[1:]:
                first = first.sum(spaces[i])
            rest = [spaces[i] for i in range(len(spaces)) if i not in combo]
            second = rest[0]
            for s in rest[1:]:
                second = second.sum(s)
            yield first, second


def _blocks_valid(group: MatGroup, b1: Subspace, b2: Subspace) -> bool:
    if b1.dim != 2 or b2.dim != 2 or b1.intersect(b2).dim != 0:
        return False
    for g in group.generators:
        i1, i2 = b1.image(g), b2.image(g)
        if not ((i1 == b1 and i2 == b2) or (i1 == b2 and i2 == b1)):
            return False
    return True


def _recover_blocks(
    group: MatGroup, kernel_indices: list[int]
) -> tuple[Subspace, Subspace]:
    for i in kernel_indices:
        if i == 0:
            continue
        order = group.element_order(i)
        m = group.element(i)
        spaces = []
        for k in range(order):
            e = eigenspace(m, root_of_unity(order, k))
            if e.dim:
                spaces.append(e)
        if len(spaces) < 2:
            continue  # scalar action cannot separate the blocks
        for b1, b2 in _dim_two_splits(spaces):
            if _blocks_valid(group, b1, b2):
                return b1, b2
    raise InternalInvariantError(
        "induction criterion holds but no eigenvalue split yields blocks"
    )


def has_two_block_system(
    group: MatGroup,
) -> tuple[bool, tuple[Subspace, Subspace] | None]:
    """Whether a transitive 4-dimensional action permutes two planes.

    Requires transitivity.  The action is induced from an index-2
    subgroup exactly when its character vanishes outside the kernel of
    some order-2 linear character; the blocks are then recovered from an
    eigenvalue split of a kernel element and validated.
    """
    group.close()
    if group.dimension != 4:
        raise ValueError("two-block systems only arise in dimension 4")
    _, _, trace_rows = group.packed_traces()
    for lam in group.linear_characters():
        if lam.is_trivial:
            continue
        if any((2 * w) % lam.modulus for w in lam.weights):
            continue
        inside = [i for i in range(group.order) if lam.exponent_at(i) == 0]
        if 2 * len(inside) != group.order:
            raise InternalInvariantError("order-2 character with wrong kernel")
        if any(trace_rows[i].any() for i in range(group.order) if lam.exponent_at(i)):
            continue
        return True, _recover_blocks(group, inside)
    return False, None


def classify_action(
    group: MatGroup, cap: int = DEFAULT_CLASSIFICATION_CAP
) -> ActionClass:
    """Sort the action into its taxonomy class.

    The transitivity stage is uncapped; the imprimitivity stages refuse
    groups larger than `cap`.
    """
    group.close()
    if not is_transitive(group):
        witness = intransitivity_witness(group)
        return ActionClass(INTRANSITIVE, (witness,) if witness else ())
    if group.order > cap:
        raise CapExceeded(
            f"group order {group.order} exceeds classification cap {cap}"
        )
    monomial, lines = is_monomial(group)
    if monomial:
        assert lines is not None
        return ActionClass(IMPRIMITIVE_MONOMIAL, lines)
    if group.dimension == 4:
        induced, blocks = has_two_block_system(group)
        if induced:
            assert blocks is not None
            return ActionClass(IMPRIMITIVE_NONMONOMIAL, blocks)
    # in dimension 3 the only block size is 1, so imprimitive = monomial
    return ActionClass(PRIMITIVE)


def is_a5_family(group: MatGroup) -> bool:
    """Whether the projective image is the simple group of order 60."""
    group.close()
    if group.projective_order() != 60:
        return False
    return group.projective_quotient().is_simple()


def _lowest_semi_invariant(
    group: MatGroup, max_degree: int
) -> tuple[int | None, Polynomial | None]:
    for degree in range(1, max_degree + 1):
        found = semi_invariants(group, degree)
        if found:
            _, space = found[0]
            return degree, Polynomial(group.dimension, degree, space.basis[0])
    return None, None


def _format_vector(vec) -> str:
    return "(" + ", ".join(str(c) for c in vec) + ")"


def _format_subspace(space: Subspace) -> str:
    return "span{" + "; ".join(_format_vector(v) for v in space.basis) + "}"


def check_weakly_exceptional(group: MatGroup, dimension: int) -> Verdict:
    """The weak-exceptionality verdict for a 3- or 4-dimensional action.

    Dimension 3: weakly exceptional iff transitive with no semi-invariant
    of degree at most 2.  Dimension 4: additionally the projective image
    must not be the simple group of order 60; that test runs only after
    the degree bound 3 search comes up empty.
    """
    if dimension not in (3, 4):
        raise ValueError("verdicts are defined for dimensions 3 and 4")
    if group.dimension != dimension:
        raise ValueError(
            f"group acts in dimension {group.dimension}, not {dimension}"
        )
    group.close()
    transitive = is_transitive(group)
    degree, poly = _lowest_semi_invariant(group, dimension - 1)
    a5 = None
    if dimension == 4 and transitive and degree is None:
        a5 = is_a5_family(group)
    exceptional = bool(transitive and degree is None and not a5)
    if poly is not None:
        witness = str(poly)
    elif not transitive:
        space = intransitivity_witness(group)
        if space is not None:
            witness = f"invariant subspace {_format_subspace(space)}"
        else:
            witness = "reducible natural character"
    elif a5:
        witness = "projective image is the simple group of order 60"
    else:
        witness = None
    return Verdict(
        name=group.name,
        dimension=dimension,
        order=group.order,
        transitive=transitive,
        min_semi_invariant_degree=degree,
        weakly_exceptional=exceptional,
        a5_flag=a5,
        witness=witness,
    )
