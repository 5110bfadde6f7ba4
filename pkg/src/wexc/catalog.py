"""Bundled group catalog and group-file input.

Every catalog entry stores its generators as text in the same expression
syntax the parser accepts, so loading an entry exercises exactly the
code path a user-supplied group file goes through.  Entries also carry a
table of expected facts (order, transitivity, invariant degrees, ...)
that the test suite and the report command re-verify against freshly
computed values.

Expected facts always refer to an entry built with its default
parameters.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from pathlib import Path

from .cyclotomic import parse_cyclotomic
from .errors import ParseError
from .linalg import Matrix, tensor
from .matgroup import DEFAULT_CLOSURE_CAP, MatGroup
from .repthy import sym_cube_2x2, sym_power_matrix

# generators as nested text: generators -> rows -> entries
GeneratorText = tuple[tuple[tuple[str, ...], ...], ...]


def matrix_from_text(rows, where: str = "matrix") -> Matrix:
    """Parse a nested list of entry expressions into an exact matrix.

    Entries may be strings in the cyclotomic expression syntax or plain
    integers.  Parse failures are re-raised with ``where`` and the
    row/column of the offending entry prepended, keeping the original
    character offset.
    """
    parsed = []
    for i, row in enumerate(rows):
        out = []
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, (str, int)):
                raise ParseError(
                    f"{where}, row {i}, column {j}: entry must be an integer "
                    f"or an expression string, not {type(entry).__name__}"
                )
            try:
                out.append(parse_cyclotomic(str(entry)))
            except ParseError as exc:
                raise ParseError(
                    f"{where}, row {i}, column {j}: {exc.args[0]}"
                ) from exc
        parsed.append(out)
    return Matrix(parsed)


def matrix_text(m: Matrix) -> tuple[tuple[str, ...], ...]:
    """Render a matrix back to entry text; inverse of matrix_from_text."""
    return tuple(tuple(str(e) for e in row) for row in m.rows)


# ---------------------------------------------------------------------------
# 2x2 building blocks for the tensor families

# Canonical printed forms; each round-trips through the parser.
#   dg, j, f, g8  generate the binary octahedral group
#   a2, a3, a6    rotations of order 4, 6, 12
#   s5, t5        generate the binary icosahedral group
# The *t variants are images under a field automorphism (E(5) -> E(5)^2
# for s5t/t5t, E(12) -> E(12)^7 for a6t, E(8) -> E(8)^3 for dgt/ft/g8t)
# and are only useful paired with their untwisted partner.
_BLOCK: dict[str, tuple[tuple[str, str], tuple[str, str]]] = {
    "id": (("1", "0"), ("0", "1")),
    "dg": (("E(4)", "0"), ("0", "-E(4)")),
    "j": (("0", "1"), ("-1", "0")),
    "f": (("1/2-1/2*E(4)", "1/2-1/2*E(4)"), ("-1/2-1/2*E(4)", "1/2+1/2*E(4)")),
    "g8": (("0", "E(8)"), ("E(8)^3", "0")),
    "a2": (("E(4)", "0"), ("0", "-E(4)")),
    "a3": (("1+E(3)", "0"), ("0", "-E(3)")),
    "a6": (("E(12)", "0"), ("0", "E(12)-E(12)^3")),
    "s5": (("E(5)^3", "0"), ("0", "E(5)^2")),
    "t5": (
        ("-1/5-2/5*E(5)-3/5*E(5)^2+1/5*E(5)^3",
         "2/5+4/5*E(5)+1/5*E(5)^2+3/5*E(5)^3"),
        ("2/5+4/5*E(5)+1/5*E(5)^2+3/5*E(5)^3",
         "1/5+2/5*E(5)+3/5*E(5)^2-1/5*E(5)^3"),
    ),
    "s5t": (("E(5)", "0"), ("0", "-1-E(5)-E(5)^2-E(5)^3")),
    "t5t": (
        ("2/5+4/5*E(5)+1/5*E(5)^2+3/5*E(5)^3",
         "1/5+2/5*E(5)+3/5*E(5)^2-1/5*E(5)^3"),
        ("1/5+2/5*E(5)+3/5*E(5)^2-1/5*E(5)^3",
         "-2/5-4/5*E(5)-1/5*E(5)^2-3/5*E(5)^3"),
    ),
    "a6t": (("-E(12)", "0"), ("0", "-E(12)+E(12)^3")),
    "dgt": (("-E(4)", "0"), ("0", "E(4)")),
    "ft": (("1/2+1/2*E(4)", "1/2+1/2*E(4)"), ("-1/2+1/2*E(4)", "1/2-1/2*E(4)")),
    "g8t": (("0", "E(8)^3"), ("E(8)", "0")),
}


def block_matrix(name: str) -> Matrix:
    """One of the named 2x2 blocks as an exact matrix."""
    if name not in _BLOCK:
        raise ValueError(f"unknown block name {name!r}")
    return matrix_from_text(_BLOCK[name], where=f"block {name!r}")


def _entry_product(a: str, b: str) -> str:
    if a == "0" or b == "0":
        return "0"
    if a == "1":
        return b
    if b == "1":
        return a
    return f"({a})*({b})"


def _tensor_text(a, b) -> tuple[tuple[str, ...], ...]:
    """Kronecker product of two 2x2 text matrices, as text."""
    rows = []
    for i in range(2):
        for k in range(2):
            rows.append(tuple(
                _entry_product(a[i][j], b[k][l])
                for j in range(2) for l in range(2)
            ))
    return tuple(rows)


# left factor of the tensor square swapped with the right: y <-> u
_SWAP_TEXT: tuple[tuple[str, ...], ...] = (
    ("1", "0", "0", "0"),
    ("0", "0", "1", "0"),
    ("0", "1", "0", "0"),
    ("0", "0", "0", "1"),
)


@dataclass(frozen=True)
class QuadricFamilySpec:
    """Generator recipe for a subgroup of the tensor square of SL2 x SL2.

    ``left`` and ``right`` name blocks acting on one tensor factor with
    the identity on the other; ``pairs`` name blocks acting together,
    one on each factor.  ``swap`` adjoins the factor-swapping involution
    multiplied by the named pair ("id", "id" for the bare swap).  All of
    these preserve the quadratic form x*v - y*u up to scalar, which is
    what makes the family useful as a source of examples.
    """

    left: tuple[str, ...] = ()
    right: tuple[str, ...] = ()
    pairs: tuple[tuple[str, str], ...] = ()
    swap: tuple[str, str] | None = None

    def block_names(self) -> tuple[str, ...]:
        names = list(self.left) + list(self.right)
        for a, b in self.pairs:
            names += [a, b]
        if self.swap is not None:
            names += list(self.swap)
        return tuple(names)


def _pairs_consistent(pairs) -> None:
    # A paired assignment A_i -> B_i only defines a group twisted by an
    # automorphism when both sides satisfy the same projective
    # relations; equivalently the diagonal tensor closure must not grow
    # past either factor.
    left = MatGroup([block_matrix(a) for a, _ in pairs], name="pair-left")
    right = MatGroup([block_matrix(b) for _, b in pairs], name="pair-right")
    diag = MatGroup(
        [tensor(block_matrix(a), block_matrix(b)) for a, b in pairs],
        name="pair-diagonal",
    )
    orders = (left.projective_order(), right.projective_order(),
              diag.projective_order())
    if len(set(orders)) != 1:
        raise ValueError(
            "paired blocks do not define a consistent twist (relation check "
            f"failed: projective orders left/right/paired = {orders[0]}/"
            f"{orders[1]}/{orders[2]})"
        )


def build_quadric_family(spec: QuadricFamilySpec) -> GeneratorText:
    """Expand a family spec into 4x4 generator text.

    Raises ValueError for unknown block names and for paired blocks
    whose two sides are not projectively compatible.  The check does not
    reject specs whose resulting action is reducible; a handful of
    catalog presets are deliberately of that kind.
    """
    for name in spec.block_names():
        if name not in _BLOCK:
            raise ValueError(f"unknown block name {name!r}")
    if spec.pairs:
        _pairs_consistent(spec.pairs)
    ident = _BLOCK["id"]
    gens = [_tensor_text(_BLOCK[x], ident) for x in spec.left]
    gens += [_tensor_text(ident, _BLOCK[x]) for x in spec.right]
    gens += [_tensor_text(_BLOCK[a], _BLOCK[b]) for a, b in spec.pairs]
    if spec.swap is not None:
        a, b = spec.swap
        body = _tensor_text(_BLOCK[a], _BLOCK[b])
        # left-multiplying by the swap permutes rows 1 and 2
        gens.append(tuple(body[i] for i in (0, 2, 1, 3)))
    return tuple(gens)


QUADRIC_PRESETS: dict[str, QuadricFamilySpec] = {
    "prod-s4xs4": QuadricFamilySpec(
        left=("dg", "j", "f", "g8"), right=("dg", "j", "f", "g8")),
    "prod-a4xa4": QuadricFamilySpec(
        left=("dg", "j", "f"), right=("dg", "j", "f")),
    "prod-a5xa5": QuadricFamilySpec(left=("s5", "t5"), right=("s5", "t5")),
    "prod-d6xa4": QuadricFamilySpec(left=("a3", "j"), right=("dg", "j", "f")),
    "prod-d6xd6": QuadricFamilySpec(left=("a3", "j"), right=("a3", "j")),
    "twist-a5": QuadricFamilySpec(pairs=(("s5", "s5t"), ("t5", "t5t"))),
    "half-s4xs4": QuadricFamilySpec(
        left=("dg", "f"), right=("dg", "f"), pairs=(("g8", "g8"),)),
    "half-d6xs4": QuadricFamilySpec(
        left=("a3",), right=("dg", "f"), pairs=(("j", "g8"),)),
    "half-d12xs4": QuadricFamilySpec(
        left=("a3", "j"), right=("dg", "f"), pairs=(("a2", "g8"),)),
    "sixth-d18xs4": QuadricFamilySpec(
        left=("a3",), right=("dg", "j"), pairs=(("a3", "f"), ("j", "g8"))),
    "sixth-s4xs4": QuadricFamilySpec(
        left=("dg", "j"), right=("dg", "j"), pairs=(("f", "f"), ("g8", "g8"))),
    "third-a4xa4": QuadricFamilySpec(
        left=("dg", "j"), right=("dg", "j"), pairs=(("f", "f"),)),
    "half-d6xd12": QuadricFamilySpec(
        left=("a3",), right=("a3", "j"), pairs=(("j", "a2"),)),
    "quarter-d12xd12": QuadricFamilySpec(
        left=("a3",), right=("a3",), pairs=(("a2", "j"), ("j", "a2"))),
    "half-d12xd12": QuadricFamilySpec(
        left=("a3", "j"), right=("a3", "j"), pairs=(("a2", "a2"),)),
    "tau-d6xd6": QuadricFamilySpec(
        left=("a3", "j"), right=("a3", "j"), swap=("id", "id")),
    "tau-a4xa4": QuadricFamilySpec(
        left=("dg", "j", "f"), right=("dg", "j", "f"), swap=("id", "id")),
    "tau-s4xs4": QuadricFamilySpec(
        left=("dg", "j", "f", "g8"), right=("dg", "j", "f", "g8"),
        swap=("id", "id")),
    "tau-a5xa5": QuadricFamilySpec(
        left=("s5", "t5"), right=("s5", "t5"), swap=("id", "id")),
    # the bare swap normalizes this twisted diagonal only after the
    # second factor is corrected by j
    "twist-a5-tau": QuadricFamilySpec(
        pairs=(("s5", "s5t"), ("t5", "t5t")), swap=("id", "j")),
    "tau-half-s4xs4": QuadricFamilySpec(
        left=("dg", "f"), right=("dg", "f"), pairs=(("g8", "g8"),),
        swap=("id", "id")),
    "tau-s4-v4": QuadricFamilySpec(
        left=("dg", "j"), right=("dg", "j"), pairs=(("f", "f"), ("g8", "g8")),
        swap=("id", "id")),
    "tau-a4-v4": QuadricFamilySpec(
        left=("dg", "j"), right=("dg", "j"), pairs=(("f", "f"),),
        swap=("id", "id")),
    "tau-d12-c3": QuadricFamilySpec(
        left=("a3",), right=("a3",), pairs=(("a2", "j"), ("j", "a2")),
        swap=("id", "id")),
    "tau-d12-d6": QuadricFamilySpec(
        left=("a3", "j"), right=("a3", "j"), pairs=(("a2", "a2"),),
        swap=("id", "id")),
    "twist-d12-tau": QuadricFamilySpec(
        pairs=(("a6", "a6t"), ("j", "j")), swap=("id", "id")),
    "twist-s4-tau": QuadricFamilySpec(
        pairs=(("dg", "dgt"), ("j", "j"), ("f", "ft"), ("g8", "g8t")),
        swap=("id", "id")),
    "twist-a4-tau": QuadricFamilySpec(
        pairs=(("dg", "dgt"), ("j", "j"), ("f", "ft")), swap=("id", "id")),
}


# ---------------------------------------------------------------------------
# dimension-3 generator text

_INV_SQRT_M3 = "-1/3-2/3*E(3)"  # 1 / sqrt(-3)
_SQRT_M7 = "E(7)+E(7)^2+E(7)^4-E(7)^3-E(7)^5-E(7)^6"  # sqrt(-7)

_S3_TEXT = (("1", "0", "0"), ("0", "E(3)", "0"), ("0", "0", "E(3)^2"))
_T3_TEXT = (("0", "1", "0"), ("0", "0", "1"), ("1", "0", "0"))


def _omega_power(k: int) -> str:
    k %= 3
    return "1" if k == 0 else ("E(3)" if k == 1 else "E(3)^2")


# discrete Fourier rotation: (1/sqrt(-3)) * (omega^(i*j))
_V3_TEXT = tuple(
    tuple(_entry_product(_INV_SQRT_M3, _omega_power(i * j)) for j in range(3))
    for i in range(3)
)
_U3_TEXT = (
    ("E(9)^2", "0", "0"), ("0", "E(9)^2", "0"), ("0", "0", "E(9)^2*E(3)"))
# conjugate of the Fourier rotation by the diagonal above; entries are
# (1/sqrt(-3)) * omega^k for varying k
_P3_EXP = ((0, 0, 2), (0, 1, 1), (1, 0, 1))
_P3_TEXT = tuple(
    tuple(_entry_product(_INV_SQRT_M3, _omega_power(k)) for k in row)
    for row in _P3_EXP
)
_W3_TEXT = (("E(3)", "0", "0"), ("0", "E(3)", "0"), ("0", "0", "E(3)"))
_S7_TEXT = (("E(7)", "0", "0"), ("0", "E(7)^4", "0"), ("0", "0", "E(7)^2"))
_H7_DIFFS = ("E(7)-E(7)^6", "E(7)^2-E(7)^5", "E(7)^4-E(7)^3")
_H7_TEXT = tuple(
    tuple(f"({_SQRT_M7})*({_H7_DIFFS[(i + j) % 3]})/7" for j in range(3))
    for i in range(3)
)

_SIGN_TEXT = (
    (("1", "0", "0"), ("0", "-1", "0"), ("0", "0", "-1")),
    (("-1", "0", "0"), ("0", "1", "0"), ("0", "0", "-1")),
)


def _heis27_text() -> GeneratorText:
    return (_S3_TEXT, _T3_TEXT)


def _type_c_text() -> GeneratorText:
    return _SIGN_TEXT + (_T3_TEXT,)


def _type_d_text(a=1, b=1, c=-1) -> GeneratorText:
    vals = []
    for label, v in (("a", a), ("b", b), ("c", c)):
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise ValueError(f"parameter {label} must be an integer or an "
                             "expression string")
        try:
            vals.append(parse_cyclotomic(str(v)))
        except ParseError as exc:
            raise ValueError(f"parameter {label}: {exc.args[0]}") from exc
    prod = vals[0] * vals[1] * vals[2]
    if prod != parse_cyclotomic("-1"):
        raise ValueError(
            f"antidiagonal parameters must satisfy a*b*c = -1, got {prod}")
    a, b, c = (str(v) for v in (a, b, c))
    q = ((a, "0", "0"), ("0", "0", b), ("0", c, "0"))
    return _type_c_text() + (q,)


def _e108_text() -> GeneratorText:
    return (_S3_TEXT, _T3_TEXT, _V3_TEXT)


def _f216_text() -> GeneratorText:
    return (_S3_TEXT, _T3_TEXT, _V3_TEXT, _P3_TEXT)


def _g648_text() -> GeneratorText:
    return (_S3_TEXT, _T3_TEXT, _V3_TEXT, _U3_TEXT)


def _k168_text() -> GeneratorText:
    return (_S7_TEXT, _T3_TEXT, _H7_TEXT)


def _k504_text() -> GeneratorText:
    return _k168_text() + (_W3_TEXT,)


def _icosa_sym_text(power: int) -> GeneratorText:
    sym = sym_cube_2x2 if power == 3 else (
        lambda m: sym_power_matrix(m, power))
    return tuple(
        matrix_text(sym(block_matrix(name))) for name in ("s5", "t5"))


def _a5_dim3_text() -> GeneratorText:
    return _icosa_sym_text(2)


def _j180_text() -> GeneratorText:
    return _a5_dim3_text() + (_W3_TEXT,)


# ---------------------------------------------------------------------------
# dimension-4 generator text


def _odd_rotation(n: int, label: str) -> tuple[tuple[str, str], tuple[str, str]]:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise ValueError(f"parameter {label} must be a positive odd integer")
    if n == 1:
        return _BLOCK["id"]
    return ((f"E({2 * n})", "0"), ("0", f"E({2 * n})^{2 * n - 1}"))


def _eg_intrans_text(n=3, m=3) -> GeneratorText:
    an, am = _odd_rotation(n, "n"), _odd_rotation(m, "m")
    ident, a2, j = _BLOCK["id"], _BLOCK["a2"], _BLOCK["j"]
    return (
        _tensor_text(an, ident), _tensor_text(ident, am),
        _tensor_text(a2, a2), _tensor_text(j, j),
    )


def _eg_trans_text(n=3, m=3) -> GeneratorText:
    an, am = _odd_rotation(n, "n"), _odd_rotation(m, "m")
    ident, a2, j = _BLOCK["id"], _BLOCK["a2"], _BLOCK["j"]
    return (
        _tensor_text(an, ident), _tensor_text(ident, am),
        _tensor_text(a2, j), _tensor_text(j, a2),
    )


def _eg_imprim_text() -> GeneratorText:
    return build_quadric_family(QUADRIC_PRESETS["sixth-s4xs4"])


def _eg_prim_text() -> GeneratorText:
    ident = _BLOCK["id"]
    return _eg_imprim_text() + (_tensor_text(_BLOCK["f"], ident),)


def _eg_imprim_mono_text() -> GeneratorText:
    return build_quadric_family(QUADRIC_PRESETS["tau-a4-v4"])


def _eg_imprim_nonmono_text(n=3) -> GeneratorText:
    an = _odd_rotation(n, "n")
    ident = _BLOCK["id"]
    return (
        _tensor_text(ident, _BLOCK["dg"]), _tensor_text(ident, _BLOCK["j"]),
        _tensor_text(ident, _BLOCK["f"]), _tensor_text(an, ident),
        _tensor_text(_BLOCK["j"], _BLOCK["g8"]),
    )


_CUBE_DIAG = (
    (("E(3)", "0", "0", "0"), ("0", "1", "0", "0"),
     ("0", "0", "1", "0"), ("0", "0", "0", "E(3)^2")),
    (("1", "0", "0", "0"), ("0", "E(3)", "0", "0"),
     ("0", "0", "1", "0"), ("0", "0", "0", "E(3)^2")),
    (("1", "0", "0", "0"), ("0", "1", "0", "0"),
     ("0", "0", "E(3)", "0"), ("0", "0", "0", "E(3)^2")),
)


def _perm4_text(images: tuple[int, ...], scale: str) -> tuple[tuple[str, ...], ...]:
    rows = []
    for i in range(4):
        rows.append(tuple(scale if images[j] == i else "0" for j in range(4)))
    return tuple(rows)


# transpositions scaled by E(8) so the determinant stays 1
_P12_TEXT = _perm4_text((1, 0, 2, 3), "E(8)")
_P23_TEXT = _perm4_text((0, 2, 1, 3), "E(8)")
_P34_TEXT = _perm4_text((0, 1, 3, 2), "E(8)")
_P13_24_TEXT = _perm4_text((2, 3, 0, 1), "1")
_P1234_TEXT = _perm4_text((1, 2, 3, 0), "E(8)")


def _cubic_mono_1_text() -> GeneratorText:
    return _CUBE_DIAG + (_P12_TEXT, _P13_24_TEXT)


def _cubic_mono_2_text() -> GeneratorText:
    return _CUBE_DIAG + (_P12_TEXT, _P1234_TEXT)


_S5_CUBIC_TEXT = (
    (("-E(8)", "E(8)", "0", "0"), ("0", "E(8)", "0", "0"),
     ("0", "0", "E(8)", "0"), ("0", "0", "0", "E(8)")),
    (("E(8)^7", "0", "0", "0"), ("E(8)^7", "0", "0", "-E(8)^7"),
     ("0", "E(8)^7", "0", "-E(8)^7"), ("0", "0", "E(8)^7", "-E(8)^7")),
)


def _s5_cubic_text() -> GeneratorText:
    return _S5_CUBIC_TEXT


def _fermat_text(m=5) -> GeneratorText:
    if isinstance(m, bool) or not isinstance(m, int) or m < 5:
        raise ValueError("parameter m must be an integer >= 5")
    z, zi = f"E({m})", f"E({m})^{m - 1}"
    diag = []
    for pos in range(3):
        entries = ["1"] * 4
        entries[pos], entries[pos + 1] = z, zi
        diag.append(tuple(
            tuple(entries[i] if i == j else "0" for j in range(4))
            for i in range(4)))
    return tuple(diag) + (_P12_TEXT, _P23_TEXT, _P34_TEXT)


def _a5_sym_cube_text() -> GeneratorText:
    return _icosa_sym_text(3)


# ---------------------------------------------------------------------------
# the catalog itself


@dataclass(frozen=True)
class CatalogEntry:
    """A named group with reproducible generator text and expected facts.

    ``source`` produces generator text from keyword parameters;
    ``defaults`` feeds it when the caller supplies none.  ``facts`` maps
    fact names to values the implementation must reproduce for the
    default parameters; see report.verify_entry for the fact
    vocabulary.
    """

    name: str
    dimension: int
    summary: str
    source: Callable[..., GeneratorText]
    defaults: Mapping[str, object] = field(default_factory=dict)
    facts: Mapping[str, object] = field(default_factory=dict)
    closure_cap: int = DEFAULT_CLOSURE_CAP

    def generator_text(self, **params) -> GeneratorText:
        merged = dict(self.defaults)
        for key, value in params.items():
            if key not in self.defaults:
                raise ValueError(
                    f"entry {self.name!r} takes no parameter {key!r}")
            merged[key] = value
        return self.source(**merged)

    def group(self, cap: int | None = None, **params) -> MatGroup:
        texts = self.generator_text(**params)
        gens = [matrix_from_text(t, where=f"{self.name} generator {i}")
                for i, t in enumerate(texts)]
        group = MatGroup(gens, name=self.name,
                         cap=self.closure_cap if cap is None else cap)
        group.close()
        return group


def _dim3_facts(order, kind, transitive=True, min_degree=None,
                weakly_exceptional=None, witness=None, **extra):
    facts = {
        "order": order,
        "transitive": transitive,
        "action_class": kind,
        "min_semi_invariant_degree": min_degree,
        "weakly_exceptional": (min_degree is None and transitive
                               if weakly_exceptional is None
                               else weakly_exceptional),
        "witness": witness,
    }
    facts.update(extra)
    return facts


def _dim4_facts(order, kind, transitive=True, min_degree=2,
                weakly_exceptional=False, witness="x*v-y*u", a5_flag=None,
                **extra):
    facts = {
        "order": order,
        "transitive": transitive,
        "action_class": kind,
        "min_semi_invariant_degree": min_degree,
        "weakly_exceptional": weakly_exceptional,
        "a5_flag": a5_flag,
        "witness": witness,
    }
    facts.update(extra)
    return facts


INTRANSITIVE = "Intransitive"
MONOMIAL = "ImprimitiveMonomial"
NONMONOMIAL = "ImprimitiveNonMonomial"
PRIMITIVE = "Primitive"

_ENTRIES: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    if entry.name in _ENTRIES:
        raise ValueError(f"duplicate catalog entry {entry.name!r}")
    _ENTRIES[entry.name] = entry


def _register_all() -> None:
    reg = _register
    reg(CatalogEntry(
        "sl3/heis27", 3,
        "order-27 Heisenberg group: diagonal cube roots and the cyclic "
        "coordinate shift",
        lambda: _heis27_text(),
        facts=_dim3_facts(27, MONOMIAL)))
    reg(CatalogEntry(
        "sl3/typeC", 3,
        "sign diagonals with the cyclic coordinate shift, order 12",
        lambda: _type_c_text(),
        facts=_dim3_facts(12, MONOMIAL, min_degree=2,
                          witness="x^2+y^2+z^2")))
    reg(CatalogEntry(
        "sl3/typeD", 3,
        "typeC extended by an antidiagonal involution with parameters "
        "a, b, c, a*b*c = -1",
        _type_d_text, defaults={"a": 1, "b": 1, "c": -1},
        facts=_dim3_facts(24, MONOMIAL, min_degree=2,
                          witness="x^2+y^2+z^2")))
    reg(CatalogEntry(
        "sl3/E108", 3,
        "Heisenberg group extended by the discrete Fourier rotation, "
        "order 108",
        lambda: _e108_text(),
        facts=_dim3_facts(108, PRIMITIVE)))
    reg(CatalogEntry(
        "sl3/F216", 3,
        "order-216 extension of E108 by a conjugated Fourier rotation",
        lambda: _f216_text(),
        facts=_dim3_facts(216, PRIMITIVE)))
    reg(CatalogEntry(
        "sl3/G648", 3,
        "Hessian group of order 648: E108 extended by a diagonal of "
        "ninth roots",
        lambda: _g648_text(),
        facts=_dim3_facts(648, PRIMITIVE)))
    reg(CatalogEntry(
        "sl3/K168", 3,
        "Klein's simple group of order 168 in its three-dimensional "
        "representation over the seventh cyclotomic field",
        lambda: _k168_text(),
        facts=_dim3_facts(168, PRIMITIVE, projectively_simple=True)))
    reg(CatalogEntry(
        "sl3/K504", 3,
        "central extension of K168 by scalar cube roots",
        lambda: _k504_text(),
        facts=_dim3_facts(504, PRIMITIVE)))
    reg(CatalogEntry(
        "sl3/A5", 3,
        "icosahedral group acting on binary quadratics, order 60",
        lambda: _a5_dim3_text(),
        facts=_dim3_facts(60, PRIMITIVE, min_degree=2,
                          witness="x*z-1/4*y^2")))
    reg(CatalogEntry(
        "sl3/J180", 3,
        "icosahedral action on binary quadratics extended by scalar "
        "cube roots, order 180",
        lambda: _j180_text(),
        facts=_dim3_facts(180, PRIMITIVE, min_degree=2,
                          witness="x*z-1/4*y^2")))

    reg(CatalogEntry(
        "sl4/eg-intrans", 4,
        "two commuting rotation pairs preserving both two-dimensional "
        "coordinate blocks; parameters n, m are the odd rotation orders",
        _eg_intrans_text, defaults={"n": 3, "m": 3},
        facts=_dim4_facts(72, INTRANSITIVE, transitive=False,
                          witness="x*v")))
    reg(CatalogEntry(
        "sl4/eg-trans", 4,
        "rotation pairs mixed across the two coordinate blocks so no "
        "proper subspace survives; parameters n, m as in eg-intrans",
        _eg_trans_text, defaults={"n": 3, "m": 3},
        facts=_dim4_facts(72, MONOMIAL,
                          same_group_as="sl4/quadric/quarter-d12xd12")))
    reg(CatalogEntry(
        "sl4/eg-imprim", 4,
        "monomial tensor action of order 192 permuting four lines that "
        "span no two-block decomposition",
        lambda: _eg_imprim_text(),
        facts=_dim4_facts(192, MONOMIAL,
                          same_group_as="sl4/quadric/sixth-s4xs4")))
    reg(CatalogEntry(
        "sl4/eg-prim", 4,
        "eg-imprim extended by a one-sided rotation, killing every line "
        "system; order 576",
        lambda: _eg_prim_text(),
        facts=_dim4_facts(576, PRIMITIVE)))
    reg(CatalogEntry(
        "sl4/eg-imprim-mono", 4,
        "order-192 monomial action generated with the factor swap "
        "instead of a paired rotation",
        lambda: _eg_imprim_mono_text(),
        facts=_dim4_facts(192, MONOMIAL,
                          same_group_as="sl4/quadric/tau-a4-v4")))
    reg(CatalogEntry(
        "sl4/eg-imprim-nonmono", 4,
        "order-144 action preserving a pair of two-dimensional blocks "
        "but no line system; parameter n is the odd rotation order",
        _eg_imprim_nonmono_text, defaults={"n": 3},
        facts=_dim4_facts(144, NONMONOMIAL,
                          same_group_as="sl4/quadric/half-d6xs4")))
    reg(CatalogEntry(
        "sl4/cubic-mono-1", 4,
        "monomial group of order 864 with a diagonal cube-root core, "
        "double transposition on top",
        lambda: _cubic_mono_1_text(),
        facts=_dim4_facts(864, MONOMIAL, min_degree=3,
                          witness="x^3+y^3+u^3+v^3")))
    reg(CatalogEntry(
        "sl4/cubic-mono-2", 4,
        "monomial group of order 2592 with a diagonal cube-root core, "
        "four-cycle on top",
        lambda: _cubic_mono_2_text(),
        facts=_dim4_facts(2592, MONOMIAL, min_degree=3,
                          witness="x^3+y^3+u^3+v^3")))
    reg(CatalogEntry(
        "sl4/S5-cubic", 4,
        "symmetric group on five letters acting irreducibly in "
        "dimension four, scaled into the special linear group",
        lambda: _s5_cubic_text(),
        facts=_dim4_facts(480, PRIMITIVE,
                          witness="x^2-x*y+y^2-y*u+u^2-u*v+v^2")))
    reg(CatalogEntry(
        "sl4/fermat", 4,
        "symmetries of the degree-m Fermat surface: balanced diagonal "
        "m-th roots with all scaled transpositions; parameter m >= 5",
        _fermat_text, defaults={"m": 5},
        facts=_dim4_facts(12000, MONOMIAL, min_degree=None,
                          weakly_exceptional=True, witness=None,
                          a5_flag=False)))
    reg(CatalogEntry(
        "sl4/a5sym3", 4,
        "icosahedral group acting on binary cubics, order 120",
        lambda: _a5_sym_cube_text(),
        facts=_dim4_facts(
            120, PRIMITIVE, min_degree=None, a5_flag=True,
            witness="projective image is the simple group of order 60",
            projective_order=60)))

    preset_facts = {
        "prod-s4xs4": (1152, PRIMITIVE, {}),
        "prod-a4xa4": (288, PRIMITIVE, {}),
        "prod-a5xa5": (7200, PRIMITIVE, {}),
        "prod-d6xa4": (144, NONMONOMIAL, {}),
        "prod-d6xd6": (72, MONOMIAL, {}),
        "twist-a5": (60, PRIMITIVE, {}),
        "half-s4xs4": (576, PRIMITIVE, {}),
        "half-d6xs4": (144, NONMONOMIAL,
                       {"same_group_as": "sl4/eg-imprim-nonmono"}),
        "half-d12xs4": (288, NONMONOMIAL, {}),
        "sixth-d18xs4": (144, NONMONOMIAL, {}),
        "sixth-s4xs4": (192, MONOMIAL, {"same_group_as": "sl4/eg-imprim"}),
        "third-a4xa4": (96, MONOMIAL, {}),
        "half-d6xd12": (72, MONOMIAL, {}),
        "quarter-d12xd12": (72, MONOMIAL, {"same_group_as": "sl4/eg-trans"}),
        "half-d12xd12": (144, MONOMIAL, {}),
        "tau-d6xd6": (144, MONOMIAL, {}),
        "tau-a4xa4": (576, PRIMITIVE, {}),
        "tau-s4xs4": (2304, PRIMITIVE, {}),
        "tau-a5xa5": (14400, PRIMITIVE, {}),
        "twist-a5-tau": (120, PRIMITIVE, {}),
        "tau-half-s4xs4": (1152, PRIMITIVE, {}),
        "tau-s4-v4": (384, MONOMIAL, {}),
        "tau-a4-v4": (192, MONOMIAL, {"same_group_as": "sl4/eg-imprim-mono"}),
        "tau-d12-c3": (144, MONOMIAL, {}),
        "tau-d12-d6": (288, MONOMIAL, {}),
        "twist-d12-tau": (24, INTRANSITIVE, {"_witness": "y-u"}),
        "twist-s4-tau": (48, INTRANSITIVE, {"_witness": "x+v"}),
        "twist-a4-tau": (24, INTRANSITIVE, {"_witness": "x+v"}),
    }
    assert set(preset_facts) == set(QUADRIC_PRESETS)
    for preset, (order, kind, extra) in preset_facts.items():
        spec = QUADRIC_PRESETS[preset]
        extra = dict(extra)
        if kind == INTRANSITIVE:
            # reducible members are kept so tests have flagged negatives
            facts = _dim4_facts(order, kind, transitive=False, min_degree=1,
                                witness=extra.pop("_witness"),
                                quadric_invariant=True, **extra)
            note = "; reducible, kept as a flagged negative example"
        else:
            facts = _dim4_facts(order, kind, quadric_invariant=True, **extra)
            note = ""
        reg(CatalogEntry(
            f"sl4/quadric/{preset}", 4,
            f"tensor family preset {preset}{note}",
            lambda spec=spec: build_quadric_family(spec),
            facts=facts))


_register_all()

# Documented placeholder: the order-1080 three-dimensional action
# (icosahedral extended by scalar cube roots with an extra outer part)
# has no bundled generator data.  Requests for it fail loudly instead
# of fabricating matrices.
RESERVED = {"sl3/L1080"}


def catalog_names() -> tuple[str, ...]:
    """Names of all loadable entries, in registration order."""
    return tuple(_ENTRIES)


def catalog_entry(name: str) -> CatalogEntry:
    """Look up an entry record without building its group."""
    if name in RESERVED:
        raise ValueError(
            f"catalog entry {name!r} is a documented placeholder with no "
            "generator data")
    try:
        return _ENTRIES[name]
    except KeyError:
        raise ValueError(f"unknown catalog entry {name!r}") from None


def catalog_get(name: str, cap: int | None = None, **params) -> MatGroup:
    """Build and close a catalog group by name.

    ``params`` override the entry's default parameters (unknown names
    are rejected); ``cap`` overrides the closure cap.
    """
    return catalog_entry(name).group(cap=cap, **params)


# ---------------------------------------------------------------------------
# group files


def parse_group_file(path, cap: int | None = None) -> tuple[MatGroup, dict]:
    """Load, validate, and close a group from a JSON file.

    The file holds an object with ``generators`` (a list of matrices,
    each a list of rows of entry expressions) and optional ``name``,
    ``dimension``, and ``closure_cap`` fields.  Returns the closed group
    and the raw metadata object.  Raises ParseError for malformed JSON
    or expressions, ValueError for shape problems, and CapExceeded when
    the closure walks past the cap (argument over file field over
    default).
    """
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", position=exc.pos) from exc
    if not isinstance(data, dict):
        raise ParseError("group file must hold a JSON object")
    raw = data.get("generators")
    if not isinstance(raw, list) or not raw:
        raise ParseError("group file needs a non-empty 'generators' list")

    matrices = []
    for i, rows in enumerate(raw):
        if not isinstance(rows, list) or not all(
                isinstance(r, list) for r in rows):
            raise ParseError(f"generator {i} must be a list of rows")
        matrices.append(matrix_from_text(rows, where=f"generator {i}"))

    dimension = data.get("dimension", matrices[0].nrows)
    if not isinstance(dimension, int) or dimension < 1:
        raise ParseError("'dimension' must be a positive integer")
    for i, m in enumerate(matrices):
        if m.nrows != dimension or m.ncols != dimension:
            raise ValueError(
                f"dimension mismatch: generator {i} is {m.nrows}x{m.ncols}, "
                f"expected {dimension}x{dimension}")

    if cap is None:
        cap = data.get("closure_cap", DEFAULT_CLOSURE_CAP)
    if not isinstance(cap, int) or cap < 1:
        raise ParseError("'closure_cap' must be a positive integer")
    name = data.get("name", Path(path).stem)
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")

    group = MatGroup(matrices, name=name, cap=cap)
    group.close()
    return group, data
