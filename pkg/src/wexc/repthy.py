"""Characters, symmetric powers, and semi-invariant spaces.

The character of the defining representation is read straight off the
packed trace rows of a closed group, so norm computations stay in
integer arrays until the final division.  Symmetric powers act on the
monomial basis ordered lexicographically with x > y > z (dimension 3)
and x > y > u > v (dimension 4); a polynomial is a semi-invariant for
the character lambda when every generator g sends it to lambda(g) times
itself under the substitution action f -> f(g^-1 x).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import InternalInvariantError
from .linalg import Matrix, Subspace, kernel
from .matgroup import LinearCharacter, MatGroup

_VAR_NAMES = {1: ("x",), 2: ("x", "y"), 3: ("x", "y", "z"), 4: ("x", "y", "u", "v")}


def variable_names(nvars: int) -> tuple[str, ...]:
    if nvars in _VAR_NAMES:
        return _VAR_NAMES[nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


def monomial_exponents(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples of degree-d monomials, highest variable first."""
    out = [
        exps
        for exps in itertools.product(range(degree + 1), repeat=nvars)
        if sum(exps) == degree
    ]
    out.sort(reverse=True)
    return out


class Character:
    """A class function given by one trace value per group element."""

    __slots__ = ("group", "conductor", "dens", "rows")

    def __init__(self, group: MatGroup, conductor: int, dens: np.ndarray,
                 rows: np.ndarray) -> None:
        self.group = group
        self.conductor = conductor
        self.dens = np.asarray(dens, dtype=np.int64)
        self.rows = np.asarray(rows, dtype=np.int64)

    @classmethod
    def natural(cls, group: MatGroup) -> "Character":
        """The character of the defining matrix representation."""
        conductor, dens, rows = group.packed_traces()
        return cls(group, conductor, dens, rows)

    def value(self, index: int) -> Cyclotomic:
        den = int(self.dens[index])
        return Cyclotomic(
            self.conductor, [Fraction(int(c), den) for c in self.rows[index]]
        )

    @property
    def degree(self) -> Cyclotomic:
        return self.value(0)


def inner_product(a: Character, b: Character) -> Fraction:
    """(1/|G|) * sum over g of a(g) * conj(b(g)); must come out rational."""
    if a.group is not b.group:
        raise ValueError("characters belong to different groups")
    if a.conductor != b.conductor:
        raise ValueError("characters are packed at different conductors")
    group = a.group
    packer = group._packer
    phi = packer.phi
    order = group.order
    bc = b.rows @ packer.conj_table
    bound = (
        int(np.abs(a.rows).max(initial=1))
        * int(np.abs(bc).max(initial=1))
        * phi * phi * packer._fold_max
    )
    coords = [Fraction(0)] * phi
    if bound < (1 << 62):
        prods = np.einsum("gp,gq->gpq", a.rows, bc).reshape(order, phi * phi)
        folded = prods @ packer._fold
        dens = a.dens * b.dens
        for den in np.unique(dens):
            mask = dens == den
            sums = folded[mask].sum(axis=0, dtype=object)
            for p in range(phi):
                coords[p] += Fraction(int(sums[p]), int(den))
    else:
        for i in range(order):
            term = a.value(i) * b.value(i).conjugate()
            lifted = term.coefficients_at(a.conductor)
            for p, c in enumerate(lifted):
                coords[p] += c
    for p in range(1, phi):
        if coords[p]:
            raise InternalInvariantError(
                "character pairing produced an irrational value"
            )
    return coords[0] / order


def norm_squared(ch: Character) -> Fraction:
    return inner_product(ch, ch)


def _substitution_matrix(m: Matrix, degree: int) -> Matrix:
    """Matrix of f -> f(m x) on the degree-d monomial basis."""
    nvars = m.nrows
    monos = monomial_exponents(nvars, degree)
    position = {e: i for i, e in enumerate(monos)}
    zero = Cyclotomic.zero()
    one = Cyclotomic.one()
    columns: list[dict[tuple[int, ...], Cyclotomic]] = []
    for exps in monos:
        poly = {(0,) * nvars: one}
        for var, e in enumerate(exps):
            for _ in range(e):
                nxt: dict[tuple[int, ...], Cyclotomic] = {}
                for mono, coeff in poly.items():
                    for j in range(nvars):
                        c = m.rows[var][j]
                        if c.is_zero():
                            continue
                        key = tuple(
                            mono[t] + (1 if t == j else 0) for t in range(nvars)
                        )
                        acc = nxt.get(key)
                        nxt[key] = c * coeff if acc is None else acc + c * coeff
                poly = nxt
        columns.append(poly)
    rows = [[zero] * len(monos) for _ in monos]
    for j, poly in enumerate(columns):
        for mono, coeff in poly.items():
            rows[position[mono]][j] = coeff
    return Matrix(rows)


def sym_power_matrix(m: Matrix, degree: int) -> Matrix:
    """The degree-d symmetric power of the action f -> f(m^-1 x).

    Multiplicative: the power of a product is the product of the powers.
    """
    if not m.is_square:
        raise ValueError("symmetric powers need a square matrix")
    if degree < 1:
        raise ValueError("degree must be positive")
    return _substitution_matrix(m.inverse(), degree)


def sym_cube_2x2(m: Matrix) -> Matrix:
    """Substitution by m itself on the binary cubics x^3, x^2 y, x y^2, y^3."""
    if m.nrows != 2 or m.ncols != 2:
        raise ValueError("expected a 2x2 matrix")
    return _substitution_matrix(m, 3)


def semi_invariants(
    group: MatGroup, degree: int
) -> list[tuple[LinearCharacter, Subspace]]:
    """Nonzero spaces of degree-d semi-invariants, one per character.

    For each linear character lambda the space is the simultaneous
    lambda(g)-eigenspace of the symmetric powers of the generators;
    pairs are listed in the canonical character order (trivial first).
    """
    chars = group.linear_characters()
    syms = [sym_power_matrix(g, degree) for g in group.generators]
    width = syms[0].nrows
    out: list[tuple[LinearCharacter, Subspace]] = []
    for ch in chars:
        stacked: list[list[Cyclotomic]] = []
        for i, s in enumerate(syms):
            shifted = s - Matrix.scalar(width, ch.on_generator(i))
            stacked.extend(list(row) for row in shifted.rows)
        space = kernel(Matrix(stacked))
        if space.dim:
            out.append((ch, space))
    return out


def min_semi_invariant_degree(group: MatGroup, max_degree: int) -> int | None:
    """Smallest degree up to the bound with any semi-invariant, else None."""
    for d in range(1, max_degree + 1):
        if semi_invariants(group, d):
            return d
    return None


class Polynomial:
    """A homogeneous polynomial with cyclotomic coefficients."""

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs) -> None:
        monos = monomial_exponents(nvars, degree)
        vals = list(coeffs)
        if len(vals) != len(monos):
            raise ValueError("coefficient count does not match the basis")
        self.nvars = nvars
        self.degree = degree
        self.coeffs = tuple(
            v if isinstance(v, Cyclotomic) else Cyclotomic(1, [Fraction(v)])
            for v in vals
        )

    @classmethod
    def from_vector(cls, nvars: int, degree: int, vector) -> "Polynomial":
        return cls(nvars, degree, vector)

    def coefficient_vector(self) -> tuple[Cyclotomic, ...]:
        return self.coeffs

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def substitute(self, m: Matrix) -> "Polynomial":
        """The polynomial f(m x)."""
        if m.nrows != self.nvars:
            raise ValueError("matrix size does not match the variables")
        s = _substitution_matrix(m, self.degree)
        return Polynomial(self.nvars, self.degree, s.apply(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.nvars, self.degree, self.coeffs))

    def scaled(self, factor) -> "Polynomial":
        return Polynomial(
            self.nvars, self.degree, [factor * c for c in self.coeffs]
        )

    def __str__(self) -> str:
        names = variable_names(self.nvars)
        monos = monomial_exponents(self.nvars, self.degree)
        parts: list[str] = []
        for exps, coeff in zip(monos, self.coeffs):
            if coeff.is_zero():
                continue
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            text = str(coeff)
            first = not parts
            if not body:
                term = text if first or text.startswith("-") else f"+{text}"
            elif text == "1":
                term = body if first else f"+{body}"
            elif text == "-1":
                term = f"-{body}"
            elif "+" in text or text.lstrip("-").count("-"):
                term = f"({text})*{body}" if first else f"+({text})*{body}"
            else:
                sign = "" if first or text.startswith("-") else "+"
                term = f"{sign}{text}*{body}"
            parts.append(term)
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return f"Polynomial({self})"
