"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored on the power basis 1, z, ..., z^(phi(n)-1) of its
minimal conductor n, where z = E(n) = exp(2*pi*i/n), with Fraction
coefficients reduced modulo the n-th cyclotomic polynomial.  Construction
always normalizes: the conductor is descended to the smallest cyclotomic
field containing the value (and is never congruent to 2 mod 4), so two
equal field elements are structurally identical and hash alike.

The module also provides the text grammar used for matrix input:
rationals ``p/q``, ``E(n)`` for roots of unity, ``+ - * / ^`` and
parentheses.  ``str()`` emits the canonical form that ``parse_cyclotomic``
reads back.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ParseError

Coeffs = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    # num, den monic integer polynomials, den divides num exactly
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dd]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree, as exact integers."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    q = num
    for d in range(1, n):
        if n % d == 0:
            q = _poly_divmod_exact(q, list(cyclotomic_polynomial(d)))
    return tuple(q)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    # row t = coefficients of z^(phi+t) on the power basis; covers every
    # degree that folding mod n or multiplying two reduced values can hit
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    top_degree = max(2 * phi - 2, n - 1)
    rows: list[tuple[Fraction, ...]] = []
    prev = [Fraction(-c) for c in mod[:phi]]  # z^phi
    rows.append(tuple(prev))
    for _ in range(phi, top_degree):
        shifted = [_ZERO] + prev[:-1]
        top = prev[-1]
        if top:
            for i in range(phi):
                shifted[i] += top * -mod[i]
        prev = shifted
        rows.append(tuple(prev))
    return tuple(rows)


def _reduce_mod_phi(n: int, coeffs: list[Fraction]) -> list[Fraction]:
    phi = euler_phi(n)
    if len(coeffs) < phi:
        return coeffs + [_ZERO] * (phi - len(coeffs))
    if len(coeffs) > n:
        folded = coeffs[:n]
        for i in range(n, len(coeffs)):
            folded[i % n] += coeffs[i]
        coeffs = folded
    table = _reduction_table(n)
    out = list(coeffs[:phi])
    for deg in range(phi, len(coeffs)):
        c = coeffs[deg]
        if c:
            row = table[deg - phi]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


@lru_cache(maxsize=None)
def _subfield_solver(n: int, m: int):
    """Row-reduced system expressing Q(zeta_m) inside Q(zeta_n), m | n.

    Eliminates the lifted power basis of the subfield with an identity
    alongside, so the recorded row operations can be replayed on any
    target vector.  Returns (pivot columns, solve rows, check rows):
    the value lies in the subfield iff every check row kills it, and the
    solve rows then read off its subfield coordinates directly.
    """
    phi_n, phi_m = euler_phi(n), euler_phi(m)
    step = n // m
    basis: list[list[Fraction]] = []
    for i in range(phi_m):
        vec = [_ZERO] * (step * i + 1)
        vec[step * i] = _ONE
        basis.append(_reduce_mod_phi(n, vec))
    # columns: phi_m basis vectors; rows: phi_n coordinates
    aug = [[basis[j][i] for j in range(phi_m)] for i in range(phi_n)]
    ident = [[_ONE if i == j else _ZERO for j in range(phi_n)] for i in range(phi_n)]
    r = 0
    pivcols: list[int] = []
    for col in range(phi_m):
        piv = next((i for i in range(r, phi_n) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        ident[r], ident[piv] = ident[piv], ident[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        ident[r] = [x * inv for x in ident[r]]
        for i in range(phi_n):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
                ident[i] = [a - f * b for a, b in zip(ident[i], ident[r])]
        pivcols.append(col)
        r += 1
    solve = tuple(tuple(row) for row in ident[:r])
    check = tuple(tuple(row) for row in ident[r:])
    return tuple(pivcols), solve, check


def _try_descend(n: int, coeffs: list[Fraction], m: int) -> list[Fraction] | None:
    pivcols, solve, check = _subfield_solver(n, m)
    support = [j for j, cj in enumerate(coeffs) if cj]
    # membership test first: failures are the common case
    for row in check:
        if sum((row[j] * coeffs[j] for j in support), _ZERO):
            return None
    sol = [_ZERO] * euler_phi(m)
    for i, col in enumerate(pivcols):
        sol[col] = sum((solve[i][j] * coeffs[j] for j in support), _ZERO)
    return sol


class Cyclotomic:
    """An exact element of some Q(zeta_n), normalized to minimal conductor."""

    __slots__ = ("n", "c", "_hash")

    n: int
    c: Coeffs

    def __init__(self, conductor: int, coeffs) -> None:
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        vals = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
        vals = _reduce_mod_phi(conductor, vals)
        n, vals = self._minimize(conductor, vals)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", tuple(vals))
        object.__setattr__(self, "_hash", hash((n, self.c)))

    @staticmethod
    def _minimize(n: int, coeffs: list[Fraction]) -> tuple[int, list[Fraction]]:
        changed = True
        while changed and n > 1:
            changed = False
            for p in _prime_factors(n):
                m = n // p
                while m % 4 == 2:
                    m //= 2
                if m == n or m < 1:
                    continue
                down = _try_descend(n, coeffs, m)
                if down is not None:
                    n, coeffs = m, down
                    changed = True
                    break
        return n, coeffs

    def __setattr__(self, *_):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rational(q) -> Cyclotomic:
        return Cyclotomic(1, [Fraction(q)])

    @staticmethod
    def zero() -> Cyclotomic:
        return _CACHED_ZERO

    @staticmethod
    def one() -> Cyclotomic:
        return _CACHED_ONE

    # -- predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return self.n == 1 and not self.c[0]

    def is_one(self) -> bool:
        return self.n == 1 and self.c[0] == 1

    def is_rational(self) -> bool:
        return self.n == 1

    @property
    def rational_value(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    # -- arithmetic --------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyclotomic | None":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic(1, [Fraction(x)])
        return None

    def _lift(self, n: int) -> list[Fraction]:
        # coefficients of self on the power basis of Q(zeta_n), self.n | n
        step = n // self.n
        out = [_ZERO] * (step * (len(self.c) - 1) + 1)
        for i, ci in enumerate(self.c):
            if ci:
                out[step * i] = ci
        return _reduce_mod_phi(n, out)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.n * o.n // gcd(self.n, o.n)
        a, b = self._lift(n), o._lift(n)
        return Cyclotomic(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-x for x in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.n == 1:
            q = self.c[0]
            return Cyclotomic(o.n, [q * y for y in o.c])
        if o.n == 1:
            q = o.c[0]
            return Cyclotomic(self.n, [q * x for x in self.c])
        n = self.n * o.n // gcd(self.n, o.n)
        a, b = self._lift(n), o._lift(n)
        prod = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyclotomic(n, prod)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        """Multiplicative inverse via extended Euclid against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.n == 1:
            return Cyclotomic(1, [1 / self.c[0]])
        # extended gcd of a(x) and Phi_n(x) over Q; gcd is a nonzero rational
        a = list(self.c)
        b = [Fraction(x) for x in cyclotomic_polynomial(self.n)]
        s_a: list[Fraction] = [_ONE]
        s_b: list[Fraction] = [_ZERO]

        def deg(p: list[Fraction]) -> int:
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        while True:
            da, db = deg(a), deg(b)
            if db < 0:
                break
            if da < db:
                a, b = b, a
                s_a, s_b = s_b, s_a
                continue
            # kill leading term of a with b
            f = a[da] / b[db]
            shift = da - db
            for i in range(db + 1):
                a[i + shift] -= f * b[i]
            ns = [_ZERO] * (shift + len(s_b))
            for i, x in enumerate(s_b):
                ns[i + shift] = f * x
            if len(s_a) < len(ns):
                s_a = s_a + [_ZERO] * (len(ns) - len(s_a))
            for i, x in enumerate(ns):
                s_a[i] -= x
        d = deg(a)
        if d != 0:
            raise ArithmeticError("element shares a factor with Phi_n")
        inv_const = 1 / a[0]
        return Cyclotomic(self.n, [x * inv_const for x in s_a])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def coefficients_at(self, conductor: int) -> Coeffs:
        """Coefficients on the power basis of Q(zeta_conductor).

        The stored conductor must divide the requested one.
        """
        if conductor % self.n:
            raise ValueError(
                f"value at conductor {self.n} does not embed in Q(zeta_{conductor})"
            )
        if conductor == self.n:
            return self.c
        return tuple(self._lift(conductor))

    def conjugate(self) -> Cyclotomic:
        """Complex conjugation, the automorphism zeta_n -> zeta_n^(n-1)."""
        if self.n == 1:
            return self
        n = self.n
        out = [_ZERO] * n
        for i, ci in enumerate(self.c):
            if ci:
                out[(n - i) % n] += ci
        return Cyclotomic(n, out)

    # -- comparisons and hashing --------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.n == o.n and self.c == o.c

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- printing ------------------------------------------------------

    def __str__(self) -> str:
        if self.n == 1:
            return _fmt_rational(self.c[0])
        parts: list[str] = []
        for i, ci in enumerate(self.c):
            if not ci:
                continue
            parts.append(_fmt_term(ci, self.n, i, first=not parts))
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def to_complex(self) -> complex:
        """Float shadow for display only; arithmetic stays exact."""
        from cmath import exp, pi

        z = exp(2j * pi / self.n)
        return sum(float(ci) * z**i for i, ci in enumerate(self.c))


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_term(c: Fraction, n: int, power: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = -c if c < 0 else c
    if power == 0:
        return sign + _fmt_rational(mag)
    sym = f"E({n})" if power == 1 else f"E({n})^{power}"
    if mag == 1:
        return sign + sym
    return f"{sign}{_fmt_rational(mag)}*{sym}"


_CACHED_ZERO = Cyclotomic(1, [0])
_CACHED_ONE = Cyclotomic(1, [1])


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("order must be >= 1")
    k %= n
    g = gcd(n, k) if k else n
    n, k = n // g, k // g
    vec = [_ZERO] * (k + 1)
    vec[k] = _ONE
    return Cyclotomic(n, vec)


def sqrt2() -> Cyclotomic:
    return root_of_unity(8, 1) - root_of_unity(8, 3)


def sqrt_minus3() -> Cyclotomic:
    return Cyclotomic.one() + 2 * root_of_unity(3, 1)


def sqrt5() -> Cyclotomic:
    return Cyclotomic.one() + 2 * root_of_unity(5, 1) + 2 * root_of_unity(5, 4)


def sqrt_minus7() -> Cyclotomic:
    z = root_of_unity
    return z(7, 1) + z(7, 2) + z(7, 4) - z(7, 3) - z(7, 5) - z(7, 6)


# -- expression grammar ----------------------------------------------------
#
#   expr   := term (('+' | '-') term)*
#   term   := factor (('*' | '/') factor)*
#   factor := '-' factor | atom ['^' ['-'] integer]
#   atom   := integer | 'E' '(' integer ')' | '(' expr ')'


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.peek()
        if ch is None:
            raise ParseError("unexpected end of expression", self.pos)
        self.pos += 1
        return ch

    def integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])


class _Parser:
    def __init__(self, text: str):
        self.tk = _Tokenizer(text)

    def parse(self) -> Cyclotomic:
        value = self.expr()
        if self.tk.peek() is not None:
            raise ParseError(f"unexpected character {self.tk.peek()!r}", self.tk.pos)
        return value

    def expr(self) -> Cyclotomic:
        value = self.term()
        while self.tk.peek() in ("+", "-"):
            op = self.tk.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Cyclotomic:
        value = self.factor()
        while self.tk.peek() in ("*", "/"):
            op = self.tk.take()
            pos = self.tk.pos
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                value = value / rhs
        return value

    def factor(self) -> Cyclotomic:
        if self.tk.peek() == "-":
            self.tk.take()
            return -self.factor()
        value = self.atom()
        if self.tk.peek() == "^":
            self.tk.take()
            neg = False
            if self.tk.peek() == "-":
                self.tk.take()
                neg = True
            k = self.tk.integer()
            if neg and value.is_zero():
                raise ParseError("zero to a negative power", self.tk.pos)
            value = value ** (-k if neg else k)
        return value

    def atom(self) -> Cyclotomic:
        ch = self.tk.peek()
        if ch is None:
            raise ParseError("unexpected end of expression", self.tk.pos)
        if ch == "(":
            self.tk.take()
            value = self.expr()
            if self.tk.peek() != ")":
                raise ParseError("expected ')'", self.tk.pos)
            self.tk.take()
            return value
        if ch == "E":
            self.tk.take()
            if self.tk.peek() != "(":
                raise ParseError("expected '(' after E", self.tk.pos)
            self.tk.take()
            pos = self.tk.pos
            n = self.tk.integer()
            if n == 0:
                raise ParseError("E(0) is not a root of unity", pos)
            if self.tk.peek() != ")":
                raise ParseError("expected ')'", self.tk.pos)
            self.tk.take()
            return root_of_unity(n, 1)
        if ch.isdigit():
            return Cyclotomic(1, [Fraction(self.tk.integer())])
        raise ParseError(f"unexpected character {ch!r}", self.tk.pos)


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Evaluate an expression in the input grammar to a canonical value."""
    return _Parser(text).parse()
