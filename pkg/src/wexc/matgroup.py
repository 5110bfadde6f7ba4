"""Finite matrix groups: breadth-first closure and structure queries.

Closure enumerates the group by multiplying stored elements by the
generators on the right.  Elements live in one fixed cyclotomic field
(the lcm of the generator entry conductors), encoded as integer
coefficient arrays with a single denominator per matrix; products are
numpy contractions followed by one matmul against a precomputed
fold-and-reduce table, so no Fraction arithmetic happens inside the
closure loop.  Coefficients are gcd-normalized after every product,
which makes the (denominator, bytes) pair a canonical dictionary key.

The walk also records, per element, its parent in the spanning tree and
its abelianized word in the generators; every non-tree edge contributes
one relation.  Those relations are what the abelianization, the linear
characters, and the homomorphism searches run on.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, root_of_unity
from .errors import CapExceeded, InternalInvariantError
from .linalg import Matrix, hermite_insert, smith_normal_form

DEFAULT_CLOSURE_CAP = 25000

_INT_GUARD = 1 << 62


class _Packer:
    """Codec between exact matrices and integer coefficient arrays."""

    def __init__(self, conductor: int, size: int) -> None:
        self.n = conductor
        self.phi = euler_phi(conductor)
        self.size = size
        phi = self.phi
        # powers[s] = integer coefficients of x^s mod Phi_n; conjugation
        # may need any exponent below the conductor
        top = max(2 * phi - 1, conductor)
        mod = cyclotomic_polynomial(conductor)
        powers = np.zeros((top, phi), dtype=np.int64)
        scratch = [0] * (phi + 1)
        scratch[0] = 1
        for s in range(top):
            powers[s] = scratch[:phi]
            scratch = [0] + scratch[:-1]
            if scratch[phi]:
                c = scratch[phi]
                scratch[phi] = 0
                for i in range(phi):
                    scratch[i] -= c * mod[i]
        fold = np.zeros((phi * phi, phi), dtype=np.int64)
        for p in range(phi):
            for q in range(phi):
                fold[p * phi + q] = powers[p + q]
        self._fold = fold
        self._fold_max = int(np.abs(fold).max()) or 1
        conj = np.zeros((phi, phi), dtype=np.int64)
        for p in range(phi):
            conj[p] = powers[(conductor - p) % conductor]
        self.conj_table = conj

    def pack(self, m: Matrix) -> tuple[int, np.ndarray]:
        if m.nrows != self.size or m.ncols != self.size:
            raise ValueError("matrix size does not match this group")
        coeffs = [[x.coefficients_at(self.n) for x in row] for row in m.rows]
        den = 1
        for row in coeffs:
            for cell in row:
                for c in cell:
                    den = lcm(den, c.denominator)
        arr = np.zeros((self.size, self.size, self.phi), dtype=np.int64)
        for i, row in enumerate(coeffs):
            for j, cell in enumerate(row):
                for p, c in enumerate(cell):
                    arr[i, j, p] = c.numerator * (den // c.denominator)
        return self._normalize(den, arr)

    def unpack(self, den: int, arr: np.ndarray) -> Matrix:
        return Matrix(
            [
                [
                    Cyclotomic(self.n, [Fraction(int(c), den) for c in arr[i, j]])
                    for j in range(self.size)
                ]
                for i in range(self.size)
            ]
        )

    @staticmethod
    def _normalize(den: int, arr: np.ndarray) -> tuple[int, np.ndarray]:
        g = int(np.gcd.reduce(np.abs(arr).ravel()))
        g = gcd(g, den)
        if g > 1:
            arr //= g
            den //= g
        return den, arr

    def mul(
        self, da: int, a: np.ndarray, db: int, b: np.ndarray
    ) -> tuple[int, np.ndarray]:
        bound = (
            int(np.abs(a).max())
            * int(np.abs(b).max())
            * self.size
            * self.phi
            * self.phi
            * self._fold_max
        )
        if bound >= _INT_GUARD or da * db >= _INT_GUARD:
            raise InternalInvariantError(
                "coefficient growth exceeded the packed integer range"
            )
        prod = np.einsum("ikp,kjq->ijpq", a, b)
        folded = prod.reshape(self.size, self.size, self.phi * self.phi) @ self._fold
        return self._normalize(da * db, folded)

    @staticmethod
    def key(den: int, arr: np.ndarray) -> tuple[int, bytes]:
        return den, arr.tobytes()

    def identity(self) -> tuple[int, np.ndarray]:
        arr = np.zeros((self.size, self.size, self.phi), dtype=np.int64)
        for i in range(self.size):
            arr[i, i, 0] = 1
        return 1, arr

    def is_scalar(self, arr: np.ndarray) -> bool:
        d = arr[0, 0]
        for i in range(self.size):
            for j in range(self.size):
                if i == j:
                    if not np.array_equal(arr[i, j], d):
                        return False
                elif arr[i, j].any():
                    return False
        return True


def _closure_over(mul, identity, letters, cap=None):
    """Generic right-multiplication closure over opaque element labels.

    Returns (elements in discovery order, parent edges, non-tree edges);
    the parent edge of element t is (u, i) with t = mul(u, letters[i]),
    and edges reference positions in the element list.
    """
    elements = [identity]
    position = {identity: 0}
    parents: list[tuple[int, int]] = [(-1, -1)]
    relations: list[tuple[int, int, int]] = []
    head = 0
    while head < len(elements):
        u = elements[head]
        for i, s in enumerate(letters):
            v = mul(u, s)
            at = position.get(v)
            if at is None:
                if cap is not None and len(elements) >= cap:
                    raise CapExceeded(f"closure exceeded the cap of {cap} elements")
                position[v] = len(elements)
                elements.append(v)
                parents.append((head, i))
            else:
                relations.append((head, i, at))
        head += 1
    return elements, parents, relations


def _bucket_relations(relations, count):
    """Group relations by the walk position that makes them checkable."""
    buckets: list[list[tuple[int, int, int]]] = [[] for _ in range(count)]
    for u, i, v in relations:
        buckets[max(u, v)].append((u, i, v))
    return buckets


def _fill_homomorphism(parents, buckets, identity, letter_images, mul):
    """Extend letter images along the walk, aborting on a broken relation."""
    n = len(parents)
    images = [identity] * n
    for u, i, v in buckets[0]:
        if mul(images[u], letter_images[i]) != images[v]:
            return None
    for t in range(1, n):
        u, i = parents[t]
        images[t] = mul(images[u], letter_images[i])
        for u2, i2, v2 in buckets[t]:
            if mul(images[u2], letter_images[i2]) != images[v2]:
                return None
    return images


class LinearCharacter:
    """A degree-one character, stored as exponent weights per generator."""

    __slots__ = ("group", "modulus", "weights", "_gen_values")

    def __init__(self, group: "MatGroup", modulus: int, weights: tuple[int, ...]):
        self.group = group
        self.modulus = modulus
        self.weights = weights
        self._gen_values = tuple(
            root_of_unity(modulus, w % modulus) for w in weights
        )

    def on_generator(self, i: int) -> Cyclotomic:
        return self._gen_values[i]

    def exponent_at(self, index: int) -> int:
        vec = self.group.exponent_vector(index)
        return int(
            sum(w * int(x) for w, x in zip(self.weights, vec)) % self.modulus
        )

    def value_at(self, index: int) -> Cyclotomic:
        return root_of_unity(self.modulus, self.exponent_at(index))

    @property
    def is_trivial(self) -> bool:
        return all(w % self.modulus == 0 for w in self.weights)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(w % self.modulus for w in self.weights)

    def __repr__(self):
        vals = ", ".join(str(v) for v in self._gen_values)
        return f"LinearCharacter({vals})"


class TransitiveAction:
    """A transitive action of a closed group on points 0..degree-1."""

    __slots__ = ("group", "degree", "perms")

    def __init__(self, group: "MatGroup", degree: int, perms: np.ndarray):
        self.group = group
        self.degree = degree
        self.perms = perms  # shape (order, degree); row e maps p -> perms[e, p]

    def image_of_point(self, element: int, point: int) -> int:
        return int(self.perms[element, point])

    def transversal(self, point: int = 0) -> list[int]:
        """First element moving `point` to p, for each p."""
        reps = [-1] * self.degree
        found = 0
        for e in range(self.group.order):
            p = int(self.perms[e, point])
            if reps[p] < 0:
                reps[p] = e
                found += 1
                if found == self.degree:
                    break
        if found < self.degree:
            raise InternalInvariantError("action is not transitive")
        return reps

    def stabilizer_indices(self, point: int = 0) -> list[int]:
        return [
            e for e in range(self.group.order) if self.perms[e, point] == point
        ]

    def point_stabilizer(self, point: int = 0) -> "MatGroup":
        """The stabilizer subgroup, generated by its Schreier elements."""
        g = self.group
        reps = self.transversal(point)
        seen: set[int] = set()
        mats: list[Matrix] = []
        for p in range(self.degree):
            for ge in g.generator_indices:
                q = int(self.perms[ge, p])
                h = g.mul(g.inv(reps[q]), g.mul(ge, reps[p]))
                if h and h not in seen:
                    seen.add(h)
                    mats.append(g.element(h))
        if not mats:
            mats = [Matrix.identity(g.dimension)]
        return MatGroup(mats, name=f"{g.name}/stab", cap=g.order + 1)


class MatGroup:
    """A finite group of exact matrices, closed on demand."""

    def __init__(self, generators, name: str = "group",
                 cap: int = DEFAULT_CLOSURE_CAP) -> None:
        mats = [g if isinstance(g, Matrix) else Matrix(g) for g in generators]
        if not mats:
            raise ValueError("at least one generator is required")
        dim = mats[0].nrows
        for m in mats:
            if not m.is_square or m.nrows != dim:
                raise ValueError("generators must be square and equal-sized")
            if m.determinant().is_zero():
                raise ValueError("generators must be invertible")
        self.name = name
        self.dimension = dim
        self.generators = mats
        self.cap = cap
        conductor = 1
        for m in mats:
            for row in m.rows:
                for x in row:
                    conductor = lcm(conductor, x.n)
        self.conductor = conductor
        self._packer = _Packer(conductor, dim)
        self._closed = False

    # -- closure -------------------------------------------------------

    def close(self, cap: int | None = None) -> int:
        """Enumerate all elements; returns the group order.  Idempotent."""
        if self._closed:
            return len(self._dens)
        cap = self.cap if cap is None else cap
        packer = self._packer
        k = len(self.generators)
        gen_packed = [packer.pack(m) for m in self.generators]

        dens: list[int] = []
        arrs: list[np.ndarray] = []
        index: dict[tuple[int, bytes], int] = {}
        parents: list[tuple[int, int]] = []
        expvecs: list[np.ndarray] = []
        relations: list[tuple[int, int, int]] = []

        def add(den, arr, parent, expvec) -> int:
            idx = len(dens)
            dens.append(den)
            arrs.append(arr)
            index[packer.key(den, arr)] = idx
            parents.append(parent)
            expvecs.append(expvec)
            return idx

        iden, iarr = packer.identity()
        add(iden, iarr, (-1, -1), np.zeros(k, dtype=np.int64))
        unit = np.eye(k, dtype=np.int64)

        head = 0
        while head < len(dens):
            du, au = dens[head], arrs[head]
            for i in range(k):
                dg, ag = gen_packed[i]
                dv, av = packer.mul(du, au, dg, ag)
                at = index.get(packer.key(dv, av))
                if at is None:
                    if len(dens) >= cap:
                        raise CapExceeded(
                            f"group closure for {self.name!r} exceeded "
                            f"{cap} elements"
                        )
                    add(dv, av, (head, i), expvecs[head] + unit[i])
                else:
                    relations.append((head, i, at))
            head += 1

        self._dens = dens
        self._arrs = arrs
        self._index = index
        self._parents = parents
        self._expvec = np.vstack(expvecs)
        self._relations = np.array(relations, dtype=np.int64).reshape(-1, 3)
        self.generator_indices = [index[packer.key(*gp)] for gp in gen_packed]
        self._traces = np.stack([np.trace(a, axis1=0, axis2=1) for a in arrs])
        self._trace_dens = np.array(dens, dtype=np.int64)
        self._mul_memo: dict[tuple[int, int], int] = {}
        self._element_memo: dict[int, Matrix] = {}
        self._order_memo: dict[int, int] = {}
        self._inv_table: np.ndarray | None = None
        self._characters: list[LinearCharacter] | None = None
        self._abelian: tuple[int, ...] | None = None
        self._scalars: list[int] | None = None
        self._closed = True
        return len(dens)

    @property
    def is_closed(self) -> bool:
        return self._closed

    @property
    def order(self) -> int:
        self.close()
        return len(self._dens)

    # -- element access --------------------------------------------------

    def element(self, index: int) -> Matrix:
        self.close()
        m = self._element_memo.get(index)
        if m is None:
            m = self._packer.unpack(self._dens[index], self._arrs[index])
            self._element_memo[index] = m
        return m

    def index_of(self, m: Matrix) -> int | None:
        """Index of an exact matrix in this group, or None."""
        self.close()
        for row in m.rows:
            for x in row:
                if self.conductor % x.n:
                    return None
        return self._index.get(self._packer.key(*self._packer.pack(m)))

    def exponent_vector(self, index: int) -> np.ndarray:
        """Abelianized word of the element in the generators."""
        self.close()
        return self._expvec[index]

    def trace_value(self, index: int) -> Cyclotomic:
        self.close()
        den = int(self._trace_dens[index])
        return Cyclotomic(
            self._packer.n, [Fraction(int(c), den) for c in self._traces[index]]
        )

    def packed_traces(self) -> tuple[int, np.ndarray, np.ndarray]:
        """(conductor, per-element denominators, coefficient rows)."""
        self.close()
        return self._packer.n, self._trace_dens, self._traces

    # -- multiplication at index level -------------------------------------

    def mul(self, i: int, j: int) -> int:
        self.close()
        hit = self._mul_memo.get((i, j))
        if hit is not None:
            return hit
        d, a = self._packer.mul(
            self._dens[i], self._arrs[i], self._dens[j], self._arrs[j]
        )
        at = self._index.get(self._packer.key(d, a))
        if at is None:
            raise InternalInvariantError(
                "product of stored elements escaped the closed set"
            )
        self._mul_memo[(i, j)] = at
        return at

    def inv(self, i: int) -> int:
        self.close()
        if self._inv_table is None:
            table = np.full(len(self._dens), -1, dtype=np.int64)
            table[0] = 0
            gen_inv = [self.index_of(m.inverse()) for m in self.generators]
            if any(x is None for x in gen_inv):
                raise InternalInvariantError("generator inverse not in closure")
            for v in range(1, len(self._dens)):
                u, g = self._parents[v]
                # (u g)^-1 = g^-1 u^-1; parents precede children in BFS order
                table[v] = self.mul(gen_inv[g], int(table[u]))
            self._inv_table = table
        return int(self._inv_table[i])

    def element_order(self, i: int) -> int:
        self.close()
        hit = self._order_memo.get(i)
        if hit is not None:
            return hit
        k, x = 1, i
        while x != 0:
            x = self.mul(x, i)
            k += 1
            if k > len(self._dens):
                raise InternalInvariantError("element order exceeds group order")
        self._order_memo[i] = k
        return k

    # -- structure ---------------------------------------------------------

    def scalar_indices(self) -> list[int]:
        """Elements that are scalar multiples of the identity."""
        self.close()
        if self._scalars is None:
            self._scalars = [
                i for i, a in enumerate(self._arrs) if self._packer.is_scalar(a)
            ]
        return self._scalars

    def center_indices(self) -> list[int]:
        gens = self.generator_indices
        return [
            i
            for i in range(self.order)
            if all(self.mul(i, g) == self.mul(g, i) for g in gens)
        ]

    def projective_order(self) -> int:
        return self.order // len(self.scalar_indices())

    def projective_quotient(self) -> "ProjectiveQuotient":
        return ProjectiveQuotient(self)

    def abelianization(self) -> tuple[int, ...]:
        """Invariant factors > 1 of the abelianized group."""
        self._build_characters()
        return self._abelian

    def linear_characters(self) -> list[LinearCharacter]:
        """All degree-one characters, trivial first, in a canonical order."""
        self._build_characters()
        return list(self._characters)

    def relation_vectors(self) -> np.ndarray:
        """Abelianized relators, one per non-tree edge of the walk."""
        self.close()
        k = len(self.generators)
        if len(self._relations) == 0:
            return np.zeros((0, k), dtype=np.int64)
        u, g, v = self._relations.T
        vecs = self._expvec[u] - self._expvec[v]
        onehot = np.zeros((len(g), k), dtype=np.int64)
        onehot[np.arange(len(g)), g] = 1
        return vecs + onehot

    def _build_characters(self) -> None:
        self.close()
        if self._characters is not None:
            return
        k = len(self.generators)
        relmat = self.relation_vectors()
        rows: list[list[int]] = []
        for vec in relmat:
            hermite_insert(rows, vec.tolist())
        if len(rows) < k:
            raise InternalInvariantError(
                "relation lattice has deficient rank for a finite group"
            )
        invariants, _, vt = smith_normal_form(rows, with_transforms=True)
        if len(invariants) != k or any(d == 0 for d in invariants):
            raise InternalInvariantError("abelianization is not finite")
        self._abelian = tuple(d for d in invariants if d > 1)
        modulus = lcm(*invariants)
        chars: list[LinearCharacter] = []
        for combo in itertools.product(*[range(d) for d in invariants]):
            weights = tuple(
                int(
                    sum(
                        (modulus // invariants[m]) * combo[m] * vt[j][m]
                        for m in range(k)
                    )
                    % modulus
                )
                for j in range(k)
            )
            if len(relmat) and int(((relmat @ np.array(weights)) % modulus).max()):
                raise InternalInvariantError(
                    "candidate character fails a recorded relation"
                )
            chars.append(LinearCharacter(self, modulus, weights))
        chars.sort(key=LinearCharacter.sort_key)
        self._characters = chars

    # -- conjugation-based queries -------------------------------------------

    def conjugacy_class(self, i: int) -> list[int]:
        gens = self.generator_indices
        seen = {i}
        queue = [i]
        while queue:
            x = queue.pop()
            for g in gens:
                y = self.mul(self.inv(g), self.mul(x, g))
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def conjugacy_classes(self) -> list[list[int]]:
        out = []
        done: set[int] = set()
        for i in range(self.order):
            if i not in done:
                cls = self.conjugacy_class(i)
                done.update(cls)
                out.append(cls)
        return out

    def subgroup_closure(self, indices) -> list[int]:
        """All products of the given elements, as element indices."""
        elements, _, _ = _closure_over(self.mul, 0, list(indices))
        return elements

    def normal_closure(self, indices) -> list[int]:
        gens = self.generator_indices
        current = set(indices)
        while True:
            sub = set(self.subgroup_closure(current))
            extra = {
                self.mul(self.inv(g), self.mul(x, g)) for g in gens for x in sub
            }
            if extra <= sub:
                return sorted(sub)
            current = sub | extra

    # -- homomorphism searches -------------------------------------------------

    def minimized_generator_letters(self) -> list[int]:
        """A greedily pruned subset of generator letters with the same span."""
        self.close()
        letters = list(range(len(self.generators)))
        elems = self.generator_indices
        for i in list(letters):
            trial = [x for x in letters if x != i]
            if not trial:
                continue
            spanned, _, _ = _closure_over(self.mul, 0, [elems[x] for x in trial])
            if len(spanned) == self.order:
                letters = trial
        return letters

    def _subset_walk(self):
        letters = self.minimized_generator_letters()
        letter_elems = [self.generator_indices[x] for x in letters]
        elements, parents, relations = _closure_over(self.mul, 0, letter_elems)
        if len(elements) != self.order:
            raise InternalInvariantError("generator subset lost elements")
        buckets = _bucket_relations(relations, len(elements))
        return letter_elems, elements, parents, buckets

    def enumerate_transitive_homs(self, degree: int) -> list[TransitiveAction]:
        """Transitive actions on `degree` points, up to point relabeling."""
        letter_elems, elements, parents, buckets = self._subset_walk()
        letter_orders = [self.element_order(e) for e in letter_elems]
        ident = tuple(range(degree))
        all_perms = list(itertools.permutations(range(degree)))

        def perm_order(p) -> int:
            k, q = 1, p
            while q != ident:
                q = tuple(p[x] for x in q)
                k += 1
            return k

        by_letter = [
            [p for p in all_perms if o % perm_order(p) == 0]
            for o in letter_orders
        ]
        compose = lambda a, b: tuple(a[b[x]] for x in range(degree))  # noqa: E731

        # relabeling a candidate conjugates every letter image by the same
        # sigma; an integer table keeps the dedup loop cheap
        perm_id = {p: i for i, p in enumerate(all_perms)}
        relabel = [
            tuple(
                perm_id[tuple(sigma[p[inv_sigma[x]]] for x in range(degree))]
                for p in all_perms
            )
            for sigma, inv_sigma in _PERM_PAIRS[degree]
        ]
        by_letter_ids = [[perm_id[p] for p in ps] for ps in by_letter]
        compose_id = [
            [perm_id[compose(a, b)] for b in all_perms] for a in all_perms
        ]
        order_id = [perm_order(p) for p in all_perms]
        inverse_id = [
            perm_id[tuple(sorted(range(degree), key=p.__getitem__))]
            for p in all_perms
        ]

        # a full product over the letters is exponential; prune candidate
        # pairs whose short products already violate order divisibility
        count = len(letter_elems)
        compat: dict[tuple[int, int], list[int]] = {}
        for a in range(count):
            for b in range(a + 1, count):
                prod_ord = self.element_order(
                    self.mul(letter_elems[a], letter_elems[b])
                )
                quot_ord = self.element_order(
                    self.mul(self.inv(letter_elems[a]), letter_elems[b])
                )
                masks = []
                for pa in by_letter_ids[a]:
                    mask = 0
                    for pos, pb in enumerate(by_letter_ids[b]):
                        if prod_ord % order_id[compose_id[pa][pb]]:
                            continue
                        if quot_ord % order_id[compose_id[inverse_id[pa]][pb]]:
                            continue
                        mask |= 1 << pos
                    masks.append(mask)
                compat[a, b] = masks

        survivors: list[tuple[int, ...]] = []
        choice = [0] * count

        def descend(k: int, masks: list[int]) -> None:
            if k == count:
                survivors.append(
                    tuple(by_letter_ids[j][choice[j]] for j in range(count))
                )
                return
            m = masks[0]
            while m:
                low = m & -m
                m ^= low
                pos = low.bit_length() - 1
                choice[k] = pos
                narrowed = []
                for j in range(k + 1, count):
                    nm = masks[j - k] & compat[k, j][pos]
                    if not nm:
                        break
                    narrowed.append(nm)
                else:
                    descend(k + 1, narrowed)

        descend(0, [(1 << len(by_letter_ids[j])) - 1 for j in range(count)])

        found: list[TransitiveAction] = []
        seen: set[tuple] = set()
        for ids in survivors:
            assignment = tuple(all_perms[i] for i in ids)
            orbit = {0}
            frontier = [0]
            while frontier:
                x = frontier.pop()
                for p in assignment:
                    if p[x] not in orbit:
                        orbit.add(p[x])
                        frontier.append(p[x])
            if len(orbit) != degree:
                continue
            canon = min(tuple(row[i] for i in ids) for row in relabel)
            if canon in seen:
                continue
            seen.add(canon)
            images = _fill_homomorphism(parents, buckets, ident, assignment, compose)
            if images is None:
                continue
            perms = np.zeros((self.order, degree), dtype=np.int16)
            for pos, e in enumerate(elements):
                perms[e] = images[pos]
            found.append(TransitiveAction(self, degree, perms))
        return found

    def find_isomorphism(self, other: "MatGroup") -> np.ndarray | None:
        """An isomorphism onto `other` as an index map, or None."""
        self.close()
        other.close()
        if self.order != other.order:
            return None
        letter_elems, elements, parents, buckets = self._subset_walk()
        orders = [self.element_order(e) for e in letter_elems]
        candidates = [
            [j for j in range(other.order) if other.element_order(j) == o]
            for o in orders
        ]
        for assignment in itertools.product(*candidates):
            images = _fill_homomorphism(parents, buckets, 0, assignment, other.mul)
            if images is None or len(set(images)) != self.order:
                continue
            mapping = np.zeros(self.order, dtype=np.int64)
            for pos, e in enumerate(elements):
                mapping[e] = images[pos]
            return mapping
        return None

    def __repr__(self):
        state = f"order {len(self._dens)}" if self._closed else "not closed"
        return f"MatGroup({self.name!r}, dim {self.dimension}, {state})"


def _perm_pairs(degree: int):
    pairs = []
    for sigma in itertools.permutations(range(degree)):
        inv = [0] * degree
        for a, b in enumerate(sigma):
            inv[b] = a
        pairs.append((sigma, tuple(inv)))
    return pairs


_PERM_PAIRS = {d: _perm_pairs(d) for d in (1, 2, 3, 4, 5)}


class ProjectiveQuotient:
    """The group modulo its scalar subgroup, on canonical coset labels."""

    def __init__(self, group: MatGroup) -> None:
        group.close()
        self.group = group
        scalars = group.scalar_indices()
        n = group.order
        label = np.arange(n, dtype=np.int64)
        for z in scalars:
            if z == 0:
                continue
            moved = np.array([group.mul(z, i) for i in range(n)], dtype=np.int64)
            label = np.minimum(label, moved)
        self.label = label
        self.elements = sorted({int(x) for x in label})
        self.order = len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return int(self.label[self.group.mul(a, b)])

    def inv(self, a: int) -> int:
        return int(self.label[self.group.inv(a)])

    def conjugacy_classes(self) -> list[list[int]]:
        gens = [int(self.label[g]) for g in self.group.generator_indices]
        out = []
        done: set[int] = set()
        for x in self.elements:
            if x in done:
                continue
            seen = {x}
            queue = [x]
            while queue:
                y = queue.pop()
                for g in gens:
                    c = self.mul(self.inv(g), self.mul(y, g))
                    if c not in seen:
                        seen.add(c)
                        queue.append(c)
            done.update(seen)
            out.append(sorted(seen))
        return out

    def is_simple(self) -> bool:
        """True when every nontrivial conjugacy class generates everything."""
        if self.order == 1:
            return False
        identity = int(self.label[0])
        for cls in self.conjugacy_classes():
            if cls == [identity]:
                continue
            spanned, _, _ = _closure_over(self.mul, identity, cls)
            if len(spanned) != self.order:
                return False
        return True
