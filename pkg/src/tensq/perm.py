"""Finite permutation groups at desk scale.

Permutations act on 0-based points.  Composition is left-to-right:
``(f * g)(x) == g(f(x))`` -- apply ``f`` first, then ``g``.  This one
convention is used everywhere, including cycle-notation parsing,
conjugation ``a ^ b = b^-1 a b`` and commutators
``[a, b] = a^-1 b^-1 a b``.

Groups enumerate their elements by breadth-first closure from the
identity with generators in declared order, so element indices are
deterministic and stable across runs.  Everything is immutable after
construction; internal caches are filled idempotently (compute fully,
then assign), which keeps concurrent reads safe.

Groups of modest order additionally carry a Cayley table (numpy array
of element indices) so that hot loops can run in index space instead of
composing permutation arrays.  Regular permutation groups (degree equal
to order, identity at point 0, as produced by coset enumeration) build
their table by a breadth-first sweep over right-multiplication columns
without ever materializing element arrays.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import AmbientMismatchError, CapacityError

DEFAULT_MAX_ORDER = 100_000

# Cayley tables: regular groups build one up to this order (the table is
# the enumeration itself); generic groups only for small orders, where
# the n^2 multiplications are cheap.
REGULAR_TABLE_CAP = 20_000
GENERIC_TABLE_CAP = 512


class Permutation:
    """A bijection of {0, ..., degree-1}, stored as an image array."""

    __slots__ = ("_images", "_key")

    def __init__(self, images):
        arr = np.asarray(images, dtype=np.int32)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("images must be a non-empty 1-d sequence")
        n = arr.size
        seen = np.zeros(n, dtype=bool)
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError("images out of range")
        seen[arr] = True
        if not seen.all():
            raise ValueError("images is not a bijection")
        arr = arr.copy()
        arr.setflags(write=False)
        self._images = arr
        self._key = None

    @classmethod
    def _raw(cls, arr):
        # internal fast path: arr is a fresh int32 bijection
        p = object.__new__(cls)
        arr.setflags(write=False)
        p._images = arr
        p._key = None
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(np.arange(degree, dtype=np.int32))

    @property
    def images(self):
        return self._images

    @property
    def degree(self):
        return self._images.size

    @property
    def key(self):
        """Hashable canonical form (image bytes)."""
        k = self._key
        if k is None:
            k = self._images.tobytes()
            self._key = k
        return k

    def __call__(self, point):
        return int(self._images[point])

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise AmbientMismatchError(
                f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._raw(other._images[self._images])

    def inverse(self):
        inv = np.empty(self.degree, dtype=np.int32)
        inv[self._images] = np.arange(self.degree, dtype=np.int32)
        return Permutation._raw(inv)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate_by(self, other):
        """self ^ other = other^-1 * self * other."""
        return other.inverse() * self * other

    def is_identity(self):
        return bool(np.all(self._images == np.arange(self.degree,
                                                     dtype=np.int32)))

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles(fixed_points=True)))

    def cycles(self, fixed_points=False):
        """Disjoint cycles, each starting at its minimal point,
        ordered by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            nxt = int(self._images[start])
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = int(self._images[nxt])
            if len(cyc) > 1 or fixed_points:
                out.append(cyc)
        return out

    def cycle_string(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return (self._images.size == other._images.size
                and np.array_equal(self._images, other._images))

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def commutator(a, b):
    """[a, b] = a^-1 b^-1 a b."""
    if a.degree != b.degree:
        raise AmbientMismatchError(
            f"degree mismatch: {a.degree} vs {b.degree}")
    ai = a.inverse()._images
    bi = b.inverse()._images
    # word a^-1 b^-1 a b, applied left to right
    return Permutation._raw(b._images[a._images[bi[ai]]])


def iterated_commutator(x, y, n):
    """Left-normed [x, y, y, ..., y] with n copies of y; n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = commutator(x, y)
    for _ in range(n - 1):
        c = commutator(c, y)
    return c


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree):
    """Parse cycle notation over 0-based points, e.g. ``(0 1)(2 3)``.

    ``()`` is the identity.  Overlapping cycles compose left to right.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation string")
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    perm = Permutation.identity(degree)
    for body in _CYCLE_RE.findall(text):
        points = [int(tok) for tok in body.replace(",", " ").split()]
        if not points:
            continue
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point in cycle: ({body})")
        images = np.arange(degree, dtype=np.int32)
        for a, b in zip(points, points[1:] + points[:1]):
            if not 0 <= a < degree:
                raise ValueError(f"point {a} out of range for degree {degree}")
            images[a] = b
        perm = perm * Permutation(images)
    return perm


def parse_perm_group(text, *, name=None, max_order=DEFAULT_MAX_ORDER):
    """Parse the permutation-group file format.

    Line 1 is ``degree N``; each further non-empty line is one generator
    in cycle notation.  ``#`` starts a comment.
    """
    degree = None
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise ValueError("first line must be 'degree N'")
            degree = int(m.group(1))
            if degree <= 0:
                raise ValueError("degree must be positive")
            continue
        gens.append(parse_cycles(line, degree))
    if degree is None:
        raise ValueError("missing 'degree N' line")
    if not gens:
        raise ValueError("no generators given")
    return FiniteGroup(gens, name=name, max_order=max_order)


def format_perm_group(group):
    lines = [f"degree {group.degree}"]
    lines += [g.cycle_string() for g in group.generators]
    return "\n".join(lines) + "\n"


class FiniteGroup:
    """A finite group given by permutation generators of equal degree.

    ``regular=True`` marks a regular action with the identity at point 0
    (element index of a member is then its image of 0); coset
    enumeration produces groups of this kind.
    """

    def __init__(self, generators, *, name=None, max_order=DEFAULT_MAX_ORDER,
                 regular=False, order_hint=None):
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g)
                     for g in generators)
        if not gens:
            raise ValueError("generators must be non-empty "
                             "(use the identity for the trivial group)")
        degree = gens[0].degree
        for g in gens[1:]:
            if g.degree != degree:
                raise AmbientMismatchError("generators have mixed degrees")
        self.generators = gens
        self.name = name
        self.max_order = max_order
        self._degree = degree
        self._regular = bool(regular)
        self._order_hint = order_hint
        # caches (idempotent fill)
        self._elements = None
        self._index = None
        self._parents = None
        self._table = None
        self._inv_idx = None
        self._orders_idx = None
        self._element_cache = {}
        self._words = {}

    # -- basics -----------------------------------------------------------

    @property
    def degree(self):
        return self._degree

    @property
    def identity(self):
        return Permutation.identity(self._degree)

    def __repr__(self):
        label = self.name or f"degree-{self._degree} group"
        if self._table is not None or self._elements is not None:
            return f"FiniteGroup({label}, order={self.order()})"
        return f"FiniteGroup({label})"

    # -- enumeration ------------------------------------------------------

    def _close_generic(self):
        if self._index is not None:
            return
        gens = self.generators
        els = [self.identity]
        index = {els[0].key: 0}
        parents = [(-1, -1)]
        i = 0
        while i < len(els):
            e = els[i]
            for gi, g in enumerate(gens):
                f = e * g
                k = f.key
                if k not in index:
                    if len(els) >= self.max_order:
                        raise CapacityError(
                            f"group exceeds element cap {self.max_order}")
                    index[k] = len(els)
                    els.append(f)
                    parents.append((i, gi))
            i += 1
        self._elements = tuple(els)
        self._parents = parents
        self._index = index

    def _close_regular(self):
        if self._table is not None or self._index is not None:
            return
        n = self._order_hint if self._order_hint is not None else self._degree
        if n != self._degree:
            raise ValueError("regular group must have degree == order")
        if n > self.max_order:
            raise CapacityError(f"group exceeds element cap {self.max_order}")
        if n > REGULAR_TABLE_CAP:
            self._close_generic()
            return
        dtype = np.int16 if n <= np.iinfo(np.int16).max else np.int32
        table = np.full((n, n), -1, dtype=dtype)
        cols = [g.images for g in self.generators]
        parents = [None] * n
        parents[0] = (-1, -1)
        table[:, 0] = np.arange(n, dtype=dtype)
        queue = [0]
        qi = 0
        while qi < len(queue):
            j = queue[qi]
            qi += 1
            colj = table[:, j]
            for gi, cg in enumerate(cols):
                k = int(cg[j])           # j * gen_gi, acting at the identity
                if parents[k] is None:
                    table[:, k] = cg[colj]
                    parents[k] = (j, gi)
                    queue.append(k)
        if qi != n:
            raise ValueError("action is not transitive; not a regular group")
        table.setflags(write=False)
        self._parents = parents
        self._table = table

    def _close(self):
        if self._regular:
            self._close_regular()
        else:
            self._close_generic()

    def order(self):
        if self._order_hint is not None:
            return self._order_hint
        self._close()
        n = self._table.shape[0] if self._table is not None \
            else len(self._elements)
        self._order_hint = n
        return n

    def elements(self):
        """All elements in deterministic breadth-first order."""
        if self._elements is None:
            self._close()
            if self._elements is None:       # regular, table-backed
                n = self.order()
                self._elements = tuple(self.element(i) for i in range(n))
        return self._elements

    def element(self, i):
        """Element number ``i`` of the deterministic order."""
        if self._elements is not None:
            return self._elements[i]
        self._close()
        if self._elements is not None:
            return self._elements[i]
        e = self._element_cache.get(i)
        if e is None:
            e = Permutation._raw(self._table[:, i].astype(np.int32))
            self._element_cache[i] = e
        return e

    def index_of(self, perm):
        """Index of ``perm`` in the deterministic order."""
        if perm.degree != self._degree:
            raise AmbientMismatchError("degree mismatch with ambient group")
        self._close()
        if self._regular and self._table is not None:
            # regular action with the identity at point 0: the element
            # index is its image of 0
            i = int(perm.images[0])
            if i < self.order() and np.array_equal(self._table[:, i],
                                                   perm.images):
                return i
            raise KeyError("permutation is not a member of this group")
        try:
            return self._index[perm.key]
        except KeyError:
            raise KeyError("permutation is not a member of this group") \
                from None

    def __contains__(self, perm):
        try:
            self.index_of(perm)
            return True
        except (KeyError, AmbientMismatchError):
            return False

    def word(self, i):
        """Generator-index word for element ``i`` (left-to-right product)."""
        w = self._words.get(i)
        if w is None:
            self._close()
            chain = []
            j = i
            while True:
                pj, gj = self._parents[j]
                if pj < 0:
                    break
                chain.append(gj)
                j = pj
            w = tuple(reversed(chain))
            self._words[i] = w
        return w

    # -- index-space operations --------------------------------------------

    def table(self):
        """Cayley table ``t[i, j] = index(element_i * element_j)``,
        or None when the group is too large to afford one."""
        if self._table is not None:
            return self._table
        if self._regular:
            self._close()
            if self._table is not None:
                return self._table
        n = self.order()
        if n > GENERIC_TABLE_CAP and not self._regular:
            return None
        if self._table is None:
            els = self.elements()
            dtype = np.int16 if n <= np.iinfo(np.int16).max else np.int32
            table = np.empty((n, n), dtype=dtype)
            for j in range(n):
                gj = els[j].images
                for i in range(n):
                    table[i, j] = self._index[gj[els[i].images].tobytes()]
            table.setflags(write=False)
            self._table = table
        return self._table

    def inverse_indices(self):
        if self._inv_idx is None:
            t = self.table()
            if t is not None:
                inv = np.argmax(t == 0, axis=1).astype(np.int32)
            else:
                inv = np.fromiter(
                    (self.index_of(e.inverse()) for e in self.elements()),
                    dtype=np.int32, count=self.order())
            inv.setflags(write=False)
            self._inv_idx = inv
        return self._inv_idx

    def mul_idx(self, i, j):
        t = self.table()
        if t is not None:
            return int(t[i, j])
        return self.index_of(self.element(i) * self.element(j))

    def inv_idx(self, i):
        return int(self.inverse_indices()[i])

    def conj_idx(self, i, j):
        """index of element_i ^ element_j."""
        return self.mul_idx(self.mul_idx(self.inv_idx(j), i), j)

    def comm_idx(self, i, j):
        """index of [element_i, element_j]."""
        ij = self.mul_idx(i, j)
        return self.mul_idx(self.mul_idx(self.inv_idx(i), self.inv_idx(j)), ij)

    def pow_idx(self, i, n):
        if n < 0:
            return self.pow_idx(self.inv_idx(i), -n)
        acc = 0
        base = i
        while n:
            if n & 1:
                acc = self.mul_idx(acc, base)
            n >>= 1
            if n:
                base = self.mul_idx(base, base)
        return acc

    def order_of_idx(self, i):
        if self._orders_idx is None:
            self._orders_idx = {}
        o = self._orders_idx.get(i)
        if o is None:
            o = 1
            j = i
            while j != 0:
                j = self.mul_idx(j, i)
                o += 1
            self._orders_idx[i] = o
        return o

    def exponent(self):
        return math.lcm(*(self.order_of_idx(i) for i in range(self.order())))

    # -- subgroup machinery -------------------------------------------------

    def subgroup(self, gens):
        """Smallest subgroup containing ``gens`` (deterministic closure)."""
        return Subgroup(self, gens)

    def trivial_subgroup(self):
        return Subgroup(self, ())

    def full_subgroup(self):
        return Subgroup(self, self.generators)

    def normal_closure(self, gens):
        """Smallest normal subgroup of this group containing ``gens``."""
        seed = [g if isinstance(g, Permutation) else Permutation(g)
                for g in gens]
        seeds = []
        seen = set()
        for g in seed:
            if g.key not in seen:
                seen.add(g.key)
                seeds.append(g)
        while True:
            sub = Subgroup(self, seeds)
            new = []
            for s in seeds:
                for g in self.generators:
                    c = s.conjugate_by(g)
                    if c not in sub and c.key not in seen:
                        seen.add(c.key)
                        new.append(c)
            if not new:
                return sub
            seeds.extend(new)

    def derived_subgroup(self):
        gens = self.generators
        seeds = [commutator(a, b) for a in gens for b in gens]
        return self.normal_closure(seeds)

    def lower_central_series(self):
        """Terms gamma_1 > gamma_2 > ... down to the first repeated term."""
        terms = [self.full_subgroup()]
        while True:
            prev = terms[-1]
            seeds = [commutator(h, g)
                     for h in prev.generators for g in self.generators]
            nxt = self.normal_closure(seeds)
            if nxt == prev:
                break
            terms.append(nxt)
            if nxt.order() == 1:
                break
        return SeriesReport(kind="lower-central", terms=tuple(terms),
                            stabilized=True)

    def derived_series(self):
        terms = [self.full_subgroup()]
        while True:
            prev = terms[-1]
            sub = prev.as_group().derived_subgroup()
            nxt = Subgroup(self, sub.elements())
            if nxt == prev:
                break
            terms.append(nxt)
            if nxt.order() == 1:
                break
        return SeriesReport(kind="derived", terms=tuple(terms),
                            stabilized=True)

    def center(self):
        gens = self.generators
        members = [e for e in self.elements()
                   if all(e * g == g * e for g in gens)]
        return Subgroup(self, members)

    def is_abelian(self):
        gens = self.generators
        return all(commutator(a, b).is_identity()
                   for a in gens for b in gens)

    def is_nilpotent(self):
        return self.lower_central_series().terms[-1].order() == 1

    def nilpotency_class(self):
        series = self.lower_central_series()
        if series.terms[-1].order() != 1:
            raise ValueError("group is not nilpotent")
        return len(series.terms) - 1

    def is_p_group(self, p):
        n = self.order()
        while n % p == 0:
            n //= p
        return n == 1

    def quotient_action(self, normal):
        """Permutation action of the generators on the cosets of ``normal``.

        ``normal`` must be a normal subgroup; the result has order
        |G| / |N| and acts on coset points numbered by first appearance
        in element order.
        """
        if normal.parent is not self:
            raise ValueError("subgroup has a different parent group")
        if not normal.is_normal():
            raise ValueError("subgroup is not normal")
        n = self.order()
        sub_idx = normal.indices()
        coset_id = [-1] * n
        reps = []
        for i in range(n):
            if coset_id[i] >= 0:
                continue
            c = len(reps)
            reps.append(i)
            for t in sub_idx:
                coset_id[self.mul_idx(t, i)] = c
        k = len(reps)
        gen_images = []
        for g in self.generators:
            gi = self.index_of(g)
            images = np.fromiter(
                (coset_id[self.mul_idx(rep, gi)] for rep in reps),
                dtype=np.int32, count=k)
            gen_images.append(Permutation(images))
        name = f"{self.name}/N" if self.name else None
        return FiniteGroup(gen_images, name=name, max_order=self.max_order)


class Subgroup:
    """Subgroup of a FiniteGroup, realized as a closed set of element
    indices of the parent.  Equality is element-set equality."""

    def __init__(self, parent, generators):
        self.parent = parent
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g)
                     for g in generators)
        for g in gens:
            if g.degree != parent.degree:
                raise AmbientMismatchError(
                    "subgroup generator degree differs from parent")
        self.generators = gens
        gen_idx = [parent.index_of(g) for g in gens]
        self._indices = self._close_indices(gen_idx)
        self._index_set = frozenset(self._indices)
        self._as_group = None

    def _close_indices(self, gen_idx):
        parent = self.parent
        order = [0]
        seen = {0}
        i = 0
        while i < len(order):
            e = order[i]
            for g in gen_idx:
                f = parent.mul_idx(e, g)
                if f not in seen:
                    if len(order) >= parent.max_order:
                        raise CapacityError(
                            f"subgroup exceeds element cap {parent.max_order}")
                    seen.add(f)
                    order.append(f)
            i += 1
        return tuple(order)

    @classmethod
    def _from_indices(cls, parent, indices, generators=()):
        """Internal: wrap an already-closed index set."""
        sub = object.__new__(cls)
        sub.parent = parent
        sub.generators = tuple(generators) or tuple(
            parent.element(i) for i in indices if i != 0) or (parent.identity,)
        sub._indices = tuple(indices)
        sub._index_set = frozenset(indices)
        sub._as_group = None
        return sub

    def indices(self):
        return self._indices

    def index_set(self):
        return self._index_set

    def order(self):
        return len(self._indices)

    def elements(self):
        return tuple(self.parent.element(i) for i in self._indices)

    def __contains__(self, perm):
        try:
            return self.parent.index_of(perm) in self._index_set
        except (KeyError, AmbientMismatchError):
            return False

    def contains_index(self, i):
        return i in self._index_set

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return (self.parent is other.parent
                and self._index_set == other._index_set)

    def __hash__(self):
        return hash((id(self.parent), self._index_set))

    def __repr__(self):
        return f"Subgroup(order={self.order()} of {self.parent!r})"

    def is_normal(self):
        parent = self.parent
        for i in self._indices:
            for g in parent.generators:
                gi = parent.index_of(g)
                if parent.conj_idx(i, gi) not in self._index_set:
                    return False
        return True

    def as_group(self):
        """The subgroup as a standalone FiniteGroup on the same points."""
        if self._as_group is None:
            gens = self.generators if any(
                not g.is_identity() for g in self.generators) \
                else (self.parent.identity,)
            g = FiniteGroup(gens, max_order=self.parent.max_order,
                            order_hint=None)
            self._as_group = g
        return self._as_group

    def is_abelian(self):
        gens = self.generators
        return all(commutator(a, b).is_identity()
                   for a in gens for b in gens)


@dataclass(frozen=True)
class SeriesReport:
    """A descending subgroup series with its stabilization flag."""
    kind: str
    terms: tuple
    stabilized: bool


def closure(gens, ambient):
    """Smallest subgroup of ``ambient`` containing ``gens``."""
    return ambient.subgroup(gens)


def normal_closure(gens, ambient):
    return ambient.normal_closure(gens)


def derived_subgroup(group):
    return group.derived_subgroup()


def lower_central_series(group):
    return group.lower_central_series()


def center(group):
    return group.center()


def power_subgroup(sub, k):
    """Subgroup generated by the k-th powers of all members of ``sub``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    parent = sub.parent
    gens = []
    seen = set()
    for i in sub.indices():
        j = parent.pow_idx(i, k)
        if j not in seen:
            seen.add(j)
            gens.append(parent.element(j))
    return Subgroup(parent, gens)


def quotient_action(group, normal):
    return group.quotient_action(normal)
