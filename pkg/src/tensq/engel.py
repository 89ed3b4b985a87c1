"""Left Engel testing in G and in nu(G).

An element y is left n-Engel in a group when the left-normed iterated
commutator [x, y, y, ..., y] (n copies of y) is trivial for every x of
the ambient group.  Iteration of z |-> [z, y] is a self-map of a finite
group, so reaching the identity is decidable exactly: once a value
repeats without hitting 1, it never will.  The search bound therefore
only caps the *reported* minimal degree, never the yes/no answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .nu import Check, VerificationReport


@dataclass(frozen=True)
class EngelScanConfig:
    p: int
    m: int
    n: int
    search_bound: int = 10

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0
                             for d in range(2, int(self.p ** 0.5) + 1)):
            raise ValueError("p must be prime")
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")


@dataclass
class EngelScanResult:
    """Per-pair least valid p-power q, or None when no divisor of p^m
    works."""
    config: EngelScanConfig
    table: dict = field(default_factory=dict)   # (x_idx, y_idx) -> q | None

    @property
    def all_pairs_satisfied(self):
        return all(q is not None for q in self.table.values())

    def to_dict(self):
        return {
            "p": self.config.p, "m": self.config.m, "n": self.config.n,
            "all_pairs_satisfied": self.all_pairs_satisfied,
            "pairs": {f"{x},{y}": q for (x, y), q in
                      sorted(self.table.items())},
        }


def is_left_n_engel(y, ambient, n):
    """True iff [x, n y] = 1 for every x in ``ambient`` (exhaustive)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    yi = ambient.index_of(y) if not isinstance(y, (int, np.integer)) \
        else int(y)
    return _is_left_n_engel_idx(yi, ambient, n)


def _is_left_n_engel_idx(yi, ambient, n):
    t = ambient.table()
    if t is not None:
        inv = np.asarray(ambient.inverse_indices())
        iy = int(inv[yi])
        v = np.arange(ambient.order())
        for _ in range(n):
            v = t[t[inv[v], iy], t[v, yi]]
        return bool(np.all(v == 0))
    order = ambient.order()
    for x in range(order):
        c = x
        for _ in range(n):
            c = ambient.comm_idx(c, yi)
        if c != 0:
            return False
    return True


def engel_degree(y, ambient, bound=10):
    """Minimal n with y left n-Engel, exactly.

    Returns (is_engel, degree): degree is None when y is not left Engel
    at all, or when the true degree exceeds ``bound`` (is_engel stays
    True in that case -- the bound never flips the decision).
    """
    yi = ambient.index_of(y) if not isinstance(y, (int, np.integer)) \
        else int(y)
    worst = 0
    for x in range(ambient.order()):
        c = ambient.comm_idx(x, yi)
        k = 1
        seen = {x, c}
        while c != 0:
            c = ambient.comm_idx(c, yi)
            k += 1
            if c in seen:
                if c != 0:
                    return False, None
                break
            seen.add(c)
        worst = max(worst, k)
    return True, (worst if worst <= bound else None)


def left_engel_set(group, bound):
    """Elements y with [x, n y] = 1 for all x, for some n <= bound."""
    out = []
    for yi in range(group.order()):
        is_engel, degree = engel_degree(yi, group, bound=bound)
        if is_engel and degree is not None and degree <= bound:
            out.append(group.element(yi))
    return out


def fitting_subgroup(group):
    """Largest nilpotent normal subgroup, by enumerating the normal
    subgroup lattice from normal closures of single elements.

    Independent oracle for the set of left Engel elements of a finite
    group; shares nothing with the Engel iteration.
    """
    atoms = {}
    for i in range(group.order()):
        nc = group.normal_closure([group.element(i)])
        atoms.setdefault(nc.index_set(), nc)
    normals = dict(atoms)
    work = list(atoms.values())
    while work:
        a = work.pop()
        for b in list(normals.values()):
            joined = group.subgroup(
                list(dict.fromkeys(a.generators + b.generators)))
            key = joined.index_set()
            if key not in normals:
                normals[key] = joined
                work.append(joined)
    nilpotents = [s for s in normals.values()
                  if s.as_group().is_nilpotent()]
    gens = []
    for s in nilpotents:
        gens.extend(s.generators)
    fit = group.subgroup(list(dict.fromkeys(gens)))
    assert fit.as_group().is_nilpotent(), \
        "join of nilpotent normal subgroups failed to be nilpotent"
    return fit


def engel_projection_check(nu, x, y, q, n):
    """If [x, y']^q is left n-Engel in nu(G), then [x, y]^q is left
    n-Engel in G: evaluate both sides exhaustively and report."""
    amb = nu.ambient
    xi = nu.g_index(x)
    yi = nu.g_index(y)
    t = nu.tensor_elem_idx(xi, yi)
    tq = amb.pow_idx(t, q)
    hypothesis = _is_left_n_engel_idx(tq, amb, n)
    g = nu.group
    cq = g.pow_idx(g.comm_idx(xi, yi), q)
    conclusion = _is_left_n_engel_idx(cq, g, n)
    holds = (not hypothesis) or conclusion
    return VerificationReport(
        name="engel-projection",
        checks=[Check("implication holds", holds,
                      {"hypothesis": hypothesis, "conclusion": conclusion,
                       "q": q, "n": n, "pair": [xi, yi]})],
    )


def engel_power_scan(nu, config):
    """For every pair (x, y) in G x G, the least divisor q of p^m
    (scanning 1, p, p^2, ...) making [x, y']^q left n-Engel in nu(G)."""
    amb = nu.ambient
    n_elems = nu.group.order()
    cache = {}
    result = EngelScanResult(config=config)
    for x, y in itertools.product(range(n_elems), repeat=2):
        t = nu.tensor_elem_idx(x, y)
        found = None
        for j in range(config.m + 1):
            q = config.p ** j
            tq = amb.pow_idx(t, q)
            hit = cache.get(tq)
            if hit is None:
                hit = _is_left_n_engel_idx(tq, amb, config.n)
                cache[tq] = hit
            if hit:
                found = q
                break
        result.table[(x, y)] = found
    return result


def engel_stack_identity(group, n, p, m):
    """Evaluate the stacked left-normed word

        [z, n c, n c^p, n c^(p^2), ..., n c^(p^m)],   c = [x1, y1],

    over all triples (z, x1, y1); True iff it is the identity
    everywhere."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    g = group
    order = g.order()
    powers = [p ** j for j in range(m + 1)]
    for x1 in range(order):
        for y1 in range(order):
            c = g.comm_idx(x1, y1)
            cpows = [g.pow_idx(c, q) for q in powers]
            for z in range(order):
                w = z
                for cp in cpows:
                    for _ in range(n):
                        w = g.comm_idx(w, cp)
                    if w == 0:
                        break
                if w != 0:
                    return False
    return True
