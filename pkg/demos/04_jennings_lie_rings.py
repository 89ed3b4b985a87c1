#!/usr/bin/env python3
"""From a finite p-group to its graded Lie ring.

The dimension subgroups D_i (product formula over j * p^k >= i) form a
central series with elementary abelian quotients; the classical
recursion D_i = [D_{i-1}, G] * (D_ceil(i/p))^p recomputes it as an
independent oracle.  The direct sum of the quotients is a Lie ring over
F_p whose bracket comes from group commutators; Lazard's identity
relates adjoint powers to power maps of the lifts.
"""

from tensq import (ad_nilpotency_index, dimension_subgroups, get_group,
                   jennings_recursion, lie_nilpotency_class, lie_ring,
                   subalgebra_Lp, verify_lazard, verify_lie_axioms)

print("=== the series, two ways ===")
for name, p in [("C8", 2), ("D4", 2), ("Heis3", 3), ("M27", 3), ("C27", 3)]:
    g = get_group(name)
    series = dimension_subgroups(g, p)
    oracle = jennings_recursion(g, p)
    orders = [t.order() for t in series.terms]
    print(f"{name:6s} p={p}  D-series orders {orders}  "
          f"recursion agrees: {series.termwise_equal(oracle)}")

print()
print("=== the graded Lie ring of D4 ===")
ring = lie_ring(dimension_subgroups(get_group("D4"), 2))
print(f"graded dimensions {ring.dims}, total {ring.total_dim}")
x, y = ring.basis_element(1, 0), ring.basis_element(1, 1)
print(f"[x~, y~] in degree 2: coords {ring.bracket(x, y).coords}")
print(f"ad-nilpotency index of x~: {ad_nilpotency_index(x, ring)}")
print(f"nilpotency class: {lie_nilpotency_class(ring)}")
print(f"axioms: {'ok' if verify_lie_axioms(ring).passed else 'FAILED'}")
sub = subalgebra_Lp(ring)
print(f"subalgebra generated by degree 1 is all of L: "
      f"{sub.is_all_of(ring)}")

print()
print("=== Lazard's identity ===")
for name, p in [("D4", 2), ("Heis3", 3), ("M27", 3)]:
    ring = lie_ring(dimension_subgroups(get_group(name), p))
    for q in (p, p * p):
        rep = verify_lazard(ring, q)
        print(f"{name:6s} (ad x~)^{q} = ad((x^{q})~) for every basis "
              f"lift: {'ok' if rep.passed else 'FAILED'}")

print()
print("=== a ring the grading silences ===")
ring = lie_ring(dimension_subgroups(get_group("M27"), 3))
print(f"M27 has class 2 as a group, but its graded ring has dimensions "
      f"{ring.dims}:")
print("the commutator [a, b] = a^3 falls into a repeated series term, so "
      "every bracket vanishes")
print(f"lie ring class: {lie_nilpotency_class(ring)}")
