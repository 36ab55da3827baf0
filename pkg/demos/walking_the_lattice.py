"""A tour of the colored lattice: states, weights, crossings and markings.

Run with ``python3 demos/walking_the_lattice.py``.
"""

from fivevertex import Permutation, lascoux_atom
from fivevertex.lattice import (Flavor, all_markings, crossings, enumerate_states,
                                marked_expansion, partition_function, state_to_gt)

lam, n = (4, 2, 1), 3
w = Permutation.parse("s1 s2", n)
flavor = Flavor.atom(w)
print("w =", w, " reduced word", w.reduced_word(), " flavor", flavor)
print("left boundary colors (top to bottom):", flavor.left_boundary(n))
print("color pairs that must cross:", sorted(flavor.crossing))

states = enumerate_states(flavor, lam, n, m=8)
for k, s in enumerate(states):
    print(f"\nstate {k}: weight {s.weight()}")
    print(s.to_ascii())
    print("GT pattern of the shadow:", state_to_gt(s))
    print("crossings (pair, vertex):", crossings(s))

# each a2 vertex may be marked or not; summing marked monomials recovers the weight
s = states[0]
for marks, mono in marked_expansion(s).items():
    print("marks", sorted(marks), "->", mono)
print("markings of state 0:", len(all_markings(s)))

Z = partition_function(flavor, lam, n, m=8)
print("\nZ =", Z)
print("equals the atom from operators:", Z == lascoux_atom(w, lam))

# a wider grid changes nothing
print("m = 10 gives the same Z:", partition_function(flavor, lam, n, m=10) == Z)
