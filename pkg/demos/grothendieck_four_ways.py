"""Four independent routes to the same symmetric Grothendieck polynomial.

Run with ``python3 demos/grothendieck_four_ways.py``.
"""

from fivevertex import MPoly, Permutation, grothendieck_det, lascoux
from fivevertex.lattice import Flavor, enumerate_states, partition_function
from fivevertex.tableaux import buch_grothendieck, enumerate_svt

lam, n = (2, 1, 0), 3

# A ratio of two determinants, divided exactly.
by_det = grothendieck_det(lam, n)
print("determinant      :", by_det)

# Divided-difference operators along a reduced word of the longest permutation.
w0 = Permutation.longest(n)
print("reduced word     :", w0.reduced_word())
by_ops = lascoux(w0, lam)

# A sum over uncolored lattice states.
states = enumerate_states(Flavor.uncolored(), lam, n)
by_lattice = partition_function(Flavor.uncolored(), lam, n)
print("lattice states   :", len(states))

# A sum over set-valued tableaux.
tableaux = enumerate_svt(lam, n)
by_svt = buch_grothendieck(lam, n)
print("set-valued tabs  :", len(tableaux))

print("all four agree   :", by_det == by_ops == by_lattice == by_svt)

# beta = 0 recovers the Schur polynomial; beta = -1 flips the sign of the correction terms
print("beta = 0         :", by_det.at_beta(0))
print("beta = -1        :", by_det.at_beta(-1))

# the tableaux with two entries in a cell carry the beta terms
for t in tableaux:
    if t.excess():
        print()
        print(t)
