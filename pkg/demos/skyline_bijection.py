"""From marked lattice states to skyline tableaux, one step at a time.

Run with ``python3 demos/skyline_bijection.py``.
"""

from fivevertex import Permutation, atom_of_composition
from fivevertex.lattice import Flavor, all_markings, enumerate_states
from fivevertex.skyline import enumerate_skyline, eta, psi, skyline_shape, skyline_sum
from fivevertex.tableaux import key_class, key_of

lam, n = (4, 2, 1), 3
w = Permutation.parse("s1 s2", n)
shape = skyline_shape(w, lam)
print("composition w.lambda =", shape)

targets = enumerate_skyline(shape, n)
print(len(targets), "skyline tableaux of that shape")

seen = []
for s in enumerate_states(Flavor.atom(w), lam, n):
    for ms in all_markings(s):
        reverse = psi(ms)
        sky = eta(reverse, shape)
        seen.append(sky)
        print("\nmarks", sorted(ms.marks), "monomial", ms.monomial())
        print("reverse tableau:")
        print(reverse)
        print("skyline tableau:")
        print(sky)

print("\nbijective onto the skyline set:", sorted(map(repr, seen)) == sorted(map(repr, targets)))
print("skyline sum equals the atom:", skyline_sum(w, lam) == atom_of_composition(w, lam))

# the same atom once more, now from keys of set-valued tableaux
cls = key_class(w, lam, n)
print("\nkey class has", len(cls), "tableaux, all with key")
print(key_of(cls[0], n))
