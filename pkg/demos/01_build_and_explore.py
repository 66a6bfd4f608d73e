"""
Building the lattice of triwords and poking at its order structure.
"""

from hochlat import (
    build_hoch,
    enumerate_triwords,
    hoch_join,
    hoch_meet,
    is_triword,
    triword_count,
)
from hochlat.errors import NotGraded

# A triword is a word over {0,1,2} whose first letter is not 2 and which
# never has a 1 after a 0.  Everything below is componentwise order on them.

for n in range(1, 9):
    words = enumerate_triwords(n)
    print(f"n={n}: {len(words)} triwords, closed count {triword_count(n)}")

print()
print("the 12 triwords of length 3:")
print(" ", sorted(enumerate_triwords(3)))

# join is the componentwise max; meet is the componentwise min followed by
# zeroing every 1 that ended up after a 0
u, v = (1, 0, 2), (1, 1, 0)
print()
print(f"join  {u} v {v} = {hoch_join(u, v)}")
print(f"meet  {u} ^ {v} = {hoch_meet(u, v)}")
assert is_triword(hoch_meet(u, v))

H = build_hoch(4)
L = H.lattice
print()
print(f"Hoch(4): {L.n} elements, {len(L.covers)} cover relations")
print(f"bottom {H.triword(L.bottom)}, top {H.triword(L.top)}")

# covers change exactly one coordinate
for a, b in sorted(L.covers)[:6]:
    print(f"  {H.triword(a)} -< {H.triword(b)}")
print("  ...")

# the lattice is bounded and has length 2n-1, but it is not graded: maximal
# chains come in different lengths once n >= 3
P = L.poset
print()
print(f"length of Hoch(4): {P.length()}")
try:
    P.rank_profile()
    print("rank profile exists (graded)")
except NotGraded:
    print("no rank function: maximal chains of different lengths exist")
