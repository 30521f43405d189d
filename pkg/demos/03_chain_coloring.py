"""
Coloring along a chain of faces
===============================

Faces of length 4 and 5 are colored by fixed maps onto the triangle XYZ.
To give u and v one color, the faces between them are colored in order
and the second-to-last face is retabled if v is blocked.
"""

from outercolor import OuterplaneGraph, algorithm1, apply_hom, face_chain, hom_table
from outercolor.graph import Face

for i in ("f1", "f2", "f3", "f4", "f5", "f6", "F1", "F2", "F3"):
    print(i, "".join(hom_table(i).table))

# Reading F1 from a against the boundary order gives the x,y,z,y,z pentagon.
psi = apply_hom(Face(tuple("abcde")), "F1", "a", "ccw")
print("pentagon:", [psi.assignment[v] for v in "abcde"])

# Two squares sharing the chord 1-4.
h = OuterplaneGraph.cycle(6, [(1, 4)])
print([f.vertices for f in face_chain(h, 2, 5).faces])

# With v=6 the first choice already works.
psi = algorithm1(h, 2, 6)
print("u=2 v=6:", [(m.face.vertices, m.map_id) for m in psi.maps_used], psi.assignment)

# With v=5, f1 gives 4 the same letter as 2, so the first face is retabled.
psi = algorithm1(h, 2, 5)
print("u=2 v=5:", [(m.face.vertices, m.map_id) for m in psi.maps_used], psi.assignment)
