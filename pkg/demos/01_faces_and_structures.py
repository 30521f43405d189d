"""
Faces, triangle classes and two-triangle structures
===================================================

An outerplane graph is stored as its outer cycle plus non-crossing chords.
Everything else (faces, the weak dual, triangle classes) is derived.
"""

from outercolor import OuterplaneGraph, detect_structures, weak_dual

# The smallest interesting graph: a 4-cycle with one chord.
diamond = OuterplaneGraph.cycle(4, [(1, 3)])
print("diamond faces:", [f.vertices for f in diamond.faces])

# Two triangles on one edge force their free corners to agree in every
# proper 3-coloring.
rep = detect_structures(diamond)
print("diamond apexes:", rep.diamonds[0].diamond_vertices)

# Triangle classes count outer-cycle edges: 2 marginal, 1 striped, 0 internal.
fan = OuterplaneGraph.cycle(6, [(1, 3), (1, 4), (1, 5)])
for t in fan.triangles:
    print(t.face.vertices, t.cls)

# Two marginal triangles hanging off one square make a cake.
cake = OuterplaneGraph.cycle(6, [(1, 3), (3, 5)])
print(detect_structures(cake).cakes[0])

# A marginal and a striped triangle around one square make a hamburger.
burger = OuterplaneGraph.cycle(8, [(1, 3), (1, 5), (1, 6)])
print(detect_structures(burger).hamburgers[0])

# The weak dual is a tree; its edges are the chords.
dual = weak_dual(burger)
for i, j, chord in dual.edges:
    print(dual.nodes[i].vertices, "--", chord, "--", dual.nodes[j].vertices)
