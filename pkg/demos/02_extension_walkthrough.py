"""
Extending a precoloring
=======================

``extend`` picks a construction by the number of precolored vertices and
how their colors coincide, then returns a coloring plus a trace of what
it did.  Every Success is rechecked before it is returned.
"""

from outercolor import ExtensionInstance, OuterplaneGraph, extend


def show(title, g, pre):
    res = extend(ExtensionInstance(g, pre))
    print(f"--- {title}: {res.outcome}")
    if res.coloring:
        print("    coloring", res.coloring)
    for line in res.certificate:
        print("    |", line)
    if res.witness:
        print("    witness:", res.witness)


# Three vertices, three colors: a seeded 5-cycle is glued around them.
show("three distinct", OuterplaneGraph.cycle(6), {1: 1, 3: 2, 5: 3})

# Three vertices, one color: an apex over the outer face.
show("three equal", OuterplaneGraph.cycle(6), {1: 1, 3: 1, 5: 1})

# Two of three equal, the odd one in the middle.
show("two-one", OuterplaneGraph.cycle(7), {1: 1, 4: 2, 6: 1})

# Two vertices on a diamond's apexes.
diamond = OuterplaneGraph.cycle(4, [(1, 3)])
show("apexes equal", diamond, {2: 1, 4: 1})
show("apexes different", diamond, {2: 1, 4: 2})

# Far-apart striped triangles: the face-chain coloring does the work.
g = OuterplaneGraph.cycle(10, [(1, 4), (1, 5), (6, 9), (6, 10)])
show("face chain", g, {2: 1, 8: 1})
