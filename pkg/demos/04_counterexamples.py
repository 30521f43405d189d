"""
Precolorings with no extension
==============================

Exhaustive search turns up small graphs where the extension statements
fail.  Each instance below meets the triangle and independence
hypotheses, yet the exact oracle counts zero extensions.
"""

from outercolor import ExtensionInstance, OuterplaneGraph, count_extensions, extend

cases = [
    # one triangle, three precolored; 4 sees 3 and 5, both forced to the third color
    ("one triangle", OuterplaneGraph.cycle(6, [(3, 5)]), {2: 1, 4: 2, 6: 1}),
    # no triangle at all; vertex 1 sees 2, 4, 6 carrying all three colors
    ("no triangle", OuterplaneGraph.cycle(6, [(1, 4)]), {2: 1, 4: 2, 6: 3}),
    # diamond apexes 2 and 4 must agree, and 5 is adjacent to 4
    ("two triangles", OuterplaneGraph.cycle(6, [(1, 3), (1, 4)]), {2: 1, 5: 1}),
]

for title, g, pre in cases:
    res = extend(ExtensionInstance(g, pre))
    print(f"{title}: chords={list(g.chords)} triangles={g.triangle_count} precolor={pre}")
    print(f"    oracle count {count_extensions(g, pre)}, outcome {res.outcome}, "
          f"flagged {res.counterexample}")
