"""Resolution tree of the discriminant curve and its carrousel pieces.

Pass ``--dot`` to print Graphviz text instead of the summary.
"""

import sys

from singlip import (
    build_gamma0,
    carrousel_pieces,
    discriminant_collection,
    emit_dot,
    parse_graph,
    resolution_tree,
)
from singlip.corpus import EXAMPLE_56


def main(argv):
    dg = build_gamma0(parse_graph(EXAMPLE_56))
    tree = resolution_tree(discriminant_collection(dg.profile, dg))
    if "--dot" in argv:
        sys.stdout.write(emit_dot(tree, "discriminant"))
        return
    for v in tree.vertices:
        print(v.index, v.rate, v.origin, tree.arrows_at(v.index))
    print("pieces:", " ".join(p.label() for p in carrousel_pieces(tree)))


if __name__ == "__main__":
    main(sys.argv[1:])
