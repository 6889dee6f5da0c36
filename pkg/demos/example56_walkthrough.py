"""Walk through the nine-vertex rational graph used throughout the tests.

Run with ``python demos/example56_walkthrough.py``.
"""

from singlip import (
    build_gamma0,
    central_edges,
    central_vertices,
    geometric_decomposition,
    hyperplane_arrows,
    is_lne,
    l_nodes,
    laufer_minimal_cycle,
    multiplicity_rational,
    parse_graph,
    polar_profile,
)
from singlip.corpus import EXAMPLE_56


def main():
    g = parse_graph(EXAMPLE_56)
    z, trace = laufer_minimal_cycle(g)
    print("minimal cycle:", z.as_dict())
    print("Laufer steps:", len(trace))
    print("multiplicity:", multiplicity_rational(g))
    print("arrows:", {v: a for v, a in hyperplane_arrows(g).items() if a})
    print("L-nodes:", " ".join(l_nodes(g)))
    print("central edges:", central_edges(g), "vertices:", central_vertices(g))

    for name, kind, where, comp in polar_profile(g).named_components():
        print(f"  {name}: A{comp.an_type} ({kind}) at {where}")

    rates = build_gamma0(g).node_rates()
    print("node rates:", {v: str(q) for v, q in rates.items()})
    _, plist = geometric_decomposition(g)
    print("pieces:", ", ".join(p.label() for p in plist))
    print("verdict:", is_lne(g).value)


if __name__ == "__main__":
    main()
