"""Classify a handful of graphs: rational or not, minimal or not."""

from singlip import is_lne, parse_graph
from singlip.corpus import E8, EXAMPLE_56, chain

GRAPHS = {
    "example": parse_graph(EXAMPLE_56),
    "E8": parse_graph(E8),
    "A4 chain": chain([-2, -2, -2, -2]),
    "cone over twisted cubic": chain([-3]),
    "(-3, -2, -4) chain": chain([-3, -2, -4]),
    "elliptic vertex": parse_graph("vertex e weight=-1 genus=1\n"),
}


def main():
    for name, g in GRAPHS.items():
        print(f"{name:28} {is_lne(g).value}")


if __name__ == "__main__":
    main()
