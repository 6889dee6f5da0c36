"""Graphviz output for decorated resolution graphs and plane trees.

Conventions follow the usual pictures: L-nodes are filled black, vertices
created by blowing up a central edge are gray, node rates are printed in
italics and branches are drawn as arrows to anonymous endpoints.  Output
is fully determined by the input (declaration / creation order).
"""

from fractions import Fraction


def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def fmt_rate(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _italic(q):
    return f"<<I>{fmt_rate(q)}</I>>"


def _header(name):
    return [f"graph {name} {{", '  node [shape=circle, width=0.3, fixedsize=true, fontsize=10];']


def decorated_graph_dot(dg, name="gamma"):
    g = dg.graph
    lines = _header(name)
    for v in g.ids:
        attrs = [f"xlabel={_q(v)}"]
        kinds = dg.node_kind.get(v, frozenset())
        if kinds and v in dg.rates:
            attrs.append(f"label={_italic(dg.rates[v])}")
        else:
            attrs.append('label=""')
        if "L" in kinds:
            attrs.append("style=filled, fillcolor=black, fontcolor=white")
        elif g.origin(v) == "central-edge-blowup":
            attrs.append("style=filled, fillcolor=gray")
        elif not kinds:
            attrs.append("shape=point, width=0.1")
        lines.append(f"  {_q(v)} [{', '.join(attrs)}];")
    for a, b in g.edges:
        lines.append(f"  {_q(a)} -- {_q(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def plane_tree_dot(tree, name="tree"):
    lines = _header(name)
    nodes = set(tree.nodes())
    for v in tree.vertices:
        attrs = [f"label={_italic(v.rate)}"]
        if v.index == 0:
            attrs.append("style=filled, fillcolor=black, fontcolor=white")
        elif v.index not in nodes:
            attrs.append("style=dashed")
        lines.append(f"  t{v.index} [{', '.join(attrs)}];")
    for a, b in sorted(tree.edges):
        lines.append(f"  t{a} -- t{b};")
    for branch in sorted(tree.arrows, key=lambda n: (tree.arrows[n], n)):
        end = _q(f"arrow:{branch}")
        lines.append(f"  {end} [shape=point, width=0.05, xlabel={_q(branch)}];")
        lines.append(f"  t{tree.arrows[branch]} -- {end} [dir=forward, arrowhead=normal];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(obj, name=None):
    """DOT text for a DecoratedGraph or a PlaneTree."""
    from .planetree import PlaneTree

    if isinstance(obj, PlaneTree):
        return plane_tree_dot(obj, name or "tree")
    return decorated_graph_dot(obj, name or "gamma")
