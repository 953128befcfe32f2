"""Write every isomorphism class of 7-vertex graphs as graph6 lines.

Uses the networkx graph atlas (all graphs up to 7 vertices) so the corpus is
produced independently of the package's own enumeration code.
"""

import sys

import networkx as nx

from edgebetti.graph import Graph, to_graph6


def main(path):
    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    with open(path, "w") as fh:
        fh.write(">all 1044 graphs on 7 vertices (networkx graph atlas)\n")
        for g in graphs:
            fh.write(to_graph6(Graph.from_edges(7, g.edges())) + "\n")
    print(f"wrote {len(graphs)} graphs to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/graphs_n7.g6")
