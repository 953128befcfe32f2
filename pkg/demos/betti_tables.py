"""Betti tables of a few small edge ideals, read off Hochster's formula.

Run: python3 demos/betti_tables.py
"""

from edgebetti import betti_table, complete_graph, cycle_graph, disjoint_union, max_shifts, path_graph, witnesses

GRAPHS = {
    "K2": complete_graph(2),
    "P4": path_graph(4),
    "2K2": disjoint_union(complete_graph(2), complete_graph(2)),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
}


def main():
    for name, g in GRAPHS.items():
        table = betti_table(g)
        t = max_shifts(table)
        print(f"== {name}: {g.num_edges} edges, pd {table.pd}, reg {table.regularity()}")
        print(table.diagram())
        print(f"max shifts: {t}")
        # where the top shift in the last row comes from
        top = witnesses(g, table.pd, table=table)[0]
        print(f"last row witnessed by W={top.vertices} in homology degree {top.d}\n")


if __name__ == "__main__":
    main()
