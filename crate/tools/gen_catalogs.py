#!/usr/bin/env python3
"""Write isomorph-free graph6 catalogs n1.g6 .. n7.g6 from the networkx graph atlas.

The atlas lists one representative per isomorphism class for every order up to 7.
Usage: python3 tools/gen_catalogs.py [OUTPUT_DIR]
"""
import sys
from pathlib import Path

import networkx as nx


def main() -> None:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "catalogs")
    out.mkdir(parents=True, exist_ok=True)
    by_order = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0:
            continue
        g = nx.convert_node_labels_to_integers(g)
        line = nx.to_graph6_bytes(g, header=False).decode().strip()
        by_order.setdefault(n, []).append(line)
    for n, lines in sorted(by_order.items()):
        (out / f"n{n}.g6").write_text("".join(f"{l}\n" for l in lines))
        print(f"n{n}.g6: {len(lines)} graphs")


if __name__ == "__main__":
    main()
