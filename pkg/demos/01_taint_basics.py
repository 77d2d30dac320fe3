"""
Taint propagation basics
========================

Seed a couple of nodes in a small directed graph, let taint flow along
the edges, and see how much of the graph ends up soiled.
"""
from critset import propagate, soil, soiled_measure
from critset.datasets import DEMO_GRAPH_TEXT, demo_graph

# The bundled demo graph: seven unit-weight nodes in two weak components.
g = demo_graph()
print(DEMO_GRAPH_TEXT)

# Soil node 1 and watch the taint spread. Every edge leaving a soiled
# node carries the taint to its head, so 1 -> {2,3} -> 5.
report = propagate(g, {"1"})
print("seeds:        ", sorted(report.seeds))
print("soiled nodes: ", sorted(report.soiled_nodes))
print("soiled edges: ", sorted(report.soiled_edges))

# The soiled measure S is the soiled share of the total weight. With
# unit node weights that is simply a node count over 7.
s = soiled_measure(g, report)
print(f"S = {s:.4f}  ({len(report.soiled_nodes)} of {g.n_nodes} nodes)")
print()

# soil() bundles the three steps: propagate, measure, complement.
for seeds in [{"1", "6"}, {"3", "5"}, {"2", "4", "7"}]:
    report, soiled, clean = soil(g, seeds)
    print(f"seeds {sorted(seeds)}: S = {soiled:.4f}, clean share = {clean:.4f}")
print()

# Edge mode weighs soiled edges instead of soiled nodes. Node 4 touches
# only one of the six edges directly but taints three of them.
report, soiled, clean = soil(g, {"4"}, mode="edge")
print(f"edge mode, seeds {{4}}: S = {soiled:.4f}")
print("soiled edges:", sorted(report.soiled_edges))
