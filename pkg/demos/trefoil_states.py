"""From the theta graph to the trefoil, then to both state models and the
bijection between them.

Run with ``python3 demos/trefoil_states.py``.
"""

from pathlib import Path

from eulerian_alexander.bijection import kauffman_weight, setup, verify_weight_relation
from eulerian_alexander.formats import load_bipartite
from eulerian_alexander.links import build_link, crowell_graph, crowell_state_sum, kauffman_state_sum, kauffman_states
from eulerian_alexander.trees import arborescences

theta = load_bipartite(Path(__file__).resolve().parent.parent / "data" / "theta.txt")
link = build_link(theta)
print(f"link diagram: {len(link.crossings)} crossings, {len(link.regions)} regions")
for r in link.regions:
    print(f"  region {r.index}: {r.kind} {r.ref}" + (f" ({r.color}, {r.orientation})" if r.color else ""))

print("\nKauffman states (marker sector at each crossing):")
for state in kauffman_states(link):
    print(f"  {state.markers}  weight {state.signed_weight}")
print("state sum:", kauffman_state_sum(link))

cg = crowell_graph(link)
print("\nCrowell graph edges with weights:")
for e in cg.digraph.edges:
    print(f"  {e.init} -> {e.fin}  {cg.weights[e.id]}")
print("arborescences from crossing 0:", arborescences(cg.digraph, 0))
print("weighted sum:", crowell_state_sum(cg, 0))

s = setup(link)
report = verify_weight_relation(s)
print(f"\nBijection (m2 = {report.m2}):")
for row in report.rows:
    k, _ = kauffman_weight(s, row.tree)
    print(f"  tree {row.tree} (k={k}, weight {row.kauffman}) -> arborescence {row.arborescence} (weight {row.crowell})")
print("bijective with matching weights:", report.ok)
