"""The directed 3-cycle, computed every way the package knows.

Run with ``python3 demos/three_cycle.py``.
"""

from eulerian_alexander.alexander import laplacian, pd_determinant, pd_direct, pd_inclusion_exclusion
from eulerian_alexander.graphs import EulerianDigraph
from eulerian_alexander.polynomials import IntPoly, is_log_concave_no_internal_zeros, is_ultra_log_concave
from eulerian_alexander.rootpolytope import dual_tu_matrix, polytope_expansion, root_polytope_volume
from eulerian_alexander.trees import classify, spanning_trees

cycle = EulerianDigraph(3, ((0, 0, 1), (1, 1, 2), (2, 2, 0)))

print("Spanning trees rooted at vertex 0, with the number k of edges pointing away:")
for tree in spanning_trees(cycle):
    kt = classify(cycle, tree, 0)
    print(f"  edges {tree}: k = {kt.k}")

print("\nReduced Laplacian:", laplacian(cycle).reduced())
print("tree census     :", pd_direct(cycle, 0))
print("determinant     :", pd_determinant(cycle))
print("incl.-exclusion :", pd_inclusion_exclusion(cycle, 0))

m = dual_tu_matrix(cycle, (0, 1))
print("\nDual matrix for the tree {0, 1}:", m.rows)
print("geometric normalized volume of its root polytope:", root_polytope_volume(m))
s = IntPoly([-1, 1])
print("expansion in (t - 1):", polytope_expansion(cycle, 0), "=", IntPoly([3]) + s.scale(3) + s**2)

p = pd_determinant(cycle)
print(f"\nlog-concave: {is_log_concave_no_internal_zeros(p)}, ultra-log-concave: {is_ultra_log_concave(p)}")
