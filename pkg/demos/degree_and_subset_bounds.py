"""Degree-based bounds on eigenvalue sums from the difference basis.

Shows the classical extreme-eigenvalue degree bounds, their two-eigenvalue
refinement, and the general L-sum bound with subset selection strategies.

Run:  python demos/degree_and_subset_bounds.py
"""

from eigensums import (
    degree_averaged_pair_bounds,
    fiedler_bounds,
    gen_complete,
    gen_random_connected,
    gen_star,
    l_sum_bound,
    pair_sum_bounds,
    select_subset,
    spectrum,
    subset_objective,
)


def show(rep):
    print(f"  {rep.name:<32} bound={rep.bound:>10.6f} "
          f"measured={rep.measured:>10.6f} {rep.verdict}")


print("complete graph on 6 vertices (every bound is tight):")
k6 = gen_complete(6)
for rep in fiedler_bounds(k6):
    show(rep)
show(pair_sum_bounds(k6, "min"))
show(degree_averaged_pair_bounds(k6, "min"))

print("star graph on 7 vertices (tight on the top of the spectrum):")
s7 = gen_star(7)
for rep in fiedler_bounds(s7):
    show(rep)
show(pair_sum_bounds(s7, "max"))

print("random connected graph, L-sum bounds with selected subsets:")
g = gen_random_connected(14, 0.35, seed=2024)
spec = spectrum(g, "laplacian")
for L in (1, 3, 6):
    low = select_subset(g, L, "greedy-degree")
    high = select_subset(g, L, "greedy-degree", maximize=True)
    print(f"  L={L}: low-degree subset {low} "
          f"(objective {subset_objective(g, L, low):.4f}), "
          f"high-degree subset {high}")
    show(l_sum_bound(g, L, low, "lower-spectrum-upper", spec=spec))
    show(l_sum_bound(g, L, high, "top-spectrum-lower", spec=spec))

print("exhaustive search agrees on small graphs:")
best = select_subset(g, 2, "exhaustive")
print(f"  exhaustive best subset for L=2: {best} "
      f"(objective {subset_objective(g, 2, best):.4f})")
