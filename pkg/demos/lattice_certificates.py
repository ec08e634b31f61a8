"""Lattice subgraph audits and embeddability screening.

A graph placed on integer coordinates with nearest-neighbor edges obeys
dimension-dependent envelopes on its eigenvalue sums.  Violating one for
dimension nu certifies that no such placement exists in dimension nu or
lower; surviving all of them proves nothing (necessary conditions only).

Run:  python demos/lattice_certificates.py
"""

import numpy as np

from eigensums import (
    collinear_counts,
    embeddability_certificate,
    gen_complete,
    gen_cycle,
    gen_lattice_subgraph,
    gen_star,
    laplacian_energy,
    le_lower_bound,
    riesz_lower_bound,
    riesz_mean,
    spectrum,
    verify_embedding,
    weyl_power_bound,
    weyl_sum_bound,
)

# An 8-cycle snaked through the plane: half its vertices sit on straight
# runs (collinear neighbor pairs), half on corners.
snake = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)]
g, emb = gen_lattice_subgraph(snake)
print(f"snaked 8-cycle: n={g.n}, m={g.m}, "
      f"collinear profile={list(collinear_counts(g, emb))}")
reports = verify_embedding(g, emb)
fails = [r for r in reports if r.verdict == "FAIL"]
print(f"full audit: {len(reports)} checks, {len(fails)} failures")

spec = spectrum(g, "laplacian")
sums = np.cumsum(spec.values)
print("k, measured partial sum, window envelope, power envelope:")
for k in (2, 4, 6, 8):
    print(f"  {k}  {sums[k - 1]:8.4f}  "
          f"{weyl_sum_bound(g.m, g.n, emb.nu, k):8.4f}  "
          f"{weyl_power_bound(g.m, g.n, emb.nu, k):8.4f}")

# Riesz means and laplacian energy obey matching lower bounds.
z = g.m / g.n
print(f"riesz mean at z={z:.3f}: measured={riesz_mean(spec, z).value:.4f}, "
      f"lower bound={riesz_lower_bound(z, g.m, g.n, emb.nu):.4f}")
le = laplacian_energy(spec, g.m, g.n)
best, closed = le_lower_bound(g.m, emb.nu)
print(f"laplacian energy {le:.4f} >= {best:.4f} >= {closed:.4f}")

# Screening: complete graphs contain triangles, which no bipartite cubic
# lattice admits, and the spectral envelopes detect that numerically.
for name, graph in (("K_5", gen_complete(5)), ("C_12", gen_cycle(12)),
                    ("star_9", gen_star(9))):
    verdicts = embeddability_certificate(graph, 3)
    line = ", ".join(
        f"nu={v.nu}: {v.verdict}"
        + (f" (k={v.first_violation_k})" if v.first_violation_k else "")
        for v in verdicts
    )
    print(f"{name:>7}: {line}")
