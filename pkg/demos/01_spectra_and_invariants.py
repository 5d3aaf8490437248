"""Tour of the core objects: graphs, their matrices, spectra, and the
classical spectral invariants built on top of them.

Run:  python demos/01_spectra_and_invariants.py
"""

import numpy as np

from qpow import (
    complete,
    complete_bipartite,
    construct_gi,
    cycle,
    emit_graph6,
    laplacian_power_sum,
    named_invariants,
    path,
    q_spectrum,
    l_spectrum,
    signless_laplacian,
    signless_power_sum,
    zagreb,
)


def show(name, g):
    q = q_spectrum(g)
    print(f"{name:12s} graph6={emit_graph6(g):8s} n={g.n} m={g.m}")
    print(f"{'':12s} Q-spectrum = {np.round(q.values, 6)}   nonzero count h = {q.h}")


print("=== graphs and signless Laplacian spectra ===")
show("K5", complete(5))
show("K_{2,3}", complete_bipartite(2, 3))
show("C6", cycle(6))
show("paw", construct_gi(4, 1, 1))

print()
print("=== Q = D + A for the 4-cycle ===")
print(signless_laplacian(cycle(4)))

print()
print("=== power sums over the nonzero eigenvalues ===")
g = complete_bipartite(2, 3)
for alpha in (-2, -1, -0.5, 0.5, 1, 2):
    s_q = signless_power_sum(g, alpha)
    s_l = laplacian_power_sum(g, alpha)
    print(f"  alpha={alpha:+.1f}:  signless sum = {s_q:.6f}   laplacian sum = {s_l:.6f}")
print("  (the two agree on bipartite graphs: Q and L are cospectral there)")

print()
print("=== the alpha = 1 sum is twice the edge count ===")
for name, g in [("K4", complete(4)), ("P5", path(5)), ("C6", cycle(6))]:
    print(f"  {name}: S_1 = {signless_power_sum(g, 1):.1f} = 2m = {2 * g.m}")

print()
print("=== named invariants ===")
for name, g in [("K4", complete(4)), ("P4", path(4)), ("K_{2,3}", complete_bipartite(2, 3))]:
    b = named_invariants(g)
    print(f"  {name:8s} IE={b.IE:.5f}  LEL={b.LEL:.5f}  Kf={b.Kf:.5f}  "
          f"E_L={b.E_L:.1f}  E={b.E:.5f}  M1={b.M1:.0f}")
print(f"  first Zagreb index directly: zagreb(K4, 2) = {zagreb(complete(4), 2):.0f}")

print()
print("=== trace identities (S_2 = M1 + 2m, E_L = S_2) ===")
g = complete(4)
print(f"  K4: S_2 = {signless_power_sum(g, 2):.1f},  M1 + 2m = {zagreb(g, 2) + 2 * g.m:.1f},"
      f"  E_L = {named_invariants(g).E_L:.1f}")

print()
print("=== spectra of the same graph, Laplacian vs signless Laplacian ===")
for name, g in [("C5 (odd cycle)", cycle(5)), ("C6 (even cycle)", cycle(6))]:
    print(f"  {name}: L = {np.round(l_spectrum(g).values, 4)}")
    print(f"  {'':16s}Q = {np.round(q_spectrum(g).values, 4)}")
print("  (the smallest Q-eigenvalue is 0 exactly when the graph is bipartite)")
