"""Closed-form spectra against the eigensolver, and the bound formulas
built from them.

Run:  python demos/02_closed_form_spectra.py
"""

import numpy as np

from qpow import (
    balanced_bipartite_bound,
    complete,
    complete_bipartite,
    complete_bipartite_q_spectrum,
    complete_graph_bound,
    complete_q_spectrum,
    connectivity_bound,
    construct_gi,
    el_bound_vnk,
    el_bound_vnk_as_printed,
    gi_spectrum,
    max_edges_vnk,
    named_invariants,
    q_spectrum,
    signless_power_sum,
)

print("=== complete graphs: sigma(Q(K_n)) = {2n-2, (n-2) x (n-1)} ===")
for n in (3, 5, 8):
    solved = q_spectrum(complete(n)).values
    closed = complete_q_spectrum(n).values
    print(f"  K_{n}: closed {np.round(closed, 6)}  max dev {np.max(np.abs(solved - closed)):.2e}")

print()
print("=== complete bipartite: sigma(Q(K_rs)) = {r+s, r x (s-1), s x (r-1), 0} ===")
for r, s in [(2, 3), (3, 3), (4, 5)]:
    solved = q_spectrum(complete_bipartite(r, s)).values
    closed = complete_bipartite_q_spectrum(r, s).values
    print(f"  K_{{{r},{s}}}: closed {np.round(closed, 6)}  max dev {np.max(np.abs(solved - closed)):.2e}")

print()
print("=== the bounded-connectivity family: a k-clique joined to two cliques ===")
for n, k, i in [(4, 1, 1), (6, 2, 2), (7, 3, 1), (5, 4, 1)]:
    g = construct_gi(n, k, i)
    solved = q_spectrum(g).values
    closed = gi_spectrum(n, k, i).values
    print(f"  (n,k,i)=({n},{k},{i}): m={g.m}  spectrum {np.round(closed, 5)}  "
          f"max dev {np.max(np.abs(solved - closed)):.2e}")
print("  ((5,4,1) collapses to K_5: the closed form cancels the degenerate terms)")

print()
print("=== sharp bound values and where they are attained ===")
print(f"  bipartite, balanced split, n=8, alpha=0.5: bound = "
      f"{balanced_bipartite_bound(8, 0.5):.6f}")
print(f"      attained by K_44: S_0.5 = {signless_power_sum(complete_bipartite(4, 4), 0.5):.6f}")
print(f"  all connected graphs, n=6, alpha=2: bound = {complete_graph_bound(6, 2):.1f}")
print(f"      attained by K_6:  S_2   = {signless_power_sum(complete(6), 2):.1f}")
print(f"  connectivity <= 2, n=6, alpha=2: bound = {connectivity_bound(6, 2, 2):.6f}")
print(f"      attained by G(1): S_2   = {signless_power_sum(construct_gi(6, 2, 1), 2):.6f}")

print()
print("=== polynomial specializations of the connectivity bound ===")
n, k = 7, 2
print(f"  alpha=1 gives a maximum edge count: m <= {max_edges_vnk(n, k)} for "
      f"connectivity <= {k} on {n} vertices (G(1) has m = {construct_gi(n, k, 1).m})")
print(f"  alpha=2 gives the squared-eigenvalue bound: {el_bound_vnk(n, k)} "
      f"(E_L(G(1)) = {named_invariants(construct_gi(n, k, 1)).E_L:.1f})")
print(f"  note: the circulating printed form of that cubic is off by 6n^2; at "
      f"(n,k)=(3,2) it gives {el_bound_vnk_as_printed(3, 2)} where the true "
      f"value is {el_bound_vnk(3, 2)}")
