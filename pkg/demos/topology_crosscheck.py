"""The finite-topology side, and how it cross-checks the algebra side.

Run as: python3 demos/topology_crosscheck.py

Every value here is computed twice where the theory says two roads
exist: once on the space (covers, closures, point counts) and once on
the regular-closed contact algebra.
"""

from contactalg import (
    ContinuousMap,
    algebra_weight,
    compose_diamond,
    dim_a,
    dim_cl,
    discrete_space,
    enumerate_topologies,
    is_connected,
    is_connected_space,
    is_pi_semiregular,
    is_semiregular,
    lambda_t_map,
    particular_point_space,
    pi_weight,
    pi_weight_of_space,
    query,
    rc_algebra,
    ro_algebra,
    sierpinski_space,
    weight_of_space,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("Sierpinski space: two points, one of them open")
S = sierpinski_space()
rc = rc_algebra(S)
print("  regular closed sets:", [f"{m:02b}" for m in rc.regular_closed_sets()])
print("  regular open sets:  ", [f"{m:02b}" for m in ro_algebra(S).regular_open_sets()])
print("  semiregular:", is_semiregular(S), " pi-semiregular:", is_pi_semiregular(S))
print("  covering dimension:", dim_cl(S))

banner("Particular-point spaces: opens are the sets containing point 0")
for n in (3, 4):
    X = particular_point_space(n)
    print(f"  {n} points: covering dimension {dim_cl(X)}, weight {weight_of_space(X)}")

banner("Discrete spaces: both dimensions vanish, weights diverge")
for n in (2, 3, 4):
    X = discrete_space(n)
    algebra_side = dim_a(query(rc_algebra(X).ca, n_cap=1)).value
    print(
        f"  {n} points: dim_cl {dim_cl(X, n_cap=1)}, dim_a {algebra_side},"
        f" w(X) {weight_of_space(X)} < w_a {algebra_weight(rc_algebra(X).lca).size}"
    )

banner("Pi-weight agreement on pi-semiregular spaces (up to 4 points)")
agree = total = 0
for n in range(5):
    for X in enumerate_topologies(n):
        if not is_pi_semiregular(X):
            continue
        total += 1
        if pi_weight_of_space(X) == pi_weight(rc_algebra(X).algebra):
            agree += 1
print(f"  {agree}/{total} spaces agree")

banner("Connectedness agreement on every topology (up to 4 points)")
agree = total = 0
for n in range(5):
    for X in enumerate_topologies(n):
        total += 1
        if is_connected_space(X) == is_connected(rc_algebra(X).ca):
            agree += 1
print(f"  {agree}/{total} spaces agree")

banner("Pullback tables compose contravariantly")
X, Y, Z = discrete_space(3), discrete_space(2), discrete_space(2)
rx, ry, rz = rc_algebra(X), rc_algebra(Y), rc_algebra(Z)
f = ContinuousMap(X, Y, [0, 0, 1])
g = ContinuousMap(Y, Z, [1, 0])
table_f = lambda_t_map(f, ry, rx)
table_g = lambda_t_map(g, rz, ry)
direct = lambda_t_map(g.after(f), rz, rx)
composed = compose_diamond(table_f, table_g)
print("  table of g after f:", direct.mapping)
print("  diamond composite: ", composed.mapping)
print("  bit-identical:", direct.mapping == composed.mapping)
