#!/usr/bin/env python3
"""Smoke tests of the python module against closed-form values."""

import math

import numpy as np

import petzrenyi as pz


def approx(a, b, tol=1e-11):
    return abs(a - b) <= tol


rho = pz.density_from_matrix(np.diag([2 / 3, 1 / 3]).astype(complex))
sigma = pz.density_from_matrix(np.diag([0.5, 0.5]).astype(complex))

assert rho.dim == 2
assert approx(rho.eigenvalues[0], 2 / 3)
assert np.allclose(rho.matrix(), np.diag([2 / 3, 1 / 3]))

# Equal states vanish at every order.
for alpha in [0, 0.5, 1, 2, "inf"]:
    value, status = pz.petz_renyi(rho, rho, alpha)
    assert status == "finite" and abs(value) < 1e-12, (alpha, value, status)

# Closed forms for the shared-basis pair.
value, status = pz.petz_renyi(rho, sigma, 2.0)
assert status == "finite" and approx(value, math.log(10 / 9))

value, status = pz.petz_renyi(rho, sigma, 1)
assert approx(value, (2 / 3) * math.log(4 / 3) + (1 / 3) * math.log(2 / 3))

# The two routes agree.
direct, _ = pz.petz_renyi_direct(rho, sigma, 0.5)
classical, _ = pz.petz_renyi(rho, sigma, 0.5)
assert approx(direct, classical, 1e-12)

# Support violation carries its tag.
pure = pz.density_from_matrix(np.diag([1.0, 0.0]).astype(complex))
other = pz.density_from_matrix(np.diag([0.0, 1.0]).astype(complex))
value, status = pz.petz_renyi(pure, other, 0.5)
assert math.isinf(value) and status == "+inf:support"

# Restricted versus unrestricted order-infinity sup.
value, status = pz.d_infty(rho, rho)
assert approx(value, 0.0)
value, status = pz.d_infty_unrestricted(rho, rho)
assert approx(value, math.log(2))

# Distances.
assert approx(pz.hs_norm_sq_diff(rho, sigma), 1 / 18)
assert approx(pz.total_variation(rho, sigma), 1 / 3)

# Sparse reduced pair of a rotated qubit: four populated cells, masses sum to 1.
h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
rotated = pz.density_from_matrix((h @ np.diag([0.6, 0.4]) @ h.conj().T).astype(complex))
cells = pz.joint_pair(rho, rotated)
assert len(cells) == 4
assert approx(sum(c[2] for c in cells), 1.0)
assert approx(sum(c[3] for c in cells), 1.0)

# Scans are monotone in the order.
rows = pz.alpha_scan(rho, sigma, [0.0, 0.5, 1.0, 1.5, 2.0])
values = [r[1] for r in rows]
assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))

# A non-Hermitian input is rejected through the exception bridge.
try:
    pz.density_from_matrix(np.array([[0.5, 0.3], [0.0, 0.5]]).astype(complex))
    raise AssertionError("expected PetzError")
except pz.PetzError:
    pass

# Built-in examples reproduce their finiteness boundaries.
assert set(pz.example_names()) == {
    "ex1-finite-d1", "ex2-boundary-2", "ex3-at-2", "counterexample", "infty-minus-infty",
}
for name in pz.example_names():
    all_pass, lines = pz.run_example(name)
    assert all_pass, (name, lines)

# Divergent spectral integral crosses any threshold at a finite N.
n = pz.araki_threshold(5.0)
assert pz.araki_partial_sum(n) > 5.0 >= pz.araki_partial_sum(n - 1)
assert pz.kl_term_compare(1000) <= 1e-14

print("python smoke tests passed")
