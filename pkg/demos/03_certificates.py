"""Existence certificates for the linear coefficient family.

Solving is always attempted, but the solver also certifies, for each run,
the sufficient conditions under which the double fixed point provably has a
solution: the operator's contraction bound must stay below 1 at z = 0 and at
the bracket's upper end, and (radiative only) the operator must provably map
profiles into [0, 1].

For the linear family L* = 1 + beta f the z = 0 contraction bound is
2 (1 + beta) beta, so certification cuts off at beta = (sqrt(3) - 1) / 2.
"""

import math

import numpy as np

from meltfront import BCKind, certify, contraction_bound, linear_problem, solve_lambda
from meltfront.existence import lambda_bar

print(__doc__)

threshold = (math.sqrt(3.0) - 1.0) / 2.0
print(f"threshold: beta < (sqrt(3)-1)/2 = {threshold:.6f}")
print(f"{'beta':>6} {'2(1+b)b':>9} {'lambda_bar':>11} {'eps(lam2)':>10} {'certified':>10} {'lambda':>10}")
for beta in (0.1, 0.2, 0.3, 0.36, 0.37, 0.5):
    prob = linear_problem(BCKind.DIRICHLET, alpha=0.0, beta=beta, Pe=0.05, Ste=0.002)
    cert = certify(prob)
    lb = f"{cert.lambda_bar:.4f}" if cert.lambda_bar is not None else "-"
    eps2 = f"{cert.epsilon_at_lambda2:.4f}" if cert.epsilon_at_lambda2 is not None else "-"
    lam = f"{solve_lambda(prob).lambda_tilde:.6f}"  # solving proceeds either way
    print(f"{beta:6.2f} {2*(1+beta)*beta:9.4f} {lb:>11} {eps2:>10} {str(cert.certified):>10} {lam:>10}")

print()
print("An uncertified run is not a failed run: the sufficient conditions are")
print("not necessary, and above the threshold the iteration still converged.")

print()
print("The contraction threshold z_bar (where the bound crosses 1) shrinks as")
print("the coefficient variation grows:")
for beta in (0.05, 0.1, 0.2, 0.3):
    prob = linear_problem(BCKind.DIRICHLET, alpha=beta, beta=beta, Pe=0.5, Ste=1.0)
    lb, note = lambda_bar(prob)
    print(f"  alpha = beta = {beta:4.2f}: z_bar = {lb:.4f}   (bound at z_bar: "
          f"{contraction_bound(prob, lb):.9f})")

print()
print("Hypothesis flags for a strongly radiative face (fails the self-map test):")
bad = linear_problem(
    BCKind.RADIATIVE, alpha=0.05, beta=0.05, Pe=0.3, Ste=0.5, Bi=0.05, r=5.0, T_star=2.0, T_m=1.0
)
for name, value in sorted(certify(bad).hypothesis_flags.items()):
    print(f"  {name:34s} {value}")
