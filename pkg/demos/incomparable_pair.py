"""A majorization-incomparable pair that every low-degree monotone orders.

The three-level spectra (0.49, 0.41, 0.10) and (0.5, 0.3, 0.2) are
incomparable under majorization, yet both the entropy and the degree-2
extremal monotone order them the same way with finite gaps: the cone order
generated by finitely many monotones is strictly coarser than majorization.
"""

from entmono.monotones import delta_m, entropy, inequality3_slack, p2_extremal
from entmono.orderlab import cone_verdict
from entmono.spectra import Spectrum, majorization_verdict

rho = Spectrum([0.49, 0.41, 0.10])
sigma = Spectrum([0.5, 0.3, 0.2])

print("rho   =", rho)
print("sigma =", sigma)
print("majorization verdict:", majorization_verdict(rho, sigma))

print(f"\nentropy gap   S(sigma) - S(rho)          = {entropy(sigma) - entropy(rho):.4f}")
print(f"extremal gap  P2_E(rho) - P2_E(sigma)     = {p2_extremal(rho) - p2_extremal(sigma):.4f}")
print(f"degree-3 optimized inequality slack       = {inequality3_slack(rho, sigma).slack:.4f}")
print("Delta M ladder (orders 1..4):", [round(x, 4) for x in delta_m(rho, sigma, 4)])

for family in ("msequence", "extremal"):
    v = cone_verdict(rho, sigma, nmax=4, family=family)
    print(f"\ncone verdicts ({family}):", v.cone_orders)
print("\nBoth families order the pair 'forward' even though majorization cannot.")
