"""
Divisibility sweeps with witnesses
==================================

Each check returns a report; failures carry the offending coefficient.
"""

import io
import json

from qapery import verify as V
from qapery.sweep import SweepSpec, run_sweep
from qapery.verify import TheoremId

r = V.verify_integer_sum(12, 2, 3)
print(r.status.value, r.params)

# divisible by [n]_q, and the quotient H satisfies n * H(1) = integer sum
r = V.verify_q_sum_plus(6, 1, 2)
H = r.quotient()
print(H.coeffs[1])
print(6 * H.eval_one()(1), V.integer_sum(6, 1, 2, 1)(1))

# alternating signs: the divisor is a product of cyclotomics that still equals n at q = 1
print(V.minus_divisor(6), V.minus_divisor(6).eval_one())
print(V.verify_q_sum_minus(6, 2, 2).status.value)

# closed forms and the Delannoy power sums
print(V.verify_sun_formula(25).ok, V.verify_guo_zeng(25).ok, V.verify_sun_delannoy(25).ok)
print(V.explore_delannoy_power(20, 3).status.value)

# A_{(p-1)/2} against the eta coefficients mod p^2
for p in (3, 5, 7, 11, 13):
    print(p, V.verify_supercongruence(p).witness)

# a sweep writes a header line then one JSON record per case
buf = io.StringIO()
code = run_sweep(SweepSpec(TheoremId.QT_PLUS, {"n": (1, 6), "m": (1, 1), "alpha": (1, 2)},
                           deterministic=True), stream=buf)
lines = buf.getvalue().splitlines()
print(code, len(lines) - 1, json.loads(lines[1]))
