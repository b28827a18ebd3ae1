# Fixed points of J3 and evaluation from the bracketing pair.
from josephus3 import enumerate_fixed_points, eval_fixed_point, m_bar_via_log, verify_fixed_point

recs = enumerate_fixed_points(39)
for rec in recs[:10]:
    print(f"l={rec.ell:<3d} n_p={rec.n_p:<8d} pure points after it: {rec.m_bar}")
print("...")
print(f"l={recs[-1].ell} n_p={recs[-1].n_p}")

# the 2-adic count of pure points can also be read off the gap to the next fixed point
assert all(m_bar_via_log(a.n_p, b.n_p) == a.m_bar for a, b in zip(recs, recs[1:]))

res = eval_fixed_point(50_000_000)
print(f"J3(50000000) = {res.j}")
print(f"  bracket ({res.bracket_low}, {res.bracket_high}], m_bar={res.m_bar}, segment exponent={res.frak_m}")
print(f"  after generating {res.iterations} fixed points")

# arbitrary size is fine: everything is exact integer arithmetic
big = 10**60 + 123
print(f"J3(10**60 + 123) = {eval_fixed_point(big).j}")
print("1181101 is a fixed point:", verify_fixed_point(1181101))
