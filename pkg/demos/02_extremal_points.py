# High extremal points: n with J3(n) in {n - 1, n}.
#
# Each one determines the next from its value, its parity r and its
# fixed-point indicator f (0 = fixed point, 1 = pure).
from josephus3 import enumerate_extremal, eval_extremal, next_extremal_cases, next_extremal_unified

for s in enumerate_extremal(250):
    kind = "fixed" if s.f == 0 else "pure"
    print(f"{s.index:3d}  n_e={s.n_e:<5d} f={s.f} r={s.r}  J3={s.j_value:<5d} {kind}")
    # branch-by-case and branch-free steps are interchangeable
    assert next_extremal_cases(s) == next_extremal_unified(s)

# J3 is linear with slope 3 on each segment ending at an extremal point
res = eval_extremal(100)
print(f"J3(100) = {res.j}, segment ({res.bracket_low}, {res.bracket_high}], {res.iterations} points walked")
