# How much work the fixed-point walk saves over the extremal walk.
from josephus3 import emit_gain_series, iteration_comparison

c = iteration_comparison(50_000_000)
print(f"fixed points: {c.fixed_point_iters}, high extremal points: {c.extremal_iters}, pure: {c.pure_point_count}")
print(f"plain iteration saving: {float(c.iteration_ratio):.1%}")

# r(q) as printed sums per-fixed-point gains, so it is not bounded by 100%;
# the plain ratio 1 - q / (q + pure points) is shown next to it
series = emit_gain_series(39)
for q, pure, r, ratio in series.rows():
    if q % 5 == 0 or q in (1, 2, 3):
        print(f"q={q:<3d} pure so far={pure:<3d} r(q)={float(r):8.3f}%  ratio={float(ratio):6.2f}%")
