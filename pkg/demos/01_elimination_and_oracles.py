# Two ways to get J3(n) without any of the recurrence machinery.
#
# simulate() plays out the circle; euler_eval() uses J(m) = (J(m-1) + 2) mod m + 1.
from josephus3 import euler_eval, simulate

trace = simulate(10)
print("n = 10, people removed in order:", trace.elimination_order)
print("survivor:", trace.survivor)

# the two oracles agree everywhere they can both run
assert all(simulate(n).survivor == euler_eval(n) for n in range(1, 2001))

# the linear oracle is the only one practical for large n (a few seconds here)
print("J3(1_000_000) =", euler_eval(1_000_000))
