"""Prove J_k prime (or composite) with a chain of x-only doublings.

The verdict is deterministic: J_k is prime exactly when the k+1-step
doubling chain dies at the last step and nowhere earlier.
"""

from cm7prime.jk_sequence import jk_closed
from cm7prime.prover import test_jk
from cm7prime.twist_tables import select_twist

for k in (2, 8, 11, 17, 18, 100):
    verdict, stats = test_jk(k)
    n = jk_closed(k).value
    shown = str(n) if n < 10**12 else f"{str(n)[:8]}...({len(str(n))} digits)"
    print(f"k={k:>3}  J_k={shown:<24} {verdict.label():<28}"
          f" mults+squares={stats.mults_plus_squarings}")

print()
k = 17
verdict, stats = test_jk(k)
twist = select_twist(k)
print(f"anatomy of the k={k} run (J_17 = 524087):")
print(f"  twist a={twist.a}, start point {twist.point} on"
      f" y^2 = x^3 - 35a^2 x - 98a^3")
print(f"  chain: {k + 1} doublings at exactly 2 squarings + 3"
      f" multiplications + 4 additions each")
print(f"  step-7 cost: {stats.step7_multiplications} M +"
      f" {stats.step7_squarings} S = 5(k+1) ="
      f" {stats.step7_multiplications + stats.step7_squarings}")
print(f"  whole run:   {stats.mults_plus_squarings} mults+squares,"
      f" {stats.additions} additions, {stats.gcd_calls} gcds")
print(f"  verdict:     {verdict.label()}")
