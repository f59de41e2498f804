"""The integer sequence under test, three ways.

J_k = Norm(1 + 2*alpha^k) with alpha = (1+sqrt(-7))/2, which unfolds to
1 + 2*t_k + 2^(k+2) for a two-term integer recurrence t_k, and to a
four-term linear recurrence on the J_k themselves.
"""

from cm7prime.jk_sequence import (RECURRENCE, SEEDS, jk_closed, jk_mod_stream,
                                  jk_stream, period_mod)
from cm7prime.quad_ring import ALPHA, jk_element, qi_norm, qi_pow

print("alpha =", ALPHA, " alpha^2 =", qi_pow(ALPHA, 2), " norm =",
      qi_norm(ALPHA))
print()

print(" k   1 + 2*alpha^k                    J_k = norm")
for k in range(1, 11):
    elem = jk_element(k)
    print(f"{k:>2}   {str(elem):<30}   {qi_norm(elem)}")
print()

print("closed form matches the streamed recurrence",
      f"J(k+4) = {RECURRENCE[0]}J(k+3) {RECURRENCE[1]:+}J(k+2)",
      f"{RECURRENCE[2]:+}J(k+1) {RECURRENCE[3]:+}J(k), seeds {SEEDS}:")
stream = {jv.k: jv.value for jv in jk_stream(20)}
for k in (1, 5, 12, 20):
    print(f"  J_{k} = {jk_closed(k).value} = {stream[k]}")
print()

print("residues repeat: J_k mod 3 has period", period_mod(3),
      "| mod 5:", period_mod(5), "| mod 7:", period_mod(7))
print("  J_k mod 3 :", list(jk_mod_stream(3, 16)))
print("  J_k mod 7 :", list(jk_mod_stream(7, 16)), "(never 0: 7 | disc)")
print()
print("zeros mod 3 sit at k = 0 (mod 8) and zeros mod 5 at k = 6 (mod 24):")
print("  those k are composite for free, no curve arithmetic needed.")
