"""Timing the finitely-margin test on chains of growing length.

The fitted log-log slope should sit near 2.
"""
import time

import numpy as np

from marginal_codes import builtin, satisfies_fin
from marginal_codes.automata import Nfa


def chain(n):
    trans = [(f"q{i}", s, f"q{i + 1}") for i in range(n - 1) for s in "ab"]
    return Nfa("ab", trans, initial=["q0"], final=[f"q{i}" for i in range(n)])


px = builtin("px_ext", "ab")
sizes = np.array([50, 100, 200, 400])
times = []
for n in sizes:
    a = chain(n)
    t0 = time.perf_counter()
    satisfies_fin(a, px)
    times.append(time.perf_counter() - t0)
    print(f"n={n:4d}  {times[-1]:.3f}s")

slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
print(f"slope {slope:.2f}")
