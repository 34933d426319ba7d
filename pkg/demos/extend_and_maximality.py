"""Growing a finite language one word at a time, then asking about maximality."""
from marginal_codes import (builtin, extend_fin, from_words,
                            is_maximal_classic, satisfies_fin)
from marginal_codes.automata import sigma_power

hc = builtin("hc_ext", "ab")
words = {"a", "ab"}
for step in range(6):
    L = from_words("ab", words)
    z = extend_fin(L, hc)
    words.add(z)
    print(f"step {step}: add {z!r:8} ->", sorted(words, key=lambda w: (len(w), w)))
assert satisfies_fin(from_words("ab", words), hc).satisfied

# a classic prefix code is maximal when nothing else can be added
pxd = builtin("px_del", "ab")
print("ab-words of length 2 maximal:", is_maximal_classic(sigma_power("ab", 2), pxd))
print("{aa} maximal:", is_maximal_classic(from_words("ab", ["aa"]), pxd))
