"""A short tour: prefix margins, suffix margins and the finitely-margin case.

Run with `python demos/margins_tour.py`.
"""
from marginal_codes import FIN, Margin, PropertySpec, builtin, from_words, satisfies
from marginal_codes.automata import Nfa

px = builtin("px_ext", "01")

# {0, 00}: the word 0 has one proper extension in the language
L = from_words("01", ["0", "00"])
for k in (0, 1):
    v = satisfies(L, PropertySpec(px, Margin(k)))
    print(f"{{0, 00}} with prefix margin k={k}: {v.satisfied}", v.witness or "")

# three words sharing the suffix a; a needs margin 2
sx = builtin("sx_ext", "abc")
L = from_words("abc", ["a", "ba", "ca"])
for k in (1, 2):
    print(f"{{a, ba, ca}} with suffix margin k={k}:", satisfies(L, PropertySpec(sx, Margin(k))).satisfied)

# 0* fails every margin; the witness is a pump, a whole family of violators
star = Nfa("01", [("q", "0", "q")], ["q"], ["q"])
v = satisfies(star, PropertySpec(px, FIN))
p = v.witness.pump
print("0* finitely-margin:", v.satisfied)
print("  u =", repr(v.witness.u), " violators:", [p.output(i) for i in range(4)], "...")
