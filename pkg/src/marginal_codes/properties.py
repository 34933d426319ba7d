"""Satisfaction, maximality and extension procedures for transducer-described
code properties and their k-margin and finitely-margin variants.

A language L satisfies the k-margin property of T when every u in L has at
most k outputs of T (other than u itself) inside L; the finitely-margin
property only asks for finitely many.
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import automata, transducer as tr
from ._graph import scc_ids
from .automata import (accepts, check_same_alphabet, enumerate_words, find_lasso,
                       shortest_word, words_of_finite)
from .errors import CapExceeded, NotFinite, NotRightInfinite, NotSatisfying, PromiseViolated
from .transducer import PumpFamily


@dataclass(frozen=True)
class Margin:
    """``Margin(k)`` for an exact bound, ``Margin(None)`` (``FIN``) for "finitely"."""

    k: int | None

    def __post_init__(self):
        if self.k is not None and self.k < 0:
            raise ValueError("margin k must be >= 0")

    @property
    def is_fin(self):
        return self.k is None

    def __str__(self):
        return "fin" if self.k is None else f"k={self.k}"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "fin":
            return FIN
        if text.startswith("k="):
            return cls(int(text[2:]))
        raise ValueError(f"bad margin {text!r}")


FIN = Margin(None)
CLASSIC = Margin(0)


@dataclass(frozen=True)
class PropertySpec:
    transducer: tr.Transducer
    margin: Margin = CLASSIC
    input_altering: bool = False
    name: str = ""

    def __post_init__(self):
        if self.input_altering:
            w = input_preserved_word(self.transducer)
            if w is not None:
                raise PromiseViolated(
                    f"transducer {self.name or ''} is not input-altering: {w!r} maps to itself")


@dataclass(frozen=True)
class FiniteViolation:
    u: str
    violators: tuple


@dataclass(frozen=True)
class InfiniteViolation:
    pump: PumpFamily

    @property
    def u(self):
        return self.pump.u


@dataclass(frozen=True)
class Verdict:
    satisfied: bool
    witness: FiniteViolation | InfiniteViolation | None = None
    confidence: str = "full"
    notes: tuple = field(default=(), compare=False)


def _words_upto(alphabet, n):
    out = [""]
    layer = [""]
    for _ in range(n):
        layer = [w + s for w in layer for s in alphabet]
        out += layer
    return out


def input_preserved_word(t, maxlen=4):
    """Radix-least w with |w| <= maxlen and w in t(w), or None."""
    for w in _words_upto(t.alphabet, maxlen):
        if accepts(tr.apply(t, w), w):
            return w
    return None


def check_strict_order(t, maxlen=4):
    """Bounded spot check that ``t`` realizes an irreflexive, transitive relation.

    Raises PromiseViolated with a concrete counterexample.
    """
    words = _words_upto(t.alphabet, maxlen)
    rel = {u: set(enumerate_words(tr.apply(t, u), maxlen)) for u in words}
    for u in words:
        if u in rel[u]:
            raise PromiseViolated(f"relation is not irreflexive at {u!r}")
        for v in rel[u]:
            missing = rel[v] - rel[u]
            if missing:
                w = min(missing, key=lambda x: automata.radix_key(x, t.alphabet))
                raise PromiseViolated(f"relation is not transitive: {u!r} < {v!r} < {w!r}")


def restrict_both(t, a):
    """t restricted to inputs and outputs in L(a)."""
    return tr.restrict_range(tr.restrict_domain(t, a), a)


def satisfies_fin(a, t):
    """Finitely-margin test: no proper epsilon-input cycle in trim(t|a|a)."""
    pump = tr.restricted_eps_pump(t, a)
    if pump is None:
        return Verdict(True)
    return Verdict(False, InfiniteViolation(pump))


def satisfies_classic_emptiness(a, t):
    """Classic test for input-altering ``t``: t(L) and L must be disjoint."""
    check_same_alphabet(a, t)
    image = tr.range_nfa(tr.restrict_domain(t, a))
    v = shortest_word(automata.intersect(image, a))
    if v is None:
        return Verdict(True)
    preimage = tr.domain_nfa(tr.restrict_range(tr.restrict_domain(t, a),
                                               automata.singleton(a.alphabet, v)))
    u = shortest_word(preimage)
    return Verdict(False, FiniteViolation(u, (v,)))


def _unambiguous(a):
    """Trimmed DFA for L(a) when it is not much larger than ``a``; else ``a``.

    Same language, so the restricted relation is unchanged, but the tuple
    search no longer branches on runs that differ only in automaton states.
    """
    try:
        d = automata.trim(automata.determinize(a, cap=max(64, 8 * len(a.states))))
    except CapExceeded:
        return a
    return d


def satisfies(a, spec, cfg=None):
    """Decide whether L(a) has the property described by ``spec``.

    k-margins go through (k+1)-valuedness of trim((T + identity)|a|a);
    infinite margins are caught first by the epsilon-input cycle test.
    """
    t = spec.transducer
    check_same_alphabet(a, t)
    fin = satisfies_fin(a, t)
    if spec.margin.is_fin or not fin.satisfied:
        return fin
    k = spec.margin.k
    s = tr.trim(restrict_both(tr.identity_augment(t), _unambiguous(a)))
    vv = tr.is_k_valued(s, k + 1, cfg)
    if vv.k_valued:
        verdict = Verdict(True, confidence=vv.confidence)
    else:
        u = vv.input
        others = tuple(v for v in vv.outputs if v != u)[: k + 1]
        verdict = Verdict(False, FiniteViolation(u, others))
    if k == 0 and spec.input_altering:
        other = satisfies_classic_emptiness(a, t)
        if other.satisfied != verdict.satisfied:
            raise AssertionError("emptiness and valuedness routes disagree")
    return verdict


def replays(a, t, margin, witness):
    """Check a violation witness directly against ``a`` and ``t``."""
    if not accepts(a, witness.u):
        return False
    image = tr.apply(t, witness.u)
    if isinstance(witness, InfiniteViolation):
        p = witness.pump
        if not p.z:
            return False
        return all(accepts(a, p.output(i)) and accepts(image, p.output(i)) for i in range(4))
    vs = witness.violators
    if len(set(vs)) != len(vs) or witness.u in vs:
        return False
    if margin.k is not None and len(vs) != margin.k + 1:
        return False
    return all(accepts(a, v) and accepts(image, v) for v in vs)


def maximality_gap(a, t, cap=None):
    """Radix-least word outside L | t(L) | t^-1(L), or None when that union is everything.

    Requires L(a) to satisfy the classic property of ``t``.
    """
    if not satisfies(a, PropertySpec(t, CLASSIC)).satisfied:
        raise NotSatisfying("language does not satisfy the classic property")
    cover = automata.union(a, tr.range_nfa(tr.restrict_domain(t, a)))
    cover = automata.union(cover, tr.range_nfa(tr.restrict_domain(tr.inverse(t), a)))
    return automata.non_member(cover, cap)


def is_maximal_classic(a, t, cap=None):
    return maximality_gap(a, t, cap) is None


def extend_fin(a, t_ext, check_order=True):
    """Word z not in L(a) such that L(a) + {z} still satisfies the finitely-margin property.

    ``t_ext`` must realize a strict order upward (u -> words above u). The
    chosen z lies above a maximal element among the words of L above the
    radix-least word of L.
    """
    check_same_alphabet(a, t_ext)
    if not automata.is_finite_language(a):
        raise NotFinite("extend_fin needs a finite language")
    if not satisfies_fin(a, t_ext).satisfied:
        raise NotSatisfying("language does not satisfy the finitely-margin property")
    if check_order:
        check_strict_order(t_ext)
    words = words_of_finite(a)
    if not words:
        return ""
    u = words[0]
    above = words_of_finite(automata.intersect(tr.apply(t_ext, u), a))
    top = u
    if above:
        maximal = []
        for v in above:
            image = tr.apply(t_ext, v)
            if not any(accepts(image, w) for w in above):
                maximal.append(v)
        if not maximal:
            raise PromiseViolated("no maximal element: relation is not a strict order")
        top = maximal[0]
    z = shortest_word(tr.apply(t_ext, top))
    if z is None:
        raise NotRightInfinite(f"no word lies above {top!r}")
    grown = automata.union(a, automata.singleton(a.alphabet, z))
    if accepts(a, z) or not satisfies_fin(grown, t_ext).satisfied:
        raise PromiseViolated(f"extension by {z!r} failed; relation is not a strict order")
    return z


# brute-force oracle ---------------------------------------------------------

def _image_in_language(t, a, u):
    """Explicit graph of t(u) & L(a): nodes (t-state, position in u, a-state).

    Returns ``(initial, final, succ)`` restricted to useful nodes, where
    ``succ[node]`` lists ``(output symbol or "", node)``.
    """
    n = len(u)
    a_eps = {}
    a_sym = {}
    for p, x, q in a.transitions:
        if x == "":
            a_eps.setdefault(p, []).append(q)
        else:
            a_sym.setdefault((p, x), []).append(q)
    t_out = {}
    for p, x, y, q in t.transitions:
        t_out.setdefault(p, []).append((x, y, q))
    init = [(p, 0, q) for p in t.initial for q in a.initial]
    succ = {}
    stack = list(init)
    while stack:
        node = stack.pop()
        if node in succ:
            continue
        p, i, q = node
        out = [("", (p, i, q2)) for q2 in a_eps.get(q, ())]
        for x, y, p2 in t_out.get(p, ()):
            if x == "":
                j = i
            elif i < n and u[i] == x:
                j = i + 1
            else:
                continue
            if y == "":
                out.append(("", (p2, j, q)))
            else:
                out.extend((y, (p2, j, q2)) for q2 in a_sym.get((q, y), ()))
        succ[node] = out
        stack.extend(m for _, m in out if m not in succ)
    final = {v for v in succ if v[0] in t.final and v[1] == n and v[2] in a.final}
    pred = {}
    for v, out in succ.items():
        for _, m in out:
            pred.setdefault(m, []).append(v)
    live = set(final)
    stack = list(final)
    while stack:
        v = stack.pop()
        for w in pred.get(v, ()):
            if w not in live:
                live.add(w)
                stack.append(w)
    succ = {v: [(y, m) for y, m in out if m in live] for v, out in succ.items() if v in live}
    return [v for v in init if v in live], final, succ


def _has_symbol_cycle(succ):
    comp = scc_ids(list(succ), lambda v: [m for _, m in succ[v]])
    return any(y and comp[v] == comp[m] for v, out in succ.items() for y, m in out)


def _count_and_member(initial, final, succ, u, alphabet):
    def close(nodes):
        seen = set(nodes)
        stack = list(seen)
        while stack:
            v = stack.pop()
            for y, m in succ[v]:
                if not y and m not in seen:
                    seen.add(m)
                    stack.append(m)
        return frozenset(seen)

    memo = {}

    def count(sub):
        if sub in memo:
            return memo[sub]
        total = 1 if sub & final else 0
        for c in alphabet:
            nxt = close({m for v in sub for y, m in succ[v] if y == c})
            if nxt:
                total += count(nxt)
        memo[sub] = total
        return total

    start = close(initial)
    cur = start
    for c in u:
        cur = close({m for v in cur for y, m in succ[v] if y == c})
    return count(start) if start else 0, bool(cur & final)


def oracle_counts(a, t, u_max_len):
    """Yield ``(u, count)`` for each u in L(a) with |u| <= ``u_max_len``, where
    count = |t(u) & (L(a) - {u})|, or None when that set is infinite."""
    for u in enumerate_words(a, u_max_len):
        initial, final, succ = _image_in_language(t, a, u)
        if not initial:
            yield u, 0
        elif _has_symbol_cycle(succ):
            yield u, None
        else:
            total, member = _count_and_member(initial, final, succ, u, a.alphabet)
            yield u, total - (1 if member else 0)


def oracle_violation(a, t, u, count, margin):
    """Witness for one oracle row, or None if the row is within the margin."""
    if count is not None and (margin.is_fin or count <= margin.k):
        return None
    x = automata.trim(automata.intersect(tr.apply(t, u), a))
    if count is None:
        if margin.is_fin:
            p, z, s = find_lasso(x)
            return InfiniteViolation(PumpFamily(u, p, z, s))
        need = margin.k + 1
        n = 0
        while True:
            found = [w for w in enumerate_words(x, n) if w != u]
            if len(found) >= need:
                return FiniteViolation(u, tuple(found[:need]))
            n += 1
    found = [w for w in words_of_finite(x) if w != u]
    return FiniteViolation(u, tuple(found[: margin.k + 1]))


def oracle_satisfies(a, spec, u_max_len):
    """Independent check by explicit per-word counting.

    Violations are conclusive; "satisfied" only means no violation among
    words of length <= ``u_max_len`` (confidence "bounded").
    """
    check_same_alphabet(a, spec.transducer)
    for u, count in oracle_counts(a, spec.transducer, u_max_len):
        w = oracle_violation(a, spec.transducer, u, count, spec.margin)
        if w is not None:
            return Verdict(False, w)
    return Verdict(True, confidence="bounded")


def _set_satisfies(words, rel, k):
    return all(sum(1 for v in words if v != u and v in rel[u]) <= k for u in words)


def check_j_independence(words, spec):
    """Compare membership of a finite set with membership of all its subsets
    of size at most k+2. Returns True when the two sides agree."""
    if spec.margin.is_fin:
        raise ValueError("check_j_independence needs an exact margin")
    k = spec.margin.k
    words = sorted(set(words))
    t = spec.transducer
    rel = {}
    for u in words:
        image = tr.apply(t, u)
        rel[u] = {v for v in words if accepts(image, v)}
    whole = _set_satisfies(words, rel, k)
    parts = all(_set_satisfies(sub, rel, k)
                for n in range(1, min(k + 2, len(words)) + 1)
                for sub in combinations(words, n))
    return whole == parts
