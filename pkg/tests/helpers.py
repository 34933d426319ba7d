"""Random machine generators and brute-force reference relations for tests."""

import itertools
import random

from marginal_codes.automata import Nfa


def random_nfa(rng, alphabet="ab", max_states=6, density=None, eps=0.05):
    n = rng.randint(1, max_states)
    density = density if density is not None else rng.uniform(0.1, 0.35)
    states = [f"s{i}" for i in range(n)]
    trans = []
    for p in states:
        for q in states:
            for x in alphabet:
                if rng.random() < density:
                    trans.append((p, x, q))
            if p != q and rng.random() < eps:
                trans.append((p, "", q))
    initial = ["s0"] + [s for s in states[1:] if rng.random() < 0.1]
    final = [s for s in states if rng.random() < 0.4] or [rng.choice(states)]
    return Nfa(alphabet, trans, initial=initial, final=final, states=states)


def random_finite_language(rng, alphabet="ab", max_words=15, max_len=5):
    n = rng.randint(0, max_words)
    words = set()
    for _ in range(n):
        m = rng.randint(0, max_len)
        words.add("".join(rng.choice(alphabet) for _ in range(m)))
    return sorted(words)


def brute_accepts(m, word):
    """Plain simulation of an Nfa straight from its transition list."""
    def close(states):
        seen = set(states)
        todo = list(states)
        while todo:
            p = todo.pop()
            for src, x, dst in m.transitions:
                if src == p and x == "" and dst not in seen:
                    seen.add(dst)
                    todo.append(dst)
        return seen

    cur = close(m.initial)
    for c in word:
        cur = close({dst for src, x, dst in m.transitions if src in cur and x == c})
    return bool(cur & set(m.final))


def brute_outputs(t, word, maxlen):
    """Outputs of a transducer on ``word`` up to length ``maxlen`` by path search."""
    out = set()
    seen = set()
    todo = [(q, 0, "") for q in t.initial]
    while todo:
        node = todo.pop()
        if node in seen:
            continue
        seen.add(node)
        q, i, y = node
        if i == len(word) and q in t.final:
            out.add(y)
        for p, x, o, r in t.transitions:
            if p != q:
                continue
            if x and (i >= len(word) or word[i] != x):
                continue
            ny = y + o
            if len(ny) <= maxlen:
                todo.append((r, i + len(x), ny))
    return out


def words_upto(alphabet, n):
    return ["".join(p) for m in range(n + 1) for p in itertools.product(alphabet, repeat=m)]


def radix(words, alphabet):
    pos = {s: i for i, s in enumerate(alphabet)}
    return sorted(words, key=lambda w: (len(w), [pos[c] for c in w]))


# reference relations: word -> set of related words (deleting direction)

def proper_prefixes(w):
    return {w[:i] for i in range(len(w))}


def proper_suffixes(w):
    return {w[i:] for i in range(1, len(w) + 1)}


def proper_infixes(w):
    return {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)} - {w}


def proper_outfixes(w):
    return {w[:i] + w[j:] for i in range(len(w) + 1) for j in range(i + 1, len(w) + 1)}


def proper_subwords(w):
    out = set()
    for mask in range(2 ** len(w) - 1):
        out.add("".join(c for i, c in enumerate(w) if mask >> i & 1))
    return out


def hamming1(w, alphabet):
    return {w[:i] + c + w[i + 1:] for i in range(len(w)) for c in alphabet if c != w[i]}


DELETING = {
    "px": proper_prefixes,
    "sx": proper_suffixes,
    "ix": proper_infixes,
    "ox": proper_outfixes,
    "hc": proper_subwords,
}


def reference_related(name, u, v, alphabet):
    """Brute-force membership v in T(u) for the builtin named ``name``."""
    if name == "sub1":
        return v in hamming1(u, alphabet)
    base, direction = name.split("_")
    if direction == "del":
        return v in DELETING[base](u)
    return u in DELETING[base](v)


def brute_margin_counts(language_words, related):
    """For an explicit finite set, the count |T(u) & (L - {u})| for each u."""
    return {u: sum(1 for v in language_words if v != u and related(u, v)) for u in language_words}


def seeded(seed):
    return random.Random(seed)


def random_fin_nfa(rng, alphabet="ab", head=3, tail=4, density=0.35):
    """Cyclic head feeding an acyclic tail that holds every final state.

    Words ending in the tail have finitely many extensions reachable through
    the tail, which makes finitely-prefix-free languages likely but not certain
    (a word can also end in the head through another run).
    """
    hs = [f"h{i}" for i in range(rng.randint(1, head))]
    ts = [f"t{i}" for i in range(rng.randint(1, tail))]
    trans = []
    for p in hs:
        for q in hs:
            for x in alphabet:
                if rng.random() < density:
                    trans.append((p, x, q))
        for q in ts:
            for x in alphabet:
                if rng.random() < density / 2:
                    trans.append((p, x, q))
    for i, p in enumerate(ts):
        for q in ts[i + 1:]:
            for x in alphabet:
                if rng.random() < density:
                    trans.append((p, x, q))
    trans.append((rng.choice(hs), rng.choice(alphabet), ts[0]))
    final = [t for t in ts if rng.random() < 0.6] or [ts[-1]]
    return Nfa(alphabet, trans, initial=["h0"], final=final, states=hs + ts)


# one summary line per acceptance criterion, printed by conftest
ACCEPTANCE = []
