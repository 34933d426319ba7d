"""Epsilon-NFAs and the language-level algorithms built on them.

Words are plain Python strings over single-character symbols; the empty
word (and the epsilon label) is ``""``. All machines are immutable and every
operation returns a new machine.
"""

from collections import deque
import os

from ._graph import bfs_path, reachable, scc_ids
from .errors import AlphabetMismatch, CapExceeded, NotFinite

EPS = ""
RESERVED = frozenset("/#@:")
DEFAULT_SUBSET_CAP = 2**20
SUBSET_CAP_ENV = "MARGCODE_SUBSET_CAP"


def make_alphabet(symbols):
    """Validate a symbol sequence and return it as a tuple (declaration order kept)."""
    symbols = tuple(symbols)
    if not symbols:
        raise ValueError("alphabet must be nonempty")
    if len(set(symbols)) != len(symbols):
        raise ValueError(f"duplicate symbols in alphabet {symbols!r}")
    for s in symbols:
        if not isinstance(s, str) or len(s) != 1:
            raise ValueError(f"alphabet symbols must be single characters, got {s!r}")
        if s.isspace() or not s.isprintable() or s in RESERVED:
            raise ValueError(f"symbol {s!r} is reserved or not printable")
    return symbols


def radix_key(word, alphabet):
    """Sort key: length first, then lexicographic in alphabet declaration order."""
    pos = {s: i for i, s in enumerate(alphabet)}
    return (len(word), tuple(pos[c] for c in word))


def default_subset_cap():
    value = os.environ.get(SUBSET_CAP_ENV)
    return int(value) if value else DEFAULT_SUBSET_CAP


def check_same_alphabet(a, b):
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatch(f"alphabets differ: {a.alphabet!r} vs {b.alphabet!r}")


def name_nodes(nodes):
    """Map product nodes (tuples of state names) to fresh ``p__q`` names.

    Falls back to numbered ``__n<i>`` names if the pair rendering collides.
    """
    names = {n: n if isinstance(n, str) else "__".join(n) for n in nodes}
    if len(set(names.values())) != len(names):
        names = {n: f"__n{i}" for i, n in enumerate(nodes)}
    return names


class Nfa:
    """Nondeterministic finite automaton with first-class epsilon transitions.

    >>> a = Nfa("ab", [("0", "a", "1")], initial=["0"], final=["1"])
    >>> accepts(a, "a"), accepts(a, "b")
    (True, False)
    """

    __slots__ = ("alphabet", "states", "transitions", "initial", "final", "_succ", "_pred",
                 "_trim")

    def __init__(self, alphabet, transitions=(), initial=(), final=(), states=()):
        self.alphabet = make_alphabet(alphabet)
        self.transitions = frozenset((str(p), x, str(q)) for p, x, q in transitions)
        self.initial = frozenset(str(s) for s in initial)
        self.final = frozenset(str(s) for s in final)
        mentioned = set(str(s) for s in states) | self.initial | self.final
        syms = set(self.alphabet)
        for p, x, q in self.transitions:
            if x != EPS and x not in syms:
                raise ValueError(f"label {x!r} not in alphabet")
            mentioned.add(p)
            mentioned.add(q)
        self.states = frozenset(mentioned)
        self._succ = None
        self._pred = None
        self._trim = False

    def __eq__(self, other):
        if not isinstance(other, Nfa):
            return NotImplemented
        return (self.alphabet, self.states, self.transitions, self.initial, self.final) == (
            other.alphabet, other.states, other.transitions, other.initial, other.final)

    def __hash__(self):
        return hash((self.alphabet, self.states, self.transitions, self.initial, self.final))

    def __repr__(self):
        return f"Nfa({len(self.states)} states, {len(self.transitions)} transitions)"

    @property
    def size(self):
        return len(self.states) + len(self.transitions)

    @property
    def succ(self):
        """``{state: [(label, target), ...]}`` in a deterministic order."""
        if self._succ is None:
            order = {s: i for i, s in enumerate(self.alphabet)}
            succ = {s: [] for s in self.states}
            for p, x, q in self.transitions:
                succ[p].append((x, q))
            for lst in succ.values():
                lst.sort(key=lambda e: (order.get(e[0], -1), e[1]))
            self._succ = succ
        return self._succ

    @property
    def pred(self):
        if self._pred is None:
            pred = {s: [] for s in self.states}
            for p, x, q in self.transitions:
                pred[q].append((x, p))
            self._pred = pred
        return self._pred

    def closure(self, states):
        """Epsilon closure of a set of states."""
        succ = self.succ
        seen = set(states)
        stack = list(seen)
        while stack:
            p = stack.pop()
            for x, q in succ[p]:
                if x == EPS and q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    def step(self, states, symbol):
        """Closure of the symbol-successors of an (already closed) state set."""
        succ = self.succ
        nxt = {q for p in states for x, q in succ[p] if x == symbol}
        return self.closure(nxt)


# constructors -------------------------------------------------------------

def from_words(alphabet, words):
    """Trie acceptor for a finite set of words."""
    node = {"": "t0"}
    trans = []
    for w in sorted(set(words)):
        for i in range(len(w)):
            if w[: i + 1] not in node:
                node[w[: i + 1]] = f"t{len(node)}"
                trans.append((node[w[:i]], w[i], node[w[: i + 1]]))
    final = [node[w] for w in set(words)]
    return Nfa(alphabet, trans, initial=["t0"], final=final, states=["t0"])


def singleton(alphabet, word):
    return from_words(alphabet, [word])


def empty(alphabet):
    return Nfa(alphabet, states=["q"], initial=["q"])


def universal(alphabet):
    alphabet = make_alphabet(alphabet)
    return Nfa(alphabet, [("q", s, "q") for s in alphabet], initial=["q"], final=["q"])


def sigma_power(alphabet, n):
    """Acceptor of all words of length exactly ``n``."""
    alphabet = make_alphabet(alphabet)
    trans = [(f"q{i}", s, f"q{i + 1}") for i in range(n) for s in alphabet]
    return Nfa(alphabet, trans, initial=["q0"], final=[f"q{n}"], states=["q0"])


# structural operations ----------------------------------------------------

def useful_states(a):
    """States that are reachable and co-reachable."""
    succ, pred = a.succ, a.pred
    fwd = reachable(a.initial, lambda p: [q for _, q in succ[p]])
    bwd = reachable(a.final & fwd, lambda q: [p for _, p in pred[q]])
    return fwd & bwd


def trim(a):
    if a._trim:
        return a
    keep = useful_states(a)
    if len(keep) == len(a.states):
        a._trim = True
        return a
    out = Nfa(
        a.alphabet,
        [t for t in a.transitions if t[0] in keep and t[2] in keep],
        initial=a.initial & keep,
        final=a.final & keep,
        states=keep,
    )
    out._trim = True
    return out


def explore(init_nodes, expand, is_final):
    """Forward exploration shared by all product constructions.

    ``expand(node)`` yields ``(label, node)`` pairs. Returns
    ``(names, transitions, initial, final)`` with nodes renamed to strings.
    """
    init_nodes = list(dict.fromkeys(init_nodes))
    seen = set(init_nodes)
    order = list(init_nodes)
    queue = deque(init_nodes)
    edges = []
    while queue:
        n = queue.popleft()
        for label, m in expand(n):
            edges.append((n, label, m))
            if m not in seen:
                seen.add(m)
                order.append(m)
                queue.append(m)
    names = name_nodes(order)
    trans = [(names[n], label, names[m]) for n, label, m in edges]
    final = [names[n] for n in order if is_final(n)]
    return names, trans, [names[n] for n in init_nodes], final


def _by_label(a):
    idx = {}
    for p, lst in a.succ.items():
        d = {}
        for x, q in lst:
            d.setdefault(x, []).append(q)
        idx[p] = d
    return idx


def intersect(a, b):
    """Product automaton; epsilon moves of either side interleave asynchronously."""
    check_same_alphabet(a, b)
    ia, ib = _by_label(a), _by_label(b)

    def expand(node):
        p, q = node
        da, db = ia[p], ib[q]
        for p2 in da.get(EPS, ()):
            yield EPS, (p2, q)
        for q2 in db.get(EPS, ()):
            yield EPS, (p, q2)
        for x, targets in da.items():
            if x == EPS:
                continue
            for q2 in db.get(x, ()):
                for p2 in targets:
                    yield x, (p2, q2)

    init = [(p, q) for p in sorted(a.initial) for q in sorted(b.initial)]
    names, trans, initial, final = explore(
        init, expand, lambda n: n[0] in a.final and n[1] in b.final)
    return Nfa(a.alphabet, trans, initial=initial, final=final, states=names.values())


def union(a, b):
    check_same_alphabet(a, b)

    def tag(t, s):
        return f"__{t}{s}"

    trans = [(tag("a", p), x, tag("a", q)) for p, x, q in a.transitions]
    trans += [(tag("b", p), x, tag("b", q)) for p, x, q in b.transitions]
    return Nfa(
        a.alphabet,
        trans,
        initial=[tag("a", s) for s in a.initial] + [tag("b", s) for s in b.initial],
        final=[tag("a", s) for s in a.final] + [tag("b", s) for s in b.final],
        states=[tag("a", s) for s in a.states] + [tag("b", s) for s in b.states],
    )


def _subsets(a, cap):
    """Breadth-first subset construction in radix order of the reaching word.

    Yields ``(subset, word)`` for each new subset and records edges in the
    returned dict as a side effect of iteration.
    """
    if cap is None:
        cap = default_subset_cap()
    start = a.closure(a.initial)
    seen = {start: ""}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        yield s, seen[s]
        for sym in a.alphabet:
            t = a.step(s, sym)
            if t not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"subset construction exceeded {cap} states")
                seen[t] = seen[s] + sym
                queue.append(t)


def determinize(a, cap=None):
    """Complete DFA for L(a) (as an ``Nfa`` with one initial state, no epsilons)."""
    index = {}
    for s, _ in _subsets(a, cap):
        index[s] = f"__d{len(index)}"
    trans = []
    for s, name in index.items():
        for sym in a.alphabet:
            trans.append((name, sym, index[a.step(s, sym)]))
    final = [name for s, name in index.items() if s & a.final]
    return Nfa(a.alphabet, trans, initial=[index[a.closure(a.initial)]], final=final,
               states=index.values())


def complement(a, cap=None):
    d = determinize(a, cap)
    return Nfa(a.alphabet, d.transitions, initial=d.initial, final=d.states - d.final,
               states=d.states)


def non_member(a, cap=None):
    """Radix-least word not in L(a), or None when L(a) is universal."""
    for s, word in _subsets(a, cap):
        if not s & a.final:
            return word
    return None


def is_universal(a, cap=None):
    return non_member(a, cap) is None


def shortest_word(a):
    """Radix-least among the shortest accepted words, or None if L(a) is empty."""
    # distance (in symbols) from each state to a final state; 0-1 BFS backwards
    dist = {q: 0 for q in a.final}
    dq = deque(a.final)
    while dq:
        q = dq.popleft()
        for x, p in a.pred[q]:
            w = 0 if x == EPS else 1
            nd = dist[q] + w
            if nd < dist.get(p, nd + 1):
                dist[p] = nd
                if w:
                    dq.append(p)
                else:
                    dq.appendleft(p)
    cur = a.closure(a.initial)
    ds = [dist[s] for s in cur if s in dist]
    if not ds:
        return None
    d = min(ds)
    word = []
    while d > 0:
        for sym in a.alphabet:
            nxt = a.step(cur, sym)
            if any(dist.get(s) == d - 1 for s in nxt):
                cur = nxt
                word.append(sym)
                d -= 1
                break
        else:  # pragma: no cover - dist guarantees progress
            raise AssertionError("shortest_word made no progress")
    return "".join(word)


def is_empty(a):
    return shortest_word(a) is None


def accepts(a, word):
    cur = a.closure(a.initial)
    for c in word:
        if not cur:
            return False
        cur = a.step(cur, c)
    return bool(cur & a.final)


def enumerate_words(a, maxlen):
    """All accepted words of length <= maxlen, in radix order."""
    if maxlen < 0:
        raise ValueError("maxlen must be >= 0")
    a = trim(a)
    out = []
    layer = [("", a.closure(a.initial))] if a.initial else []
    for n in range(maxlen + 1):
        nxt = []
        for w, s in layer:
            if s & a.final:
                out.append(w)
            if n < maxlen:
                for sym in a.alphabet:
                    t = a.step(s, sym)
                    if t:
                        nxt.append((w + sym, t))
        layer = nxt
    return out


def _cyclic_symbol_edge(a):
    """A non-epsilon transition of trim(a) lying on a cycle, or None."""
    comp = scc_ids(sorted(a.states), lambda p: [q for _, q in a.succ[p]])
    for p in sorted(a.states):
        for x, q in a.succ[p]:
            if x != EPS and comp[p] == comp[q]:
                return p, x, q, comp
    return None


def is_finite_language(a):
    # epsilon-only cycles do not make the language infinite
    return _cyclic_symbol_edge(trim(a)) is None


def find_lasso(a):
    """Pumping witness ``(x, z, y)`` with ``z`` nonempty and x z^i y in L(a) for all i.

    Returns None when L(a) is finite.
    """
    a = trim(a)
    hit = _cyclic_symbol_edge(a)
    if hit is None:
        return None
    p, x, q, comp = hit
    c = comp[p]

    def word(edges):
        return "".join(lbl for lbl, _ in edges)

    def succ_all(n):
        return a.succ[n]

    back = bfs_path([q], lambda n: ((e, e[1]) for e in a.succ[n] if comp[e[1]] == c),
                    lambda n: n == p)
    head = bfs_path(sorted(a.initial), lambda n: ((e, e[1]) for e in succ_all(n)),
                    lambda n: n == p)
    tail = bfs_path([p], lambda n: ((e, e[1]) for e in succ_all(n)),
                    lambda n: n in a.final)
    return word(head), x + word(back), word(tail)


def words_of_finite(a):
    """All words of a finite language in radix order."""
    a = trim(a)
    if not is_finite_language(a):
        raise NotFinite("language is infinite")
    return enumerate_words(a, len(a.states))


def count_words(a):
    """Number of accepted words of a finite language (path count on its DFA)."""
    a = trim(a)
    if not is_finite_language(a):
        raise NotFinite("language is infinite")
    if not a.initial:
        return 0
    d = trim(determinize(a))
    if not d.initial:
        return 0
    memo = {}
    # trimmed DFA of a finite language is acyclic; count paths to final states
    order = []
    state = {}
    for root in d.initial:
        stack = [(root, False)]
        while stack:
            n, done = stack.pop()
            if done:
                order.append(n)
                continue
            if n in state:
                continue
            state[n] = True
            stack.append((n, True))
            for _, m in d.succ[n]:
                if m not in state:
                    stack.append((m, False))
    for n in order:
        memo[n] = (1 if n in d.final else 0) + sum(memo[m] for _, m in d.succ[n])
    return sum(memo[s] for s in d.initial)
