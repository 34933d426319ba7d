"""Standard-form transducers and the relational operators used by the
satisfaction procedures.

Transitions are ``(source, input, output, target)`` where each label is a
single symbol or ``""`` (epsilon). Input and output alphabets coincide.
"""

from collections import deque
from dataclasses import dataclass
from itertools import product
import os

from . import automata
from ._graph import bfs_path, reachable, scc_ids
from .automata import EPS, Nfa, check_same_alphabet, explore, make_alphabet
from .errors import CapExceeded

BUFFER_CAP_ENV = "MARGCODE_BUFFER_CAP"


class Transducer:
    __slots__ = ("alphabet", "states", "transitions", "initial", "final", "_succ", "_pred")

    def __init__(self, alphabet, transitions=(), initial=(), final=(), states=()):
        self.alphabet = make_alphabet(alphabet)
        self.transitions = frozenset((str(p), x, y, str(q)) for p, x, y, q in transitions)
        self.initial = frozenset(str(s) for s in initial)
        self.final = frozenset(str(s) for s in final)
        mentioned = set(str(s) for s in states) | self.initial | self.final
        syms = set(self.alphabet)
        for p, x, y, q in self.transitions:
            for lbl in (x, y):
                if lbl != EPS and lbl not in syms:
                    raise ValueError(f"label {lbl!r} not in alphabet")
            mentioned.add(p)
            mentioned.add(q)
        self.states = frozenset(mentioned)
        self._succ = None
        self._pred = None

    def __eq__(self, other):
        if not isinstance(other, Transducer):
            return NotImplemented
        return (self.alphabet, self.states, self.transitions, self.initial, self.final) == (
            other.alphabet, other.states, other.transitions, other.initial, other.final)

    def __hash__(self):
        return hash((self.alphabet, self.states, self.transitions, self.initial, self.final))

    def __repr__(self):
        return f"Transducer({len(self.states)} states, {len(self.transitions)} transitions)"

    @property
    def size(self):
        return len(self.states) + len(self.transitions)

    @property
    def succ(self):
        """``{state: [(input, output, target), ...]}`` in a deterministic order."""
        if self._succ is None:
            order = {s: i for i, s in enumerate(self.alphabet)}
            succ = {s: [] for s in self.states}
            for p, x, y, q in self.transitions:
                succ[p].append((x, y, q))
            for lst in succ.values():
                lst.sort(key=lambda e: (order.get(e[0], -1), order.get(e[1], -1), e[2]))
            self._succ = succ
        return self._succ

    @property
    def pred(self):
        if self._pred is None:
            pred = {s: [] for s in self.states}
            for p, x, y, q in self.transitions:
                pred[q].append((x, y, p))
            self._pred = pred
        return self._pred


@dataclass(frozen=True)
class PumpFamily:
    """Input ``u`` whose outputs include ``y + z*i + y_prime`` for every i >= 0."""

    u: str
    y: str
    z: str
    y_prime: str

    def output(self, i):
        return self.y + self.z * i + self.y_prime


@dataclass(frozen=True)
class SearchConfig:
    buffer_cap: int | None = None
    max_configs: int | None = None


@dataclass(frozen=True)
class ValuednessVerdict:
    k_valued: bool
    k: int
    input: str | None = None
    outputs: tuple = ()
    pump: PumpFamily | None = None
    confidence: str = "full"


# basic operations ---------------------------------------------------------

def trim(t):
    fwd = reachable(t.initial, lambda p: (q for _, _, q in t.succ[p]))
    bwd = reachable(t.final, lambda q: (p for _, _, p in t.pred[q]))
    keep = fwd & bwd
    return Transducer(
        t.alphabet,
        [e for e in t.transitions if e[0] in keep and e[3] in keep],
        initial=t.initial & keep,
        final=t.final & keep,
        states=keep,
    )


def inverse(t):
    return Transducer(t.alphabet, [(p, y, x, q) for p, x, y, q in t.transitions],
                      initial=t.initial, final=t.final, states=t.states)


def identity_augment(t):
    """Add a fresh initial+final state looping on every ``s/s``."""
    q = "__id"
    while q in t.states:
        q += "_"
    loops = [(q, s, s, q) for s in t.alphabet]
    return Transducer(t.alphabet, list(t.transitions) + loops, initial=t.initial | {q},
                      final=t.final | {q}, states=t.states | {q})


def domain_nfa(t):
    return Nfa(t.alphabet, [(p, x, q) for p, x, _, q in t.transitions],
               initial=t.initial, final=t.final, states=t.states)


def range_nfa(t):
    return Nfa(t.alphabet, [(p, y, q) for p, _, y, q in t.transitions],
               initial=t.initial, final=t.final, states=t.states)


def _restrict(t, a, side):
    check_same_alphabet(t, a)
    by_label = {}
    for p, x, q in a.transitions:
        by_label.setdefault(p, {}).setdefault(x, []).append(q)

    def expand(node):
        p, q = node
        aq = by_label.get(q, {})
        for x, y, p2 in t.succ[p]:
            lbl = x if side == 0 else y
            if lbl == EPS:
                yield (x, y), (p2, q)
            else:
                for q2 in aq.get(lbl, ()):
                    yield (x, y), (p2, q2)
        for q2 in aq.get(EPS, ()):
            yield (EPS, EPS), (p, q2)

    init = [(p, q) for p in sorted(t.initial) for q in sorted(a.initial)]
    names, trans, initial, final = explore(
        init, expand, lambda n: n[0] in t.final and n[1] in a.final)
    return Transducer(t.alphabet, [(p, x, y, q) for p, (x, y), q in trans],
                      initial=initial, final=final, states=names.values())


def restrict_domain(t, a):
    """``t`` with its domain restricted to L(a) (input-side product)."""
    return _restrict(t, a, 0)


def restrict_range(t, a):
    """``t`` with its outputs restricted to L(a) (output-side product)."""
    return _restrict(t, a, 1)


def apply(t, word):
    """Nfa accepting the set of outputs of ``t`` on ``word``."""
    return automata.trim(range_nfa(restrict_domain(t, automata.singleton(t.alphabet, word))))


def outputs_of(t, word):
    """Finite output set of ``t`` on ``word`` as a radix-sorted list."""
    return automata.words_of_finite(apply(t, word))


# proper epsilon-input cycles ----------------------------------------------

def _words(edges, side):
    return "".join(e[side] for e in edges)


def proper_eps_input_cycle(t):
    """Pump family from a proper epsilon-input cycle of trim(t), or None.

    A proper epsilon-input cycle reads nothing and writes at least one symbol.
    """
    t = trim(t)
    states = sorted(t.states)
    comp = scc_ids(states, lambda p: [q for x, _, q in t.succ[p] if x == EPS])
    hit = None
    for p in states:
        for x, y, q in t.succ[p]:
            if x == EPS and y != EPS and comp[p] == comp[q]:
                hit = (p, y, q)
                break
        if hit:
            break
    if hit is None:
        return None
    p, y, q = hit
    c = comp[p]

    def succ_all(n):
        return ((e, e[2]) for e in t.succ[n])

    back = bfs_path([q], lambda n: ((e, e[2]) for e in t.succ[n]
                                    if e[0] == EPS and comp[e[2]] == c),
                    lambda n: n == p)
    head = bfs_path(sorted(t.initial), succ_all, lambda n: n == p)
    tail = bfs_path([p], succ_all, lambda n: n in t.final)
    return PumpFamily(
        u=_words(head, 0) + _words(tail, 0),
        y=_words(head, 1),
        z=y + _words(back, 1),
        y_prime=_words(tail, 1),
    )


def has_proper_eps_input_cycle(t):
    return proper_eps_input_cycle(t) is not None


def restricted_eps_pump(t, a):
    """``proper_eps_input_cycle(restrict_range(restrict_domain(t, a), a))``
    without building the intermediate machines.

    Product nodes are packed integers ``(p * na + i) * na + j`` where ``i``
    follows the input through ``a`` and ``j`` the output. One forward pass,
    one backward pass and an SCC pass over the epsilon-input edges, so the
    cost stays linear in the useful part of the product.
    """
    check_same_alphabet(t, a)
    tnames = sorted(t.states)
    anames = sorted(a.states)
    na = len(anames)
    aidx = {s: k for k, s in enumerate(anames)}
    tidx = {s: k for k, s in enumerate(tnames)}
    tsucc = [[(x, y, tidx[q]) for x, y, q in t.succ[p]] for p in tnames]
    asym = []
    aeps = []
    for s in anames:
        by = {}
        eps = []
        for x, q in a.succ[s]:
            if x == EPS:
                eps.append(aidx[q])
            else:
                by.setdefault(x, []).append(aidx[q])
        asym.append(by)
        aeps.append(eps)
    nn = na * na

    def expand(n):
        p, rest = divmod(n, nn)
        i, j = divmod(rest, na)
        out = []
        for x, y, q in tsucc[p]:
            ii = (i,) if x == EPS else asym[i].get(x, ())
            jj = (j,) if y == EPS else asym[j].get(y, ())
            base = q * nn
            for i2 in ii:
                for j2 in jj:
                    out.append((x, y, base + i2 * na + j2))
        base = p * nn
        for i2 in aeps[i]:
            out.append((EPS, EPS, base + i2 * na + j))
        for j2 in aeps[j]:
            out.append((EPS, EPS, base + i * na + j2))
        return out

    ainit = sorted(aidx[s] for s in a.initial)
    initial = sorted(tidx[p] * nn + i * na + j
                     for p in t.initial for i in ainit for j in ainit)
    tfin = {tidx[p] for p in t.final}
    afin = {aidx[s] for s in a.final}

    def is_final(n):
        p, rest = divmod(n, nn)
        i, j = divmod(rest, na)
        return p in tfin and i in afin and j in afin

    adj = {}
    stack = list(initial)
    for n in initial:
        adj[n] = None
    while stack:
        n = stack.pop()
        lst = adj[n] = expand(n)
        for _, _, m in lst:
            if m not in adj:
                adj[m] = None
                stack.append(m)
    rev = {}
    for n, lst in adj.items():
        for _, _, m in lst:
            rev.setdefault(m, []).append(n)
    useful = reachable([n for n in adj if is_final(n)], lambda m: rev.get(m, ()))
    nodes = sorted(useful)
    eps_adj = {n: [m for x, _, m in adj[n] if x == EPS and m in useful] for n in nodes}
    comp = scc_ids(nodes, eps_adj.__getitem__)
    hit = None
    for n in nodes:
        for x, y, m in adj[n]:
            if x == EPS and y != EPS and m in useful and comp[n] == comp[m]:
                hit = (n, y, m)
                break
        if hit:
            break
    if hit is None:
        return None
    n, y, m = hit
    c = comp[n]

    def succ_all(v):
        return (((x, yy), w) for x, yy, w in adj[v] if w in useful)

    back = bfs_path([m], lambda v: (((x, yy), w) for x, yy, w in adj[v]
                                    if x == EPS and w in useful and comp[w] == c),
                    lambda v: v == n)
    head = bfs_path([v for v in initial if v in useful], succ_all, lambda v: v == n)
    tail = bfs_path([n], succ_all, is_final)
    return PumpFamily(
        u=_words(head, 0) + _words(tail, 0),
        y=_words(head, 1),
        z=y + _words(back, 1),
        y_prime=_words(tail, 1),
    )


# delay labelling ----------------------------------------------------------

MISMATCH = object()


def _advance(delay, a, b):
    """Update a delay after appending ``a`` to the left and ``b`` to the right word.

    Delays are ``""`` (equal so far), ``"+d"`` (left ahead by d) or ``"-d"``
    (right ahead by d). Returns MISMATCH when the words can no longer agree.
    """
    if delay == "":
        left, right = a, b
    elif delay[0] == "+":
        left, right = delay[1:] + a, b
    else:
        left, right = a, delay[1:] + b
    if left.startswith(right):
        rest = left[len(right):]
        return "+" + rest if rest else ""
    if right.startswith(left):
        return "-" + right[len(left):]
    return MISMATCH


def _trim_graph(initial, final, edges):
    """Restrict an explicit graph ``{node: [(a, b, aux, node2)]}`` to useful nodes."""
    fwd = reachable(initial, lambda n: (e[3] for e in edges.get(n, ())))
    rev = {}
    for n, lst in edges.items():
        if n in fwd:
            for e in lst:
                rev.setdefault(e[3], []).append(n)
    bwd = reachable([f for f in final if f in fwd], lambda n: rev.get(n, ()))
    keep = fwd & bwd
    trimmed = {n: [e for e in edges.get(n, ()) if e[3] in keep] for n in keep}
    return [n for n in initial if n in keep], keep & set(final), trimmed


def _delay_violation(initial, final, edges):
    """Find an accepting path whose left and right projections differ.

    Every useful node of a graph realizing only equal pairs carries a unique
    delay; the first mismatch, conflicting delay or nonzero final delay
    yields a witness ``(left, right, aux)``. Returns None if none exists.
    """
    initial, final, edges = _trim_graph(initial, final, edges)
    if not initial:
        return None
    rev = {}
    for n, lst in edges.items():
        for e in lst:
            rev.setdefault(e[3], []).append((e, n))
    # shortest completion from every node to a final node
    to_final = {f: None for f in sorted(final)}
    queue = deque(sorted(final))
    while queue:
        m = queue.popleft()
        for e, n in rev.get(m, ()):
            if n not in to_final:
                to_final[n] = e
                queue.append(n)

    def completion(n):
        path = []
        while to_final[n] is not None:
            e = to_final[n]
            path.append(e)
            n = e[3]
        return path

    parent = {}
    delay = {}

    def prefix(n):
        path = []
        while parent[n] is not None:
            e, n = parent[n]
            path.append(e)
        path.reverse()
        return path

    def labels(path):
        return tuple("".join(e[i] for e in path) for i in range(3))

    def witness(*paths):
        for path in paths:
            left, right, aux = labels(path)
            if left != right:
                return left, right, aux
        raise AssertionError("delay conflict without a distinguishing path")

    queue = deque()
    for n in initial:
        parent[n] = None
        delay[n] = ""
        queue.append(n)
    while queue:
        n = queue.popleft()
        d = delay[n]
        if n in final and d != "":
            return witness(prefix(n))
        for e in edges[n]:
            m = e[3]
            nd = _advance(d, e[0], e[1])
            if nd is MISMATCH:
                return witness(prefix(n) + [e] + completion(m))
            if m not in delay:
                delay[m] = nd
                parent[m] = (e, n)
                queue.append(m)
            elif delay[m] != nd:
                tail = completion(m)
                return witness(prefix(m) + tail, prefix(n) + [e] + tail)
    return None


def identity_violation(t):
    """A pair ``(u, v)`` with u != v realized by ``t``, or None if R(t) is in the identity."""
    t = trim(t)
    edges = {p: [(x, y, x, q) for x, y, q in t.succ[p]] for p in t.states}
    found = _delay_violation(sorted(t.initial), t.final, edges)
    if found is None:
        return None
    left, right, _ = found
    return left, right


def realizes_only_identity(t):
    return identity_violation(t) is None


def _functionality_violation(t):
    """Input with two distinct outputs via the self-product of trim(t)."""
    t = trim(t)
    init = [(p, q) for p in sorted(t.initial) for q in sorted(t.initial)]
    edges = {}
    stack = list(init)
    while stack:
        node = stack.pop()
        if node in edges:
            continue
        p, q = node
        lst = []
        for x, y, p2 in t.succ[p]:
            if x == EPS:
                lst.append((y, EPS, EPS, (p2, q)))
        for x, y, q2 in t.succ[q]:
            if x == EPS:
                lst.append((EPS, y, EPS, (p, q2)))
        for x, y1, p2 in t.succ[p]:
            if x == EPS:
                continue
            for x2, y2, q2 in t.succ[q]:
                if x2 == x:
                    lst.append((y1, y2, x, (p2, q2)))
        edges[node] = lst
        stack.extend(e[3] for e in lst if e[3] not in edges)
    final = {n for n in edges if n[0] in t.final and n[1] in t.final}
    found = _delay_violation(init, final, edges)
    if found is None:
        return None
    left, right, u = found
    return u, left, right


# k-valuedness -------------------------------------------------------------

SET_SEARCH_BUDGET = 200_000


def default_buffer_cap(n_states):
    value = os.environ.get(BUFFER_CAP_ENV)
    return int(value) if value else n_states * n_states + 1


def _flip(status):
    if not status:
        return status
    return ("-" if status[0] == "+" else "+") + status[1:]


class _TupleSearch:
    """Breadth-first search of the same-input product of ``n`` copies of a trim
    transducer without proper epsilon-input cycles, looking for an input with
    ``n`` pairwise distinct outputs."""

    def __init__(self, t, n, cap, max_configs):
        self.t = t
        self.n = n
        self.cap = cap
        self.max_configs = max_configs
        self.names = sorted(t.states)
        self.index = {s: i for i, s in enumerate(self.names)}
        self.pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.pair_index = {pr: k for k, pr in enumerate(self.pairs)}
        closure = [self._closure(s) for s in self.names]
        self.steps = []
        self.finish = []
        for s, cl in zip(self.names, closure):
            by_sym = {}
            fin = set()
            for p, w in cl:
                if p in t.final:
                    fin.add(w)
                for x, y, q in t.succ[p]:
                    if x != EPS:
                        by_sym.setdefault(x, set()).add((self.index[q], w + y))
            self.steps.append({x: sorted(v) for x, v in by_sym.items()})
            self.finish.append(sorted(fin))
        self.capped = False

    def _closure(self, s):
        seen = {(s, "")}
        stack = [(s, "")]
        while stack:
            p, w = stack.pop()
            for x, y, q in self.t.succ[p]:
                if x == EPS and (q, w + y) not in seen:
                    seen.add((q, w + y))
                    stack.append((q, w + y))
        return seen

    def _update(self, statuses, outs):
        new = []
        for (i, j), st in zip(self.pairs, statuses):
            if st is None:
                new.append(None)
                continue
            nd = _advance(st, outs[i], outs[j])
            if nd is MISMATCH:
                new.append(None)
            elif len(nd) - 1 > self.cap:
                self.capped = True
                return None
            else:
                new.append(nd)
        return tuple(new)

    def _canon(self, states, statuses):
        perm = sorted(range(self.n), key=lambda i: states[i])
        if perm == list(range(self.n)):
            return states, statuses
        new_states = tuple(states[i] for i in perm)
        new_statuses = []
        for a, b in self.pairs:
            i, j = perm[a], perm[b]
            if i < j:
                new_statuses.append(statuses[self.pair_index[(i, j)]])
            else:
                new_statuses.append(_flip(statuses[self.pair_index[(j, i)]]))
        return new_states, tuple(new_statuses)

    def _finishes(self, config):
        states, statuses = config
        for outs in product(*(self.finish[s] for s in states)):
            new = self._update(statuses, outs)
            if new is not None and all(st != "" for st in new):
                return True
        return False

    def run(self):
        """Return ``(witness_input or None, exhausted)``.

        Several configurations can share an input, so the search goes level by
        level and keeps, per configuration, the least input reaching it; the
        witness is then radix-least among everything the search can see.
        """
        init_states = sorted(self.index[s] for s in self.t.initial)
        start = ("",) * len(self.pairs)
        level = {}
        for combo in product(init_states, repeat=self.n):
            level[self._canon(tuple(combo), start)] = ()
        seen = set(level)
        syms = list(enumerate(self.t.alphabet))
        while level:
            done = [w for c, w in level.items() if self._finishes(c)]
            if done:
                return "".join(self.t.alphabet[i] for i in min(done)), True
            nxt = {}
            for config, word in level.items():
                states, statuses = config
                for i, sym in syms:
                    options = [self.steps[s].get(sym) for s in states]
                    if not all(options):
                        continue
                    w = word + (i,)
                    for choice in product(*options):
                        nstat = self._update(statuses, [c[1] for c in choice])
                        if nstat is None:
                            continue
                        c = self._canon(tuple(c[0] for c in choice), nstat)
                        if c in seen:
                            continue
                        old = nxt.get(c)
                        if old is None:
                            if self.max_configs is not None and len(seen) + len(nxt) >= self.max_configs:
                                return None, False
                            nxt[c] = w
                        elif w < old:
                            nxt[c] = w
            seen.update(nxt)
            level = nxt
        return None, True


class _SetSearch(_TupleSearch):
    """Input-deterministic search over sets of runs.

    A configuration is a multiset of groups; each group holds ``(state,
    residual output)`` runs with their longest common output prefix removed.
    Runs in different groups have already produced incomparable outputs, so
    their final outputs can never coincide. Exact as long as residuals stay
    within ``cap``; otherwise ``capped`` is set and the caller falls back.
    """

    def __init__(self, t, n, cap, max_configs):
        super().__init__(t, 1, cap, max_configs)
        self.n = n

    def _split(self, runs):
        p = os.path.commonprefix([w for _, w in runs])
        if p:
            runs = {(q, w[len(p):]) for q, w in runs}
        if any(len(w) > self.cap for _, w in runs):
            # over-long residuals are dropped: counts become lower bounds
            self.capped = True
            runs = {(q, w) for q, w in runs if len(w) <= self.cap}
            if not runs:
                return []
        if any(not w for _, w in runs):
            return [frozenset(runs)]
        by_head = {}
        for q, w in runs:
            by_head.setdefault(w[0], set()).add((q, w))
        out = []
        for part in by_head.values():
            out.extend(self._split(part))
        return out

    def _canon_groups(self, groups):
        # identical groups behave identically; more than n copies never matter
        counts = {}
        for g in groups:
            counts[g] = min(counts.get(g, 0) + 1, self.n)
        key = lambda g: sorted(g)
        return tuple(g for g in sorted(counts, key=key) for _ in range(counts[g]))

    def _count(self, groups):
        total = 0
        for g in groups:
            total += len({w + f for q, w in g for f in self.finish[q]})
        return total

    def run(self):
        """Return ``(witness_input or None, exhausted)``; check ``capped``."""
        init = frozenset((self.index[s], "") for s in self.t.initial)
        start = self._canon_groups(self._split(init))
        parent = {start: None}
        queue = deque([start])
        while queue:
            config = queue.popleft()
            if self._count(config) >= self.n:
                word = []
                while parent[config] is not None:
                    config, sym = parent[config]
                    word.append(sym)
                return "".join(reversed(word)), True
            for sym in self.t.alphabet:
                groups = []
                for g in config:
                    runs = {(q, w + y) for p, w in g for q, y in self.steps[p].get(sym, ())}
                    if runs:
                        groups.extend(self._split(runs))
                if not groups:
                    continue
                c = self._canon_groups(groups)
                if c not in parent:
                    if self.max_configs is not None and len(parent) >= self.max_configs:
                        return None, False
                    parent[c] = (config, sym)
                    queue.append(c)
        return None, True


def is_k_valued(t, k, cfg=None):
    """Decide whether every input has at most ``k`` outputs.

    A "not k-valued" answer always carries a replayed witness. A "k-valued"
    answer has confidence "bounded" when the pending-buffer cap or the
    configuration budget pruned part of the search.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cfg = cfg or SearchConfig()
    t = trim(t)
    pump = proper_eps_input_cycle(t)
    if pump is not None:
        return ValuednessVerdict(False, k, input=pump.u, pump=pump,
                                 outputs=tuple(pump.output(i) for i in range(k + 1)))
    if not t.initial:
        return ValuednessVerdict(True, k)
    if k == 1:
        found = _functionality_violation(t)
        if found is None:
            return ValuednessVerdict(True, k)
    cap = cfg.buffer_cap if cfg.buffer_cap is not None else default_buffer_cap(len(t.states))
    search = _SetSearch(t, k + 1, cap, cfg.max_configs or SET_SEARCH_BUDGET)
    u, exhausted = search.run()
    if k == 1:
        # the delay test already decided; the set search only picks the witness
        return _replayed(t, k, u if u is not None else found[0])
    if u is None and (search.capped or not exhausted):
        search = _TupleSearch(t, k + 1, cap, cfg.max_configs)
        u, exhausted = search.run()
    if u is not None:
        return _replayed(t, k, u)
    confidence = "full" if exhausted and not search.capped else "bounded"
    return ValuednessVerdict(True, k, confidence=confidence)


def _replayed(t, k, u):
    outs = outputs_of(t, u)
    if len(outs) <= k:
        raise AssertionError(f"valuedness witness {u!r} does not replay")
    return ValuednessVerdict(False, k, input=u, outputs=tuple(outs[: k + 1]))


def require_k_valued(t, k, cfg=None):
    """Like is_k_valued but raise CapExceeded instead of a bounded answer."""
    verdict = is_k_valued(t, k, cfg)
    if verdict.confidence != "full":
        raise CapExceeded(f"{k}-valuedness search was pruned")
    return verdict


# built-in property transducers --------------------------------------------

def _copy(p, q, alphabet):
    return [(p, s, s, q) for s in alphabet]


def _delete(p, q, alphabet):
    return [(p, s, EPS, q) for s in alphabet]


def _px_del(al):
    return _copy("0", "0", al) + _delete("0", "1", al) + _delete("1", "1", al), ["0"], ["1"]


def _sx_del(al):
    return _delete("0", "0", al) + _delete("0", "1", al) + _copy("1", "1", al), ["0"], ["1"]


def _ix_del(al):
    # prefix deletions, copy, suffix deletions; at least one deletion overall
    trans = (_delete("0", "0", al) + _delete("0", "1", al) + _copy("1", "1", al)
             + _delete("1", "3", al) + _copy("0", "2", al) + _copy("2", "2", al)
             + _delete("2", "3", al) + _delete("3", "3", al))
    return trans, ["0"], ["1", "3"]


def _ox_del(al):
    trans = (_copy("0", "0", al) + _delete("0", "1", al) + _delete("1", "1", al)
             + _copy("1", "2", al) + _copy("2", "2", al))
    return trans, ["0"], ["1", "2"]


def _hc_del(al):
    trans = _copy("0", "0", al) + _delete("0", "1", al) + _delete("1", "1", al) + _copy("1", "1", al)
    return trans, ["0"], ["1"]


def _sub1(al):
    subst = [("0", a, b, "1") for a in al for b in al if a != b]
    return _copy("0", "0", al) + subst + _copy("1", "1", al), ["0"], ["1"]


_DELETING = {"px": _px_del, "sx": _sx_del, "ix": _ix_del, "ox": _ox_del, "hc": _hc_del}
BUILTINS = tuple([f"{k}_del" for k in _DELETING] + ["sub1"] + [f"{k}_ext" for k in _DELETING])


def builtin(name, alphabet):
    """Built-in transducer by name (see ``BUILTINS``).

    ``*_del`` maps a word to its proper prefixes, suffixes, infixes, outfixes
    or scattered subwords; ``*_ext`` is the inverse relation; ``sub1``
    substitutes exactly one symbol.
    """
    alphabet = make_alphabet(alphabet)
    if name == "sub1":
        trans, init, fin = _sub1(alphabet)
        return Transducer(alphabet, trans, initial=init, final=fin)
    base, _, direction = name.partition("_")
    if base not in _DELETING or direction not in ("del", "ext"):
        raise ValueError(f"unknown builtin {name!r}; expected one of {', '.join(BUILTINS)}")
    trans, init, fin = _DELETING[base](alphabet)
    t = Transducer(alphabet, trans, initial=init, final=fin)
    return t if direction == "del" else inverse(t)
