"""Small graph helpers shared by the automata and transducer code."""

from collections import deque


def reachable(sources, succ):
    """Set of nodes reachable from ``sources`` where ``succ(n)`` yields successors."""
    seen = set(sources)
    stack = list(seen)
    while stack:
        n = stack.pop()
        for m in succ(n):
            if m not in seen:
                seen.add(m)
                stack.append(m)
    return seen


def scc_ids(nodes, succ):
    """Iterative Tarjan. Returns ``{node: component index}``."""
    index = {}
    low = {}
    comp = {}
    onstack = set()
    stack = []
    counter = 0
    ncomp = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in onstack and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def bfs_path(sources, succ, goal):
    """Shortest edge path from any source to a node satisfying ``goal``.

    ``succ(n)`` yields ``(edge, m)`` pairs. Returns the list of edges (empty
    when a source already satisfies ``goal``) or None. Sources and successors
    are visited in the order given, so the result is deterministic.
    """
    parent = {}
    queue = deque()
    for s in sources:
        if s not in parent:
            parent[s] = None
            queue.append(s)
    while queue:
        n = queue.popleft()
        if goal(n):
            edges = []
            while parent[n] is not None:
                edge, prev = parent[n]
                edges.append(edge)
                n = prev
            edges.reverse()
            return edges
        for edge, m in succ(n):
            if m not in parent:
                parent[m] = (edge, n)
                queue.append(m)
    return None
