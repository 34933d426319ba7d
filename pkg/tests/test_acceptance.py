"""Acceptance criteria. Each test appends one PASS/FAIL line to the summary
printed at the end of the pytest run (see conftest.py)."""

import functools
import gc
import json
import pathlib
import time

import numpy as np

from marginal_codes import automata as au
from marginal_codes import properties as props
from marginal_codes import transducer as tr
from marginal_codes.automata import Nfa
from marginal_codes.cli import main
from marginal_codes.properties import FIN, Margin, PropertySpec

from helpers import (ACCEPTANCE, proper_prefixes, proper_suffixes, random_fin_nfa,
                     random_finite_language, random_nfa, seeded, words_upto)

MACHINES = pathlib.Path(__file__).resolve().parent.parent / "machines"
SWEEP_BUILTINS = ("px_ext", "sx_ext", "ix_ext", "hc_ext", "sub1")
SWEEP_MARGINS = (Margin(0), Margin(1), Margin(2), FIN)


def criterion(n, title, budget=None):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            status, detail = "FAIL", ""
            try:
                detail = fn(*args, **kwargs) or ""
                elapsed = time.perf_counter() - start
                assert budget is None or elapsed <= budget, \
                    f"took {elapsed:.1f}s, budget {budget}s"
                status = "PASS"
            except Exception as exc:
                detail = (str(exc).splitlines() or [type(exc).__name__])[0]
                raise
            finally:
                elapsed = time.perf_counter() - start
                line = f"criterion {n}: {status}  {title}  [{elapsed:.2f}s] {detail}"
                ACCEPTANCE.append(line)
                print(line)
        return wrapper
    return deco


@criterion(1, "{0,00} has margin 1 but not 0 (CLI)", budget=1.0)
def test_criterion_1(monkeypatch, capsys):
    monkeypatch.chdir(MACHINES)
    assert main(["check", "--aut", "zero00.nfa", "--trans", "px_ext.fst", "--k", "1"]) == 0
    capsys.readouterr()
    assert main(["check", "--aut", "zero00.nfa", "--trans", "px_ext.fst", "--k", "0", "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["witness"] == {"kind": "finite", "u": "0", "violators": ["00"]}
    return "k=1 exit 0; k=0 exit 1, u=0, violator 00"


@criterion(2, "sx_del outputs are the proper suffixes, |w| <= 6", budget=1.0)
def test_criterion_2():
    sx = tr.builtin("sx_del", "ab")
    words = words_upto("ab", 6)
    for w in words:
        assert set(au.enumerate_words(tr.apply(sx, w), 6)) == proper_suffixes(w), w
    return f"{len(words)} words"


def chain(n):
    """n-state cycle-free NFA over {a, b}; every state final."""
    trans = [(f"q{i}", s, f"q{i + 1}") for i in range(n - 1) for s in "ab"]
    return Nfa("ab", trans, initial=["q0"], final=[f"q{i}" for i in range(n)])


def best_time(fn, reps=3):
    best = float("inf")
    for _ in range(reps):
        gc.collect()
        gc.disable()
        try:
            start = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - start)
        finally:
            gc.enable()
    return best


@criterion(3, "finitely-margin test: a* pump, finite languages, quadratic scaling", budget=600)
def test_criterion_3():
    px = tr.builtin("px_ext", "ab")
    astar = Nfa("ab", [("q", "a", "q")], ["q"], ["q"])
    v = props.satisfies_fin(astar, px)
    assert not v.satisfied and props.replays(astar, px, FIN, v.witness)
    rng = seeded(3)
    for _ in range(100):
        a = au.from_words("ab", random_finite_language(rng))
        for name in SWEEP_BUILTINS:
            assert props.satisfies_fin(a, tr.builtin(name, "ab")).satisfied
    sizes = [50, 100, 200, 400, 800]
    times = []
    for n in sizes:
        a = chain(n)
        assert props.satisfies_fin(a, px).satisfied
        times.append(best_time(lambda: props.satisfies_fin(a, px)))
    slope = float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
    assert slope <= 2.3, f"log-log slope {slope:.2f}"
    return f"slope {slope:.2f}; times " + ", ".join(f"{t:.3f}" for t in times)


def oracle_says(rows, margin):
    for u, count in rows:
        if count is None or (not margin.is_fin and count > margin.k):
            return u
    return None


@functools.lru_cache(maxsize=None)
def sweep():
    rng = seeded(7)
    out = []
    for _ in range(200):
        a = random_nfa(rng)
        for name in SWEEP_BUILTINS:
            t = tr.builtin(name, "ab")
            rows = list(props.oracle_counts(a, t, 8))
            verdicts = {m: props.satisfies(a, PropertySpec(t, m)) for m in SWEEP_MARGINS}
            out.append((a, name, rows, verdicts))
    return out


@criterion(4, "agreement with the brute-force oracle (200 x 5 x 4, |u| <= 8)", budget=600)
def test_criterion_4():
    contradictions = unreplayed = violated = 0
    for a, name, rows, verdicts in sweep():
        t = tr.builtin(name, "ab")
        for m, v in verdicts.items():
            bad_u = oracle_says(rows, m)
            if v.satisfied:
                contradictions += bad_u is not None
                continue
            violated += 1
            unreplayed += not props.replays(a, t, m, v.witness)
            if len(v.witness.u) <= 8:
                contradictions += bad_u is None
    assert contradictions == 0, f"{contradictions} contradictions"
    assert unreplayed == 0, f"{unreplayed} witnesses do not replay"
    return f"{len(sweep()) * 4} decisions, {violated} violations replayed"


@criterion(5, "margin monotonicity and subset closure")
def test_criterion_5():
    rng = seeded(5)
    bad = checked = 0
    for a, name, _, verdicts in sweep():
        sat = [verdicts[m].satisfied for m in SWEEP_MARGINS]
        # K0 => K1 => K2 => Fin
        bad += any(x and not y for x, y in zip(sat, sat[1:]))
        t = tr.builtin(name, "ab")
        subs = (au.intersect(a, random_nfa(rng)), au.intersect(a, au.complement(au.from_words("ab", words_upto("ab", 1)))))
        for sub in subs:
            for m in SWEEP_MARGINS:
                if verdicts[m].satisfied:
                    checked += 1
                    bad += not props.satisfies(sub, PropertySpec(t, m)).satisfied
    assert bad == 0, f"{bad} counterexamples"
    return f"{checked} sublanguage checks"


@criterion(6, "extend_fin: 100 finite languages x 10 extensions", budget=60)
def test_criterion_6():
    rng = seeded(6)
    ts = {name: tr.builtin(name, "ab") for name in ("px_ext", "hc_ext")}
    for t in ts.values():
        props.check_strict_order(t)
    steps = 0
    for i in range(100):
        t = ts["px_ext" if i % 2 == 0 else "hc_ext"]
        words = set(random_finite_language(rng, max_words=15, max_len=5))
        a = au.from_words("ab", words)
        assert props.satisfies_fin(a, t).satisfied
        for _ in range(10):
            z = props.extend_fin(a, t, check_order=False)
            assert z not in words
            words.add(z)
            a = au.from_words("ab", words)
            assert props.satisfies_fin(a, t).satisfied
            steps += 1
    return f"{steps} extensions"


def brute_covered(words, upto):
    cover = set()
    for w in words_upto("ab", upto):
        if w in words or any(w in proper_prefixes(u) or u in proper_prefixes(w) for u in words):
            cover.add(w)
    return len(cover) == len(words_upto("ab", upto))


@criterion(7, "maximality of sigma^2 and {aa} vs brute force over sigma^<=5", budget=1.0)
def test_criterion_7():
    pxd = tr.builtin("px_del", "ab")
    sigma2 = au.sigma_power("ab", 2)
    assert props.is_maximal_classic(sigma2, pxd) is True
    assert brute_covered(set(words_upto("ab", 2)) - set(words_upto("ab", 1)), 5) is True
    aa = au.from_words("ab", ["aa"])
    assert props.is_maximal_classic(aa, pxd) is False
    assert brute_covered({"aa"}, 5) is False
    return f"gap for {{aa}}: {props.maximality_gap(aa, pxd)!r}"


@criterion(8, "regular Fin languages reach a margin k <= 32", budget=120)
def test_criterion_8():
    rng = seeded(8)
    px = tr.builtin("px_ext", "ab")
    found = []
    while len(found) < 50:
        a = random_fin_nfa(rng)
        if not props.satisfies_fin(a, px).satisfied:
            continue
        for k in range(33):
            v = props.satisfies(a, PropertySpec(px, Margin(k)))
            if v.satisfied:
                assert v.confidence == "full"
                break
        else:
            raise AssertionError("no margin up to 32")
        found.append(k)
    return f"max k {max(found)}, histogram " + str(dict(sorted(
        (k, found.count(k)) for k in set(found))))


@criterion(9, "emptiness and valuedness routes agree")
def test_criterion_9():
    disagree = n = 0
    for a, name, _, verdicts in sweep():
        fast = props.satisfies_classic_emptiness(a, tr.builtin(name, "ab"))
        disagree += fast.satisfied != verdicts[Margin(0)].satisfied
        n += 1
    assert disagree == 0, f"{disagree} disagreements"
    return f"{n} instances"


@criterion(10, "check_j_independence on 100 finite sets, k in {0,1,2}", budget=60)
def test_criterion_10():
    rng = seeded(10)
    ts = [tr.builtin(name, "ab") for name in SWEEP_BUILTINS]
    calls = 0
    for _ in range(100):
        words = random_finite_language(rng, max_words=12, max_len=5)
        for t in ts:
            for k in (0, 1, 2):
                assert props.check_j_independence(words, PropertySpec(t, Margin(k)))
                calls += 1
    return f"{calls} checks"
