import pytest
from hypothesis import given, settings, strategies as st

from marginal_codes import automata as au
from marginal_codes import properties as props
from marginal_codes import transducer as tr
from marginal_codes.errors import NotFinite, NotSatisfying, PromiseViolated
from marginal_codes.properties import FIN, FiniteViolation, InfiniteViolation, Margin, PropertySpec
from marginal_codes.transducer import builtin

from helpers import brute_margin_counts, random_nfa, reference_related, seeded, words_upto


def check(words, name, margin, alphabet="ab"):
    a = au.from_words(alphabet, words)
    return props.satisfies(a, PropertySpec(builtin(name, alphabet), margin))


def test_zero_double_zero():
    a = au.from_words("01", ["0", "00"])
    px = builtin("px_ext", "01")
    assert props.satisfies(a, PropertySpec(px, Margin(1))).satisfied
    v = props.satisfies(a, PropertySpec(px, Margin(0)))
    assert not v.satisfied
    assert v.witness == FiniteViolation("0", ("00",))
    assert props.replays(a, px, Margin(0), v.witness)


def test_singletons_always_satisfy():
    for w in ["", "a", "abba"]:
        for name in ("px_ext", "sx_ext", "hc_ext", "sub1", "ix_ext"):
            for m in (Margin(0), Margin(2), FIN):
                assert check([w], name, m).satisfied


def test_suffix_margin_example():
    v = check(["a", "ba", "ca"], "sx_ext", Margin(1), "abc")
    assert not v.satisfied
    assert v.witness.u == "a" and set(v.witness.violators) == {"ba", "ca"}
    assert check(["a", "ba", "ca"], "sx_ext", Margin(2), "abc").satisfied


def test_astar_finitely_violated():
    a = au.Nfa("ab", [("q", "a", "q")], ["q"], ["q"])
    px = builtin("px_ext", "ab")
    v = props.satisfies(a, PropertySpec(px, FIN))
    assert not v.satisfied and isinstance(v.witness, InfiniteViolation)
    assert v.witness.u == "" and v.witness.pump.z == "a"
    assert props.replays(a, px, FIN, v.witness)
    # every exact margin fails too, through the same pump
    assert not props.satisfies(a, PropertySpec(px, Margin(3))).satisfied
    o = props.oracle_satisfies(a, PropertySpec(px, FIN), 1)
    assert not o.satisfied and o.witness.u == ""


def test_oracle_on_zero_double_zero():
    a = au.from_words("01", ["0", "00"])
    o = props.oracle_satisfies(a, PropertySpec(builtin("px_ext", "01"), Margin(0)), 2)
    assert not o.satisfied and o.witness.u == "0"
    o = props.oracle_satisfies(a, PropertySpec(builtin("px_ext", "01"), Margin(1)), 2)
    assert o.satisfied and o.confidence == "bounded"


def test_finite_languages_satisfy_fin():
    rng = seeded(30)
    for _ in range(40):
        words = {"".join(rng.choice("ab") for _ in range(rng.randint(0, 5))) for _ in range(8)}
        for name in ("px_ext", "sx_ext", "ix_ext", "hc_ext", "sub1"):
            assert check(sorted(words), name, FIN).satisfied


@settings(max_examples=40, deadline=None)
@given(st.sets(st.text(alphabet="ab", max_size=4), max_size=8),
       st.sampled_from(["px_ext", "sx_ext", "ix_ext", "hc_ext", "ox_ext", "sub1"]),
       st.integers(0, 2))
def test_finite_sets_match_explicit_counts(words, name, k):
    counts = brute_margin_counts(words, lambda u, v: reference_related(name, u, v, "ab"))
    v = check(sorted(words), name, Margin(k))
    assert v.satisfied == all(c <= k for c in counts.values())
    if not v.satisfied:
        assert props.replays(au.from_words("ab", words), builtin(name, "ab"), Margin(k), v.witness)


def test_identity_augment_does_not_change_answers():
    rng = seeded(31)
    for _ in range(25):
        a = random_nfa(rng, max_states=4)
        for name in ("px_ext", "sub1"):
            t = builtin(name, "ab")
            for k in (0, 1):
                plain = props.satisfies(a, PropertySpec(t, Margin(k))).satisfied
                aug = props.satisfies(a, PropertySpec(tr.identity_augment(t), Margin(k))).satisfied
                assert plain == aug


def test_routes_agree_for_input_altering():
    rng = seeded(32)
    for _ in range(40):
        a = random_nfa(rng)
        for name in ("px_ext", "sx_ext", "ix_ext", "hc_ext", "sub1"):
            t = builtin(name, "ab")
            fast = props.satisfies_classic_emptiness(a, t)
            slow = props.satisfies(a, PropertySpec(t, Margin(0)))
            assert fast.satisfied == slow.satisfied
            if not fast.satisfied:
                assert props.replays(a, t, Margin(0), fast.witness)


def test_input_altering_promise():
    with pytest.raises(PromiseViolated):
        PropertySpec(tr.identity_augment(builtin("px_ext", "ab")), Margin(0), input_altering=True)
    PropertySpec(builtin("px_ext", "ab"), Margin(0), input_altering=True)


def test_margin_parse():
    assert Margin.parse("fin") == FIN
    assert Margin.parse("k=3") == Margin(3)
    assert str(Margin(2)) == "k=2"
    with pytest.raises(ValueError):
        Margin(-1)
    with pytest.raises(ValueError):
        Margin.parse("three")


def test_maximality():
    pxd = builtin("px_del", "ab")
    assert props.is_maximal_classic(au.sigma_power("ab", 2), pxd)
    aa = au.from_words("ab", ["aa"])
    assert not props.is_maximal_classic(aa, pxd)
    assert props.maximality_gap(aa, pxd) == "b"
    cover = set()
    for u in words_upto("ab", 5):
        if u == "aa" or reference_related("px_del", "aa", u, "ab") or reference_related("px_del", u, "aa", "ab"):
            cover.add(u)
    assert "bb" not in cover
    with pytest.raises(NotSatisfying):
        props.maximality_gap(au.from_words("ab", ["a", "ab"]), pxd)


def test_extend_examples():
    px = builtin("px_ext", "ab")
    assert props.extend_fin(au.empty("ab"), px) == ""
    assert props.extend_fin(au.from_words("ab", ["a"]), px) == "aa"
    assert props.extend_fin(au.from_words("ab", ["a", "ab"]), px) == "aba"
    with pytest.raises(NotFinite):
        props.extend_fin(au.universal("ab"), px)


def test_extend_checks_the_order():
    with pytest.raises(PromiseViolated):
        props.extend_fin(au.from_words("ab", ["a"]), builtin("sub1", "ab"))


def test_strict_order_check():
    for name in ("px_ext", "sx_ext", "ix_ext", "hc_ext"):
        props.check_strict_order(builtin(name, "ab"))
    # outfixes do not compose: a < baa < baab but a is no outfix of baab
    with pytest.raises(PromiseViolated, match="transitive"):
        props.check_strict_order(builtin("ox_ext", "ab"))
    with pytest.raises(PromiseViolated):
        props.check_strict_order(tr.identity_augment(builtin("px_ext", "ab")))


def test_j_independence_examples():
    spec = PropertySpec(builtin("px_ext", "01"), Margin(1))
    assert props.check_j_independence(["0", "00", "000"], spec)
    spec = PropertySpec(builtin("sx_ext", "abc"), Margin(2))
    assert props.check_j_independence(["a", "ba", "ca"], spec)
    with pytest.raises(ValueError):
        props.check_j_independence(["a"], PropertySpec(builtin("sx_ext", "ab"), FIN))


def test_oracle_agrees_on_small_sample():
    rng = seeded(33)
    for _ in range(15):
        a = random_nfa(rng)
        for name in ("px_ext", "sub1"):
            t = builtin(name, "ab")
            for m in (Margin(0), Margin(1), FIN):
                v = props.satisfies(a, PropertySpec(t, m))
                o = props.oracle_satisfies(a, PropertySpec(t, m), 6)
                if v.satisfied:
                    assert o.satisfied
                else:
                    assert props.replays(a, t, m, v.witness)
                    if len(v.witness.u) <= 6:
                        assert not o.satisfied


def test_direct_pump_matches_built_product():
    rng = seeded(34)
    for _ in range(80):
        a = random_nfa(rng, eps=0.15)
        for name in tr.BUILTINS:
            t = builtin(name, "ab")
            old = tr.proper_eps_input_cycle(props.restrict_both(t, a))
            new = tr.restricted_eps_pump(t, a)
            assert (old is None) == (new is None)
            if new is not None:
                assert props.replays(a, t, FIN, InfiniteViolation(new))
