import random
from dataclasses import replace
from fractions import Fraction

import pytest

from affinecounter import afca
from affinecounter.afca import AcceptMode, AfcaSpec, AfcaTransition
from affinecounter.errors import DefinitionError, InputError
from affinecounter.generate import random_afca, random_word
from affinecounter.zoo import build_end, build_manytwins

from reference import dense_afca_run

T = AfcaTransition


def _counter_up():
    """Counts 'a's; accepts on any state, so blind mode decides by the counter."""
    return AfcaSpec(
        states=("q",),
        alphabet=("a", "b"),
        counters=1,
        transitions=(T("q", "a", "*", "q", 1, 1), T("q", "b", "*", "q", -1, 1)),
        initial="q",
        accepting={"q"},
        accept_mode=AcceptMode.BLIND,
    )


def test_flag_aliases():
    assert T("q", "a", ("NZ",), "q", (0,), 1).status == ("N",)
    assert T("q", "a", "Z", "q", 0, 1).status == ("Z",)


@pytest.mark.parametrize("moves", [(2,), (0, 0)])
def test_bad_moves_rejected(moves):
    with pytest.raises(DefinitionError):
        T("q", "a", ("*",), "q", moves, 1)


def test_bad_flag_rejected():
    with pytest.raises(DefinitionError):
        T("q", "a", ("X",), "q", (0,), 1)


def test_status_patterns():
    assert afca.status_patterns(2) == [("Z", "Z"), ("Z", "N"), ("N", "Z"), ("N", "N")]
    assert afca.status_of((0, -3)) == ("Z", "N")


def test_blind_counter_acceptance():
    spec = _counter_up()
    assert afca.accept_prob(spec, "ab") == 1
    assert afca.accept_prob(spec, "aab") == 0
    assert afca.accept_prob(replace(spec, accept_mode=AcceptMode.STATE_ONLY), "aab") == 1


def test_missing_triples_self_loop():
    spec = replace(_counter_up(), transitions=(T("q", "a", "*", "q", 1, 1),))
    assert ("q", "b", ("Z",)) in afca.completed_triples(spec)
    assert afca.run(spec, "ab") == {("q", (1,)): 1}


def test_zero_coefficients_pruned():
    spec = AfcaSpec(
        states=("p", "q"),
        alphabet=("a",),
        counters=1,
        transitions=(
            T("p", "a", "*", "q", 0, 2),
            T("p", "a", "*", "p", 0, -1),
            T("q", "a", "*", "q", 0, 1),
        ),
        initial="p",
        accepting={"q"},
    )
    v = afca.run(spec, "aa")
    assert all(v.values())
    assert sum(v.values()) == 1


def test_end_small_words():
    spec = build_end()
    assert afca.run(spec, "21") == {("s2.p3", (0,)): 1}
    assert afca.accept_prob(spec, "21") == 1
    for w in ("12", "11", ""):
        assert afca.accept_prob(spec, w) == 0


def test_manytwins_small_words():
    spec = build_manytwins(1)
    assert afca.accept_prob(spec, "131") == 1
    assert afca.accept_prob(spec, "132") == Fraction(1, 3)
    assert afca.run(spec, "132") == {("sa", (0,)): 1, ("se", (0,)): -1, ("se'", (0,)): 1}
    assert afca.accept_prob(spec, "3") == 1
    assert afca.accept_prob(spec, "33") == 0


def test_validate_sum_error():
    spec = _counter_up()
    bad = replace(spec, transitions=(T("q", "a", "*", "q", 1, 2),))
    report = afca.validate(bad)
    assert "state q on 'a' with status Z: outgoing values sum to 2" in report.errors
    with pytest.raises(DefinitionError):
        afca.step(bad, afca.initial_config(bad), "a")


def test_validate_duplicate_after_wildcard_expansion():
    spec = replace(
        _counter_up(),
        transitions=(T("q", "a", "*", "q", 1, 1), T("q", "a", "Z", "q", 1, 1)),
    )
    assert any("duplicate transition" in e for e in afca.validate(spec).errors)


def test_blind_mode_rejects_status_dependence():
    spec = replace(
        _counter_up(),
        transitions=(T("q", "a", "Z", "q", 1, 1), T("q", "a", "N", "q", -1, 1)),
    )
    assert not afca.is_blind(spec)
    errors = afca.validate(spec).errors
    assert errors == ["status-dependent transition from q on 'a' in blind mode"]
    assert afca.validate(replace(spec, accept_mode=AcceptMode.STATE_ONLY)).ok


def test_explicit_identical_rows_count_as_blind():
    spec = replace(
        _counter_up(),
        transitions=(T("q", "a", "Z", "q", 1, 1), T("q", "a", "N", "q", 1, 1)),
    )
    assert afca.is_blind(spec)


def test_zoo_blindness():
    assert afca.is_blind(build_manytwins(3))
    assert not afca.is_blind(build_end())


def test_unknown_symbol():
    with pytest.raises(InputError):
        afca.run(build_end(), "13")
    with pytest.raises(InputError):
        afca.step(build_end(), {("s1.p0", (0,)): Fraction(1)}, "7")


def test_counter_bounds_on_random_machines():
    rng = random.Random(3)
    for _ in range(40):
        spec = random_afca(rng, n=2)
        word = random_word(rng, spec.alphabet, rng.randint(0, 5))
        assert afca.counter_bound_check(spec, iter(word))


def test_against_dense_reference():
    rng = random.Random(5)
    for _ in range(60):
        spec = random_afca(rng, n=rng.randint(1, 3), counters=rng.randint(1, 2))
        word = random_word(rng, spec.alphabet, rng.randint(0, 3))
        framed = ["^", *word, "$"]
        assert afca.run(spec, word) == dense_afca_run(spec, framed)


def test_trace_length_and_sums():
    spec = build_manytwins(2)
    states = list(afca.trace(spec, "1031"))
    assert len(states) == 7
    assert all(sum(v.values()) == 1 for v in states)


def test_state_only_dominates_blind_and_support_is_bounded():
    rng = random.Random(17)
    for _ in range(60):
        spec = random_afca(rng, n=rng.randint(1, 3), counters=1, blind=True)
        blind = replace(spec, accept_mode=AcceptMode.BLIND)
        state_only = replace(spec, accept_mode=AcceptMode.STATE_ONLY)
        word = random_word(rng, spec.alphabet, rng.randint(0, 8))
        assert afca.accept_prob(state_only, word) >= afca.accept_prob(blind, word)
        for j, v in enumerate(afca.trace(spec, word)):
            assert len(v) <= (2 * j + 1) * len(spec.states)
