"""Lazy prefixes of fixed points and their morphic images."""

import random
import time

import pytest

from morphlab import (
    BudgetExceededError,
    FixedPointStream,
    ImageStream,
    InsufficientLengthError,
    NotProlongableError,
    Word,
    apply,
    first_mismatch,
    fixed_point_prefix,
    image_prefix,
    morphism_from_chars,
    prefix_equal,
)
from morphlab.fixtures import baum_sweet_erasing, baum_sweet_uniform

from util import random_presentations


def test_fixed_point_prefix_examples():
    sigma, _, _ = baum_sweet_uniform()
    assert fixed_point_prefix(sigma, "a", 8).text() == "abcbbdcb"
    sp, _, _ = baum_sweet_erasing()
    assert fixed_point_prefix(sp, "a", 7).text() == "abecefb"
    assert fixed_point_prefix(sigma, "a", 1).text() == "a"
    assert fixed_point_prefix(sigma, "a", 0).text() == ""


def test_fixed_point_requires_prolongability():
    bad = morphism_from_chars({"a": "ba", "b": "b"})
    with pytest.raises(NotProlongableError):
        fixed_point_prefix(bad, "a", 5)


def test_image_prefix_examples():
    sp, tp, _ = baum_sweet_erasing()
    assert image_prefix(tp, sp, "a", 16).text() == "1101100101001001"
    sigma, tau, _ = baum_sweet_uniform()
    assert image_prefix(tau, sigma, "a", 16).text() == "1101100101001001"


def test_image_prefix_budget_exceeded_on_all_erasing():
    sigma, _, _ = baum_sweet_uniform()
    dead = morphism_from_chars({"a": "", "b": "", "c": "", "d": ""})
    with pytest.raises(BudgetExceededError):
        image_prefix(dead, sigma, "a", 1, max_pump=1000)


def test_prefix_equal_and_mismatch():
    sigma, tau, _ = baum_sweet_uniform()
    w1 = image_prefix(tau, sigma, "a", 16)
    w2 = Word.from_letters(w1.alphabet, "1100")
    assert prefix_equal(w1, w1, 16)
    assert first_mismatch(w1, w2, 4) == 3
    with pytest.raises(InsufficientLengthError):
        prefix_equal(w1, w2, 10)


def test_prefix_consistency_and_idempotence():
    sp, _, _ = baum_sweet_erasing()
    stream = FixedPointStream(sp, "a")
    previous = stream.prefix(0)
    for n in range(1, 120):
        current = stream.prefix(n)
        assert current.letters()[: n - 1] == previous.letters()
        previous = current
    # applying the morphism to a prefix reproduces the prefix
    n = 80
    w = fixed_point_prefix(sp, "a", n)
    expanded = apply(sp, w)
    assert expanded.letters()[:n] == w.letters()


def test_image_stream_cross_check_against_apply():
    sp, tp, _ = baum_sweet_erasing()
    stream = ImageStream(tp, sp, "a")
    out = stream.prefix(200)
    consumed = stream.consumed
    source = fixed_point_prefix(sp, "a", consumed)
    direct = apply(tp, source)
    assert direct.letters()[:200] == out.letters()


def test_stage_streams_on_random_presentations():
    rng = random.Random(95)
    for pres in random_presentations(rng, 10):
        reference = image_prefix(pres.g, pres.f, pres.start, 300)
        # the fixed point of f^2 is the same word
        from morphlab import power

        squared = power(pres.f, 2)
        again = image_prefix(pres.g, squared, pres.start, 300)
        assert prefix_equal(reference, again, 300)


def test_throughput_million_symbols():
    sigma, _, _ = baum_sweet_uniform()
    start = time.perf_counter()
    w = fixed_point_prefix(sigma, "a", 10**6)
    elapsed = time.perf_counter() - start
    assert len(w) == 10**6
    assert elapsed < 1.0, f"generation took {elapsed:.3f}s"
