"""Acceptance criteria: one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see the PASS lines.
"""

import random
import time
from fractions import Fraction

from morphlab import (
    AlgebraicRadius,
    GrowthType,
    MorphicPresentation,
    apply,
    check_radius_preserved,
    decompose,
    fixed_point_prefix,
    image_prefix,
    incidence_matrix,
    is_dilated,
    letter_growth,
    morphism_from_chars,
    normalize,
    prefix_equal,
    shares_rational_spectrum,
    Word,
)
from morphlab.fixtures import baum_sweet_erasing, demo_matrix, thue_morse_projection
from morphlab.intmat import mat_pow

from util import random_dilation, random_endomorphism, random_matrix, random_presentations

SQRT3 = AlgebraicRadius.from_block(((3,),), 2)
TWO = AlgebraicRadius.from_rational(2)

# expected growth of (M^{6n+r})_{i,j} for the demo matrix: per-step rate and degree
DEMO_TABLE = {
    (1, 2): {0: (SQRT3, 0), 1: None, 2: (SQRT3, 0), 3: None, 4: (SQRT3, 0), 5: None},
    (1, 3): {0: None, 1: (SQRT3, 0), 2: None, 3: (SQRT3, 0), 4: None, 5: (SQRT3, 0)},
    (1, 5): {0: None, 1: (SQRT3, 1), 2: None, 3: (SQRT3, 1), 4: None, 5: (SQRT3, 1)},
    (1, 7): {0: None, 1: None, 2: (TWO, 0), 3: None, 4: None, 5: (TWO, 0)},
    (1, 8): {0: (TWO, 0), 1: None, 2: None, 3: (TWO, 0), 4: None, 5: None},
    (1, 9): {0: (TWO, 0), 1: None, 2: (SQRT3, 1), 3: (TWO, 0), 4: (SQRT3, 1), 5: None},
    (4, 9): {0: (SQRT3, 0), 1: None, 2: (SQRT3, 0), 3: None, 4: (SQRT3, 0), 5: None},
}


def criterion(number, limit):
    """Print one pass/fail line per criterion and enforce its time limit."""

    def decorate(fn):
        def wrapper():
            start = time.perf_counter()
            try:
                fn()
            except BaseException:
                print(f"criterion {number}: FAIL ({time.perf_counter() - start:.2f}s)")
                raise
            elapsed = time.perf_counter() - start
            if elapsed >= limit:
                print(f"criterion {number}: FAIL (took {elapsed:.2f}s, limit {limit}s)")
                raise AssertionError(f"criterion {number} exceeded {limit}s")
            print(f"criterion {number}: PASS ({elapsed:.2f}s)")

        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        return wrapper

    return decorate


@criterion(1, limit=1.0)
def test_criterion_1_baum_sweet_normalization():
    sp, tp, a = baum_sweet_erasing()
    report = normalize(MorphicPresentation(sp, tp, a))
    assert report.sigma.is_non_erasing
    assert report.tau.is_coding
    original = image_prefix(tp, sp, a, 10**4)
    rebuilt = image_prefix(report.tau, report.sigma, report.start, 10**4)
    assert prefix_equal(original, rebuilt, 10**4)
    assert rebuilt.text()[:16] == "1101100101001001"


@criterion(2, limit=1.0)
def test_criterion_2_thue_morse_trichotomy():
    f, g, a = thue_morse_projection()
    assert letter_growth(f, a) == GrowthType(AlgebraicRadius.from_rational(3), 0)
    report = normalize(MorphicPresentation(f, g, a))
    assert report.trichotomy_case == 2
    assert letter_growth(report.sigma, report.start) == GrowthType(TWO, 0)
    rebuilt = image_prefix(report.tau, report.sigma, report.start, 10**4)
    thue_morse = fixed_point_prefix(morphism_from_chars({"a": "ab", "b": "ba"}), "a", 10**4)
    assert rebuilt.letters() == thue_morse.letters()


@criterion(3, limit=5.0)
def test_criterion_3_demo_matrix_table():
    matrix = demo_matrix()
    dec = decompose(matrix)
    assert dec.p == 6
    blocks = [dec.block_matrices[b] for b in range(len(dec.blocks))]
    assert blocks.count(((27,),)) == 4
    assert blocks.count(((64,),)) == 3
    assert blocks.count(((0,),)) == 2
    powers = {e: mat_pow(matrix.rows, e) for e in range(0, 63)}
    for (i, j), row in DEMO_TABLE.items():
        for r, expected in row.items():
            growth = dec.entry_growth(i - 1, j - 1, r)
            if expected is None:
                assert growth.is_vanishing, (i, j, r)
                for e in range(r, 63, 6):
                    if e >= 10:
                        assert powers[e][i - 1][j - 1] == 0, (i, j, r, e)
            else:
                rate, degree = expected
                # exact algebraic certification: rate^2 = 3 or rate = 2
                assert growth.rate.compare(rate) == 0, (i, j, r)
                assert growth.degree == degree, (i, j, r)


def _pipeline_dilation_facts(pres):
    report = normalize(pres)
    mono_f = report.stages[-2].f
    base = incidence_matrix(mono_f).rows
    dil = incidence_matrix(report.sigma).rows
    kvec = report.dilatation_vector
    assert is_dilated(dil, base, kvec)
    assert check_radius_preserved(dil, base, kvec, Fraction(1, 10**9))
    assert shares_rational_spectrum(base, dil)


@criterion(4, limit=10.0)
def test_criterion_4_dilatation_invariants():
    sp, tp, a = baum_sweet_erasing()
    _pipeline_dilation_facts(MorphicPresentation(sp, tp, a))
    f, g, a2 = thue_morse_projection()
    _pipeline_dilation_facts(MorphicPresentation(f, g, a2))
    rng = random.Random(20260810)
    for _ in range(200):
        m = rng.randint(1, 5)
        base = random_matrix(rng, m, max_entry=3)
        kvec = tuple(rng.randint(1, 3) for _ in range(m))
        dil = random_dilation(rng, base, kvec)
        assert is_dilated(dil, base, kvec)
        assert check_radius_preserved(dil, base, kvec, Fraction(1, 10**9))
        assert shares_rational_spectrum(base, dil)


@criterion(5, limit=60.0)
def test_criterion_5_growth_oracle_suite():
    rng = random.Random(31415)
    for _ in range(200):
        size = rng.randint(1, 6)
        f = random_endomorphism(rng, size, max_len=4, erase_chance=0.2)
        rows = incidence_matrix(f).rows
        powers = [mat_pow(rows, n) for n in range(61)]
        lengths = {
            b: [sum(powers[n][i][f.domain.index(b)] for i in range(size)) for n in range(61)]
            for b in f.domain
        }
        for b in f.domain:
            growth = letter_growth(f, b)
            values = lengths[b]
            if growth.is_vanishing:
                assert all(values[n] == 0 for n in range(size + 1, 61))
                continue
            lam = growth.rate_float()
            d = growth.degree
            ratios = [values[n] / ((n**d) * lam**n) for n in range(20, 61)]
            fit = ratios[:21]  # n = 20..40
            lo, hi = min(fit), max(fit)
            assert lo > 0
            for value in ratios[21:]:  # n = 41..60
                assert lo * 0.8 <= value <= hi * 1.25
    # unary chains: |f^n(a1)| = Theta(n^(m-1)) exactly
    for m in range(2, 7):
        letters = "abcdef"[:m]
        rules = {
            letters[i]: letters[i] + letters[i + 1] if i + 1 < m else letters[i]
            for i in range(m)
        }
        chain = morphism_from_chars(rules)
        growth = letter_growth(chain, "a")
        assert growth == GrowthType(AlgebraicRadius.from_rational(1), m - 1)


@criterion(6, limit=60.0)
def test_criterion_6_pipeline_invariant_suite():
    rng = random.Random(271828)
    presentations = random_presentations(rng, 100)
    for pres in presentations:
        report = normalize(pres)
        reference = image_prefix(pres.g, pres.f, pres.start, 2000)
        for stage in report.stages:
            stage_start = report.start if stage.name == "paired" else pres.start
            stage_word = image_prefix(stage.g, stage.f, stage_start, 2000, max_pump=4 * 10**6)
            assert prefix_equal(reference, stage_word, 2000), stage.name
        assert report.sigma.is_non_erasing
        assert report.tau.is_coding
        mono_f, mono_g = report.stages[-2].f, report.stages[-2].g
        for b in mono_f.domain:
            before = len(mono_g.image(b))
            after = sum(len(mono_g.image(x)) for x in mono_f.image(b))
            assert after >= before
            if b == pres.start:
                assert after > before
        pairing = report.pairing
        for b in mono_f.domain:
            lhs = apply(report.sigma, apply(pairing, Word.from_letters(mono_f.domain, (b,))))
            assert lhs == apply(pairing, mono_f.image(b))
        assert report.dilatation_vector == tuple(
            len(mono_g.image(b)) for b in mono_f.domain
        )
        assert is_dilated(
            incidence_matrix(report.sigma).rows,
            incidence_matrix(mono_f).rows,
            report.dilatation_vector,
        )
        assert letter_growth(report.sigma, report.start) == letter_growth(
            mono_f, pres.start
        )
