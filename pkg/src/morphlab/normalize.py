"""Rewriting an erasing morphic-word presentation into a non-erasing one.

Given f prolongable on a and g with g(f^w(a)) infinite, the pipeline
produces a non-erasing morphism sigma prolongable on a fresh letter and
a coding tau with tau(sigma^w(start)) equal to the original word:

1. eliminate_effacement: replace f by f^p (p the cyclicity of its
   incidence matrix), then repeatedly strip the largest sub-alphabet
   that the accumulated image morphism erases, and finally compose with
   a power f^N that makes the image morphism non-erasing.
2. make_monotone: pass to powers so that |g(f(b))| >= |g(b)| for every
   letter, strictly at the start letter.
3. build_sigma_tau: split each g(b) into single letters over the paired
   alphabet {(b, i)} and cut alpha(f(b)) into matching non-empty pieces;
   the resulting sigma has an incidence matrix that is a dilated version
   of Mat_f and keeps the growth type.

Every stage is recorded in a NormalizationReport.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import dilation, spectral
from .errors import DomainMismatchError, FiniteWordError, MorphlabError, NotProlongableError
from .intmat import charpoly, mat_pow, vec_mat
from .spectral import AlgebraicRadius, GrowthType
from .words import (
    Alphabet,
    Morphism,
    Word,
    apply,
    compose,
    erase_and_restrict,
    incidence_matrix,
    is_prolongable,
    mortal_letters,
    power,
)


@dataclass(frozen=True)
class MorphicPresentation:
    """A word presented as g(f^w(start)); f must be prolongable on start."""

    f: Morphism
    g: Morphism
    start: str

    def __post_init__(self):
        if not self.f.is_endomorphism:
            raise DomainMismatchError("the generator must be an endomorphism")
        if set(self.g.domain.letters) != set(self.f.domain.letters):
            raise DomainMismatchError("the image morphism must be defined on the generator's alphabet")
        if self.start not in self.f.domain:
            raise DomainMismatchError(f"start letter {self.start!r} is not in the alphabet")
        if not is_prolongable(self.f, self.start):
            raise NotProlongableError(f"generator is not prolongable on {self.start!r}")


@dataclass(frozen=True)
class PipelineStage:
    name: str
    f: Morphism
    g: Morphism
    removed: tuple = ()


def remove_mortal(f, start):
    """Strip mortal letters: returns (f_I, k) with f^w(start) = f^k(f_I^w(start)).

    f_I erases the mortal letters from every image and restricts to the
    immortal sub-alphabet; k counts the mortal letters (after k steps
    every mortal letter has died).
    """
    mortals = mortal_letters(f)
    if start in mortals:
        raise NotProlongableError(f"start letter {start!r} is mortal")
    return erase_and_restrict(f, mortals), len(mortals)


def largest_erasable(f, g):
    """The largest C inside g^-1(empty) with f(C) stable, as a letter tuple.

    Greatest fixpoint: start from all letters erased by g and repeatedly
    drop letters whose f-image uses a letter outside the current set.
    """
    if set(f.domain.letters) != set(g.domain.letters):
        raise DomainMismatchError("morphisms must share an alphabet")
    current = {b for b in f.domain if len(g.image(b)) == 0}
    while True:
        stable = {b for b in current if all(x in current for x in f.image(b))}
        if stable == current:
            break
        current = stable
    return tuple(b for b in f.domain if b in current)


@dataclass(frozen=True)
class EffacementResult:
    f_prime: Morphism
    g_prime: Morphism
    g_before_visibility: Morphism
    kept: Alphabet
    p: int
    k_seq: tuple
    visibility_power: int
    removed: tuple
    stages: tuple


def _image_length_vector(g, alphabet):
    return tuple(len(g.image(b)) for b in alphabet)


def _visibility_power(f, g):
    """Least N with g(f^N(b)) non-empty for every b, or None within the bound.

    Searched through length vectors |g(f^N(b))| = sum_c |g(c)| (Mat_f^N)_{c,b},
    so no words are materialised.  The bound (#B)^2 - #B + 2 comes from the
    primitivity index of the diagonal blocks.
    """
    m = len(f.domain)
    bound = m * m - m + 2
    matrix = incidence_matrix(f).rows
    lengths = _image_length_vector(g, f.domain)
    for n in range(bound + 1):
        if all(x > 0 for x in lengths):
            return n
        lengths = vec_mat(lengths, matrix)
    return None


def eliminate_effacement(pres):
    """Make both morphisms non-erasing without changing the generated word.

    Returns f' = (kappa o f^p) restricted to the surviving letters, the
    composed non-erasing g', the kept sub-alphabet, the cyclicity power p,
    the per-round mortal counts, and the final visibility power N.
    """
    f0, g, a = pres.f, pres.g, pres.start
    p = spectral.cyclicity(incidence_matrix(f0))
    f = power(f0, p)
    stages = [PipelineStage("cyclicity-power", f, g)]
    k_seq = []
    removed_all = []
    while True:
        mortals = mortal_letters(f)
        k = len(mortals)
        gk = compose(g, power(f, k)) if k else g
        erasable = largest_erasable(f, gk)
        if not erasable:
            break
        if a in erasable:
            raise FiniteWordError(
                f"the word is finite: start letter {a!r} is erased by the pipeline"
            )
        f = erase_and_restrict(f, erasable)
        g = gk.restrict_domain(f.domain.letters)
        k_seq.append(k)
        removed_all.extend(erasable)
        stages.append(PipelineStage(f"strip-round-{len(k_seq)}", f, g, tuple(erasable)))
    img = f.image(a)
    if len(img) < 2 or img.letters()[0] != a:
        raise FiniteWordError(
            f"the word is finite: after erasure the generator no longer grows from {a!r}"
        )
    n_vis = _visibility_power(f, g)
    if n_vis is None:
        raise FiniteWordError("the word is finite: some letter is erased by every iterate")
    g_loop = g
    if n_vis:
        g = compose(g, power(f, n_vis))
    stages.append(PipelineStage("visibility-power", f, g))
    assert f.is_non_erasing and g.is_non_erasing
    assert not mortal_letters(f) and not largest_erasable(f, g_loop)
    return EffacementResult(
        f_prime=f,
        g_prime=g,
        g_before_visibility=g_loop,
        kept=f.domain,
        p=p,
        k_seq=tuple(k_seq),
        visibility_power=n_vis,
        removed=tuple(removed_all),
        stages=tuple(stages),
    )


def growth_trichotomy(f, start, f_prime, kept, p):
    """Classify how the growth type survives the erasure step.

    With (lambda, d) the growth type of f at `start` and S the spectrum of
    the discarded sub-morphism of f^p, exactly one of:

    1. lambda^p is not in S; f' keeps growth (lambda^p, d).
    2. lambda^p is in S and the new rate drops strictly below lambda^p.
    3. lambda^p is in S and the rate is kept, with degree d' <= d.

    Returns (case, growth type of f' at start).  Disagreement with the
    classification contract raises MorphlabError (it would be a bug).
    """
    input_growth = spectral.letter_growth(f, start)
    if input_growth.is_vanishing:
        raise NotProlongableError(f"{start!r} has vanishing growth")
    if input_growth.rate.step != p:
        raise MorphlabError("cyclicity power does not match the growth analysis")
    target = AlgebraicRadius.from_block(input_growth.rate.block, 1)  # lambda^p exactly
    discarded = [b for b in f.domain if b not in set(kept.letters)]
    if discarded:
        full_power = mat_pow(incidence_matrix(f).rows, p)
        idx = [f.domain.index(b) for b in discarded]
        sub = tuple(tuple(full_power[i][j] for j in idx) for i in idx)
        in_discarded = target.is_root_of(charpoly(sub))
    else:
        in_discarded = False
    new_growth = spectral.letter_growth(f_prime, start)
    cmp_rate = new_growth.rate.compare(target)
    if cmp_rate > 0:
        raise MorphlabError("growth increased after erasure; this is a bug")
    if not in_discarded:
        if cmp_rate != 0 or new_growth.degree != input_growth.degree:
            raise MorphlabError("case 1 must preserve the growth type exactly")
        return 1, new_growth
    if cmp_rate < 0:
        return 2, new_growth
    if new_growth.degree > input_growth.degree:
        raise MorphlabError("case 3 cannot raise the polynomial degree")
    return 3, new_growth


@dataclass(frozen=True)
class MonotoneResult:
    f: Morphism
    g: Morphism
    settle_power: int
    stretch_power: int


def _is_bounded_letter(growth):
    return growth.is_vanishing or (growth.degree == 0 and growth.rate.compare(1) == 0)


def _settle_power(f, letter, limit):
    """Least n with f^n(letter) = f^{n+1}(letter), for a non-growing letter."""
    w = Word.from_letters(f.domain, (letter,))
    for n in range(limit + 1):
        nxt = apply(f, w)
        if nxt == w:
            return n
        w = nxt
    raise MorphlabError(f"non-growing letter {letter!r} failed to settle")


def monotone_powers(f, g):
    """(settle, stretch, new image lengths) for the monotonicity step.

    Everything is derived from the incidence matrix: the composed image
    lengths are |g(f^settle(b))| = sum_c |g(c)| (Mat_f^settle)_{c,b}, so
    nothing large is materialised here.
    """
    if not (f.is_non_erasing and g.is_non_erasing):
        raise DomainMismatchError("monotonicity step needs non-erasing morphisms")
    matrix = incidence_matrix(f)
    if spectral.cyclicity(matrix) != 1:
        raise DomainMismatchError("the generator must have cyclicity 1 here")
    m = len(f.domain)
    dec = spectral.decompose(matrix)
    growing = {
        b: not _is_bounded_letter(dec.column_growth(matrix.index_of(b))) for b in f.domain
    }
    settle = 0
    for b in f.domain:
        if not growing[b]:
            settle = max(settle, _settle_power(f, b, m - 1))
    lengths = tuple(len(g.image(b)) for b in f.domain)
    lengths2 = lengths
    for _ in range(settle):
        lengths2 = vec_mat(lengths2, matrix.rows)
    powers = [mat_pow(matrix.rows, n) for n in range(m + 1)]
    stretch = 0
    for bi, b in enumerate(f.domain):
        if not growing[b]:
            continue
        best = None
        for ci, c in enumerate(f.domain):
            if len(f.image(c)) < 2:
                continue
            loop = next((l for l in range(1, m + 1) if powers[l][ci][ci] > 0), None)
            if loop is None:
                continue
            hit = next((k for k in range(m + 1) if powers[k][ci][bi] > 0), None)
            if hit is None:
                continue
            cost = hit + loop * (lengths2[bi] - 1)
            if best is None or cost < best:
                best = cost
        if best is None:
            raise MorphlabError(f"growing letter {b!r} has no pumpable witness")
        stretch = max(stretch, best)
    return settle, max(stretch, 1), lengths2


def make_monotone(f, g, start):
    """Power up so that |g'(f'(b))| >= |g'(b)| for all b, strictly at start.

    Requires non-erasing f and g with Mat_f already in block triangular
    form with primitive or zero diagonal (cyclicity 1), which is what
    eliminate_effacement produces.  Non-growing letters settle to a fixed
    word after at most #B - 1 steps; composing g with that power makes
    them harmless, and a power f^q stretches every growing letter enough
    to cover its image length.
    """
    img = f.image(start)
    if len(img) < 2 or img.letters()[0] != start:
        raise NotProlongableError(f"generator is not prolongable on {start!r}")
    settle, stretch, lengths2 = monotone_powers(f, g)
    matrix = incidence_matrix(f)
    _assert_monotone(matrix.rows, lengths2, stretch, f.domain.index(start))
    g2 = compose(g, power(f, settle)) if settle else g
    f2 = power(f, stretch)
    assert tuple(len(g2.image(b)) for b in f.domain) == lengths2
    return MonotoneResult(f2, g2, settle, stretch)


def _assert_monotone(rows, lengths, stretch, start_index):
    after = vec_mat(lengths, mat_pow(rows, stretch))
    for i, (x, y) in enumerate(zip(after, lengths)):
        if x < y:
            raise MorphlabError("monotonicity violated; this is a bug")
        if i == start_index and x <= y:
            raise MorphlabError("monotonicity must be strict at the start letter")


@dataclass(frozen=True)
class SigmaTauResult:
    sigma: Morphism
    tau: Morphism
    pairing: Morphism
    start: str
    dilatation_vector: tuple


def _pair_names(alphabet, counts):
    names = {}
    used = set()
    for b, k in zip(alphabet, counts):
        for i in range(k):
            name = f"{b}.{i}"
            while name in used:
                name += "'"
            used.add(name)
            names[(b, i)] = name
    return names


def build_sigma_tau(f, g, start):
    """Split g over the paired alphabet {(b, i) : i < |g(b)|}.

    alpha sends b to (b,0)...(b,|g(b)|-1) and tau reads off the letters of
    g(b).  Each alpha(f(b)) is cut into |g(b)| non-empty pieces, one per
    pair letter; feasibility is exactly the monotonicity condition.  The
    cut is canonical: every piece takes one symbol and the last piece the
    remainder, except that (start, 0) takes two symbols so that sigma is
    prolongable on it.
    """
    if not (f.is_non_erasing and g.is_non_erasing):
        raise DomainMismatchError("pair construction needs non-erasing morphisms")
    counts = _image_length_vector(g, f.domain)
    for b, c in zip(f.domain, counts):
        before = c
        after = sum(len(g.image(x)) for x in f.image(b))
        if after < before or (b == start and after <= before):
            raise DomainMismatchError("monotonicity condition violated; run make_monotone first")
    names = _pair_names(f.domain, counts)
    pair_alphabet = Alphabet(names[(b, i)] for b, k in zip(f.domain, counts) for i in range(k))
    pairing = Morphism(
        f.domain,
        pair_alphabet,
        tuple(
            Word.from_letters(pair_alphabet, tuple(names[(b, i)] for i in range(k)))
            for b, k in zip(f.domain, counts)
        ),
    )
    tau = Morphism(
        pair_alphabet,
        g.codomain,
        tuple(
            Word(g.codomain, (g.image(b).codes[i],))
            for b, k in zip(f.domain, counts)
            for i in range(k)
        ),
    )
    sigma_images = {}
    for b, k in zip(f.domain, counts):
        expanded = apply(pairing, f.image(b))
        cuts = [1] * k
        if b == start:
            cuts[0] = 2
        cuts[-1] = len(expanded) - sum(cuts[:-1])
        assert all(c >= 1 for c in cuts)
        pos = 0
        for i in range(k):
            sigma_images[names[(b, i)]] = expanded[pos : pos + cuts[i]]
            pos += cuts[i]
        assert pos == len(expanded)
    sigma = Morphism(
        pair_alphabet,
        pair_alphabet,
        tuple(sigma_images[letter] for letter in pair_alphabet),
    )
    for b in f.domain:  # commutation pairing o f = sigma o pairing, letter by letter
        assert apply(sigma, apply(pairing, Word.from_letters(f.domain, (b,)))) == apply(
            pairing, f.image(b)
        )
    kvec = tuple(counts)
    assert dilation.is_dilated(incidence_matrix(sigma).rows, incidence_matrix(f).rows, kvec)
    new_start = names[(start, 0)]
    first = sigma.image(new_start)
    assert len(first) >= 2 and first.letters()[0] == new_start
    return SigmaTauResult(sigma, tau, pairing, new_start, kvec)


@dataclass(frozen=True)
class NormalizationReport:
    """Full trace of the pipeline and its invariants."""

    presentation: MorphicPresentation
    sigma: Morphism
    tau: Morphism
    start: str
    pairing: Morphism
    cyclicity_power: int
    mortal_counts: tuple
    visibility_power: int
    settle_power: int
    stretch_power: int
    removed_letters: tuple
    dilatation_vector: tuple
    input_growth: GrowthType
    output_growth: GrowthType
    trichotomy_case: int
    stages: tuple = field(default=())

    def as_dict(self, include_stages=False):
        def rules(m):
            return {l: list(m.image(l).letters()) for l in m.domain}

        out = {
            "start": self.start,
            "sigma": rules(self.sigma),
            "tau": rules(self.tau),
            "p": self.cyclicity_power,
            "k_seq": list(self.mortal_counts),
            "N": self.visibility_power,
            "settle_power": self.settle_power,
            "q": self.stretch_power,
            "removed_letters": list(self.removed_letters),
            "dilatation_vector": list(self.dilatation_vector),
            "trichotomy_case": self.trichotomy_case,
            "input_growth": {
                "lambda_per_step": self.input_growth.rate.describe(),
                "d": self.input_growth.degree,
            },
            "output_growth": {
                "lambda_per_step": self.output_growth.rate.describe(),
                "d": self.output_growth.degree,
            },
        }
        if include_stages:
            out["stages"] = [
                {
                    "name": s.name,
                    "f": rules(s.f),
                    "g": rules(s.g),
                    "removed": list(s.removed),
                }
                for s in self.stages
            ]
        return out


def normalize(pres):
    """Run the full pipeline on a presentation and report every stage."""
    if not isinstance(pres, MorphicPresentation):
        raise DomainMismatchError("normalize expects a MorphicPresentation")
    input_growth = spectral.letter_growth(pres.f, pres.start)
    eff = eliminate_effacement(pres)
    case, _ = growth_trichotomy(pres.f, pres.start, eff.f_prime, eff.kept, eff.p)
    mono = make_monotone(eff.f_prime, eff.g_prime, pres.start)
    built = build_sigma_tau(mono.f, mono.g, pres.start)
    output_growth = spectral.letter_growth(built.sigma, built.start)
    monotone_growth = spectral.letter_growth(mono.f, pres.start)
    if output_growth != monotone_growth:
        raise MorphlabError("pair construction changed the growth type; this is a bug")
    stages = eff.stages + (
        PipelineStage("monotone", mono.f, mono.g),
        PipelineStage("paired", built.sigma, built.tau),
    )
    return NormalizationReport(
        presentation=pres,
        sigma=built.sigma,
        tau=built.tau,
        start=built.start,
        pairing=built.pairing,
        cyclicity_power=eff.p,
        mortal_counts=eff.k_seq,
        visibility_power=eff.visibility_power,
        settle_power=mono.settle_power,
        stretch_power=mono.stretch_power,
        removed_letters=eff.removed,
        dilatation_vector=built.dilatation_vector,
        input_growth=input_growth,
        output_growth=output_growth,
        trichotomy_case=case,
        stages=stages,
    )
