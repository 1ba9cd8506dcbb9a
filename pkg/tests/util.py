"""Shared helpers for the test suite: seeded random objects and oracles."""

from math import gcd

from morphlab import Alphabet, MorphicPresentation, Morphism, incidence_matrix
from morphlab.errors import FiniteWordError, MorphlabError, NotProlongableError
from morphlab.intmat import mat_pow, vec_mat
from morphlab.normalize import eliminate_effacement, monotone_powers
from morphlab.spectral import cyclicity

LETTERS = "abcdefgh"


def random_endomorphism(rng, size, max_len=4, erase_chance=0.0):
    letters = LETTERS[:size]
    dom = Alphabet(letters)
    rules = {}
    for letter in letters:
        if erase_chance and rng.random() < erase_chance:
            rules[letter] = ()
        else:
            length = rng.randint(1, max_len)
            rules[letter] = tuple(rng.choice(letters) for _ in range(length))
    return Morphism.from_rules(rules, domain=dom, codomain=dom)


def random_matrix(rng, size, max_entry=3, zero_chance=0.55):
    return tuple(
        tuple(0 if rng.random() < zero_chance else rng.randint(1, max_entry) for _ in range(size))
        for _ in range(size)
    )


def random_dilation(rng, m_rows, kvec):
    """A random non-negative integer dilated version of m_rows."""
    offsets = [0]
    for k in kvec:
        offsets.append(offsets[-1] + k)
    n = offsets[-1]
    rows = [[0] * n for _ in range(n)]
    for i, ki in enumerate(kvec):
        for k in range(ki):
            for j, kj in enumerate(kvec):
                parts = [0] * kj
                for _ in range(m_rows[i][j]):
                    parts[rng.randrange(kj)] += 1
                for l in range(kj):
                    rows[offsets[i] + k][offsets[j] + l] = parts[l]
    return tuple(tuple(row) for row in rows)


def simple_cycle_lengths(adj, members):
    """All simple cycle lengths inside one component, by DFS enumeration."""
    members = set(members)
    lengths = set()

    def walk(start, current, visited, depth):
        for nxt in adj[current]:
            if nxt == start:
                lengths.add(depth + 1)
            elif nxt in members and nxt not in visited and nxt > start:
                walk(start, nxt, visited | {nxt}, depth + 1)

    for v in sorted(members):
        walk(v, v, {v}, 0)
    return sorted(lengths)


def gcd_of(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def ratio_band_ok(values, model, fit_range, check_range, slack=(0.8, 1.25)):
    """Fit min/max of values[n]/model(n) on fit_range, re-check on check_range.

    fit_range and check_range are inclusive (lo, hi) pairs.
    """
    ratios = {n: values[n] / model(n) for n in range(fit_range[0], check_range[1] + 1)}
    lo = min(ratios[n] for n in range(fit_range[0], fit_range[1] + 1))
    hi = max(ratios[n] for n in range(fit_range[0], fit_range[1] + 1))
    if lo <= 0:
        return False
    return all(
        lo * slack[0] <= ratios[n] <= hi * slack[1]
        for n in range(check_range[0], check_range[1] + 1)
    )


def random_presentations(rng, count, max_size=5, max_len=4, pipeline_cap=400):
    """Deterministically draw `count` valid presentations.

    Validity means the presentation passes its own invariants and the
    pipeline completes; candidates whose intermediate morphisms blow up
    past `pipeline_cap` total image symbols are skipped so the suite
    stays fast.
    """
    out = []
    while len(out) < count:
        size = rng.randint(2, max_size)
        letters = LETTERS[:size]
        dom = Alphabet(letters)
        rules = {}
        for letter in letters:
            if rng.random() < 0.25:
                rules[letter] = ()
            else:
                length = rng.randint(1, max_len)
                rules[letter] = tuple(rng.choice(letters) for _ in range(length))
        tail_len = rng.randint(1, max_len - 1)
        rules[letters[0]] = (letters[0],) + tuple(rng.choice(letters) for _ in range(tail_len))
        g_rules = {}
        for letter in letters:
            if rng.random() < 0.35:
                g_rules[letter] = ()
            else:
                g_rules[letter] = tuple(rng.choice("01") for _ in range(rng.randint(1, 2)))
        try:
            f = Morphism.from_rules(rules, domain=dom, codomain=dom)
            g = Morphism.from_rules(g_rules, domain=dom)
            if cyclicity(incidence_matrix(f)) > 3:
                continue
            pres = MorphicPresentation(f, g, letters[0])
            eff = eliminate_effacement(pres)
            if sum(len(eff.g_prime.image(b)) for b in eff.g_prime.domain) > pipeline_cap:
                continue
            # predict the paired-output size via matrices before materialising
            settle, stretch, lengths2 = monotone_powers(eff.f_prime, eff.g_prime)
            if sum(lengths2) > pipeline_cap:
                continue
            rows = incidence_matrix(eff.f_prime).rows
            sigma_total = sum(vec_mat(lengths2, mat_pow(rows, stretch)))
            if sigma_total > 4 * pipeline_cap:
                continue
        except (NotProlongableError, FiniteWordError):
            continue
        except MorphlabError:
            continue
        out.append(pres)
    return out
