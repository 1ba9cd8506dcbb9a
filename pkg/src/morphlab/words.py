"""Alphabets, finite words, and free-monoid morphisms.

Letters are arbitrary non-empty strings.  Words are stored as flat
tuples of small integer letter codes against an alphabet table, which
keeps Parikh vectors and incidence matrices index-based.  All values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from .errors import DomainMismatchError, NotASubMorphismError
from .intmat import IncidenceMatrix


class Alphabet:
    """An ordered list of distinct letters.

    The order is canonical: it fixes the row/column order of incidence
    matrices.  An empty alphabet is permitted only as the codomain of an
    everything-erasing morphism; morphism domains must be non-empty.
    """

    __slots__ = ("letters", "_index")

    def __init__(self, letters):
        letters = tuple(letters)
        index = {}
        for pos, letter in enumerate(letters):
            if not isinstance(letter, str) or not letter:
                raise DomainMismatchError("letters must be non-empty strings")
            if letter in index:
                raise DomainMismatchError(f"duplicate letter {letter!r}")
            index[letter] = pos
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Alphabet is immutable")

    def index(self, letter):
        try:
            return self._index[letter]
        except KeyError:
            raise DomainMismatchError(f"letter {letter!r} is not in the alphabet") from None

    def __contains__(self, letter):
        return letter in self._index

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Alphabet({list(self.letters)!r})"

    def restricted(self, keep):
        """Sub-alphabet of the given letters, in this alphabet's order."""
        keep = set(keep)
        missing = keep - set(self.letters)
        if missing:
            raise DomainMismatchError(f"letters {sorted(missing)!r} are not in the alphabet")
        return Alphabet(l for l in self.letters if l in keep)

    def without(self, removed):
        removed = set(removed)
        missing = removed - set(self.letters)
        if missing:
            raise DomainMismatchError(f"letters {sorted(missing)!r} are not in the alphabet")
        return Alphabet(l for l in self.letters if l not in removed)


class Word:
    """A finite word over an alphabet (possibly empty)."""

    __slots__ = ("alphabet", "codes")

    def __init__(self, alphabet, codes=()):
        codes = tuple(codes)
        n = len(alphabet)
        for c in codes:
            if not 0 <= c < n:
                raise DomainMismatchError("letter code out of range")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "codes", codes)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_letters(cls, alphabet, letters):
        return cls(alphabet, tuple(alphabet.index(l) for l in letters))

    def letters(self):
        table = self.alphabet.letters
        return tuple(table[c] for c in self.codes)

    def text(self):
        """Letters joined; single-character alphabets concatenate seamlessly."""
        parts = self.letters()
        if all(len(p) == 1 for p in parts):
            return "".join(parts)
        return " ".join(parts)

    def count(self, letter):
        return self.codes.count(self.alphabet.index(letter))

    def __len__(self):
        return len(self.codes)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.alphabet, self.codes[i])
        return self.alphabet.letters[self.codes[i]]

    def __iter__(self):
        table = self.alphabet.letters
        return (table[c] for c in self.codes)

    def __add__(self, other):
        if self.alphabet != other.alphabet:
            raise DomainMismatchError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.codes + other.codes)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet == other.alphabet:
            return self.codes == other.codes
        return self.letters() == other.letters()

    def __hash__(self):
        return hash(self.letters())

    def __repr__(self):
        return f"Word({self.text()!r})"


class ParikhVector:
    """Occurrence counts of each alphabet letter in a word."""

    __slots__ = ("alphabet", "counts")

    def __init__(self, alphabet, counts):
        counts = tuple(counts)
        if len(counts) != len(alphabet):
            raise DomainMismatchError("count vector does not match the alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "counts", counts)

    def __setattr__(self, name, value):
        raise AttributeError("ParikhVector is immutable")

    def count(self, letter):
        return self.counts[self.alphabet.index(letter)]

    def __eq__(self, other):
        if not isinstance(other, ParikhVector):
            return NotImplemented
        return self.alphabet == other.alphabet and self.counts == other.counts

    def __repr__(self):
        pairs = ", ".join(f"{l}: {c}" for l, c in zip(self.alphabet.letters, self.counts))
        return f"ParikhVector({{{pairs}}})"


class Morphism:
    """A free-monoid morphism, determined by the images of the letters."""

    __slots__ = ("domain", "codomain", "images")

    def __init__(self, domain, codomain, images):
        if len(domain) == 0:
            raise DomainMismatchError("morphism domain must be non-empty")
        images = tuple(images)
        if len(images) != len(domain):
            raise DomainMismatchError("every domain letter needs exactly one image")
        for w in images:
            if w.alphabet != codomain:
                raise DomainMismatchError("image word is not over the codomain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    @classmethod
    def from_rules(cls, rules, domain=None, codomain=None):
        """Build from {letter: iterable-of-letters}.

        The codomain defaults to the domain letters followed by any new
        letters appearing in images, in order of first appearance.
        """
        if domain is None:
            domain = Alphabet(rules.keys())
        if codomain is None:
            seen = list(domain.letters)
            seen_set = set(seen)
            for letter in domain:
                for x in rules[letter]:
                    if x not in seen_set:
                        seen.append(x)
                        seen_set.add(x)
            codomain = Alphabet(seen)
        images = tuple(Word.from_letters(codomain, rules[letter]) for letter in domain)
        return cls(domain, codomain, images)

    def image(self, letter):
        return self.images[self.domain.index(letter)]

    def image_by_code(self, code):
        return self.images[code]

    def rules(self):
        return {l: self.images[i].letters() for i, l in enumerate(self.domain.letters)}

    @property
    def is_endomorphism(self):
        return self.domain.letters == self.codomain.letters

    @property
    def is_non_erasing(self):
        return all(len(w) > 0 for w in self.images)

    @property
    def is_coding(self):
        return all(len(w) == 1 for w in self.images)

    def restrict_domain(self, keep):
        """Drop rules outside `keep`; the codomain is unchanged."""
        sub = self.domain.restricted(keep)
        images = tuple(self.image(l) for l in sub)
        return Morphism(sub, self.codomain, images)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.images))

    def __repr__(self):
        rules = ", ".join(
            f"{l}->{self.images[i].text()}" for i, l in enumerate(self.domain.letters)
        )
        return f"Morphism({rules})"


def morphism_from_chars(rules):
    """Shorthand for single-character rules given as strings: {'a': 'ab', ...}."""
    return Morphism.from_rules({k: tuple(v) for k, v in rules.items()})


def identity_morphism(alphabet):
    return Morphism(alphabet, alphabet, tuple(Word(alphabet, (i,)) for i in range(len(alphabet))))


def apply(f, w):
    """Image of the word w under f, letter by letter."""
    if w.alphabet == f.domain:
        codes = w.codes
    else:
        codes = tuple(f.domain.index(l) for l in w.letters())
    out = []
    for c in codes:
        out.extend(f.images[c].codes)
    return Word(f.codomain, out)


def compose(g, f):
    """The composition g o f (apply f first)."""
    if set(f.codomain.letters) != set(g.domain.letters):
        raise DomainMismatchError("codomain of the inner morphism must equal the outer domain")
    images = tuple(apply(g, w) for w in f.images)
    return Morphism(f.domain, g.codomain, images)


def power(f, n):
    """n-fold composition of an endomorphism; power(f, 0) is the identity."""
    if not f.is_endomorphism:
        raise DomainMismatchError("powers need an endomorphism")
    if n < 0:
        raise DomainMismatchError("negative morphism power")
    result = identity_morphism(f.domain)
    for _ in range(n):
        result = compose(f, result)
    return result


def erasure(domain, erased):
    """The morphism that deletes `erased` letters and keeps the rest."""
    erased = set(erased)
    missing = erased - set(domain.letters)
    if missing:
        raise DomainMismatchError(f"cannot erase letters outside the alphabet: {sorted(missing)!r}")
    codomain = domain.without(erased)
    images = []
    for letter in domain:
        if letter in erased:
            images.append(Word(codomain))
        else:
            images.append(Word.from_letters(codomain, (letter,)))
    return Morphism(domain, codomain, tuple(images))


def restrict(f, keep):
    """Sub-morphism on `keep`; requires every image of a kept letter to stay inside."""
    if not f.is_endomorphism:
        raise DomainMismatchError("sub-morphisms need an endomorphism")
    sub = f.domain.restricted(keep)
    keep_set = set(sub.letters)
    for letter in sub:
        for x in f.image(letter):
            if x not in keep_set:
                raise NotASubMorphismError(letter)
    images = tuple(Word.from_letters(sub, f.image(l).letters()) for l in sub)
    return Morphism(sub, sub, images)


def erase_and_restrict(f, removed):
    """(kappa_removed o f) restricted to the surviving letters."""
    kappa = erasure(f.domain, removed)
    keep = kappa.codomain
    images = tuple(apply(kappa, f.image(l)) for l in keep)
    return Morphism(keep, keep, images)


def parikh(w):
    counts = [0] * len(w.alphabet)
    for c in w.codes:
        counts[c] += 1
    return ParikhVector(w.alphabet, counts)


def incidence_matrix(f):
    """Matrix whose (a, b) entry counts occurrences of a in f(b)."""
    if not f.is_endomorphism:
        raise DomainMismatchError("incidence matrices need an endomorphism")
    n = len(f.domain)
    rows = [[0] * n for _ in range(n)]
    for b in range(n):
        for c in f.images[b].codes:
            rows[c][b] += 1
    return IncidenceMatrix(rows, f.domain.letters)


def mortal_letters(f):
    """Letters b with f^n(b) empty for some n; decided with exponent #A.

    Computed by shrinking the erased-set fixpoint: a letter is mortal after
    k+1 steps iff its image uses only letters mortal after k steps.
    """
    if not f.is_endomorphism:
        raise DomainMismatchError("mortality needs an endomorphism")
    n = len(f.domain)
    mortal = [len(w) == 0 for w in f.images]
    for _ in range(n):
        changed = False
        for b in range(n):
            if not mortal[b] and all(mortal[c] for c in f.images[b].codes):
                mortal[b] = True
                changed = True
        if not changed:
            break
    return tuple(l for b, l in enumerate(f.domain.letters) if mortal[b])


def is_prolongable(f, letter):
    """True iff f(letter) = letter u with u non-empty and |f^n(letter)| unbounded."""
    if not f.is_endomorphism:
        raise DomainMismatchError("prolongability needs an endomorphism")
    code = f.domain.index(letter)
    img = f.images[code]
    if len(img) < 2 or img.codes[0] != code:
        return False
    from . import spectral  # deferred: spectral imports this module

    growth = spectral.letter_growth(f, letter)
    return growth.is_unbounded
