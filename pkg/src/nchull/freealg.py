"""Words and noncommutative polynomials, plain and matrix-graded.

A plain alphabet generates the free associative algebra on its letters.
A matrix-graded alphabet over k^r attaches a (source, target) vertex pair
to every letter; words must be composable and the empty word splits into
one idempotent per vertex. The admissible ordering is degree-lex with the
alphabet's declared letter order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .errors import AlphabetMismatchError, DimensionMismatchError, InconsistentSystemError
from .field import Field, Scalar


@dataclass(frozen=True)
class Letter:
    name: str
    vertex_pair: Optional[tuple[int, int]] = None


class Alphabet:
    """Ordered letter set; append-only growth supports countable alphabets.

    ``r`` is the number of vertices for matrix-graded alphabets and None
    for plain ones. ``extend_rule`` maps a letter index to a new Letter so
    countably generated alphabets materialize on demand; indices already
    handed out never change.
    """

    def __init__(self, letters: Sequence[Letter], r: Optional[int] = None,
                 extend_rule=None):
        self._letters: list[Letter] = []
        self._index: dict[str, int] = {}
        self.r = r
        self.extend_rule = extend_rule
        for letter in letters:
            self._append(letter)

    def _append(self, letter: Letter):
        if letter.name in self._index:
            raise ValueError(f"duplicate letter name {letter.name!r}")
        if self.r is None:
            if letter.vertex_pair is not None:
                raise ValueError("vertex pair on a letter of a plain alphabet")
        else:
            if letter.vertex_pair is None:
                raise ValueError("matrix-graded alphabet requires vertex pairs")
            i, j = letter.vertex_pair
            if not (1 <= i <= self.r and 1 <= j <= self.r):
                raise ValueError(f"vertex pair {letter.vertex_pair} outside 1..{self.r}")
        self._index[letter.name] = len(self._letters)
        self._letters.append(letter)

    @classmethod
    def plain(cls, names: Sequence[str]) -> "Alphabet":
        return cls([Letter(n) for n in names])

    @property
    def is_matrix(self) -> bool:
        return self.r is not None

    def __len__(self):
        return len(self._letters)

    def letter(self, index: int) -> Letter:
        while index >= len(self._letters) and self.extend_rule is not None:
            self._append(self.extend_rule(len(self._letters)))
        return self._letters[index]

    def letters(self) -> tuple[Letter, ...]:
        return tuple(self._letters)

    def index_of(self, name: str) -> int:
        if name not in self._index and self.extend_rule is not None:
            probe = len(self._letters)
            while name not in self._index:
                self._append(self.extend_rule(probe))
                probe += 1
        return self._index[name]

    def has_letter(self, name: str) -> bool:
        return name in self._index

    def letter_names(self) -> tuple[str, ...]:
        return tuple(l.name for l in self._letters)

    def __repr__(self):
        kind = f"r={self.r}" if self.is_matrix else "plain"
        return f"Alphabet({', '.join(self.letter_names())}; {kind})"


class Word:
    """A monomial: a composable letter sequence, or a based empty word."""

    __slots__ = ("alphabet", "indices", "basepoint")

    def __init__(self, alphabet: Alphabet, indices: Sequence[int], basepoint=None):
        indices = tuple(indices)
        if alphabet.is_matrix:
            if indices:
                basepoint = None
                for a, b in zip(indices, indices[1:]):
                    if alphabet.letter(a).vertex_pair[1] != alphabet.letter(b).vertex_pair[0]:
                        raise ValueError("non-composable letter sequence")
            else:
                if basepoint is None or not (1 <= basepoint <= alphabet.r):
                    raise ValueError("empty matrix word needs a basepoint vertex")
        else:
            if basepoint is not None:
                raise ValueError("basepoint on a word of a plain alphabet")
        self.alphabet = alphabet
        self.indices = indices
        self.basepoint = basepoint

    @property
    def degree(self) -> int:
        return len(self.indices)

    @property
    def source(self) -> Optional[int]:
        if not self.alphabet.is_matrix:
            return None
        if self.indices:
            return self.alphabet.letter(self.indices[0]).vertex_pair[0]
        return self.basepoint

    @property
    def target(self) -> Optional[int]:
        if not self.alphabet.is_matrix:
            return None
        if self.indices:
            return self.alphabet.letter(self.indices[-1]).vertex_pair[1]
        return self.basepoint

    def concat(self, other: "Word") -> Optional["Word"]:
        """Concatenation product; None when vertex targets do not meet."""
        if other.alphabet is not self.alphabet:
            raise AlphabetMismatchError("words over different alphabets")
        if self.alphabet.is_matrix and self.target != other.source:
            return None
        if not self.indices and not other.indices:
            return self if self.alphabet.is_matrix else other
        basepoint = None
        return Word(self.alphabet, self.indices + other.indices, basepoint)

    def deglex_key(self):
        base = self.basepoint if self.basepoint is not None else 0
        return (len(self.indices), self.indices, base)

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and other.alphabet is self.alphabet
            and other.indices == self.indices
            and other.basepoint == self.basepoint
        )

    def __hash__(self):
        return hash((id(self.alphabet), self.indices, self.basepoint))

    def __str__(self):
        if not self.indices:
            return f"e({self.basepoint})" if self.alphabet.is_matrix else "1"
        return "*".join(self.alphabet.letter(i).name for i in self.indices)

    def __repr__(self):
        return f"Word({self})"


def deglex_descending_key(w: Word):
    base = w.basepoint if w.basepoint is not None else 0
    return (-len(w.indices), tuple(-i for i in w.indices), -base)


def empty_words(alphabet: Alphabet) -> list[Word]:
    if alphabet.is_matrix:
        return [Word(alphabet, (), basepoint=i) for i in range(1, alphabet.r + 1)]
    return [Word(alphabet, ())]


def words_of_degree(alphabet: Alphabet, degree: int) -> list[Word]:
    """All degree-``degree`` words in deglex order (composable only)."""
    if degree == 0:
        return empty_words(alphabet)
    n = len(alphabet)
    if not alphabet.is_matrix:
        return [Word(alphabet, idx) for idx in product(range(n), repeat=degree)]
    out = [Word(alphabet, (i,)) for i in range(n)]
    for _ in range(degree - 1):
        extended = []
        for w in out:
            for i in range(n):
                if alphabet.letter(w.indices[-1]).vertex_pair[1] == \
                        alphabet.letter(i).vertex_pair[0]:
                    extended.append(Word(alphabet, w.indices + (i,)))
        out = extended
    return out


def words_up_to(alphabet: Alphabet, degree: int) -> list[Word]:
    out = []
    for d in range(degree + 1):
        out.extend(words_of_degree(alphabet, d))
    return out


class NCPoly:
    """Finite k-linear combination of words over one alphabet."""

    __slots__ = ("alphabet", "field", "terms")

    def __init__(self, alphabet: Alphabet, field: Field, terms=None):
        cleaned = {}
        for w, c in (terms or {}).items():
            if w.alphabet is not alphabet:
                raise AlphabetMismatchError("term over a different alphabet")
            s = field.scalar(c)
            if s:
                cleaned[w] = s
        self.alphabet = alphabet
        self.field = field
        self.terms = cleaned

    @classmethod
    def zero(cls, alphabet, field):
        return cls(alphabet, field, {})

    @classmethod
    def from_word(cls, word: Word, field: Field, coeff=1):
        return cls(word.alphabet, field, {word: field.scalar(coeff)})

    @classmethod
    def one(cls, alphabet, field):
        return cls(alphabet, field, {w: field.one for w in empty_words(alphabet)})

    def _check(self, other: "NCPoly"):
        if other.alphabet is not self.alphabet:
            raise AlphabetMismatchError("polynomials over different alphabets")
        if other.field is not self.field:
            raise AlphabetMismatchError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w, self.field.zero) + c
            if acc:
                terms[w] = acc
            elif w in terms:
                del terms[w]
        return NCPoly(self.alphabet, self.field, terms)

    def __neg__(self):
        return NCPoly(self.alphabet, self.field,
                      {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff) -> "NCPoly":
        s = self.field.scalar(coeff)
        if not s:
            return NCPoly.zero(self.alphabet, self.field)
        return NCPoly(self.alphabet, self.field,
                      {w: c * s for w, c in self.terms.items()})

    def mul(self, other: "NCPoly", bound: Optional[int] = None) -> "NCPoly":
        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                if bound is not None and w1.degree + w2.degree > bound:
                    continue
                w = w1.concat(w2)
                if w is None:
                    continue
                acc = terms.get(w, self.field.zero) + c1 * c2
                if acc:
                    terms[w] = acc
                elif w in terms:
                    del terms[w]
        return NCPoly(self.alphabet, self.field, terms)

    def __mul__(self, other):
        return self.mul(other)

    def augment(self):
        """Constant term: a scalar, or a vector in k^r for matrix alphabets."""
        if self.alphabet.is_matrix:
            return tuple(
                self.terms.get(w, self.field.zero) for w in empty_words(self.alphabet))
        empty = Word(self.alphabet, ())
        return self.terms.get(empty, self.field.zero)

    def truncate(self, bound: int) -> "NCPoly":
        return NCPoly(self.alphabet, self.field,
                      {w: c for w, c in self.terms.items() if w.degree <= bound})

    def degree_part(self, degree: int) -> "NCPoly":
        return NCPoly(self.alphabet, self.field,
                      {w: c for w, c in self.terms.items() if w.degree == degree})

    def min_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return min(w.degree for w in self.terms)

    def max_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return max(w.degree for w in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0].deglex_key())

    def monic(self) -> "NCPoly":
        """Normalize the deglex-least term to coefficient one."""
        if not self.terms:
            return self
        lead = min(self.terms, key=lambda w: w.deglex_key())
        return self.scale(self.terms[lead].inverse())

    def __eq__(self, other):
        return (
            isinstance(other, NCPoly)
            and other.alphabet is self.alphabet
            and other.field is self.field
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((id(self.alphabet), frozenset(
            (w, c.value) for w, c in self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = str(w)
            if c == self.field.one and w.degree > 0:
                text = mono
            elif c == -self.field.one and w.degree > 0 and self.field.characteristic == 0:
                text = f"-{mono}"
            elif w.degree == 0 and not self.alphabet.is_matrix:
                text = str(c)
            else:
                text = f"{c}*{mono}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f"- {text[1:]}")
            else:
                parts.append(f"+ {text}")
        return " ".join(parts)

    def __repr__(self):
        return f"NCPoly({self})"


def multiply(a: NCPoly, b: NCPoly, bound: Optional[int] = None) -> NCPoly:
    return a.mul(b, bound)


def augment(a: NCPoly):
    return a.augment()


class Presentation:
    """An alphabet with relation polynomials; relations must lie in the
    augmentation ideal (zero constant term)."""

    __slots__ = ("alphabet", "field", "relations", "degree_bound")

    def __init__(self, alphabet: Alphabet, field: Field,
                 relations: Sequence[NCPoly] = (), degree_bound: Optional[int] = None):
        rels = []
        for rel in relations:
            if rel.alphabet is not alphabet:
                raise AlphabetMismatchError("relation over a different alphabet")
            aug = rel.augment()
            bad = any(aug) if isinstance(aug, tuple) else bool(aug)
            if bad:
                raise InconsistentSystemError("relation has a nonzero constant term")
            if not rel.is_zero():
                rels.append(rel)
        self.alphabet = alphabet
        self.field = field
        self.relations = tuple(rels)
        self.degree_bound = degree_bound

    def __repr__(self):
        rels = "; ".join(str(r) for r in self.relations) or "none"
        return f"Presentation({self.alphabet}, relations: {rels})"


def check_minimal_generators(p: Presentation) -> bool:
    """Whether the generators map to a basis of m/m^2 in the quotient.

    Only scalar cofactors reach degree one in a two-sided multiple of a
    relation, so the degree-one slice of the relation ideal is spanned by
    the relations' own linear parts.
    """
    for rel in p.relations:
        if not rel.degree_part(1).is_zero():
            return False
    return True


def peirce_decompose(generators: Sequence[NCPoly], bound: int) -> dict:
    """Split ideal generators into idempotent components e_i * g * e_j.

    Returns a map (i, j) -> list of nonzero truncated component
    polynomials, one per input generator that meets the block.
    """
    if not generators:
        return {}
    alphabet = generators[0].alphabet
    if not alphabet.is_matrix:
        raise DimensionMismatchError("Peirce decomposition needs a matrix-graded alphabet")
    field = generators[0].field
    components: dict[tuple[int, int], list[NCPoly]] = {}
    for g in generators:
        if g.alphabet is not alphabet:
            raise AlphabetMismatchError("generators over different alphabets")
        buckets: dict[tuple[int, int], dict] = {}
        for w, c in g.truncate(bound).terms.items():
            buckets.setdefault((w.source, w.target), {})[w] = c
        for ij, terms in buckets.items():
            components.setdefault(ij, []).append(NCPoly(alphabet, field, terms))
    return components
