"""Degree-truncated quotients of free algebras.

A :class:`FormalTruncation` is the working snapshot of a quotient
k<S>/(ideal + m^(N+1)): a monomial basis, a rewrite table sending every
eliminated monomial to its expansion over the basis, the relation
polynomials, and the per-degree log of basis choices.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .errors import InconsistentSystemError
from .field import Field
from .freealg import (
    Alphabet,
    NCPoly,
    Presentation,
    Word,
    deglex_descending_key,
    words_of_degree,
    words_up_to,
)
from .linalg import SparseReducer


def ordering_name(alphabet: Alphabet) -> str:
    return "deglex:" + ",".join(alphabet.letter_names())


@dataclass(frozen=True)
class FormalTruncation:
    """Snapshot of a truncated quotient at degree ``degree``."""

    degree: int
    alphabet: Alphabet
    field: Field
    basis: tuple
    rewrite: dict
    relations: tuple
    basis_choice_log: tuple = ()
    bracket_log: dict = dc_field(default_factory=dict)
    ordering: str = ""

    def __post_init__(self):
        if not self.ordering:
            object.__setattr__(self, "ordering", ordering_name(self.alphabet))

    def is_basis_word(self, w: Word) -> bool:
        return w in self._basis_set

    @property
    def _basis_set(self):
        cached = getattr(self, "_basis_set_cache", None)
        if cached is None:
            cached = frozenset(self.basis)
            object.__setattr__(self, "_basis_set_cache", cached)
        return cached

    def rewrite_word(self, w: Word) -> dict:
        """Expansion of a monomial over the basis; identity on basis words."""
        if w.degree > self.degree:
            return {}
        if w in self._basis_set:
            return {w: self.field.one}
        return dict(self.rewrite.get(w, {}))

    def reduce_poly(self, p: NCPoly) -> NCPoly:
        terms: dict = {}
        for w, c in p.terms.items():
            for b, coeff in self.rewrite_word(w).items():
                acc = terms.get(b, self.field.zero) + c * coeff
                if acc:
                    terms[b] = acc
                elif b in terms:
                    del terms[b]
        return NCPoly(p.alphabet, self.field, terms)

    def basis_at_degree(self, d: int) -> tuple:
        return tuple(w for w in self.basis if w.degree == d)

    def dimension_sequence(self) -> tuple:
        counts = [0] * (self.degree + 1)
        for w in self.basis:
            counts[w.degree] += 1
        return tuple(counts)

    def cumulative_dimensions(self) -> tuple:
        out = []
        total = 0
        for c in self.dimension_sequence():
            total += c
            out.append(total)
        return tuple(out)

    def __repr__(self):
        return (f"FormalTruncation(N={self.degree}, dim={len(self.basis)}, "
                f"{len(self.relations)} relations)")


def _ideal_slice_rows(relations: Sequence[NCPoly], alphabet: Alphabet,
                      bound: int, proper_only: bool = False):
    """Degree slices of the two-sided ideal: truncations of w1 * f * w2.

    ``proper_only`` drops the bare relations themselves (both cofactors
    trivial), which is the quotient used by the intermediate space of the
    hull iteration.
    """
    rows = []
    for f in relations:
        mindeg = f.min_degree()
        if mindeg is None:
            continue
        budget = bound - mindeg
        if budget < 0:
            continue
        left_words = words_up_to(alphabet, budget)
        for w1 in left_words:
            rest = budget - w1.degree
            for w2 in words_up_to(alphabet, rest):
                if proper_only and w1.degree + w2.degree == 0:
                    continue
                prod = NCPoly.from_word(w1, f.field).mul(f, bound).mul(
                    NCPoly.from_word(w2, f.field), bound)
                if not prod.is_zero():
                    rows.append(dict(prod.terms))
    return rows


def quotient_basis(p: Presentation, bound: int) -> FormalTruncation:
    """Monomial basis and rewrite table of k<S>/(F + m^(bound+1)).

    Degree slices of the relation ideal are row-reduced with the largest
    monomial of each row eliminated, so the surviving basis consists of
    the deglex-smallest monomials.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    field = p.field
    alphabet = p.alphabet
    reducer = SparseReducer(field, order_key=deglex_descending_key)
    for row in _ideal_slice_rows(p.relations, alphabet, bound):
        reducer.add(row)
    for pivot in reducer.rows:
        if pivot.degree == 0:
            raise InconsistentSystemError("inconsistent presentation: 1 lies in the ideal")
    basis = []
    log = []
    rewrite = {}
    for d in range(bound + 1):
        layer = words_of_degree(alphabet, d)
        chosen = [w for w in layer if w not in reducer.rows]
        basis.extend(chosen)
        log.append({
            "degree": d,
            "candidates": tuple(str(w) for w in layer),
            "selected": tuple(str(w) for w in chosen),
        })
    for pivot in reducer.rows:
        rewrite[pivot] = reducer.rewrite(pivot)
    return FormalTruncation(
        degree=bound,
        alphabet=alphabet,
        field=field,
        basis=tuple(sorted(basis, key=lambda w: w.deglex_key())),
        rewrite=rewrite,
        relations=tuple(f.truncate(bound) for f in p.relations if not f.truncate(bound).is_zero()),
        basis_choice_log=tuple(log),
        ordering=ordering_name(alphabet),
    )
