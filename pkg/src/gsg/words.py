"""Reduced words over the free product of a family of gamma-semigroups.

A word is a nonempty alternating sequence x1 g1 x2 g2 ... xm of element
letters and gamma letters.  Every element letter carries a pointer naming
the family member it came from.  Two merge disciplines exist:

* same-gamma: all members share one gamma list.  A factor (x, g, y) merges
  to the member product x g y exactly when x and y point at the same
  member.  Reduced means no two consecutive element letters share a
  pointer.

* disjoint: members bring mutually disjoint gamma lists, and gamma letters
  carry pointers too.  A factor merges exactly when x, g, y all point at
  the same member.  A factor whose outer letters agree but whose gamma is
  foreign cannot merge; the product construction can create such factors,
  so reduced in this mode only means "no mergeable factor".  `normalize`
  refuses them in raw input, because a hand-written sequence of that shape
  is almost certainly a mistake.

Products of words associate, which is what makes the left-to-right merge
pass below well defined.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .core import GammaHomomorphism, GammaSemigroup, verify_homomorphism
from .errors import (
    AmbiguousIdentifier,
    CrossFamilyGamma,
    GammaMismatch,
    MalformedSequence,
    MissingHomomorphism,
    ModeMismatch,
    NameClash,
    NotAHomomorphism,
    UnknownIdentifier,
)

__all__ = ["Mode", "Letter", "GammaLetter", "Word", "FreeProduct"]


class Mode(enum.Enum):
    SAME_GAMMA = "same-gamma"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class Letter:
    """An element letter: which member it points at, and the element name."""
    pointer: int
    element: str


@dataclass(frozen=True)
class GammaLetter:
    """A gamma letter; pointer is None in same-gamma mode."""
    gamma: str
    pointer: Optional[int] = None


@dataclass(frozen=True)
class Word:
    """An alternating letter sequence; construct through a FreeProduct."""
    letters: tuple
    mode: Mode

    @property
    def m(self) -> int:
        """Number of element letters."""
        return (len(self.letters) + 1) // 2

    def element_letters(self) -> tuple[Letter, ...]:
        return self.letters[0::2]

    def gamma_letters(self) -> tuple[GammaLetter, ...]:
        return self.letters[1::2]

    def tokens(self) -> tuple[str, ...]:
        return tuple(l.element if isinstance(l, Letter) else l.gamma
                     for l in self.letters)

    def __str__(self) -> str:
        return " ".join(self.tokens())


class FreeProduct:
    """The free product context: the member family plus the merge mode.

    Members must have mutually disjoint element names (that is what lets a
    plain name act as a letter).  In same-gamma mode every member must carry
    an identical gamma tuple; in disjoint mode the gamma names must be
    mutually disjoint as well.
    """

    def __init__(self, members: Sequence[GammaSemigroup],
                 mode: Mode = Mode.SAME_GAMMA):
        members = tuple(members)
        if not members:
            raise ValueError("a free product needs at least one member")
        self.members = members
        self.mode = mode
        owner: dict[str, int] = {}
        for p, s in enumerate(members):
            for e in s.elements:
                if e in owner:
                    raise NameClash(e, "family element names must be disjoint")
                owner[e] = p
        self._owner = owner
        if mode is Mode.SAME_GAMMA:
            shared = members[0].gammas
            for s in members[1:]:
                if s.gammas != shared:
                    raise GammaMismatch(
                        f"same-gamma mode needs identical gamma lists, "
                        f"{s.name} has {s.gammas} vs {shared}")
            self.shared_gammas = shared
            self._gowner: Optional[dict[str, int]] = None
        else:
            gowner: dict[str, int] = {}
            for p, s in enumerate(members):
                for h in s.gammas:
                    if h in gowner:
                        raise NameClash(h, "disjoint mode needs disjoint gamma names")
                    gowner[h] = p
            self.shared_gammas = None
            self._gowner = gowner

    # letter resolution -------------------------------------------------

    def _element_letter(self, name: str) -> Letter:
        if name not in self._owner:
            raise UnknownIdentifier(name, "element of the family")
        return Letter(self._owner[name], name)

    def _gamma_letter(self, name: str) -> GammaLetter:
        if self.mode is Mode.SAME_GAMMA:
            if name not in self.shared_gammas:
                raise UnknownIdentifier(name, "gamma of the family")
            return GammaLetter(name, None)
        if name not in self._gowner:
            raise UnknownIdentifier(name, "gamma of the family")
        return GammaLetter(name, self._gowner[name])

    def _check_word(self, w: Word) -> None:
        if not isinstance(w, Word) or w.mode is not self.mode:
            raise ModeMismatch("word does not belong to this product's mode")
        for l in w.element_letters():
            if self._owner.get(l.element) != l.pointer:
                raise UnknownIdentifier(l.element, "element of the family")
        for l in w.gamma_letters():
            check = self._gamma_letter(l.gamma)
            if check.pointer != l.pointer:
                raise UnknownIdentifier(l.gamma, "gamma of the family")

    # construction -------------------------------------------------------

    def embed(self, i: int, a: str) -> Word:
        """The one-letter word for element a of member i."""
        s = self.members[i]
        if not s.has_element(a):
            raise UnknownIdentifier(a, f"element of {s.name}")
        return Word((Letter(i, a),), self.mode)

    def _mergeable(self, x: Letter, g: GammaLetter, y: Letter) -> bool:
        if self.mode is Mode.SAME_GAMMA:
            return x.pointer == y.pointer
        return x.pointer == g.pointer == y.pointer

    def _merge(self, x: Letter, g: GammaLetter, y: Letter) -> Letter:
        z = self.members[x.pointer].mul(x.element, g.gamma, y.element)
        return Letter(x.pointer, z)

    def normalize(self, tokens: Sequence[str]) -> Word:
        """Canonical reduced word for a raw alternating name sequence.

        Merges every mergeable factor left to right.  A merge can never
        create a new mergeable site to its left, so one pass suffices.  In
        disjoint mode a surviving site whose outer letters share a pointer
        raises CrossFamilyGamma.
        """
        tokens = list(tokens)
        if not tokens:
            raise MalformedSequence("empty word")
        if len(tokens) % 2 == 0:
            raise MalformedSequence("a word must start and end with element letters")
        out: list = []
        for pos, tok in enumerate(tokens):
            if pos % 2 == 0:
                letter = self._element_letter(tok)
                if out and self._mergeable(out[-2], out[-1], letter):
                    merged = self._merge(out[-2], out[-1], letter)
                    out[-2:] = [merged]
                else:
                    out.append(letter)
            else:
                out.append(self._gamma_letter(tok))
        if self.mode is Mode.DISJOINT:
            for k in range(0, len(out) - 2, 2):
                x, g, y = out[k], out[k + 1], out[k + 2]
                if x.pointer == y.pointer != g.pointer:
                    raise CrossFamilyGamma(x.element, g.gamma, y.element)
        return Word(tuple(out), self.mode)

    def parse_word(self, text: str) -> Word:
        return self.normalize(text.split())

    def is_reduced(self, w: Word) -> bool:
        letters = w.letters
        if not letters or len(letters) % 2 == 0:
            return False
        for k in range(0, len(letters) - 2, 2):
            if self._mergeable(letters[k], letters[k + 1], letters[k + 2]):
                return False
        return True

    # arithmetic ----------------------------------------------------------

    def gamma_multiply(self, a: Word, gamma: str, b: Word) -> Word:
        """The product a gamma b: merge at the junction when the mode's
        merge condition holds there, otherwise insert the gamma letter."""
        self._check_word(a)
        self._check_word(b)
        g = self._gamma_letter(gamma)
        last, first = a.letters[-1], b.letters[0]
        if self._mergeable(last, g, first):
            merged = self._merge(last, g, first)
            letters = a.letters[:-1] + (merged,) + b.letters[1:]
        else:
            letters = a.letters + (g,) + b.letters
        return Word(letters, self.mode)

    def fold(self, w: Word, target: GammaSemigroup,
             homs: Sequence[Optional[GammaHomomorphism]]) -> str:
        """Evaluate a word in a target through one homomorphism per member.

        Left-to-right: h(x1) g1 h(x2) g2 ... computed in the target's table.
        In same-gamma mode the target must live over the shared gamma list
        and every hom's gamma map must be the identity; in disjoint mode
        each gamma letter goes through its own member's gamma map.
        """
        self._check_word(w)
        homs = list(homs)
        for i, member in enumerate(self.members):
            if i >= len(homs) or homs[i] is None:
                raise MissingHomomorphism(i)
            f = homs[i]
            if f.source != member:
                raise GammaMismatch(
                    f"hom {f.name!r} has source {f.source.name}, expected {member.name}")
            if f.target != target:
                raise GammaMismatch(
                    f"hom {f.name!r} has target {f.target.name}, expected {target.name}")
            bad = verify_homomorphism(f)
            if bad is not None:
                raise NotAHomomorphism(f.name, bad)
            if self.mode is Mode.SAME_GAMMA:
                if set(target.gammas) != set(self.shared_gammas):
                    raise GammaMismatch(
                        f"target {target.name} does not live over the shared gamma list")
                if any(f.gamma_map[h] != h for h in self.shared_gammas):
                    raise GammaMismatch(
                        f"hom {f.name!r} must fix every shared gamma")
        letters = w.letters
        acc = homs[letters[0].pointer].apply(letters[0].element)
        for k in range(1, len(letters), 2):
            g, x = letters[k], letters[k + 1]
            if self.mode is Mode.SAME_GAMMA:
                tg = g.gamma
            else:
                tg = homs[g.pointer].apply_gamma(g.gamma)
            acc = target.mul(acc, tg, homs[x.pointer].apply(x.element))
        return acc

    # ordering ------------------------------------------------------------

    def canonical_key(self, w: Word):
        """Sort key: length first, then the letter index sequence.

        Words of equal length alternate in step, so element letters only
        ever compare against element letters and gammas against gammas.
        """
        parts = []
        for l in w.letters:
            if isinstance(l, Letter):
                parts.append((l.pointer, self.members[l.pointer].index(l.element)))
            elif self.mode is Mode.SAME_GAMMA:
                parts.append((0, self.members[0].gamma_index(l.gamma)))
            else:
                parts.append((l.pointer, self.members[l.pointer].gamma_index(l.gamma)))
        return (w.m, tuple(parts))
