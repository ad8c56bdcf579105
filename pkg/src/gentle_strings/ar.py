"""Peaks, deeps, hooks, cohooks and Auslander-Reiten sequences starting in a
string module.

Conventions: ``a w`` means the letter ``a`` is put in front of ``w``.  A string
starts on a peak when no arrow ``a`` makes ``a w`` a string, and starts in a
deep when no arrow ``b`` makes ``b^-1 w`` a string; the end versions use
``w a^-1`` and ``w b``.  Trivial strings only attach through their sign:
``sigma(1_{v,t}) = -t`` and ``epsilon(1_{v,t}) = t``, and ``x y`` requires
``sigma(y) = -epsilon(x)``.

Zero modules are represented by ``None``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import AlgebraPresentation, is_injective
from .errors import NotGentle, PreconditionViolated, Undefined
from .strings import (SignAssignment, assign_signs, is_valid_string, letter_source,
                      letter_target, source, target)
from .words import Letter, StringWord

START = "start"
END = "end"


@dataclass(frozen=True)
class EndStatus:
    on_peak: bool
    in_deep: bool

    def labels(self) -> tuple[str, str]:
        return ("OnPeak" if self.on_peak else "NotOnPeak",
                "InDeep" if self.in_deep else "NotInDeep")


@dataclass(frozen=True)
class EndStatuses:
    start: EndStatus
    end: EndStatus

    def at(self, end: str) -> EndStatus:
        return self.start if end == START else self.end


@dataclass(frozen=True)
class ArrowCompanions:
    arrow: str
    U: StringWord
    V: StringWord
    N: StringWord


@dataclass(frozen=True)
class ArSequence:
    left: StringWord
    middle: tuple[StringWord, ...]
    right: StringWord


def _signs(p, signs):
    return assign_signs(p) if signs is None else signs


def _check_end(end):
    if end not in (START, END):
        raise ValueError(f"end must be {START!r} or {END!r}, got {end!r}")


def _word(letters, vertex=None, sign=1) -> StringWord:
    if letters:
        return StringWord(tuple(letters))
    return StringWord.trivial(vertex, sign)


def attaches(p: AlgebraPresentation, w: StringWord, x: Letter, end: str,
             signs: Optional[SignAssignment] = None) -> bool:
    """Whether ``x w`` (start) or ``w x`` (end) is a string."""
    _check_end(end)
    if not w.is_trivial:
        if end == START:
            if letter_target(p, x) != source(p, w):
                return False
            return is_valid_string(p, StringWord((x,) + w.letters))
        if letter_source(p, x) != target(p, w):
            return False
        return is_valid_string(p, StringWord(w.letters + (x,)))
    s = _signs(p, signs)
    t = w.sign
    if end == START:
        return letter_target(p, x) == w.vertex and s.epsilon_of(x) == t
    return letter_source(p, x) == w.vertex and s.sigma_of(x) == -t


def _attaching(p, w, end, inverted, signs) -> list[str]:
    return [a.name for a in p.arrows
            if attaches(p, w, Letter(a.name, inverted), end, signs)]


def end_status(p: AlgebraPresentation, w: StringWord,
               signs: Optional[SignAssignment] = None) -> EndStatuses:
    # peaks: a w or w a^-1; deeps: b^-1 w or w b
    return EndStatuses(
        EndStatus(not _attaching(p, w, START, False, signs),
                  not _attaching(p, w, START, True, signs)),
        EndStatus(not _attaching(p, w, END, True, signs),
                  not _attaching(p, w, END, False, signs)),
    )


def _grow_inverse(p, word: list[Letter], at_start: bool) -> list[Letter]:
    """Extend ``word`` by inverse letters at one side until blocked."""
    word = list(word)
    while True:
        w = StringWord(tuple(word))
        end = START if at_start else END
        cands = [a.name for a in p.arrows if attaches(p, w, Letter(a.name, True), end)]
        if not cands:
            return word
        if len(cands) > 1:
            raise NotGentle(f"{w} extends by more than one inverse letter")
        x = Letter(cands[0], True)
        word = [x] + word if at_start else word + [x]


def companions(p: AlgebraPresentation, arrow: str) -> ArrowCompanions:
    """``N = V a U`` with ``U``, ``V`` inverse strings, maximal on both sides."""
    p.require_gentle()
    a = p.quiver.arrow(arrow)
    core = Letter(a.name)
    right = _grow_inverse(p, [core], at_start=False)
    u = right[1:]
    full = _grow_inverse(p, right, at_start=True)
    v = full[:len(full) - len(right)]
    return ArrowCompanions(
        a.name,
        U=_word(u, a.target),
        V=_word(v, a.source),
        N=StringWord(tuple(full)),
    )


def _hook_arrow(p, w, end, signs) -> str:
    found = _attaching(p, w, end, end == END, signs)
    if not found:
        raise PreconditionViolated(f"{w} is on a peak at its {end}; no hook can be added")
    return found[0]


def add_hook(p: AlgebraPresentation, w: StringWord, end: str,
             signs: Optional[SignAssignment] = None) -> StringWord:
    """``V_a a w`` at the start, ``w b^-1 V_b^-1`` at the end."""
    _check_end(end)
    x = _hook_arrow(p, w, end, signs)
    v = companions(p, x).V
    if end == START:
        return StringWord(v.letters + (Letter(x),) + w.letters)
    return StringWord(w.letters + (Letter(x, True),) + v.inverse().letters)


def delete_cohook(p: AlgebraPresentation, w: StringWord, end: str,
                  signs: Optional[SignAssignment] = None) -> Optional[StringWord]:
    """Remove ``U_a^-1 a^-1`` from the start or ``b U_b`` from the end.

    Returns ``None`` (the zero module) for a direct string at the start or an
    inverse string at the end.
    """
    _check_end(end)
    if not end_status(p, w, signs).at(end).on_peak:
        raise PreconditionViolated(f"{w} is not on a peak at its {end}")
    letters = w.letters
    if end == START:
        if w.is_direct:
            return None
        k = next(i for i, x in enumerate(letters) if x.inverted)
        alpha = letters[k].arrow
        rest = letters[k + 1:]
        if rest:
            return StringWord(rest)
        s = _signs(p, signs)
        return StringWord.trivial(p.quiver.arrow(alpha).source, s.sigma[alpha])
    if w.is_inverse:
        return None
    k = max(i for i, x in enumerate(letters) if not x.inverted)
    beta = letters[k].arrow
    rest = letters[:k]
    if rest:
        return StringWord(rest)
    s = _signs(p, signs)
    return StringWord.trivial(p.quiver.arrow(beta).source, -s.sigma[beta])


def _modify(p, w, end, status: EndStatus, signs):
    if status.on_peak:
        return delete_cohook(p, w, end, signs)
    return add_hook(p, w, end, signs)


def _require_non_injective(p, w):
    p.require_gentle()
    if not is_valid_string(p, w):
        raise PreconditionViolated(f"{w} is not a string")
    if is_injective(p, w):
        raise Undefined("Injective")


def ar_sequence(p: AlgebraPresentation, w: StringWord,
                signs: Optional[SignAssignment] = None) -> ArSequence:
    """The AR-sequence starting in ``M(w)``.

    At each end independently a hook is added when the end is not on a peak,
    otherwise a cohook is deleted.
    """
    _require_non_injective(p, w)
    signs = _signs(p, signs)
    st = end_status(p, w, signs)
    first = _modify(p, w, START, st.start, signs)
    second = _modify(p, w, END, st.end, signs)
    # the two modifications commute; go through whichever one is nonzero
    if first is not None:
        both = _modify(p, first, END, st.end, signs)
    elif second is not None:
        both = _modify(p, second, START, st.start, signs)
    else:
        both = None
    if both is None:
        raise Undefined("double modification vanished")
    middle = tuple(x for x in (first, second) if x is not None)
    return ArSequence(w, middle, both)


def tau_inverse(p: AlgebraPresentation, w: StringWord,
                signs: Optional[SignAssignment] = None) -> StringWord:
    return ar_sequence(p, w, signs).right
