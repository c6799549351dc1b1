"""Word reduction in right-angled Artin groups over a defining graph.

A word is a sequence of (vertex, +1/-1) letters.  Two letters commute exactly
when their vertices coincide or are adjacent in the graph.  A word represents
the identity iff it can be emptied by repeatedly deleting a letter pair
x ... x^-1 whose in-between letters all commute with x; reduction to a
fixpoint therefore decides the word problem.
"""

from __future__ import annotations

import re

from .graphs import SimplicialGraph

Letter = tuple[str, int]


_TOKEN = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


def parse_letters(text: str) -> list[Letter]:
    """Parse "d a d^-1" style words into letter lists; "" is the empty word.

    Generator names are arbitrary vertex identifiers, so no name doubles as
    an identity shorthand here.
    """
    text = text.strip()
    if not text:
        return []
    letters: list[Letter] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"cannot parse letter {token!r}")
        name, exp = m.group(1), int(m.group(2) or 1)
        sign = 1 if exp > 0 else -1
        letters.extend([(name, sign)] * abs(exp))
    return letters


def format_letters(letters: list[Letter]) -> str:
    if not letters:
        return ""
    out = []
    for name, sign in letters:
        out.append(name if sign > 0 else f"{name}^-1")
    return " ".join(out)


def invert_letters(letters: list[Letter]) -> list[Letter]:
    return [(name, -sign) for name, sign in reversed(letters)]


def reduce_word(g: SimplicialGraph, letters: list[Letter]) -> list[Letter]:
    """Delete cancellable pairs until none remain; the result's length is minimal."""
    word = list(letters)
    for name, _ in word:
        g.index(name)  # raises on unknown generator
    changed = True
    while changed:
        changed = False
        n = len(word)
        for i in range(n):
            vi, si = word[i]
            for j in range(i + 1, n):
                vj, sj = word[j]
                if vj == vi:
                    if sj == -si:
                        del word[j]
                        del word[i]
                        changed = True
                    break
                if not g.adjacent(vi, vj):
                    break
            if changed:
                break
    return word


def is_identity_word(g: SimplicialGraph, letters: list[Letter]) -> bool:
    return not reduce_word(g, letters)


def letters_commute(g: SimplicialGraph, w1: list[Letter], w2: list[Letter]) -> bool:
    """Whether [w1, w2] = 1 in the RAAG on g."""
    comm = w1 + w2 + invert_letters(w1) + invert_letters(w2)
    return is_identity_word(g, comm)
