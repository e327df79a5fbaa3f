"""Greedy unknot certification by free reduction and Markov destabilization.

The certifier repeatedly applies closure-preserving moves to a braid word:

* reduce: delete an adjacent inverse pair,
* destab_bottom: if index 1 appears exactly once, delete that letter and
  shift every index down (conjugate the unique sigma_1^+-1 to the end, then
  remove the first strand),
* destab_top: if the top index appears exactly once, delete that letter and
  drop the last strand,
* rotate: cyclic conjugation, which only exists to expose cyclic
  cancellations to the reduce move.

Move priority is reduce, then destab_bottom, then destab_top, then rotate,
with a rotation budget of the current word length between productive moves.
Reaching the empty word on one strand certifies the closure unknotted.  The
procedure is sound but deliberately incomplete: a stuck word means "no
certificate found", never "knotted".

Certificates record every move and can be replayed step by step; the replay
re-validates each move's precondition, so a replayed certificate is a proof
that the starting closure is the unknot.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, closure_components

Move = tuple[str, int]


@dataclass(frozen=True)
class UnknotCertificate:
    initial: BraidWord
    moves: tuple[Move, ...]
    final: BraidWord
    certified: bool
    rotations_used: int


class MoveError(ValueError):
    """A recorded move does not apply to the word it was replayed against."""


def apply_move(word: BraidWord, move: Move) -> BraidWord:
    """Apply one closure-preserving move, validating its precondition."""
    kind, arg = move
    letters = word.letters
    if kind == "reduce":
        if not 0 <= arg < len(letters) - 1:
            raise MoveError(f"reduce position {arg} out of range")
        if letters[arg] != -letters[arg + 1]:
            raise MoveError(f"letters at {arg} are not an inverse pair")
        return BraidWord(word.strands, letters[:arg] + letters[arg + 2 :])
    if kind == "rotate":
        if not letters:
            raise MoveError("rotating the empty word")
        k = arg % len(letters)
        return BraidWord(word.strands, letters[k:] + letters[:k])
    if kind == "destab_bottom":
        if not 0 <= arg < len(letters) or abs(letters[arg]) != 1:
            raise MoveError(f"no index-1 letter at position {arg}")
        if sum(1 for x in letters if abs(x) == 1) != 1:
            raise MoveError("bottom destabilization needs a unique index-1 letter")
        rest = letters[:arg] + letters[arg + 1 :]
        shifted = tuple(x - 1 if x > 0 else x + 1 for x in rest)
        return BraidWord(word.strands - 1, shifted)
    if kind == "destab_top":
        top = word.strands - 1
        if not 0 <= arg < len(letters) or abs(letters[arg]) != top:
            raise MoveError(f"no index-{top} letter at position {arg}")
        if sum(1 for x in letters if abs(x) == top) != 1:
            raise MoveError("top destabilization needs a unique top-index letter")
        return BraidWord(word.strands - 1, letters[:arg] + letters[arg + 1 :])
    raise MoveError(f"unknown move kind {kind!r}")


def _find_reduce(letters: tuple[int, ...]) -> int | None:
    for i in range(len(letters) - 1):
        if letters[i] == -letters[i + 1]:
            return i
    return None


def _find_unique(letters: tuple[int, ...], index: int) -> int | None:
    hits = [i for i, x in enumerate(letters) if abs(x) == index]
    if len(hits) == 1:
        return hits[0]
    return None


def destabilize_greedy(word: BraidWord) -> UnknotCertificate:
    """Search for an unknot certificate; never misreports a stuck word.

    Raises ValueError when the closure is not a knot, since a certificate
    could then never exist.
    """
    if closure_components(word) != 1:
        raise ValueError("closure is not a knot; unknot certification does not apply")
    current = word
    moves: list[Move] = []
    rotations_total = 0
    stall = 0
    while True:
        if not current.letters:
            certified = current.strands == 1
            # a knot closure can only exhaust its letters on a single strand
            return UnknotCertificate(word, tuple(moves), current, certified, rotations_total)
        move: Move | None = None
        pos = _find_reduce(current.letters)
        if pos is not None:
            move = ("reduce", pos)
        if move is None and current.strands > 1:
            pos = _find_unique(current.letters, 1)
            if pos is not None:
                move = ("destab_bottom", pos)
        if move is None and current.strands > 2:
            pos = _find_unique(current.letters, current.strands - 1)
            if pos is not None:
                move = ("destab_top", pos)
        if move is None:
            if stall >= len(current.letters):
                return UnknotCertificate(word, tuple(moves), current, False, rotations_total)
            move = ("rotate", 1)
            stall += 1
            rotations_total += 1
        else:
            stall = 0
        current = apply_move(current, move)
        moves.append(move)


def replay_certificate(cert: UnknotCertificate) -> BraidWord:
    """Re-run every recorded move with full validation; return the final word.

    Because each move preserves the closure type and the replay checks each
    precondition, a certified replay ending with the empty one-strand word
    re-derives that the initial closure is the unknot.
    """
    current = cert.initial
    for move in cert.moves:
        current = apply_move(current, move)
    if current != cert.final:
        raise MoveError("replay did not reproduce the recorded final word")
    if cert.certified and (current.letters or current.strands != 1):
        raise MoveError("certificate claims the unknot but the replay is nonempty")
    return current
