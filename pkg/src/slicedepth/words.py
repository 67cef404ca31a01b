"""O/E words of even continued fractions and their reduction.

A word is a plain ``str`` over ``"OE"``.  Three deletions shorten it:

* ``InitialE`` -- drop the leftmost letter when it is ``E``;
* ``PairOO`` / ``PairEE`` -- drop an adjacent ``OO`` / ``EE`` anywhere.

A word is *accepted* when some sequence of deletions ends at ``""`` or
``"O"``.  Acceptance is decided by searching every rewrite path.  (The
rules happen to be confluent -- every overlap such as ``"EE..."`` under
InitialE versus PairEE rejoins -- so :func:`normal_forms` always returns a
single word, but the search does not rely on that.)
"""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidWitness, NotEven, OddLength
from .rational import EvenCF

__all__ = [
    "ACCEPTING",
    "Reduction",
    "ReductionWitness",
    "Rule",
    "Step",
    "apply_rule",
    "build_word",
    "check_word",
    "normal_forms",
    "reduces",
    "replay_witness",
    "successors",
]

ACCEPTING = frozenset({"", "O"})


class Rule(enum.Enum):
    INITIAL_E = "InitialE"
    PAIR_OO = "PairOO"
    PAIR_EE = "PairEE"

    def __str__(self) -> str:
        return self.value


class Step(NamedTuple):
    rule: Rule
    position: int
    word_after: str


@dataclass(frozen=True)
class ReductionWitness:
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def final(self, start: str) -> str:
        return self.steps[-1].word_after if self.steps else start


class Reduction(NamedTuple):
    accepted: bool
    witness: ReductionWitness | None


def check_word(word: str) -> str:
    bad = set(word) - {"O", "E"}
    if bad:
        raise ValueError(f"word {word!r} has letters outside {{O, E}}: {sorted(bad)}")
    return word


def build_word(coeffs: EvenCF | Iterable[int]) -> str:
    """Word of ``C(a_1, ..., a_m)``: residue 2 mod 4 at odd ``i`` -> O, at even ``i`` -> E.

    Residue-0 positions are dropped.  Signs do not matter (-2 = 2 mod 4).
    """
    coeffs = tuple(coeffs)
    for i, a in enumerate(coeffs, start=1):
        if a == 0 or a % 2:
            raise NotEven(f"coefficient a_{i} = {a} is not a nonzero even integer")
    if len(coeffs) % 2:
        raise OddLength(
            f"C{coeffs} has odd length {len(coeffs)}; all-even odd-length sequences are links"
        )
    return "".join(
        "O" if i % 2 else "E"
        for i, a in enumerate(coeffs, start=1)
        if a % 4 == 2
    )


def apply_rule(word: str, rule: Rule, position: int) -> str:
    """Apply ``rule`` at ``position``; raise ``InvalidWitness`` if it does not apply there."""
    if rule is Rule.INITIAL_E:
        if position != 0 or not word.startswith("E"):
            raise InvalidWitness(f"InitialE does not apply to {word!r} at {position}")
        return word[1:]
    pair = "OO" if rule is Rule.PAIR_OO else "EE"
    if not (0 <= position < len(word) - 1) or word[position:position + 2] != pair:
        raise InvalidWitness(f"{rule} does not apply to {word!r} at {position}")
    return word[:position] + word[position + 2:]


def successors(word: str) -> Iterator[Step]:
    """Every single-deletion rewrite of ``word``, InitialE first then pairs left to right."""
    if word.startswith("E"):
        yield Step(Rule.INITIAL_E, 0, word[1:])
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            rule = Rule.PAIR_OO if word[i] == "O" else Rule.PAIR_EE
            yield Step(rule, i, word[:i] + word[i + 2:])


def reduces(word: str) -> Reduction:
    """Breadth-first search for a deletion sequence from ``word`` to ``""`` or ``"O"``.

    The returned witness is a shortest such sequence.
    """
    check_word(word)
    parent: dict[str, tuple[str, Step] | None] = {word: None}
    queue = deque([word])
    while queue:
        current = queue.popleft()
        if current in ACCEPTING:
            steps = []
            node = current
            while parent[node] is not None:
                prev, step = parent[node]
                steps.append(step)
                node = prev
            return Reduction(True, ReductionWitness(tuple(reversed(steps))))
        for step in successors(current):
            if step.word_after not in parent:
                parent[step.word_after] = (current, step)
                queue.append(step.word_after)
    return Reduction(False, None)


def normal_forms(word: str) -> frozenset[str]:
    """All irreducible words reachable from ``word``."""
    check_word(word)
    seen = {word}
    stack = [word]
    irreducible = set()
    while stack:
        current = stack.pop()
        nexts = [s.word_after for s in successors(current)]
        if not nexts:
            irreducible.add(current)
        for w in nexts:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(irreducible)


def replay_witness(word: str, witness: ReductionWitness) -> str:
    """Re-apply every step of ``witness`` to ``word`` and return the final word.

    Raises ``InvalidWitness`` if a step does not apply, does not produce
    its recorded word, or the end point is not accepting.
    """
    current = check_word(word)
    for n, step in enumerate(witness.steps, start=1):
        after = apply_rule(current, step.rule, step.position)
        if after != step.word_after:
            raise InvalidWitness(
                f"step {n}: {step.rule} at {step.position} gives {after!r}, "
                f"witness says {step.word_after!r}"
            )
        current = after
    if current not in ACCEPTING:
        raise InvalidWitness(f"witness ends at {current!r}, not at '' or 'O'")
    return current
