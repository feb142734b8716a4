"""Semi-automata on [n]: the power automaton, synchronization tests,
reset words, the minimal DFA of the synchronizing language, complete
reachability, and distinguishability of state subsets.

Subsets of states are n-bit masks.  A word is a list of letter indices,
read left to right: the first letter acts first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import perm
from ._kernels import moore_refine, pair_merge_table, reset_word_bfs, subset_reach
from .group import GroupSpec
from .perm import ParseError, Transformation

# Any construction touching the power set stays below one 2^n table.
SUBSET_CAP = 24


class DegreeCapError(ValueError):
    pass


@dataclass(frozen=True)
class SemiAutomaton:
    degree: int
    letters: tuple[Transformation, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("at least one letter required")
        for t in self.letters:
            if t.degree != self.degree:
                raise perm.DegreeMismatchError("degree mismatch")

    def letter_array(self) -> np.ndarray:
        return np.array([t.image for t in self.letters], dtype=np.int64)

    def apply_word_mask(self, mask: int, word) -> int:
        for x in word:
            mask = self.letters[x].apply_mask(mask)
        return mask

    def word_transformation(self, word) -> Transformation:
        t = perm.identity(self.degree)
        for x in word:
            t = perm.compose(self.letters[x], t)
        return t


@dataclass(frozen=True)
class SubsetAutomaton:
    """The reachable part of the power automaton, full state set first."""

    degree: int
    states: tuple[int, ...]          # bitmasks, BFS order
    transitions: tuple[tuple[int, ...], ...]  # state x letter -> state index

    def accepting_indices(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.states) if s & (s - 1) == 0)


@dataclass(frozen=True)
class DfaSummary:
    state_count: int
    accepting_count: int
    class_representatives: Optional[tuple[tuple[str, ...], ...]] = None


def build_group_automaton(G: GroupSpec, f: Transformation) -> SemiAutomaton:
    """Letters are the generators of G in order, then f."""
    if f.degree != G.degree:
        raise perm.DegreeMismatchError("degree mismatch")
    return SemiAutomaton(G.degree, G.generators + (f,))


def _check_subset_cap(A: SemiAutomaton):
    if A.degree > SUBSET_CAP:
        raise DegreeCapError(
            f"degree {A.degree} exceeds power-set cap {SUBSET_CAP}"
        )


def build_subset_automaton(A: SemiAutomaton) -> SubsetAutomaton:
    _check_subset_cap(A)
    states, trans = subset_reach(A.letter_array(), A.degree)
    return SubsetAutomaton(
        A.degree,
        tuple(int(s) for s in states),
        tuple(tuple(int(t) for t in row) for row in trans),
    )


def is_completely_reachable(A: SemiAutomaton) -> bool:
    _check_subset_cap(A)
    states, _ = subset_reach(A.letter_array(), A.degree)
    return len(states) == (1 << A.degree) - 1


def is_synchronizing_pairs(A: SemiAutomaton) -> bool:
    """Cerny pair criterion: every state pair can be merged by some word."""
    n = A.degree
    if n == 1:
        return True
    good = pair_merge_table(A.letter_array(), n)
    for p in range(n):
        for q in range(p + 1, n):
            if not good[p, q]:
                return False
    return True


def shortest_reset_word(A: SemiAutomaton) -> Optional[list[int]]:
    """A minimum-length synchronizing word, lexicographically smallest
    among the minimal ones; None when the automaton is not synchronizing."""
    _check_subset_cap(A)
    word = reset_word_bfs(A.letter_array(), A.degree)
    if len(word) == 1 and word[0] == -1:
        return None
    return [int(x) for x in word]


def _merged_syn_dfa(sub: SubsetAutomaton):
    """Collapse all singleton subset states into one accepting sink.

    Returns (trans, accepting_index or None).  Sound because a singleton
    image stays a singleton under every letter.
    """
    singles = set(sub.accepting_indices())
    if not singles:
        trans = np.array(sub.transitions, dtype=np.int32)
        return trans, None
    remap = np.empty(len(sub.states), dtype=np.int32)
    nxt = 0
    for i in range(len(sub.states)):
        if i in singles:
            remap[i] = -1
        else:
            remap[i] = nxt
            nxt += 1
    acc = nxt
    remap[remap == -1] = acc
    trans = np.empty((nxt + 1, len(sub.transitions[0])), dtype=np.int32)
    for i, row in enumerate(sub.transitions):
        trans[remap[i]] = [remap[j] for j in row]
    trans[acc] = acc  # accepting sink: singletons only map to singletons
    return trans, acc


def minimal_syn_dfa(
    A: SemiAutomaton,
    method: str = "refine",
    include_classes: bool = False,
) -> DfaSummary:
    """Size of the minimal DFA of the synchronizing language of A.

    Built from the reachable subset automaton with all singleton states
    merged into one accepting state, then minimized.  method="refine" uses
    Moore partition refinement; method="pairwise" counts classes through
    the independent pairwise-marking oracle.  When the language is empty
    every state is equivalent and the count is 1 (the dead sink).
    """
    sub = build_subset_automaton(A)
    trans, acc = _merged_syn_dfa(sub)
    init = np.zeros(trans.shape[0], dtype=np.int64)
    if acc is not None:
        init[acc] = 1
    if method == "refine":
        labels = moore_refine(trans, init)
    elif method == "pairwise":
        labels = _pairwise_classes(trans, init)
    else:
        raise ValueError(f"unknown method {method!r}")
    state_count = int(labels.max()) + 1
    reps = None
    if include_classes:
        singles = set(sub.accepting_indices())
        classes: dict[int, list[str]] = {}
        for i, s in enumerate(sub.states):
            if i in singles and acc is not None:
                continue
            # merged index, matching the renumbering in _merged_syn_dfa
            merged_i = sum(1 for j in range(i) if j not in singles)
            classes.setdefault(int(labels[merged_i]), []).append(mask_to_str(s))
        if acc is not None:
            classes.setdefault(int(labels[acc]), []).extend(
                mask_to_str(sub.states[i]) for i in sorted(singles)
            )
        reps = tuple(tuple(classes[k]) for k in sorted(classes))
    return DfaSummary(state_count, 0 if acc is None else 1, reps)


def _pairwise_classes(trans: np.ndarray, init: np.ndarray) -> np.ndarray:
    """Equivalence classes by iterated pairwise marking (table filling).

    Independent oracle for the Moore refinement path; O(S^2 * L) per round.
    """
    S, L = trans.shape
    marked = np.zeros((S, S), dtype=bool)
    for p in range(S):
        for q in range(S):
            if init[p] != init[q]:
                marked[p, q] = True
    changed = True
    while changed:
        changed = False
        for p in range(S):
            for q in range(p + 1, S):
                if marked[p, q]:
                    continue
                for l in range(L):
                    if marked[trans[p, l], trans[q, l]]:
                        marked[p, q] = True
                        marked[q, p] = True
                        changed = True
                        break
    labels = np.full(S, -1, dtype=np.int64)
    nxt = 0
    for p in range(S):
        if labels[p] < 0:
            labels[~marked[p] & (labels < 0)] = nxt
            nxt += 1
    return labels


def _collapse_refinement(A: SemiAutomaton, masks: list[int]):
    """Moore labels for the collapse DFA over the given non-singleton masks.

    States are the masks plus one absorbing sink entered when an image
    drops out of the mask list (i.e. becomes a singleton).  Returns
    (labels, sink_label_index) with labels aligned to `masks`.
    """
    index = {m: i for i, m in enumerate(masks)}
    sink = len(masks)
    L = len(A.letters)
    trans = np.empty((sink + 1, L), dtype=np.int32)
    for i, m in enumerate(masks):
        for l, t in enumerate(A.letters):
            img = t.apply_mask(m)
            trans[i, l] = index.get(img, sink)
    trans[sink] = sink
    init = np.zeros(sink + 1, dtype=np.int64)
    init[sink] = 1
    labels = moore_refine(trans, init)
    return labels[:sink], labels[sink]


def _all_2subset_masks(n: int) -> list[int]:
    return [(1 << a) | (1 << b) for a in range(n) for b in range(a + 1, n)]


def all_2subsets_distinguishable(
    A: SemiAutomaton,
) -> tuple[bool, Optional[tuple[frozenset[int], frozenset[int]]]]:
    """Whether every two distinct 2-subsets are distinguishable, i.e. some
    word maps exactly one of them to a singleton.

    Works on the C(n,2)-state collapse DFA, so it never builds the power
    set.  The witness is the first indistinguishable pair in lexicographic
    order."""
    n = A.degree
    masks = _all_2subset_masks(n)
    if len(masks) < 2:
        return True, None
    labels, _ = _collapse_refinement(A, masks)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if labels[i] == labels[j]:
                return False, (mask_to_set(masks[i]), mask_to_set(masks[j]))
    return True, None


def disjoint_2subsets_distinguishable(
    A: SemiAutomaton,
) -> tuple[bool, Optional[tuple[frozenset[int], frozenset[int]]]]:
    """Variant quantified over disjoint 2-subsets only."""
    masks = _all_2subset_masks(A.degree)
    if len(masks) < 2:
        return True, None
    labels, _ = _collapse_refinement(A, masks)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                continue
            if labels[i] == labels[j]:
                return False, (mask_to_set(masks[i]), mask_to_set(masks[j]))
    return True, None


def _nonsingleton_masks(n: int) -> list[int]:
    return [m for m in range(1, 1 << n) if m & (m - 1)]


def all_nonsingleton_distinguishable(A: SemiAutomaton) -> bool:
    ok, _ = all_nonsingleton_distinguishable_witness(A)
    return ok


def all_nonsingleton_distinguishable_witness(
    A: SemiAutomaton,
) -> tuple[bool, Optional[tuple[frozenset[int], frozenset[int]]]]:
    """Whether every two distinct subsets of size >= 2 are distinguishable.

    Enumerates all 2^n - n - 1 non-singleton subsets, hence subject to the
    power-set cap."""
    _check_subset_cap(A)
    masks = _nonsingleton_masks(A.degree)
    if len(masks) < 2:
        return True, None
    labels, _ = _collapse_refinement(A, masks)
    seen: dict[int, int] = {}
    for i, m in enumerate(masks):
        lab = int(labels[i])
        if lab in seen:
            return False, (mask_to_set(masks[seen[lab]]), mask_to_set(m))
        seen[lab] = i
    return True, None


def different_cardinality_reachable(A: SemiAutomaton) -> bool:
    ok, _ = different_cardinality_reachable_witness(A)
    return ok


def different_cardinality_reachable_witness(
    A: SemiAutomaton,
) -> tuple[bool, Optional[tuple[frozenset[int], frozenset[int]]]]:
    """Whether every two distinct non-singleton subsets can be mapped to
    images of different cardinality by some monoid element.

    Two subsets fail exactly when their image cardinalities agree under
    every word, i.e. when Moore refinement with the cardinality as the
    initial label cannot separate them."""
    _check_subset_cap(A)
    n = A.degree
    masks = list(range(1, 1 << n))
    index = {m: i for i, m in enumerate(masks)}
    L = len(A.letters)
    trans = np.empty((len(masks), L), dtype=np.int32)
    for i, m in enumerate(masks):
        for l, t in enumerate(A.letters):
            trans[i, l] = index[t.apply_mask(m)]
    init = np.array([bin(m).count("1") for m in masks], dtype=np.int64)
    labels = moore_refine(trans, init)
    seen: dict[int, int] = {}
    for i, m in enumerate(masks):
        if not m & (m - 1):
            continue
        lab = int(labels[i])
        if lab in seen:
            return False, (mask_to_set(masks[seen[lab]]), mask_to_set(m))
        seen[lab] = i
    return True, None


def distinguish_witness(A: SemiAutomaton, S: frozenset[int], T: frozenset[int]) -> Optional[list[int]]:
    """A shortest word mapping exactly one of S, T to a singleton.

    BFS on the product of the two collapse runs, letters in order, so the
    returned word is lexicographically smallest among the shortest ones.
    Returns None when no such word exists."""
    n = A.degree
    for X in (S, T):
        if len(X) < 2:
            raise ValueError("sets must have size at least 2")
        for p in X:
            if not 0 <= p < n:
                raise ValueError(f"point {p} outside [0, {n})")
    if S == T:
        return None
    ms = _set_to_mask(S)
    mt = _set_to_mask(T)
    start = (ms, mt)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int]] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        a, b = state
        for l, t in enumerate(A.letters):
            ia = t.apply_mask(a)
            ib = t.apply_mask(b)
            sa = not ia & (ia - 1)
            sb = not ib & (ib - 1)
            nxt = (ia, ib)
            if nxt in seen:
                continue
            seen.add(nxt)
            parent[nxt] = (state, l)
            if sa != sb:
                word = [l]
                cur = state
                while cur != start:
                    cur, lx = parent[cur]
                    word.append(lx)
                word.reverse()
                return word
            if sa and sb:
                continue  # both collapsed: dead
            if ia == ib:
                continue  # equal forever: dead
            queue.append(nxt)
    return None


def _set_to_mask(S) -> int:
    m = 0
    for p in S:
        m |= 1 << p
    return m


def mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def mask_to_str(mask: int) -> str:
    return set_to_str(mask_to_set(mask))


def set_to_str(S) -> str:
    return "{" + ",".join(str(p) for p in sorted(S)) + "}"


def parse_set(text: str, n: int) -> frozenset[int]:
    """Parse a point set like "{0,2}"."""
    t = text.strip()
    if not (t.startswith("{") and t.endswith("}")):
        raise ParseError(f"not a set: {text!r}")
    body = t[1:-1].strip()
    if not body:
        return frozenset()
    try:
        points = [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad set {text!r}") from exc
    for p in points:
        if not 0 <= p < n:
            raise ParseError(f"point {p} outside [0, {n})")
    return frozenset(points)


def word_to_str(word) -> str:
    return " ".join(str(x) for x in word)


def parse_automaton_file(text: str) -> SemiAutomaton:
    """Parse the .aut format: "degree n" then one letter (image list) per line."""
    degree = None
    letters: list[Transformation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ParseError(f"line {lineno}: expected 'degree n', got {line!r}")
            try:
                degree = int(parts[1])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad degree {parts[1]!r}") from exc
            if degree < 1:
                raise ParseError(f"line {lineno}: degree must be positive")
            continue
        try:
            letters.append(perm.parse_image(line, degree))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if degree is None:
        raise ParseError("missing 'degree n' line")
    if not letters:
        raise ParseError("no letters given")
    return SemiAutomaton(degree, tuple(letters))


def cerny_automaton(n: int) -> SemiAutomaton:
    """The classic slowly synchronizing family: a cyclic shift plus a letter
    merging 0 into 1; shortest reset word has length (n-1)^2."""
    if n < 2:
        raise ValueError("need n >= 2")
    shift = Transformation(tuple((i + 1) % n for i in range(n)))
    merge = Transformation((1,) + tuple(range(1, n)))
    return SemiAutomaton(n, (shift, merge))
