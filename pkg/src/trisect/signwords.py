"""Cyclic sign words and their reduction.

A sign word records, in cyclic order, the signs of the intersections of
one curve with a fixed transverse curve.  Arcs between consecutive
intersection points inherit a type from the boundary signs: equal signs
bound a positive arc, opposite signs a negative one.  Removing an
adjacent opposite-sign pair shortens the word by two without changing
its sum; words with sum zero always admit such a reduction.
"""

from .errors import InvalidInput, NoNegativeSubarc


def _check_word(word):
    word = tuple(int(x) for x in word)
    if any(x not in (-1, 1) for x in word):
        raise InvalidInput("sign words consist of +1 and -1 entries")
    return word


def subarc_profile(word):
    """Counts of (positive, negative) arcs of a cyclic sign word.

    Every cyclic adjacency contributes once, so the counts sum to the
    word length.

    >>> subarc_profile([1, -1])
    (0, 2)
    >>> subarc_profile([1, 1, 1])
    (3, 0)
    """
    word = _check_word(word)
    if not word:
        raise InvalidInput("the empty word has no subarcs")
    n = len(word)
    negative = sum(1 for i in range(n) if word[i] != word[(i + 1) % n])
    return n - negative, negative


def wave_reduce(word):
    """Remove the leftmost adjacent opposite-sign pair of a cyclic word.

    The length drops by exactly two and the sum is preserved.  Raises
    NoNegativeSubarc when the word is constant (or empty).

    >>> wave_reduce([1, 1, -1, -1])
    (1, -1)
    >>> wave_reduce([1, -1])
    ()
    """
    word = _check_word(word)
    n = len(word)
    for i in range(n):
        if word[i] != word[(i + 1) % n]:
            if i + 1 < n:
                return word[:i] + word[i + 2:]
            return word[1:-1]
    raise NoNegativeSubarc("the word has no adjacent opposite signs")
