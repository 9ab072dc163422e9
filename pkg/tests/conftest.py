"""Shared enumeration helpers for the test suite."""

from itertools import product


def all_words(n):
    """Every D/U word of length exactly n."""
    if n == 0:
        yield ""
        return
    for letters in product("DU", repeat=n):
        yield "".join(letters)


def words_up_to(n):
    """Every D/U word of length at most n."""
    for m in range(n + 1):
        yield from all_words(m)


def balanced_words(max_length):
    """Every balanced word of length at most max_length."""
    for w in words_up_to(max_length):
        if 2 * w.count("U") == len(w):
            yield w


def random_word(rng, length):
    return "".join(rng.choice("DU") for _ in range(length))


def random_balanced_commutation(rng, word):
    """Apply one uniformly chosen balanced commutation, if any exists."""
    heights = [0]
    h = 0
    for ch in word:
        h += 1 if ch == "U" else -1
        heights.append(h)
    by_height = {}
    for idx, hh in enumerate(heights):
        by_height.setdefault(hh, []).append(idx)
    candidates = [posns for posns in by_height.values() if len(posns) >= 3]
    if not candidates:
        return word
    posns = rng.choice(candidates)
    i, j, k = sorted(rng.sample(posns, 3))
    return word[:i] + word[j:k] + word[i:j] + word[k:]
