"""Pure-Python word kernels.

Words are tuples of nonzero ints: ``+i`` is sigma_i and ``-i`` its inverse.
This module and the compiled ``_ckernels`` expose the same functions with the
same results; ``braidrev.kernels`` picks one at import time.
"""

# move kind codes shared with the compiled kernels
RIGHT, LEFT, COMMUTE, BRAID = 0, 1, 2, 3
# post-processing variants
PLAIN, REDUCED, STRONG = 0, 1, 2

FLAG_RIGHT, FLAG_LEFT, FLAG_COMMUTE, FLAG_BRAID = 1, 2, 4, 8


def free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _strong_site(w):
    for k in range(len(w) - 2):
        a = w[k]
        if w[k + 2] == -a and abs(abs(a) - abs(w[k + 1])) >= 2:
            return k
    return -1


def strong_reduce(w):
    w = free_reduce(w)
    while True:
        k = _strong_site(w)
        if k < 0:
            return w
        w = free_reduce(w[:k] + (w[k + 1],) + w[k + 3:])


def right_step(i, j):
    """Replacement for the subword sigma_i^-1 sigma_j (i, j > 0)."""
    if i == j:
        return ()
    if abs(i - j) >= 2:
        return (j, -i)
    return (j, i, -j, -i)


def left_step(i, j):
    """Replacement for the subword sigma_i sigma_j^-1 (i, j > 0)."""
    if i == j:
        return ()
    if abs(i - j) >= 2:
        return (-j, i)
    return (-j, -i, j, i)


def reverse_right(w, budget):
    """Leftmost right reversing to a positive-negative word.

    Returns ``(numerator, denominator, steps)``; ``steps`` is -1 when more
    than ``budget`` steps would be needed.
    """
    w = list(w)
    steps = 0
    k = 0
    while k < len(w) - 1:
        a, b = w[k], w[k + 1]
        if a < 0 < b:
            if steps >= budget:
                return (), (), -1
            w[k:k + 2] = right_step(-a, b)
            steps += 1
            if k:
                k -= 1
        else:
            k += 1
    split = 0
    while split < len(w) and w[split] > 0:
        split += 1
    return tuple(w[:split]), tuple(-x for x in reversed(w[split:])), steps


def reverse_left(w, budget):
    """Leftmost left reversing to a negative-positive word.

    Returns ``(numerator, denominator, steps)`` with final word
    ``denominator^-1 numerator``.
    """
    w = list(w)
    steps = 0
    k = 0
    while k < len(w) - 1:
        a, b = w[k], w[k + 1]
        if a > 0 > b:
            if steps >= budget:
                return (), (), -1
            w[k:k + 2] = left_step(a, -b)
            steps += 1
            if k:
                k -= 1
        else:
            k += 1
    split = 0
    while split < len(w) and w[split] < 0:
        split += 1
    return tuple(w[split:]), tuple(-x for x in reversed(w[:split])), steps


def raw_moves(w, flags):
    """All single moves as ``(kind, position, replaced_length, replacement)``."""
    out = []
    n = len(w)
    for k in range(n - 1):
        a, b = w[k], w[k + 1]
        if a < 0 < b:
            if flags & FLAG_RIGHT:
                out.append((RIGHT, k, 2, right_step(-a, b)))
        elif a > 0 > b:
            if flags & FLAG_LEFT:
                out.append((LEFT, k, 2, left_step(a, -b)))
        else:
            # same sign
            d = abs(abs(a) - abs(b))
            if d >= 2:
                if flags & FLAG_COMMUTE:
                    out.append((COMMUTE, k, 2, (b, a)))
            elif d == 1 and flags & FLAG_BRAID and k + 2 < n and w[k + 2] == a:
                out.append((BRAID, k, 3, (b, a, b)))
    return out


def successors(w, flags, variant):
    """Words reachable in one move, post-processed per ``variant``.

    Returns a list of ``(kind, position, word)``.
    """
    out = []
    for kind, k, span, rep in raw_moves(w, flags):
        v = w[:k] + rep + w[k + span:]
        if variant == REDUCED:
            v = free_reduce(v)
        elif variant == STRONG:
            v = strong_reduce(v)
        out.append((kind, k, v))
    return out


def expand(w, flags, variant):
    """``successors`` on byte-encoded words (letter ``x`` stored as ``x + 64``)."""
    t = tuple(x - 64 for x in w)
    return [(kind, k, bytes(x + 64 for x in v)) for kind, k, v in successors(t, flags, variant)]
