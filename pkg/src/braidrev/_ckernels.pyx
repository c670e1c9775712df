# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels; same functions and results as ``_pykernels``."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memmove
from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING, PyBytes_GET_SIZE

cdef enum:
    RIGHT = 0
    LEFT = 1
    COMMUTE = 2
    BRAID = 3
    PLAIN = 0
    REDUCED = 1
    STRONG = 2
    FLAG_RIGHT = 1
    FLAG_LEFT = 2
    FLAG_COMMUTE = 4
    FLAG_BRAID = 8


cdef struct Buf:
    int *data
    Py_ssize_t size
    Py_ssize_t cap


cdef int buf_init(Buf *b, Py_ssize_t cap) except -1:
    if cap < 16:
        cap = 16
    b.data = <int *> malloc(cap * sizeof(int))
    if b.data == NULL:
        raise MemoryError()
    b.size = 0
    b.cap = cap
    return 0


cdef int buf_reserve(Buf *b, Py_ssize_t cap) except -1:
    cdef int *p
    if cap <= b.cap:
        return 0
    if cap < 2 * b.cap:
        cap = 2 * b.cap
    p = <int *> realloc(b.data, cap * sizeof(int))
    if p == NULL:
        raise MemoryError()
    b.data = p
    b.cap = cap
    return 0


cdef int buf_from_tuple(Buf *b, tuple w) except -1:
    cdef Py_ssize_t n = len(w), k
    buf_init(b, n + 8)
    for k in range(n):
        b.data[k] = w[k]
    b.size = n
    return 0


cdef int buf_from_bytes(Buf *b, bytes w) except -1:
    cdef Py_ssize_t n = PyBytes_GET_SIZE(w), k
    cdef unsigned char *s = <unsigned char *> PyBytes_AS_STRING(w)
    buf_init(b, n + 8)
    for k in range(n):
        b.data[k] = <int> s[k] - 64
    b.size = n
    return 0


cdef tuple buf_slice(int *data, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t k
    return tuple([data[k] for k in range(lo, hi)])


cdef bytes buf_bytes(int *data, Py_ssize_t n):
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef char *s = PyBytes_AS_STRING(out)
    cdef Py_ssize_t k
    for k in range(n):
        s[k] = <char> (data[k] + 64)
    return out


cdef inline int iabs(int x) nogil:
    return -x if x < 0 else x


cdef inline int dist(int a, int b) nogil:
    return iabs(iabs(a) - iabs(b))


cdef Py_ssize_t free_reduce_inplace(int *d, Py_ssize_t n) nogil:
    cdef Py_ssize_t top = 0, k
    for k in range(n):
        if top and d[top - 1] == -d[k]:
            top -= 1
        else:
            d[top] = d[k]
            top += 1
    return top


cdef Py_ssize_t strong_reduce_inplace(int *d, Py_ssize_t n) nogil:
    cdef Py_ssize_t k
    n = free_reduce_inplace(d, n)
    while True:
        k = 0
        while k + 2 < n:
            if d[k + 2] == -d[k] and dist(d[k], d[k + 1]) >= 2:
                break
            k += 1
        if k + 2 >= n:
            return n
        d[k] = d[k + 1]
        memmove(&d[k + 1], &d[k + 3], (n - k - 3) * sizeof(int))
        n = free_reduce_inplace(d, n - 2)


def free_reduce(tuple w):
    cdef Buf b
    buf_from_tuple(&b, w)
    try:
        b.size = free_reduce_inplace(b.data, b.size)
        return buf_slice(b.data, 0, b.size)
    finally:
        free(b.data)


def strong_reduce(tuple w):
    cdef Buf b
    buf_from_tuple(&b, w)
    try:
        b.size = strong_reduce_inplace(b.data, b.size)
        return buf_slice(b.data, 0, b.size)
    finally:
        free(b.data)


cdef inline int step_rep(int left_pos, int i, int j, int *rep) nogil:
    # right step on s_i^-1 s_j (left_pos=0) or left step on s_i s_j^-1 (left_pos=1)
    if i == j:
        return 0
    if iabs(i - j) >= 2:
        if left_pos:
            rep[0] = -j
            rep[1] = i
        else:
            rep[0] = j
            rep[1] = -i
        return 2
    if left_pos:
        rep[0] = -j
        rep[1] = -i
        rep[2] = j
        rep[3] = i
    else:
        rep[0] = j
        rep[1] = i
        rep[2] = -j
        rep[3] = -i
    return 4


cdef long reverse_inplace(Buf *b, int left, long budget) except -2:
    cdef long steps = 0
    cdef Py_ssize_t k = 0, m
    cdef int a, c
    cdef int rep[4]
    cdef int *d
    while k < b.size - 1:
        a = b.data[k]
        c = b.data[k + 1]
        if (left and a > 0 and c < 0) or (not left and a < 0 and c > 0):
            if steps >= budget:
                return -1
            if left:
                m = step_rep(1, a, -c, rep)
            else:
                m = step_rep(0, -a, c, rep)
            buf_reserve(b, b.size + 2)
            d = b.data
            if m != 2:
                memmove(&d[k + m], &d[k + 2], (b.size - k - 2) * sizeof(int))
                b.size += m - 2
            if m:
                d[k] = rep[0]
                d[k + 1] = rep[1]
            if m == 4:
                d[k + 2] = rep[2]
                d[k + 3] = rep[3]
            steps += 1
            if k:
                k -= 1
        else:
            k += 1
    return steps


def reverse_right(tuple w, long budget):
    cdef Buf b
    cdef long steps
    cdef Py_ssize_t split = 0, k
    buf_from_tuple(&b, w)
    try:
        steps = reverse_inplace(&b, 0, budget)
        if steps < 0:
            return (), (), -1
        while split < b.size and b.data[split] > 0:
            split += 1
        den = tuple([-b.data[k] for k in range(b.size - 1, split - 1, -1)])
        return buf_slice(b.data, 0, split), den, steps
    finally:
        free(b.data)


def reverse_left(tuple w, long budget):
    cdef Buf b
    cdef long steps
    cdef Py_ssize_t split = 0, k
    buf_from_tuple(&b, w)
    try:
        steps = reverse_inplace(&b, 1, budget)
        if steps < 0:
            return (), (), -1
        while split < b.size and b.data[split] < 0:
            split += 1
        den = tuple([-b.data[k] for k in range(split - 1, -1, -1)])
        return buf_slice(b.data, split, b.size), den, steps
    finally:
        free(b.data)


cdef inline int move_at(int *d, Py_ssize_t n, Py_ssize_t k, int flags, int *kind, int *span, int *rep) nogil:
    """Replacement length for the move starting at k, or -1 if none."""
    cdef int a = d[k], c = d[k + 1], dd
    if a < 0 and c > 0:
        if flags & FLAG_RIGHT:
            kind[0] = RIGHT
            span[0] = 2
            return step_rep(0, -a, c, rep)
        return -1
    if a > 0 and c < 0:
        if flags & FLAG_LEFT:
            kind[0] = LEFT
            span[0] = 2
            return step_rep(1, a, -c, rep)
        return -1
    dd = dist(a, c)
    if dd >= 2:
        if flags & FLAG_COMMUTE:
            kind[0] = COMMUTE
            span[0] = 2
            rep[0] = c
            rep[1] = a
            return 2
    elif dd == 1 and flags & FLAG_BRAID and k + 2 < n and d[k + 2] == a:
        kind[0] = BRAID
        span[0] = 3
        rep[0] = c
        rep[1] = a
        rep[2] = c
        return 3
    return -1


def raw_moves(tuple w, int flags):
    cdef Buf b
    cdef Py_ssize_t k
    cdef int kind, span, m
    cdef int rep[4]
    out = []
    buf_from_tuple(&b, w)
    try:
        for k in range(b.size - 1):
            m = move_at(b.data, b.size, k, flags, &kind, &span, rep)
            if m >= 0:
                out.append((kind, k, span, buf_slice(rep, 0, m)))
        return out
    finally:
        free(b.data)


cdef Py_ssize_t build_successor(Buf *src, Buf *dst, Py_ssize_t k, int span, int *rep, int m, int variant) except -1:
    cdef Py_ssize_t n = src.size - span + m, j
    buf_reserve(dst, n + 8)
    for j in range(k):
        dst.data[j] = src.data[j]
    for j in range(m):
        dst.data[k + j] = rep[j]
    for j in range(k + span, src.size):
        dst.data[j - span + m] = src.data[j]
    if variant == REDUCED:
        n = free_reduce_inplace(dst.data, n)
    elif variant == STRONG:
        n = strong_reduce_inplace(dst.data, n)
    dst.size = n
    return n


def successors(tuple w, int flags, int variant):
    cdef Buf b, t
    cdef Py_ssize_t k
    cdef int kind, span, m
    cdef int rep[4]
    out = []
    buf_from_tuple(&b, w)
    buf_init(&t, b.size + 8)
    try:
        for k in range(b.size - 1):
            m = move_at(b.data, b.size, k, flags, &kind, &span, rep)
            if m >= 0:
                build_successor(&b, &t, k, span, rep, m, variant)
                out.append((kind, k, buf_slice(t.data, 0, t.size)))
        return out
    finally:
        free(b.data)
        free(t.data)


def expand(bytes w, int flags, int variant):
    cdef Buf b, t
    cdef Py_ssize_t k
    cdef int kind, span, m
    cdef int rep[4]
    out = []
    buf_from_bytes(&b, w)
    buf_init(&t, b.size + 8)
    try:
        for k in range(b.size - 1):
            m = move_at(b.data, b.size, k, flags, &kind, &span, rep)
            if m >= 0:
                build_successor(&b, &t, k, span, rep, m, variant)
                out.append((kind, k, buf_bytes(t.data, t.size)))
        return out
    finally:
        free(b.data)
        free(t.data)
