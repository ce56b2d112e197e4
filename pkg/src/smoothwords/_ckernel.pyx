# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel. Same algorithm and API as ``_pykernel``."""

from libc.stdlib cimport malloc, free

_DIGITS = bytes(range(48, 58)) + bytes(range(10, 256))

cdef struct Tower:
    int a
    int b
    int stride
    int maxlv
    int *length          # per level
    unsigned char *letters
    int *runlen
    int *nruns


cdef int tower_init(Tower *t, int a, int b, int n) except -1:
    t.a = a
    t.b = b
    # |D(w)| < |w| for nonempty w, so at most n + 1 nonempty levels
    t.stride = n + 2
    t.maxlv = n + 2
    t.length = <int *>malloc(t.maxlv * sizeof(int))
    t.letters = <unsigned char *>malloc(t.maxlv * t.stride * sizeof(unsigned char))
    t.runlen = <int *>malloc(t.maxlv * t.stride * sizeof(int))
    t.nruns = <int *>malloc(t.maxlv * t.stride * sizeof(int))
    if not t.length or not t.letters or not t.runlen or not t.nruns:
        tower_free(t)
        raise MemoryError()
    cdef int i
    for i in range(t.maxlv):
        t.length[i] = 0
    return 0


cdef void tower_free(Tower *t):
    free(t.length)
    free(t.letters)
    free(t.runlen)
    free(t.nruns)


cdef inline void tower_pop(Tower *t, int depth) nogil:
    cdef int i
    for i in range(depth):
        t.length[i] -= 1


cdef int tower_push(Tower *t, int x) nogil:
    cdef int lv = 0, n, l, nr, carry, base
    cdef int a = t.a, b = t.b
    while lv < t.maxlv:
        n = t.length[lv]
        base = lv * t.stride
        if n == 0:
            t.letters[base] = <unsigned char>x
            t.runlen[base] = 1
            t.nruns[base] = 1
            t.length[lv] = 1
            return lv + 1
        l = t.runlen[base + n - 1]
        nr = t.nruns[base + n - 1]
        carry = 0
        if x == t.letters[base + n - 1]:
            if l == b:
                break
            if l + 1 == b:
                carry = b
            t.runlen[base + n] = l + 1
            t.nruns[base + n] = nr
        else:
            if nr >= 2:
                if l != a and l != b:
                    break
                if l == a:
                    carry = a
            t.runlen[base + n] = 1
            t.nruns[base + n] = nr + 1
        t.letters[base + n] = <unsigned char>x
        t.length[lv] = n + 1
        lv += 1
        if carry == 0:
            return lv
        x = carry
    tower_pop(t, lv)
    return 0


cdef inline int tower_height(Tower *t) nogil:
    cdef int h = 0
    while h < t.maxlv and t.length[h] > 0:
        h += 1
    return h


def word_height(str word, int a=1, int b=2):
    cdef Tower t
    tower_init(&t, a, b, len(word))
    cdef int h
    try:
        for ch in word:
            if tower_push(&t, ord(ch) - 48) == 0:
                return -1
        h = tower_height(&t)
    finally:
        tower_free(&t)
    return h


def walk(int n_max, int a=1, int b=2, int collect=-1):
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    cdef int size = n_max + 1
    count = [0] * size
    hmin = [1 << 30] * size
    hmax = [-1] * size
    bmin = [1 << 30] * size
    bmax = [-1] * size
    dead = [0] * size
    words = []

    cdef long long *c_count = <long long *>malloc(size * sizeof(long long))
    cdef long long *c_dead = <long long *>malloc(size * sizeof(long long))
    cdef int *c_hmin = <int *>malloc(size * sizeof(int))
    cdef int *c_hmax = <int *>malloc(size * sizeof(int))
    cdef int *c_bmin = <int *>malloc(size * sizeof(int))
    cdef int *c_bmax = <int *>malloc(size * sizeof(int))
    cdef int *cascade = <int *>malloc((size + 1) * sizeof(int))
    cdef int *choice = <int *>malloc((size + 1) * sizeof(int))
    cdef int *kids = <int *>malloc((size + 1) * sizeof(int))
    cdef unsigned char *path = <unsigned char *>malloc((size + 1) * sizeof(unsigned char))
    cdef Tower t
    cdef int i, depth = 0, nb = 0, x, c, h
    tower_init(&t, a, b, n_max)
    try:
        for i in range(size):
            c_count[i] = 0
            c_dead[i] = 0
            c_hmin[i] = 1 << 30
            c_hmax[i] = -1
            c_bmin[i] = 1 << 30
            c_bmax[i] = -1
        c_count[0] = 1
        c_hmin[0] = c_hmax[0] = c_bmin[0] = c_bmax[0] = 0
        if collect == 0:
            words.append("")
        choice[0] = 0
        kids[0] = 0
        while True:
            if depth == n_max or choice[depth] == 2:
                if depth < n_max and kids[depth] == 0:
                    c_dead[depth] += 1
                if depth == 0:
                    break
                depth -= 1
                tower_pop(&t, cascade[depth])
                if path[depth] == b:
                    nb -= 1
                continue
            x = a if choice[depth] == 0 else b
            choice[depth] += 1
            c = tower_push(&t, x)
            if c == 0:
                continue
            kids[depth] += 1
            cascade[depth] = c
            path[depth] = <unsigned char>x
            if x == b:
                nb += 1
            depth += 1
            choice[depth] = 0
            kids[depth] = 0

            c_count[depth] += 1
            h = tower_height(&t)
            if h < c_hmin[depth]:
                c_hmin[depth] = h
            if h > c_hmax[depth]:
                c_hmax[depth] = h
            if nb < c_bmin[depth]:
                c_bmin[depth] = nb
            if nb > c_bmax[depth]:
                c_bmax[depth] = nb
            if depth == collect:
                words.append(path[:depth].translate(_DIGITS).decode("ascii"))
        for i in range(size):
            count[i] = c_count[i]
            dead[i] = c_dead[i]
            hmin[i] = c_hmin[i]
            hmax[i] = c_hmax[i]
            bmin[i] = c_bmin[i]
            bmax[i] = c_bmax[i]
    finally:
        tower_free(&t)
        free(c_count)
        free(c_dead)
        free(c_hmin)
        free(c_hmax)
        free(c_bmin)
        free(c_bmax)
        free(cascade)
        free(choice)
        free(kids)
        free(path)
    return count, hmin, hmax, bmin, bmax, dead, words


def kolakoski(long n):
    if n <= 0:
        return ""
    cdef unsigned char *seq = <unsigned char *>malloc((n + 3) * sizeof(unsigned char))
    if not seq:
        raise MemoryError()
    cdef long filled = 3, i = 2, j
    cdef unsigned char nxt
    try:
        seq[0] = 1
        seq[1] = 2
        seq[2] = 2
        while filled < n:
            nxt = 3 - seq[filled - 1]
            for j in range(seq[i]):
                seq[filled] = nxt
                filled += 1
            i += 1
        for j in range(n):
            seq[j] += 48
        return seq[:n].decode("ascii")
    finally:
        free(seq)
