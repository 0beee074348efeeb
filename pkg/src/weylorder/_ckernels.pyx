# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word normal-ordering kernel.

A word is a bytes object over {0: a, 1: ad}.  The result lists integer
coefficients c[k] of eps^k ad^(P-k) a^(Q-k), where P and Q count the
creation and annihilation letters.
"""

cdef enum:
    MAXK = 17

MAX_LETTERS = 32


def normal_order_word(const unsigned char[:] word):
    cdef Py_ssize_t n = word.shape[0], j
    cdef long long c[MAXK]
    cdef int q = 0, kmax = 0, k
    if n > MAX_LETTERS:
        raise OverflowError("word too long for the int64 kernel")
    c[0] = 1
    for j in range(n):
        if word[j] == 0:
            q += 1
        else:
            # a^(q-k) ad = ad a^(q-k) + (q-k) eps a^(q-k-1)
            if kmax < q:
                c[kmax + 1] = 0
                kmax += 1
            for k in range(kmax - 1, -1, -1):
                c[k + 1] += (q - k) * c[k]
    return [c[k] for k in range(kmax + 1)]


def normal_order_batch(list words):
    return [normal_order_word(w) for w in words]
