"""Pure-Python mirror of the compiled kernels in ``_ckernels.pyx``."""

MAX_LETTERS = None


def normal_order_word(word):
    c = [1]
    q = 0
    for letter in word:
        if letter == 0:
            q += 1
            continue
        # a^(q-k) ad = ad a^(q-k) + (q-k) eps a^(q-k-1)
        if len(c) <= q:
            c.append(0)
        for k in range(len(c) - 2, -1, -1):
            c[k + 1] += (q - k) * c[k]
    return c


def normal_order_batch(words):
    return [normal_order_word(w) for w in words]
