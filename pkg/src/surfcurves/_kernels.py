"""Inner loops of the linked-pair counter.

Letters are integer codes: generator ``i`` read forwards is ``2*i`` and
backwards is ``2*i + 1``.  The same integer names the dart a letter leaves
through, and ``code ^ 1`` is both the inverse letter and the dart it
arrives through.

The functions are compiled with numba when it is importable, unless the
environment variable ``SURFCURVES_DISABLE_NUMBA`` is set to a non-empty
value other than ``0``.  The plain versions stay available as ``python`` for
benchmarking and for checking the compiled ones.
"""

import os
from types import SimpleNamespace

import numpy as np


def _numba_requested():
    flag = os.environ.get("SURFCURVES_DISABLE_NUMBA", "")
    return flag in ("", "0")


try:
    if not _numba_requested():
        raise ImportError
    import numba

    jit = numba.njit
    NUMBA = True
except ImportError:

    def jit(f):
        return f

    NUMBA = False


def build(jit):
    """Return the kernel functions wrapped by ``jit``."""

    @jit
    def ray_letter(word, base, direction, t):
        n = word.shape[0]
        if direction > 0:
            return word[(base + t) % n]
        return word[(base - 1 - t) % n] ^ 1

    @jit
    def compare_rays(pos, twist, w1, b1, d1, w2, b2, d2, sigma0, depth):
        """Order two rays leaving the same vertex; 0 when they agree to ``depth``."""
        nd = pos.shape[0]
        sigma = sigma0
        prev = -1
        for t in range(depth):
            x = ray_letter(w1, b1, d1, t)
            y = ray_letter(w2, b2, d2, t)
            if x != y:
                if prev < 0:
                    rx = (sigma * pos[x]) % nd
                    ry = (sigma * pos[y]) % nd
                else:
                    back = pos[prev ^ 1]
                    rx = (sigma * (pos[x] - back)) % nd
                    ry = (sigma * (pos[y] - back)) % nd
                return -1 if rx < ry else 1
            if twist[x >> 1]:
                sigma = -sigma
            prev = x
        return 0

    @jit
    def _between(pos, twist, lo_w, lo_b, lo_d, hi_w, hi_b, hi_d, w, b, d, depth):
        # returns 1 strictly inside (lo, hi), 0 outside, -1 on a tie
        c1 = compare_rays(pos, twist, lo_w, lo_b, lo_d, w, b, d, 1, depth)
        c2 = compare_rays(pos, twist, w, b, d, hi_w, hi_b, hi_d, 1, depth)
        if c1 == 0 or c2 == 0:
            return -1
        return 1 if (c1 < 0 and c2 < 0) else 0

    @jit
    def linked_count(pos, twist, w1, w2, same, depth):
        """Ordered count of linked lift pairs whose overlap starts at the base vertex.

        Lifts of the first word are taken one per rotation (a fundamental domain
        of the deck action along it).  Returns -1 if some endpoints coincide.
        """
        n1 = w1.shape[0]
        n2 = w2.shape[0]
        total = 0
        for i in range(n1):
            a_back = w1[(i - 1) % n1] ^ 1
            # order the two ends of the first lift
            c = compare_rays(pos, twist, w1, i, -1, w1, i, 1, 1, depth)
            if c == 0:
                return -1
            if c < 0:
                lo_b, lo_d, hi_b, hi_d = i, -1, i, 1
            else:
                lo_b, lo_d, hi_b, hi_d = i, 1, i, -1
            for j in range(n2):
                if same and j == i:
                    continue
                b_out = w2[j]
                b_back = w2[(j - 1) % n2] ^ 1
                if a_back == b_out or a_back == b_back:
                    continue
                p = _between(pos, twist, w1, lo_b, lo_d, w1, hi_b, hi_d, w2, j, 1, depth)
                m = _between(pos, twist, w1, lo_b, lo_d, w1, hi_b, hi_d, w2, j, -1, depth)
                if p < 0 or m < 0:
                    return -1
                if p != m:
                    total += 1
        return total

    return SimpleNamespace(
        ray_letter=ray_letter, compare_rays=compare_rays, linked_count=linked_count
    )


python = build(lambda f: f)
compiled = build(jit) if NUMBA else python
ray_letter = compiled.ray_letter
compare_rays = compiled.compare_rays
linked_count = compiled.linked_count


def encode_word(letters, gen_index):
    out = np.empty(len(letters), dtype=np.int64)
    for k, ch in enumerate(letters):
        out[k] = 2 * gen_index[ch.lower()] + (0 if ch.islower() else 1)
    return out
