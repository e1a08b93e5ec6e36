"""Integer kernels with a numba implementation and a pure numpy fallback.

Set KACDEM_NO_NUMBA=1 to force the numpy versions (also used automatically
when numba is not importable).
"""

import os

import numpy as np

USE_NUMBA = os.environ.get("KACDEM_NO_NUMBA", "") not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False


# ---------------------------------------------------------------------------
# numpy versions


def count_inversions_np(gammas, ns, wa, shift):
    """Number of roots (gamma, n) mapped to negative roots by (gamma, n) -> (wa gamma, n + wa gamma . shift)."""
    if len(ns) == 0:
        return 0
    img = gammas @ wa.T
    n2 = ns + img @ shift
    neg = (n2 < 0) | ((n2 == 0) & (img < 0).any(axis=1))
    return int(neg.sum())


def demazure_expand_np(rows, mult, alpha, i):
    """Apply the Demazure operator D_i term by term, without merging duplicates.

    rows are integer weights (one per row) whose column i holds the pairing
    with the simple coroot i; alpha is the simple root alpha_i in the same
    coordinates.
    """
    n = rows[:, i]
    out_rows, out_mult = [], []
    pos = n >= 0
    if pos.any():
        r, m, k = rows[pos], mult[pos], n[pos]
        reps = k + 1
        base = np.repeat(r, reps, axis=0)
        steps = np.concatenate([np.arange(x + 1) for x in k])
        out_rows.append(base - steps[:, None] * alpha[None, :])
        out_mult.append(np.repeat(m, reps))
    neg = n <= -2
    if neg.any():
        r, m, k = rows[neg], mult[neg], -n[neg] - 1
        base = np.repeat(r, k, axis=0)
        steps = np.concatenate([np.arange(1, x + 1) for x in k])
        out_rows.append(base + steps[:, None] * alpha[None, :])
        out_mult.append(-np.repeat(m, k))
    if not out_rows:
        return np.zeros((0, rows.shape[1]), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(out_rows), np.concatenate(out_mult)


# ---------------------------------------------------------------------------
# numba versions


if USE_NUMBA:

    @njit(cache=True)
    def count_inversions_nb(gammas, ns, wa, shift):
        m, ell = gammas.shape
        total = 0
        img = np.empty(ell, dtype=np.int64)
        for r in range(m):
            dot = 0
            anyneg = False
            for a in range(ell):
                s = 0
                for b in range(ell):
                    s += wa[a, b] * gammas[r, b]
                img[a] = s
                dot += s * shift[a]
                if s < 0:
                    anyneg = True
            n2 = ns[r] + dot
            if n2 < 0 or (n2 == 0 and anyneg):
                total += 1
        return total

    @njit(cache=True)
    def demazure_expand_nb(rows, mult, alpha, i):
        m, width = rows.shape
        size = 0
        for r in range(m):
            n = rows[r, i]
            if n >= 0:
                size += n + 1
            elif n <= -2:
                size += -n - 1
        out = np.empty((size, width), dtype=np.int64)
        om = np.empty(size, dtype=np.int64)
        pos = 0
        for r in range(m):
            n = rows[r, i]
            if n >= 0:
                for k in range(n + 1):
                    for c in range(width):
                        out[pos, c] = rows[r, c] - k * alpha[c]
                    om[pos] = mult[r]
                    pos += 1
            elif n <= -2:
                for k in range(1, -n):
                    for c in range(width):
                        out[pos, c] = rows[r, c] + k * alpha[c]
                    om[pos] = -mult[r]
                    pos += 1
        return out, om

    count_inversions = count_inversions_nb
    demazure_expand = demazure_expand_nb
else:
    count_inversions = count_inversions_np
    demazure_expand = demazure_expand_np


def merge_terms(rows, mult):
    """Combine equal rows, summing multiplicities and dropping zeros."""
    if len(mult) == 0:
        return rows, mult
    uniq, inv = np.unique(rows, axis=0, return_inverse=True)
    acc = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(acc, inv.reshape(-1), mult)
    keep = acc != 0
    return uniq[keep], acc[keep]
