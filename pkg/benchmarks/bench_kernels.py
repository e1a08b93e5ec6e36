"""Compare the numba kernels against their numpy fallbacks on realistic inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints the best wall time per kernel and the speedup.  Both versions must
agree on every input; the script exits non-zero if they do not.
"""

import argparse
import sys
import time

import numpy as np

from kacdem import _kernels
from kacdem.cartan import build_datum
from kacdem.demazure import CharacterPoly, demazure_char_word
from kacdem.weyl import weyl_group


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def inversion_inputs(label, size):
    group = weyl_group(build_datum(label))
    mu = tuple(size * (k + 1) for k in range(group.rank))
    x = group.translation(mu) * group.finite(group.finite_group()[-1])
    shift = group.pairing @ np.array(x.trans, dtype=np.int64)
    group.length(x)  # fills the root table up to the needed bound
    bound = int(np.abs(group._finite_parts @ shift).max())
    keep = group._roots_n <= bound
    wa = np.array(group.on_alpha(x.fin), dtype=np.int64)
    return (np.ascontiguousarray(group._roots_g[keep]), np.ascontiguousarray(group._roots_n[keep]), wa, shift)


def expand_inputs(label, level, length):
    d = build_datum(label)
    lam = d.Lam(0) * level
    word = tuple((k % (d.rank + 1)) for k in range(length))
    chi = demazure_char_word(d, lam, word)
    rows, mult = chi.arrays()
    return rows, mult, np.array(d.alpha_int(1), dtype=np.int64), 1


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if not _kernels.USE_NUMBA:
        print("numba disabled (KACDEM_NO_NUMBA set or numba missing); nothing to compare")
        return 0

    cases = [
        ("count_inversions", "A2~1 |mu|=20", inversion_inputs("A2~1", 20),
         _kernels.count_inversions_np, _kernels.count_inversions_nb),
        ("count_inversions", "C3~1 |mu|=12", inversion_inputs("C3~1", 12),
         _kernels.count_inversions_np, _kernels.count_inversions_nb),
        ("demazure_expand", "A2~1 level 4, 10 ops", expand_inputs("A2~1", 4, 10),
         _kernels.demazure_expand_np, _kernels.demazure_expand_nb),
        ("demazure_expand", "A2~2 level 6, 12 ops", expand_inputs("A2~2", 6, 12),
         _kernels.demazure_expand_np, _kernels.demazure_expand_nb),
    ]
    ok = True
    print(f"{'kernel':18} {'case':24} {'rows':>7} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for name, case, inputs, f_np, f_nb in cases:
        f_nb(*inputs)  # compile outside the timing
        t_np, r_np = best_of(lambda: f_np(*inputs), args.repeat)
        t_nb, r_nb = best_of(lambda: f_nb(*inputs), args.repeat)
        if name == "count_inversions":
            same = r_np == r_nb
        else:
            a = CharacterPoly.from_arrays("x", *_kernels.merge_terms(*r_np))
            b = CharacterPoly.from_arrays("x", *_kernels.merge_terms(*r_nb))
            same = a.terms == b.terms
        ok &= same
        print(f"{name:18} {case:24} {len(inputs[0]):7d} {t_np * 1e3:10.3f} {t_nb * 1e3:10.3f} "
              f"{t_np / t_nb:7.1f}x{'' if same else '  MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
