"""Regenerate the golden character files from the brute-force oracles.

    python tests/golden/regen.py

Each file lists the character of one Demazure module as sorted
'weight : multiplicity' lines.  The values come from dictionary Demazure
operators applied along a reduced word found by breadth-first search, not
from the path model or the array kernels used by the library.
"""

import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.dirname(HERE))

from kacdem.cartan import AffineWeight, build_datum, format_weight  # noqa: E402
from kacdem.crystal import stabilizer_nodes  # noqa: E402
from kacdem.weyl import weyl_group  # noqa: E402

from oracles import Ball, brute_min_coset_rep, naive_demazure_word  # noqa: E402

# name -> (type, Lambda coefficients, coweight in lattice coordinates)
CASES = {
    "A1_Lo_alpha": ("A1~1", (1, 0), (2,)),
    "A1_L1_minus_alpha": ("A1~1", (0, 1), (-2,)),
    "A1_LoL1_omega": ("A1~1", (1, 1), (1,)),
    "A1_LoL1_minus_omega": ("A1~1", (1, 1), (-1,)),
    "A1_LoL1_alpha": ("A1~1", (1, 1), (2,)),
    "A1_LoL1_minus_alpha": ("A1~1", (1, 1), (-2,)),
    "A1_2Lo_alpha": ("A1~1", (2, 0), (2,)),
    "A2_2L1_omega2": ("A2~1", (0, 2, 0), (0, 1)),
    "A2tw_Lo_omega2": ("A2~2", (1, 0), (1,)),
    "A2tw_2L1_minus_omega2": ("A2~2", (0, 2), (-1,)),
}


def oracle_lines(label, coeffs, mu):
    g = weyl_group(build_datum(label))
    d = g.datum
    lam = AffineWeight(d.label, coeffs, 0)
    sigma = g.omega_decompose(mu).element
    x = g.translation(mu) * sigma.inverse()
    ball = Ball(g, g.length(x) + 8)
    w = brute_min_coset_rep(ball, x, stabilizer_nodes(d, lam))
    chi = naive_demazure_word(d, lam, ball.a_reduced_word(w))
    assert all(v > 0 for v in chi.values())
    return [f"{format_weight(AffineWeight(d.label, k[:-1], k[-1]))} : {v}" for k, v in sorted(chi.items())]


def main():
    for name, (label, coeffs, mu) in CASES.items():
        with open(os.path.join(HERE, name + ".txt"), "w") as fh:
            fh.write("\n".join(oracle_lines(label, coeffs, mu)) + "\n")


if __name__ == "__main__":
    main()
