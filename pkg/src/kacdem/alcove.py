"""Fundamental alcove, its facets, and the root data attached to interior points.

Coweights of g^tau are written in fundamental coweight coordinates; node o
has vertex 0.  Roots are finite roots of g^tau in simple-root coordinates
(the extra element -theta_0 is written the same way).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .cartan import positive_roots


class EmptyY(ValueError):
    """A facet needs at least one node."""


class BadPrime(ValueError):
    """The prime divides a_Y, so no interior point with p not dividing m is promised."""


class LevelMismatch(ValueError):
    """The weight does not give an interior point of the facet of its support."""


@dataclass(frozen=True)
class Facet:
    Y: tuple
    vertices: tuple  # one coweight per node of Y
    a_Y: int


@dataclass(frozen=True)
class InteriorPointData:
    Y: tuple
    theta: tuple  # rational coweight
    m: int
    h: tuple  # integer coweight (m/r) theta
    s: tuple  # h = sum s_i omega_i^vee over finite nodes
    s_o: int

    @property
    def support(self):
        nodes = [0] if self.s_o else []
        return tuple(nodes + [i + 1 for i, x in enumerate(self.s) if x])


@dataclass(frozen=True)
class SigmaLevi:
    Pi_sigma: tuple
    roots_MY: frozenset
    roots_Gtheta: frozenset


def _normalize_Y(datum, Y):
    Y = tuple(sorted(set(Y)))
    if not Y:
        raise EmptyY("Y must be nonempty")
    for i in Y:
        if not 0 <= i <= datum.rank:
            raise ValueError(f"node {i} out of range for {datum.label}")
    return Y


def _omega_vee(datum, i):
    return tuple(Fraction(int(k == i - 1)) for k in range(datum.rank))


def a_Y(datum, Y):
    g = 0
    for i in Y:
        g = gcd(g, datum.kac_labels[i])
    return datum.twist * g


def facet(datum, Y):
    Y = _normalize_Y(datum, Y)
    verts = tuple(tuple(x / datum.kac_labels[i] for x in _omega_vee(datum, i)) for i in Y)
    return Facet(Y, verts, a_Y(datum, Y))


def in_alcove(datum, x):
    """<x, alpha_i> >= 0 and <x, theta_0> <= 1."""
    return all(v >= 0 for v in x) and sum((a * v for a, v in zip(datum.theta0, x)), Fraction(0)) <= 1


def point_data(datum, Y, theta):
    """InteriorPointData for a rational coweight theta."""
    r = datum.twist
    den = 1
    for x in theta:
        den = lcm(den, Fraction(x).denominator)
    m = r * den
    h = tuple(int(Fraction(x) * den) for x in theta)
    s_o = den - sum(a * s for a, s in zip(datum.theta0, h))
    return InteriorPointData(tuple(Y), tuple(Fraction(x) for x in theta), m, h, h, s_o)


def candidates(datum, Y):
    """x_Y, then x_k for k in Y ascending."""
    Y = _normalize_Y(datum, Y)
    a = datum.kac_labels
    ell = datum.rank
    total = [Fraction(0)] * ell
    for i in Y:
        if i:
            total[i - 1] += 1
    n_Y = sum(a[i] for i in Y)
    out = [tuple(x / n_Y for x in total)]
    for k in Y:
        v = list(total)
        if k:
            v[k - 1] += 1
        out.append(tuple(x / (a[k] + n_Y) for x in v))
    return out


def interior_point(datum, Y, p=0):
    """First candidate interior point of F_Y whose m is prime to p."""
    Y = _normalize_Y(datum, Y)
    if p and a_Y(datum, Y) % p == 0:
        raise BadPrime(f"p={p} divides a_Y={a_Y(datum, Y)}")
    for theta in candidates(datum, Y):
        ipd = point_data(datum, Y, theta)
        if not p or ipd.m % p:
            return ipd
    raise AssertionError("no candidate interior point found")  # excluded by the good-prime argument


def interior_point_from_weight(datum, lam):
    """theta = sum (n_i/c)(a_i^vee/a_i) omega_i^vee for a dominant weight lam of level c."""
    c = datum.level(lam)
    if c <= 0 or any(x < 0 for x in lam.coeffs):
        raise LevelMismatch(f"{lam} is not dominant of positive level")
    Y = tuple(i for i, x in enumerate(lam.coeffs) if x)
    theta = tuple(lam.coeffs[i] / c * datum.dual_kac_labels[i] / datum.kac_labels[i]
                  for i in range(1, datum.rank + 1))
    ipd = point_data(datum, Y, theta)
    if ipd.support != Y:
        raise LevelMismatch(f"support {ipd.support} differs from {Y}")
    return ipd


def sigma_order(datum, ipd):
    """Smallest positive multiple k of r with k s_i divisible by m for all i."""
    r = datum.twist
    k = r
    while any((k * s) % ipd.m for s in ipd.s):
        k += r
    return k


def root_closure(datum, base):
    """All roots of the system generated by the given roots (reflection closure)."""
    base = [tuple(int(x) for x in b) for b in base]
    if not base:
        return frozenset()
    gram = datum.gram_alpha

    def form(u, v):
        return sum(u[i] * gram[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if u[i] and v[j])

    seen = set(base) | {tuple(-x for x in b) for b in base}
    todo = list(seen)
    while todo:
        g = todo.pop()
        for b in base:
            c = 2 * form(b, g) / form(b, b)
            img = tuple(int(x - c * y) for x, y in zip(g, b))
            if img not in seen:
                seen.add(img)
                todo.append(img)
    return frozenset(seen)


def sigma_levi(datum, Y, ipd):
    Y = _normalize_Y(datum, Y)
    ell = datum.rank
    simple = {i: tuple(int(k == i - 1) for k in range(ell)) for i in range(1, ell + 1)}
    outside = [i for i in range(1, ell + 1) if i not in Y]
    if 0 in Y:
        pi = tuple(simple[i] for i in outside)
    else:
        pi = (tuple(-a for a in datum.theta0),) + tuple(simple[i] for i in outside)
    roots_MY = root_closure(datum, pi)
    allroots = positive_roots(datum.finite_cartan)
    gt = set()
    for u in allroots:
        if sum(s * x for s, x in zip(ipd.s, u)) == 0:
            gt.add(u)
            gt.add(tuple(-x for x in u))
    return SigmaLevi(pi, roots_MY, frozenset(gt))


def levi_roots(datum, Y):
    """Roots of M_Y: closure of the Pi_sigma set for Y."""
    Y = _normalize_Y(datum, Y)
    ell = datum.rank
    outside = [tuple(int(k == i - 1) for k in range(ell)) for i in range(1, ell + 1) if i not in Y]
    if 0 not in Y:
        outside.append(tuple(-a for a in datum.theta0))
    return root_closure(datum, outside)
