"""Littelmann LS paths for integrable highest weight modules.

A path is stored as a tuple of segments (direction, length).  Directions are
integer weights written as coefficients over Lambda_o..Lambda_l followed by
the delta coefficient; lengths are exact rationals summing to 1.  Segments
are kept merged, so equal paths have equal tuples.
"""

from dataclasses import dataclass
from functools import lru_cache
import json

from ._rational import Q, fmt_rational, to_fraction
from .cartan import AffineWeight, build_datum, format_weight


class NotDominant(ValueError):
    """Highest weight is not dominant of positive level."""


class NotMinimalRep(ValueError):
    """Weyl element is not the minimal representative of its coset."""


class MixedHighestWeight(ValueError):
    """Crystals with different highest weights cannot be merged."""


ONE = Q(1)
ZERO = Q(0)


class LSPath:
    __slots__ = ("label", "segs", "_hash")

    def __init__(self, label, segs):
        self.label = label
        self.segs = segs
        self._hash = hash(segs)

    def __eq__(self, other):
        return isinstance(other, LSPath) and self.label == other.label and self.segs == other.segs

    def __hash__(self):
        return self._hash

    @property
    def dirs(self):
        return [s[0] for s in self.segs]

    @property
    def breaks(self):
        out = [ZERO]
        for _, ln in self.segs:
            out.append(out[-1] + ln)
        return out

    def weight_tuple(self):
        width = len(self.segs[0][0])
        acc = [ZERO] * width
        for d, ln in self.segs:
            for k in range(width):
                if d[k]:
                    acc[k] += ln * d[k]
        return tuple(int(x) for x in acc)

    def weight(self):
        w = self.weight_tuple()
        return AffineWeight(self.label, w[:-1], w[-1])

    def to_json(self):
        out = []
        for d, ln in self.segs:
            w = AffineWeight(self.label, d[:-1], d[-1])
            out.append({"dir": format_weight(w), "len": fmt_rational(ln)})
        return json.dumps(out, sort_keys=True)

    def sort_key(self):
        return tuple((d, to_fraction(ln)) for d, ln in self.segs)

    def __repr__(self):
        return f"LSPath({self.to_json()})"


def _canonical(segs):
    out = []
    for d, ln in segs:
        if ln == 0:
            continue
        if out and out[-1][0] == d:
            out[-1] = (d, out[-1][1] + ln)
        else:
            out.append((d, ln))
    return tuple(out)


class CrystalEngine:
    """Root operators on LS paths for one datum, with memoisation."""

    def __init__(self, datum):
        self.datum = datum
        self.alphas = tuple(datum.alpha_int(i) for i in range(datum.rank + 1))
        self._f = {}
        self._e = {}

    def _reflect(self, d, i):
        n = d[i]
        if n == 0:
            return d
        a = self.alphas[i]
        return tuple(x - n * y for x, y in zip(d, a))

    @staticmethod
    def _values(segs, i):
        vals = [ZERO]
        for d, ln in segs:
            vals.append(vals[-1] + ln * d[i])
        return vals

    def _apply(self, segs, i, t0, t1):
        """Reflect the part of the path on [t0, t1] (positions along [0, 1])."""
        out = []
        pos = ZERO
        for d, ln in segs:
            start, end = pos, pos + ln
            pos = end
            cuts = [start]
            for t in (t0, t1):
                if start < t < end:
                    cuts.append(t)
            cuts.append(end)
            for a, b in zip(cuts, cuts[1:]):
                if t0 <= a and b <= t1:
                    out.append((self._reflect(d, i), b - a))
                else:
                    out.append((d, b - a))
        return _canonical(out)

    def f(self, i, segs):
        key = (i, segs)
        if key in self._f:
            return self._f[key]
        vals = self._values(segs, i)
        m = min(vals)
        res = None
        if vals[-1] - m >= 1:
            j0 = max(j for j, v in enumerate(vals) if v == m)
            t0 = sum((ln for _, ln in segs[:j0]), ZERO)
            target = m + 1
            pos = t0
            t1 = None
            for j in range(j0, len(segs)):
                d, ln = segs[j]
                if vals[j + 1] >= target:
                    slope = d[i]
                    t1 = pos + (target - vals[j]) / slope
                    break
                pos += ln
            res = self._apply(segs, i, t0, t1)
        self._f[key] = res
        if res is not None:
            self._e[(i, res)] = segs
        return res

    def e(self, i, segs):
        key = (i, segs)
        if key in self._e:
            return self._e[key]
        vals = self._values(segs, i)
        m = min(vals)
        res = None
        if m <= -1:
            j1 = min(j for j, v in enumerate(vals) if v == m)
            t1 = sum((ln for _, ln in segs[:j1]), ZERO)
            target = m + 1
            pos = t1
            t0 = None
            for j in range(j1 - 1, -1, -1):
                d, ln = segs[j]
                pos -= ln
                if vals[j] >= target:
                    slope = d[i]
                    t0 = pos + (target - vals[j]) / slope
                    break
            res = self._apply(segs, i, t0, t1)
        self._e[key] = res
        if res is not None:
            self._f[(i, res)] = segs
        return res

    def f_string(self, i, segs):
        out = [segs]
        cur = self.f(i, segs)
        while cur is not None:
            out.append(cur)
            cur = self.f(i, cur)
        return out


@lru_cache(maxsize=None)
def _engine(label):
    return CrystalEngine(build_datum(label))


def engine(datum):
    return _engine(datum.label)


def _check_dominant(datum, lam):
    if not lam.is_integral() or any(x < 0 for x in lam.coeffs) or datum.level(lam) <= 0:
        raise NotDominant(f"{lam} is not dominant integral of positive level")


def highest_path(datum, lam):
    _check_dominant(datum, lam)
    d = lam.as_int_tuple()
    return LSPath(datum.label, ((d, ONE),))


def f_op(datum, i, path):
    res = engine(datum).f(i, path.segs)
    return None if res is None else LSPath(datum.label, res)


def e_op(datum, i, path):
    res = engine(datum).e(i, path.segs)
    return None if res is None else LSPath(datum.label, res)


def stabilizer_nodes(datum, lam):
    return tuple(i for i, x in enumerate(lam.coeffs) if x == 0)


def demazure_paths_for_word(datum, lam, word):
    """Raw path tuples of f_{word[0]}^* ... f_{word[-1]}^* applied to the highest path."""
    eng = engine(datum)
    cur = {highest_path(datum, lam).segs}
    for i in reversed(word):
        nxt = set()
        for s in cur:
            nxt.update(eng.f_string(i, s))
        cur = nxt
    return cur


@dataclass(frozen=True)
class DemazureCrystal:
    Lambda: AffineWeight
    w: object
    word: tuple
    paths: frozenset

    def __len__(self):
        return len(self.paths)

    def character(self):
        from .demazure import CharacterPoly
        return CharacterPoly.from_paths(self.Lambda.label, self.paths)


def demazure_crystal(group, lam, w, word=None):
    """Demazure crystal B_w(lam) for w in the affine Weyl group."""
    datum = group.datum
    _check_dominant(datum, lam)
    ybar = stabilizer_nodes(datum, lam)
    if len(ybar) <= datum.rank and group.min_coset_rep(w, ybar) != w:
        raise NotMinimalRep(f"{w} is not minimal modulo the stabilizer of {lam}")
    if word is None:
        word, sigma = group.reduced_word(w)
        if sigma != group.e:
            raise ValueError("Demazure crystals are indexed by elements of the affine Weyl group")
    elif group.from_word(word) != w:
        raise ValueError("word does not spell w")
    segs = demazure_paths_for_word(datum, lam, word)
    paths = frozenset(LSPath(datum.label, s) for s in segs)
    return DemazureCrystal(lam, w, tuple(word), paths)


def crystal_union(crystals):
    if not crystals:
        return frozenset()
    lam = crystals[0].Lambda
    if any(c.Lambda != lam for c in crystals):
        raise MixedHighestWeight("crystals have different highest weights")
    out = set()
    for c in crystals:
        out |= c.paths
    return frozenset(out)
