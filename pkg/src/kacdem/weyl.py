"""Extended affine Weyl group X_*(T)_tau x| W^tau.

An element rho^mu w is stored as (trans, fin): trans is an integer vector in
the basis of a CoweightLattice, fin an integer matrix acting on finite
weights of g^tau in fundamental weight coordinates.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import itertools

import numpy as np

from . import _kernels
from . import _linalg as la
from .cartan import MixedDatum, build_datum, coweight_lattice, positive_roots, special_elements


class InfiniteParabolic(ValueError):
    """The parabolic subgroup generated by every affine node is infinite."""


def _int_matrix(m):
    return tuple(tuple(int(x) for x in row) for row in m)


def _imatmul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def _imatvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


class WeylElement:
    __slots__ = ("group", "trans", "fin", "_hash")

    def __init__(self, group, trans, fin):
        self.group = group
        self.trans = tuple(int(x) for x in trans)
        self.fin = fin
        self._hash = hash((self.trans, self.fin))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.group is other.group and self.trans == other.trans and self.fin == other.fin

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.group is not self.group:
            raise MixedDatum("Weyl elements of different groups")
        g = self.group
        moved = _imatvec(g.on_lattice(self.fin), other.trans)
        return WeylElement(g, [a + b for a, b in zip(self.trans, moved)], _imatmul(self.fin, other.fin))

    def inverse(self):
        g = self.group
        finv = g.fin_inverse(self.fin)
        moved = _imatvec(g.on_lattice(finv), self.trans)
        return WeylElement(g, [-x for x in moved], finv)

    def __repr__(self):
        return f"WeylElement({format_element(self)})"

    def __str__(self):
        return format_element(self)

    def sort_key(self):
        return (self.trans, self.fin)


@dataclass(frozen=True)
class OmegaElement:
    """A length-zero element written as rho^{-kappa} w."""

    kappa: tuple
    element: WeylElement
    node_perm: tuple  # node_perm[i] = j when the element sends alpha_i to alpha_j


class WeylGroup:
    """Extended affine Weyl group attached to a datum and a coweight lattice."""

    def __init__(self, lattice):
        self.lattice = lattice
        d = lattice.datum
        self.datum = d
        self.rank = d.rank
        ell = d.rank
        c = d.finite_cartan
        self.cartan_int = np.array(c, dtype=np.int64)
        self.identity_fin = tuple(tuple(int(i == j) for j in range(ell)) for i in range(ell))
        self.fin_gens = []
        for i in range(ell):
            m = [[int(r == s) for s in range(ell)] for r in range(ell)]
            for r in range(ell):
                m[r][i] -= c[r][i]
            self.fin_gens.append(tuple(tuple(row) for row in m))
        theta_chk = d.theta0_check
        th = d.theta0_omega
        m = [[Fraction(int(r == s)) for s in range(ell)] for r in range(ell)]
        for r in range(ell):
            for s in range(ell):
                m[r][s] -= th[r] * theta_chk[s]
        self.s_theta = _int_matrix(m)
        self.special = special_elements(d, lattice)
        self.mu0 = self.special.mu0
        self.e = WeylElement(self, (0,) * ell, self.identity_fin)
        gens = [WeylElement(self, [-x for x in self.mu0], self.s_theta)]
        gens += [WeylElement(self, (0,) * ell, g) for g in self.fin_gens]
        self.gens = tuple(gens)
        self.pairing = np.array(lattice.root_pairing, dtype=np.int64)
        self.pairing_t = lattice.root_pairing
        self._lat_cache = {}
        self._inv_cache = {}
        self._alpha_cache = {}
        self._roots_bound = -1
        self._roots_g = None
        self._roots_n = None
        self._finite_parts = None
        self._omega = None
        self._fin_group = None

    def __repr__(self):
        return f"WeylGroup({self.datum.label}, {self.lattice.kind})"

    # -- finite part helpers ------------------------------------------------

    def on_lattice(self, fin):
        """Matrix of fin on the coweight lattice, via iota^{-1} fin iota."""
        m = self._lat_cache.get(fin)
        if m is None:
            lat = self.lattice
            m = la.matmul(la.matmul(lat.iota_inv, la.frac_matrix(fin)), lat.iota_matrix)
            m = tuple(la.as_int_tuple(row) for row in m)
            self._lat_cache[fin] = m
        return m

    def on_alpha(self, fin):
        """Matrix of fin on simple-root coordinates: C^{-1} fin C."""
        m = self._alpha_cache.get(fin)
        if m is None:
            d = self.datum
            m = la.matmul(la.matmul(d.finite_cartan_inv, la.frac_matrix(fin)), la.frac_matrix(d.finite_cartan))
            m = tuple(la.as_int_tuple(row) for row in m)
            self._alpha_cache[fin] = m
        return m

    def fin_inverse(self, fin):
        inv = self._inv_cache.get(fin)
        if inv is None:
            inv = _int_matrix(la.inverse(fin))
            self._inv_cache[fin] = inv
            self._inv_cache[inv] = fin
        return inv

    def finite_group(self):
        """All matrices of W^tau (breadth-first from the simple reflections)."""
        if self._fin_group is None:
            seen = {self.identity_fin}
            order = [self.identity_fin]
            k = 0
            while k < len(order):
                m = order[k]
                k += 1
                for g in self.fin_gens:
                    p = _imatmul(g, m)
                    if p not in seen:
                        seen.add(p)
                        order.append(p)
            self._fin_group = tuple(order)
        return self._fin_group

    def finite_word(self, fin):
        """A reduced word for fin in W^tau (descents on the finite positive roots)."""
        word = []
        cur = fin
        while cur != self.identity_fin:
            for i in range(self.rank):
                # left descent: cur^{-1}(alpha_i) < 0
                inv = self.on_alpha(self.fin_inverse(cur))
                if any(inv[k][i] < 0 for k in range(self.rank)):
                    word.append(i + 1)
                    cur = _imatmul(self.fin_gens[i], cur)
                    break
        return tuple(word)

    # -- constructors ---------------------------------------------------------

    def translation(self, mu):
        return WeylElement(self, mu, self.identity_fin)

    def finite(self, fin):
        return WeylElement(self, (0,) * self.rank, fin)

    def simple_reflection(self, i):
        """r_i for the internal node index i (0 is o)."""
        return self.gens[i]

    def from_word(self, word, tail=None):
        x = self.e
        for i in word:
            x = x * self.gens[i]
        return x * tail if tail is not None else x

    def fin_from_word(self, word):
        m = self.identity_fin
        for i in word:
            m = _imatmul(m, self.fin_gens[i - 1])
        return m

    def in_affine_part(self, x):
        return self.lattice.in_coroot_lattice(x.trans)

    # -- action ---------------------------------------------------------------

    def act(self, x, lam):
        """Action of x = rho^mu w on an affine weight."""
        d = self.datum
        if lam.label != d.label:
            raise MixedDatum(f"{lam.label} used with {d.label}")
        k = d.level(lam)
        wx = la.matvec(x.fin, d.finite_part(lam))
        io = self.lattice.iota(x.trans)
        new_fin = tuple(a - k * b for a, b in zip(wx, io))
        n = lam.delta + d.finite_form(wx, io) - Fraction(1, 2) * d.finite_form(io, io) * k
        return d.from_finite(new_fin, k, n)

    def act_root(self, x, gamma, n):
        """Action on the level-zero element gamma + n delta (gamma in simple-root coordinates)."""
        g2 = _imatvec(self.on_alpha(x.fin), gamma)
        shift = _imatvec(self.pairing_t, x.trans)
        return g2, n + sum(a * b for a, b in zip(g2, shift))

    def simple_root(self, i):
        """alpha_i as (gamma, n); alpha_o = -theta_0 + delta."""
        if i == 0:
            return tuple(-a for a in self.datum.theta0), 1
        return tuple(int(k == i - 1) for k in range(self.rank)), 0

    @staticmethod
    def is_negative(gamma, n):
        return n < 0 or (n == 0 and any(g < 0 for g in gamma))

    # -- affine real roots ----------------------------------------------------

    def _ensure_roots(self, bound):
        if bound <= self._roots_bound:
            return
        bound = max(bound, 2 * self.datum.twist + 2, 2 * self._roots_bound)
        d = self.datum
        A = d.cartan
        n = d.rank + 1
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        todo = list(simple)
        while todo:
            beta = todo.pop()
            for i in range(n):
                p = sum(A[i][j] * beta[j] for j in range(n))
                if p < 0:
                    img = tuple(b - p * (k == i) for k, b in enumerate(beta))
                    if img[0] <= bound and img not in seen:
                        seen.add(img)
                        todo.append(img)
        a = d.theta0
        rows = sorted((tuple(b[k + 1] - b[0] * a[k] for k in range(d.rank)), b[0]) for b in seen)
        self._roots_g = np.array([r[0] for r in rows], dtype=np.int64).reshape(len(rows), d.rank)
        self._roots_n = np.array([r[1] for r in rows], dtype=np.int64)
        self._finite_parts = np.unique(self._roots_g, axis=0)
        self._roots_bound = bound

    def positive_real_roots(self, bound):
        """Positive real roots gamma + n delta with n <= bound, as (gamma, n) pairs."""
        self._ensure_roots(bound)
        keep = self._roots_n <= bound
        return [(tuple(int(x) for x in g), int(n)) for g, n in zip(self._roots_g[keep], self._roots_n[keep])]

    def length(self, x):
        """Number of positive real roots sent to negative roots by x."""
        self._ensure_roots(0)
        shift = self.pairing @ np.array(x.trans, dtype=np.int64)
        bound = int(np.abs(self._finite_parts @ shift).max()) if len(self._finite_parts) else 0
        self._ensure_roots(bound)
        keep = self._roots_n <= bound
        wa = np.array(self.on_alpha(x.fin), dtype=np.int64)
        return _kernels.count_inversions(
            np.ascontiguousarray(self._roots_g[keep]), np.ascontiguousarray(self._roots_n[keep]), wa, shift)

    # -- descents, words, Bruhat order ----------------------------------------

    def is_left_descent(self, x, i):
        return self.is_negative(*self.act_root(x.inverse(), *self.simple_root(i)))

    def is_right_descent(self, x, i):
        return self.is_negative(*self.act_root(x, *self.simple_root(i)))

    def reduced_word(self, x):
        """(word, sigma) with x = r_{word[0]} ... r_{word[-1]} sigma and sigma of length zero."""
        word = []
        cur = x
        n = self.rank + 1
        while True:
            for i in range(n):
                if self.is_left_descent(cur, i):
                    word.append(i)
                    cur = self.gens[i] * cur
                    break
            else:
                return tuple(word), cur

    def bruhat_leq(self, u, w):
        wu, su = self.reduced_word(u)
        ww, sw = self.reduced_word(w)
        if su != sw:
            return False
        if len(wu) > len(ww):
            return False
        sinv = sw.inverse()
        cur = u * sinv
        for i in ww:
            # w = r_i w' with r_i a left descent; u <= w iff min(u, r_i u) <= w'
            if self.is_left_descent(cur, i):
                cur = self.gens[i] * cur
        return cur == self.e

    def min_coset_rep(self, x, ybar):
        ybar = tuple(sorted(set(ybar)))
        if len(ybar) == self.rank + 1:
            raise InfiniteParabolic("W_Ybar is infinite when Ybar is every node")
        cur = x
        changed = True
        while changed:
            changed = False
            for i in ybar:
                if self.is_right_descent(cur, i):
                    cur = cur * self.gens[i]
                    changed = True
        return cur

    def leq_Y(self, u, w, ybar):
        return self.bruhat_leq(self.min_coset_rep(u, ybar), self.min_coset_rep(w, ybar))

    def parabolic_subgroup(self, ybar):
        ybar = tuple(sorted(set(ybar)))
        if len(ybar) == self.rank + 1:
            raise InfiniteParabolic("W_Ybar is infinite when Ybar is every node")
        seen = {self.e}
        order = [self.e]
        k = 0
        while k < len(order):
            x = order[k]
            k += 1
            for i in ybar:
                y = x * self.gens[i]
                if y not in seen:
                    seen.add(y)
                    order.append(y)
        return order

    def bruhat_ideal(self, w):
        """All u <= w, from the subword property on one reduced word."""
        word, sigma = self.reduced_word(w)
        ideal = {self.e}
        for i in reversed(word):
            ideal |= {self.gens[i] * y for y in ideal}
        return {y * sigma for y in ideal}

    # -- Omega ----------------------------------------------------------------

    def omega_group(self):
        if self._omega is None:
            lat = self.lattice
            target = lat.omega_order()
            classes = []
            ell = self.rank
            candidates = itertools.chain(
                [(0,) * ell],
                (tuple(int(k == j) for k in range(ell)) for j in range(ell)),
                (v for r in range(1, 4) for v in itertools.product(range(-r, r + 1), repeat=ell)),
            )
            for mu in candidates:
                if len(classes) == target:
                    break
                if any(lat.in_coroot_lattice([a - b for a, b in zip(mu, c)]) for c in classes):
                    continue
                classes.append(mu)
            if len(classes) != target:
                raise RuntimeError("could not enumerate Omega")
            out = []
            for mu in classes:
                _, sigma = self.reduced_word(self.translation(mu))
                kappa = tuple(-x for x in sigma.trans)
                out.append(OmegaElement(kappa, sigma, self._node_perm(sigma)))
            out.sort(key=lambda o: (o.kappa != (0,) * ell, o.kappa))
            self._omega = tuple(out)
        return self._omega

    def _node_perm(self, sigma):
        perm = []
        roots = [self.simple_root(j) for j in range(self.rank + 1)]
        for i in range(self.rank + 1):
            img = self.act_root(sigma, *roots[i])
            perm.append(roots.index(img))
        return tuple(perm)

    def omega_decompose(self, mu):
        """The unique Omega element s with rho^mu s^{-1} in the affine Weyl group."""
        lat = self.lattice
        for om in self.omega_group():
            if lat.in_coroot_lattice([a + b for a, b in zip(mu, om.kappa)]):
                return om
        raise RuntimeError("no Omega component found")

    def omega_of(self, x):
        return self.reduced_word(x)[1]

    # -- orbits and the Ybar root system --------------------------------------

    def orbit(self, mu):
        """W^tau orbit of mu in the coweight lattice, sorted."""
        return tuple(sorted({_imatvec(self.on_lattice(m), mu) for m in self.finite_group()}))

    def ybar_roots(self, ybar):
        """Positive roots of the system with base beta_i (i in Ybar), as finite simple-root coordinates."""
        return _ybar_roots(self, tuple(sorted(set(ybar))))

    def ybar_coroot(self, beta):
        return self.datum.finite_coroot(beta)

    def pair_coroot_iota(self, coroot, mu):
        io = self.lattice.iota(mu)
        return sum((a * b for a, b in zip(coroot, io)), Fraction(0))

    def is_ybar_dominant(self, mu, ybar):
        return all(self.pair_coroot_iota(self.ybar_coroot(b), mu) >= 0 for b in self.ybar_roots(ybar))

    def orbit_dominant_reps(self, mu, Y):
        ybar = complement(self.datum, Y)
        return tuple(eta for eta in self.orbit(mu) if self.is_ybar_dominant(eta, ybar))

    def pair_simple_coroot_iota(self, i, mu):
        """<alpha_i^vee, iota(mu)>, with -<theta_0^vee, .> for i = o."""
        io = self.lattice.iota(mu)
        if i == 0:
            return -sum((a * b for a, b in zip(self.datum.theta0_check, io)), Fraction(0))
        return io[i - 1]

    def union_simplify_predicate(self, mu, i):
        return self.pair_simple_coroot_iota(i, mu) >= 0

    def append_order_hypothesis(self, mu, fin, ybar):
        """Hypothesis of the append-order criterion for the finite part fin of some w in W_Ybar."""
        pos = self.ybar_roots(ybar)
        neg = {tuple(-x for x in b) for b in pos}
        wa = self.on_alpha(fin)
        for b in pos:
            if _imatvec(wa, b) in neg and self.pair_coroot_iota(self.ybar_coroot(b), mu) < 0:
                return False
        return True

    # -- admissible sets --------------------------------------------------------

    def admissible_set(self, mu, Y):
        """{x_min : x in W_Ybar Adm(mu) W_Ybar}, sorted."""
        ybar = complement(self.datum, Y)
        para = self.parabolic_subgroup(ybar)
        out = set()
        for eta in self.orbit(mu):
            for x in self.bruhat_ideal(self.translation(eta)):
                for w in para:
                    out.add(self.min_coset_rep(w * x, ybar))
        return sorted(out, key=lambda z: (self.length(z), z.sort_key()))


def complement(datum, Y):
    return tuple(i for i in range(datum.rank + 1) if i not in set(Y))


def _ybar_roots(group, ybar):
    key = ybar
    cache = group.__dict__.setdefault("_ybar_cache", {})
    if key in cache:
        return cache[key]
    d = group.datum
    A = d.cartan
    sub = tuple(tuple(A[i][j] for j in ybar) for i in ybar)
    base = []
    for i in ybar:
        if i == 0:
            base.append(tuple(-a for a in d.theta0))
        else:
            base.append(tuple(int(k == i - 1) for k in range(d.rank)))
    out = []
    if ybar:
        for u in positive_roots(sub):
            out.append(tuple(sum(u[t] * base[t][k] for t in range(len(ybar))) for k in range(d.rank)))
    cache[key] = tuple(out)
    return cache[key]


@lru_cache(maxsize=None)
def _group(label, kind):
    return WeylGroup(coweight_lattice(build_datum(label), kind))


def weyl_group(datum, kind="adjoint"):
    return _group(datum.label, kind)


def format_element(x):
    """Text form 'rho[<coweight>]*w(<word>)' using the group's lattice basis labels."""
    g = x.group
    labels = g.lattice.basis_labels
    parts = []
    for c, name in zip(x.trans, labels):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{abs(c)}*{name}")
    word = g.finite_word(x.fin)
    return f"rho[{''.join(parts) or '0'}]*w({','.join(map(str, word))})"
