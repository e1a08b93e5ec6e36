"""Affine root data for every affine type X_N^(r).

Node o always carries a_o = 1; it is Kac's vertex 0, except for A_{2l}^(2)
where it is Kac's vertex l (so a_o = 1 and the dual label of o is 2).  The
finite nodes 1..l follow Bourbaki's labelling of the fixed-point algebra g^tau.

Weights of the affine algebra are stored in the basis {Lambda_i} + {delta};
coweights of g^tau in the simple coroot basis; finite weights of g^tau in the
fundamental weight basis.  Everything is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re

from . import _linalg as la


class InvalidType(ValueError):
    """Unrecognised (family, rank, twist) combination."""


class MixedDatum(ValueError):
    """Operands belong to different root data."""


class NotInImage(ValueError):
    """Weight outside the image of nu."""


# ---------------------------------------------------------------------------
# type labels


_LABEL_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*~\s*([123])\s*$")


@dataclass(frozen=True, order=True)
class AffineTypeLabel:
    family: str
    rank: int
    twist: int

    def __post_init__(self):
        if not _valid(self.family, self.rank, self.twist):
            raise InvalidType(f"no affine type {self.family}{self.rank}^({self.twist})")

    @classmethod
    def parse(cls, text):
        m = _LABEL_RE.match(text)
        if not m:
            raise InvalidType(f"cannot parse type label {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)), int(m.group(3)))

    def __str__(self):
        return f"{self.family}{self.rank}~{self.twist}"

    @property
    def untwisted(self):
        """Label of the untwisted algebra built on the same g."""
        return AffineTypeLabel(self.family, self.rank, 1)

    @property
    def is_A_even_twisted(self):
        return self.family == "A" and self.twist == 2 and self.rank % 2 == 0


def _valid(family, n, r):
    if not isinstance(n, int) or n < 1:
        return False
    if r == 1:
        return {
            "A": n >= 1, "B": n >= 3, "C": n >= 2, "D": n >= 4,
            "E": n in (6, 7, 8), "F": n == 4, "G": n == 2,
        }.get(family, False)
    if r == 2:
        if family == "A":
            return n >= 2 and (n % 2 == 0 or n >= 5)
        if family == "D":
            return n >= 3
        return family == "E" and n == 6
    if r == 3:
        return family == "D" and n == 4
    return False


# ---------------------------------------------------------------------------
# finite Cartan matrices, C[i][j] = <alpha_i^vee, alpha_j>, Bourbaki labels


def finite_cartan(family, n):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 2:
            link(n - 2, n - 1, -1, -2)
    elif family == "C":
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 2:
            link(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        link(0, 1, -3, -1)
    else:
        raise InvalidType(family)
    return tuple(tuple(row) for row in c)


def root_lengths(cartan):
    """Squared lengths (alpha_i, alpha_i) normalised so long roots have 2."""
    n = len(cartan)
    lengths = [None] * n
    lengths[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and lengths[j] is None:
                lengths[j] = lengths[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    top = max(lengths)
    return tuple(x * 2 / top for x in lengths)


def finite_roots(cartan):
    """All roots (both signs) in simple-root coordinates, by reflection closure."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        beta = todo.pop()
        for i in range(n):
            p = sum(cartan[i][j] * beta[j] for j in range(n))
            if p:
                img = tuple(b - p * (k == i) for k, b in enumerate(beta))
                if img not in seen:
                    seen.add(img)
                    todo.append(img)
    return seen


def positive_roots(cartan):
    roots = [r for r in finite_roots(cartan) if all(x >= 0 for x in r)]
    roots.sort(key=lambda r: (sum(r), r))
    return tuple(roots)


# ---------------------------------------------------------------------------
# Kac label tables, o first


def _untwisted_labels(family, n):
    if family == "A":
        return [1] * (n + 1), [1] * (n + 1)
    if family == "B":
        return [1, 1] + [2] * (n - 1), [1, 1] + [2] * (n - 2) + [1]
    if family == "C":
        return [1] + [2] * (n - 1) + [1], [1] * (n + 1)
    if family == "D":
        a = [1, 1] + [2] * (n - 3) + [1, 1]
        return a, list(a)
    if family == "E":
        a = {6: [1, 1, 2, 2, 3, 2, 1],
             7: [1, 2, 2, 3, 4, 3, 2, 1],
             8: [1, 2, 3, 4, 6, 5, 4, 3, 2]}[n]
        return a, list(a)
    if family == "F":
        return [1, 2, 3, 4, 2], [1, 2, 3, 2, 1]
    if family == "G":
        return [1, 3, 2], [1, 1, 2]
    raise InvalidType(family)


def _twisted_tables(family, n, r):
    """(g^tau family, g^tau rank, a, a_vee, orbits, adjacent flags, tau)."""
    if family == "A" and n % 2 == 0:
        ell = n // 2
        a = [1] + [2] * ell
        av = [2] + [2] * (ell - 1) + [1]
        orbits = [(i, n + 1 - i) for i in range(1, ell + 1)]
        adjacent = [False] * (ell - 1) + [True]
        tau = {j: n + 1 - j for j in range(1, n + 1)}
        return "B", ell, a, av, orbits, adjacent, tau
    if family == "A":
        ell = (n + 1) // 2
        a = [1, 1] + [2] * (ell - 2) + [1]
        av = [1, 1] + [2] * (ell - 1)
        orbits = [(i, 2 * ell - i) for i in range(1, ell)] + [(ell,)]
        tau = {j: 2 * ell - j for j in range(1, n + 1)}
        return "C", ell, a, av, orbits, [False] * ell, tau
    if family == "D" and r == 2:
        ell = n - 1
        a = [1] * (ell + 1)
        av = [1] + [2] * (ell - 1) + [1]
        orbits = [(i,) for i in range(1, ell)] + [(ell, ell + 1)]
        tau = {j: j for j in range(1, n + 1)}
        tau[ell], tau[ell + 1] = ell + 1, ell
        return "B", ell, a, av, orbits, [False] * ell, tau
    if family == "E":
        orbits = [(2,), (4,), (3, 5), (1, 6)]
        tau = {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
        return "F", 4, [1, 1, 2, 3, 2], [1, 2, 4, 3, 2], orbits, [False] * 4, tau
    if family == "D" and r == 3:
        orbits = [(1, 3, 4), (2,)]
        tau = {1: 3, 3: 4, 4: 1, 2: 2}
        return "G", 2, [1, 2, 1], [1, 2, 3], orbits, [False] * 2, tau
    raise InvalidType(f"{family}{n}^({r})")


# ---------------------------------------------------------------------------
# weights and Cartan elements


def _frac_tuple(xs):
    return tuple(Fraction(x) for x in xs)


class AffineWeight:
    """Element of (h^tau-hat)^* as sum c_i Lambda_i + n delta."""

    __slots__ = ("label", "coeffs", "delta")

    def __init__(self, label, coeffs, delta=0):
        self.label = label
        self.coeffs = _frac_tuple(coeffs)
        self.delta = Fraction(delta)

    def _check(self, other):
        if not isinstance(other, AffineWeight):
            return NotImplemented
        if other.label != self.label:
            raise MixedDatum(f"{self.label} vs {other.label}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return AffineWeight(self.label, [x + y for x, y in zip(self.coeffs, other.coeffs)], self.delta + other.delta)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return AffineWeight(self.label, [x - y for x, y in zip(self.coeffs, other.coeffs)], self.delta - other.delta)

    def __neg__(self):
        return AffineWeight(self.label, [-x for x in self.coeffs], -self.delta)

    def __mul__(self, k):
        k = Fraction(k)
        return AffineWeight(self.label, [k * x for x in self.coeffs], k * self.delta)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AffineWeight):
            return NotImplemented
        return self.label == other.label and self.coeffs == other.coeffs and self.delta == other.delta

    def __hash__(self):
        return hash((self.label, self.coeffs, self.delta))

    def pair(self, i):
        """<alpha_i^vee, self> for the internal node index i (0 is o)."""
        return self.coeffs[i]

    def pair_d(self):
        return self.delta

    def is_integral(self):
        return all(x.denominator == 1 for x in self.coeffs) and self.delta.denominator == 1

    def as_int_tuple(self):
        return la.as_int_tuple(self.coeffs + (self.delta,))

    def __repr__(self):
        return f"AffineWeight({self.label}, {format_weight(self)})"

    def __str__(self):
        return format_weight(self)


class CartanElement:
    """Element of h^tau-hat as sum x_i alpha_i^vee + y d."""

    __slots__ = ("label", "coroot_coeffs", "d_coeff")

    def __init__(self, label, coroot_coeffs, d_coeff=0):
        self.label = label
        self.coroot_coeffs = _frac_tuple(coroot_coeffs)
        self.d_coeff = Fraction(d_coeff)

    def __eq__(self, other):
        if not isinstance(other, CartanElement):
            return NotImplemented
        return (self.label, self.coroot_coeffs, self.d_coeff) == (other.label, other.coroot_coeffs, other.d_coeff)

    def __hash__(self):
        return hash((self.label, self.coroot_coeffs, self.d_coeff))

    def __add__(self, other):
        if other.label != self.label:
            raise MixedDatum(f"{self.label} vs {other.label}")
        return CartanElement(self.label, [x + y for x, y in zip(self.coroot_coeffs, other.coroot_coeffs)],
                             self.d_coeff + other.d_coeff)

    def __mul__(self, k):
        k = Fraction(k)
        return CartanElement(self.label, [k * x for x in self.coroot_coeffs], k * self.d_coeff)

    __rmul__ = __mul__

    def __repr__(self):
        return f"CartanElement({self.label}, {list(map(str, self.coroot_coeffs))}, d={self.d_coeff})"


def format_weight(w):
    """Canonical text form, e.g. '2*Lam[o]+1*Lam[1]-3*d'; the zero weight is '0'."""
    names = ["Lam[o]"] + [f"Lam[{i}]" for i in range(1, len(w.coeffs))] + ["d"]
    parts = []
    for name, c in zip(names, w.coeffs + (w.delta,)):
        if c == 0:
            continue
        mag = abs(c)
        num = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{num}*{name}")
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# the datum


class AffineRootDatum:
    """Affine Cartan matrix, Kac labels and the normalised invariant form.

    Internal node index 0 is o; index k >= 1 is finite node k.  Finite arrays
    (``finite_cartan``, ``theta0`` ...) are indexed 0..l-1 for nodes 1..l.
    """

    def __init__(self, label):
        self.label = label
        fam, n, r = label.family, label.rank, label.twist
        if r == 1:
            self.fin_family, self.fin_rank = fam, n
            a, av = _untwisted_labels(fam, n)
            orbits = [(i,) for i in range(1, n + 1)]
            adjacent = [False] * n
            tau = {j: j for j in range(1, n + 1)}
        else:
            self.fin_family, self.fin_rank, a, av, orbits, adjacent, tau = _twisted_tables(fam, n, r)
        ell = self.fin_rank
        self.rank = ell
        self.nodes = ("o",) + tuple(range(1, ell + 1))
        self.kac_labels = tuple(a)
        self.dual_kac_labels = tuple(av)
        # (alpha_i | alpha_j) = symmetrizers[i] * cartan[i][j]
        self.symmetrizers = tuple(Fraction(y, x) for x, y in zip(a, av))
        c = finite_cartan(self.fin_family, ell)
        self.finite_cartan = c
        fin_a, fin_av, av_o = a[1:], av[1:], av[0]
        A = [[0] * (ell + 1) for _ in range(ell + 1)]
        A[0][0] = 2
        for i in range(ell):
            for j in range(ell):
                A[i + 1][j + 1] = c[i][j]
            A[i + 1][0] = -sum(fin_a[k] * c[i][k] for k in range(ell))
        for j in range(ell):
            s = -sum(Fraction(fin_av[k], av_o) * c[k][j] for k in range(ell))
            if s.denominator != 1:
                raise InvalidType(f"non-integral Cartan entry for {label}")
            A[0][j + 1] = int(s)
        self.cartan = tuple(tuple(row) for row in A)

        # finite part
        self.finite_cartan_frac = la.frac_matrix(c)
        self.finite_cartan_inv = la.inverse(c)
        sym = self.symmetrizers[1:]
        self.gram_alpha = tuple(tuple(sym[i] * c[i][j] for j in range(ell)) for i in range(ell))
        cinv = self.finite_cartan_inv
        self.gram_omega = la.matmul(la.matmul(la.transpose(cinv), self.gram_alpha), cinv)
        self.theta0 = tuple(fin_a)  # simple-root coordinates
        self.theta0_omega = tuple(sum(c[k][j] * fin_a[j] for j in range(ell)) for k in range(ell))
        self.theta0_check = tuple(Fraction(x, av_o) for x in fin_av)  # simple-coroot coordinates
        self.alpha_lengths = tuple(2 * s for s in sym)  # (alpha_i|alpha_i), i in I
        self._pos_roots = None

        # folding data against the simple algebra g
        self.g_family, self.g_rank = fam, n
        self.g_cartan = finite_cartan(fam, n)
        self.orbits = tuple(tuple(o) for o in orbits)
        self.adjacent = tuple(adjacent)
        self.tau = dict(tau)
        self.orbit_of = {j: i for i, orb in enumerate(self.orbits) for j in orb}
        # restriction of g-weights (omega coords) to h^tau (omega^tau coords)
        self.restriction = tuple(
            tuple((2 if self.adjacent[i] else 1) if j in self.orbits[i] else 0 for j in range(1, n + 1))
            for i in range(ell))

    # -- convenience ---------------------------------------------------------

    def __repr__(self):
        return f"AffineRootDatum({self.label})"

    @property
    def twist(self):
        return self.label.twist

    def node_index(self, node):
        if node == "o":
            return 0
        node = int(node)
        if not 1 <= node <= self.rank:
            raise ValueError(f"node {node} out of range for {self.label}")
        return node

    def node_name(self, idx):
        return "o" if idx == 0 else str(idx)

    def zero(self):
        return AffineWeight(self.label, [0] * (self.rank + 1), 0)

    def Lam(self, i):
        v = [0] * (self.rank + 1)
        v[i] = 1
        return AffineWeight(self.label, v, 0)

    def delta_weight(self):
        return AffineWeight(self.label, [0] * (self.rank + 1), 1)

    def alpha(self, j):
        """Simple root alpha_j = sum_i A[i][j] Lambda_i (+ delta when j = o)."""
        return AffineWeight(self.label, [self.cartan[i][j] for i in range(self.rank + 1)], 1 if j == 0 else 0)

    def alpha_int(self, j):
        return tuple(self.cartan[i][j] for i in range(self.rank + 1)) + ((1 if j == 0 else 0),)

    def level(self, w):
        return sum((x * y for x, y in zip(self.dual_kac_labels, w.coeffs)), Fraction(0))

    def finite_part(self, w):
        """Restriction to h^tau in fundamental weight coordinates."""
        return w.coeffs[1:]

    def from_finite(self, vbar, level=0, n=0):
        """The weight vbar + (level/a_o^vee) Lambda_o + n delta."""
        vbar = _frac_tuple(vbar)
        av = self.dual_kac_labels
        co = (Fraction(level) - sum((x * y for x, y in zip(av[1:], vbar)), Fraction(0))) / av[0]
        return AffineWeight(self.label, (co,) + vbar, n)

    def finite_form(self, u, v):
        """(u|v) for finite weights in fundamental weight coordinates."""
        return la.dot(u, la.matvec(self.gram_omega, v))

    def finite_alpha_to_omega(self, u):
        c = self.finite_cartan
        return tuple(sum(c[k][j] * u[j] for j in range(self.rank)) for k in range(self.rank))

    def finite_omega_to_alpha(self, v):
        return la.matvec(self.finite_cartan_inv, v)

    def finite_positive_roots(self):
        if self._pos_roots is None:
            self._pos_roots = positive_roots(self.finite_cartan)
        return self._pos_roots

    def finite_roots(self):
        pos = self.finite_positive_roots()
        return pos + tuple(tuple(-x for x in r) for r in pos)

    def finite_root_length(self, u):
        """(beta|beta) for a finite root in simple-root coordinates."""
        return la.dot(u, la.matvec(self.gram_alpha, u))

    def finite_coroot(self, u):
        """Coroot of the finite root (or of -theta_0) u, in simple-coroot coordinates."""
        L = self.finite_root_length(u)
        return tuple(Fraction(x) * self.alpha_lengths[k] / L for k, x in enumerate(u))

    def restrict_g_weight(self, v):
        """Restrict a weight of g (omega coordinates) to h^tau."""
        R = self.restriction
        return tuple(sum(R[i][j] * v[j] for j in range(self.g_rank)) for i in range(self.rank))

    def g_root_lengths(self):
        return root_lengths(self.g_cartan)


@lru_cache(maxsize=None)
def _build(label):
    return AffineRootDatum(label)


def build_datum(label):
    """Root datum for an AffineTypeLabel or a text label such as 'A2~2'."""
    if isinstance(label, str):
        label = AffineTypeLabel.parse(label)
    return _build(label)


def supported_labels(max_rank=8):
    """Every supported type with N <= max_rank."""
    out = []
    for fam in "ABCDEFG":
        for n in range(1, max_rank + 1):
            for r in (1, 2, 3):
                if _valid(fam, n, r):
                    out.append(AffineTypeLabel(fam, n, r))
    return out


# ---------------------------------------------------------------------------
# form and the map nu


def _same(datum, *ws):
    for w in ws:
        if w.label != datum.label:
            raise MixedDatum(f"{w.label} used with {datum.label}")


def bilinear(datum, lam, mu):
    """Normalised invariant form (lam|mu) with (Lambda_o|Lambda_o) = 0."""
    _same(datum, lam, mu)
    kl, km = datum.level(lam), datum.level(mu)
    fin = datum.finite_form(datum.finite_part(lam), datum.finite_part(mu))
    return fin + kl * mu.delta + lam.delta * km


def nu(datum, h):
    """Image of a Cartan element under the isomorphism induced by the form."""
    if h.label != datum.label:
        raise MixedDatum(f"{h.label} used with {datum.label}")
    out = datum.zero()
    for i, x in enumerate(h.coroot_coeffs):
        if x:
            out = out + datum.alpha(i) * (x * Fraction(datum.kac_labels[i], datum.dual_kac_labels[i]))
    if h.d_coeff:
        out = out + datum.Lam(0) * (h.d_coeff / datum.dual_kac_labels[0])
    return out


def nu_inv(datum, lam):
    """Inverse of nu; nu is bijective here, so NotInImage only flags bad input."""
    _same(datum, lam)
    n = datum.rank + 1
    # columns: nu(alpha_i^vee) for each i, then nu(d)
    cols = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        cols.append(nu(datum, CartanElement(datum.label, e, 0)))
    cols.append(nu(datum, CartanElement(datum.label, [0] * n, 1)))
    m = tuple(tuple(cols[j].coeffs[i] if i < n else cols[j].delta for j in range(n + 1)) for i in range(n + 1))
    try:
        x = la.solve(m, lam.coeffs + (lam.delta,))
    except Exception as exc:  # pragma: no cover - nu is invertible for every table entry
        raise NotInImage(str(exc))
    return CartanElement(datum.label, x[:n], x[n])


def K_element(datum):
    return CartanElement(datum.label, datum.dual_kac_labels, 0)


def pair_cartan(h, lam):
    """<h, lam> using <d, Lambda_i> = 0 and <d, delta> = 1."""
    return sum((x * y for x, y in zip(h.coroot_coeffs, lam.coeffs)), Fraction(0)) + h.d_coeff * lam.delta


# ---------------------------------------------------------------------------
# coweight lattices and the maps iota, A


class CoweightLattice:
    """A tau-coinvariant coweight lattice X_*(T)_tau with its maps into h^tau.

    kind 'adjoint' uses the classes of the fundamental coweights of g (one per
    tau-orbit); 'simply_connected' uses the classes of the simple coroots.
    Vectors in this lattice are integer tuples in that basis.
    """

    def __init__(self, datum, kind="adjoint"):
        if kind not in ("adjoint", "simply_connected"):
            raise ValueError(f"unknown lattice kind {kind!r}")
        self.datum = datum
        self.kind = kind
        ell, n = datum.rank, datum.g_rank
        cg = datum.g_cartan
        cg_inv = la.inverse(cg)
        lengths = datum.g_root_lengths()
        reps = [min(orb) for orb in datum.orbits]
        if kind == "adjoint":
            self.basis_labels = tuple(f"cw[{j}]" for j in reps)
        else:
            self.basis_labels = tuple(f"ca[{j}]" for j in reps)
        self.rank = ell

        iota_cols, a_cols = [], []
        for j in reps:
            if kind == "adjoint":
                g_weight = tuple(Fraction(2) / lengths[j - 1] * (k == j - 1) for k in range(n))
                g_coroot = cg_inv[j - 1]  # omega_j^vee in simple-coroot coordinates
            else:
                g_weight = tuple(Fraction(2) / lengths[j - 1] * cg[k][j - 1] for k in range(n))
                g_coroot = tuple(Fraction(int(k == j - 1)) for k in range(n))
            iota_cols.append(datum.restrict_g_weight(g_weight))
            a_cols.append(self._average(g_coroot))
        self.iota_matrix = la.transpose(tuple(iota_cols))
        self.a_matrix = la.transpose(tuple(a_cols))
        self.iota_inv = la.inverse(self.iota_matrix)
        self.a_inv = la.inverse(self.a_matrix)

        # generators of the coinvariant coroot lattice, as columns
        if kind == "adjoint":
            gens = [self.from_g_omega(cg[j - 1]) for j in reps]
        else:
            gens = [tuple(int(k == i) for k in range(ell)) for i in range(ell)]
        self.coroot_sublattice = la.transpose(tuple(gens))
        self.coroot_inv = la.inverse(self.coroot_sublattice)

        # (alpha_k | iota(b_j)) for simple roots of g^tau; integral for every type
        pair = []
        for k in range(ell):
            row = []
            for j in range(ell):
                col = [self.iota_matrix[i][j] for i in range(ell)]
                val = datum.symmetrizers[k + 1] * col[k]
                row.append(val)
            pair.append(row)
        self.root_pairing = tuple(la.as_int_tuple(r) for r in pair)

    def _average(self, g_coroot):
        """A(h) = sum over tau-powers, returned in simple-coroot coordinates of g^tau."""
        d = self.datum
        n = d.g_rank
        total = [Fraction(0)] * n
        cur = list(g_coroot)
        for _ in range(d.twist):
            for m in range(n):
                total[m] += cur[m]
            nxt = [Fraction(0)] * n
            for m in range(n):
                nxt[d.tau[m + 1] - 1] = cur[m]
            cur = nxt
        out = []
        for i, orb in enumerate(d.orbits):
            vals = {total[m - 1] for m in orb}
            assert len(vals) == 1, "average is not tau-invariant"
            out.append(total[orb[0] - 1] / (2 if d.adjacent[i] else 1))
        return tuple(out)

    def __repr__(self):
        return f"CoweightLattice({self.datum.label}, {self.kind})"

    def zero(self):
        return (0,) * self.rank

    def from_g_omega(self, x):
        """Class of the g-coweight with fundamental-coweight coordinates x."""
        d = self.datum
        if self.kind == "adjoint":
            return tuple(int(sum(x[j - 1] for j in orb)) for orb in d.orbits)
        y = la.vecmat(tuple(Fraction(v) for v in x), la.inverse(d.g_cartan))
        cls = [sum((y[j - 1] for j in orb), Fraction(0)) for orb in d.orbits]
        try:
            return la.as_int_tuple(cls)
        except ValueError:
            raise ValueError("coweight not in the coroot lattice") from None

    def from_g_alpha(self, y):
        """Class of the g-coweight with simple-coroot coordinates y."""
        d = self.datum
        if self.kind == "simply_connected":
            return tuple(int(sum(y[j - 1] for j in orb)) for orb in d.orbits)
        x = la.vecmat(tuple(Fraction(v) for v in y), tuple(tuple(Fraction(v) for v in row) for row in d.g_cartan))
        return self.from_g_omega(la.as_int_tuple(x))

    def iota(self, mu):
        """iota(mu) as a finite weight of g^tau (fundamental weight coordinates)."""
        return la.matvec(self.iota_matrix, mu)

    def A(self, mu):
        """A(mu) in simple-coroot coordinates of g^tau."""
        return la.matvec(self.a_matrix, mu)

    def in_coroot_lattice(self, mu):
        return la.is_integral(la.matvec(self.coroot_inv, mu))

    def from_iota(self, weight):
        return la.as_int_tuple(la.matvec(self.iota_inv, weight))

    def from_A(self, coweight):
        return la.as_int_tuple(la.matvec(self.a_inv, coweight))

    def omega_order(self):
        """|X / Q^vee_tau| from the Smith normal form of the coroot generators."""
        out = 1
        for x in la.smith_invariants(self.coroot_sublattice):
            out *= x
        return out


@lru_cache(maxsize=None)
def _lattice(label, kind):
    return CoweightLattice(build_datum(label), kind)


def coweight_lattice(datum, kind="adjoint"):
    return _lattice(datum.label, kind)


def iota(lattice, mu):
    return lattice.iota(mu)


def A_map(lattice, mu):
    d = lattice.datum
    return CartanElement(d.label, (Fraction(0),) + lattice.A(mu), 0)


def finite_coweight_as_cartan(datum, y):
    """Embed a finite coweight (simple-coroot coordinates) into h^tau-hat."""
    return CartanElement(datum.label, (Fraction(0),) + tuple(Fraction(x) for x in y), 0)


@dataclass(frozen=True)
class SpecialElements:
    delta: AffineWeight
    K: CartanElement
    theta0: AffineWeight
    theta0_check: CartanElement
    mu0: tuple


def special_elements(datum, lattice=None):
    lattice = lattice or coweight_lattice(datum)
    theta0 = datum.from_finite(datum.theta0_omega)
    theta0_check = finite_coweight_as_cartan(datum, datum.theta0_check)
    mu0 = lattice.from_A(datum.theta0_check)
    return SpecialElements(datum.delta_weight(), K_element(datum), theta0, theta0_check, mu0)
