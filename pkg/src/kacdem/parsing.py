"""Text grammars for weights, coweights, Weyl elements and facets.

weight   := term (('+'|'-') term)*      term := [rational '*'] ('Lam[o]'|'Lam[i]'|'a[o]'|'a[i]'|'d')
coweight := term (('+'|'-') term)*      term := [int '*'] ('cw[j]'|'ca[j]')
element  := 'rho[' coweight ']*w(' word ')'
facet    := node (',' node)*            node := 'o' | int

cw[j] and ca[j] are the fundamental coweight and simple coroot of node j of
the simple algebra g; for twisted types they are read through the
coinvariant class map of the chosen lattice.
"""

from fractions import Fraction
import re


class ParseError(ValueError):
    """Malformed expression."""


_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([A-Za-z]+)(?:\[\s*(o|\d+)\s*\])?\s*")


def _terms(text, what):
    text = text.strip()
    if not text:
        raise ParseError(f"empty {what}")
    if text == "0":
        return []
    pos, out, first = 0, [], True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {what} {text!r} at position {pos}")
        sign, coeff, name, idx = m.groups()
        if sign is None and not first:
            raise ParseError(f"missing sign before term at position {pos} in {text!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        out.append((c, name, idx))
        pos, first = m.end(), False
    return out


def parse_weight(datum, text):
    """Parse an affine weight such as '2*Lam[o]+1*Lam[1]-3*d'."""
    from .cartan import AffineWeight

    acc = datum.zero()
    for c, name, idx in _terms(text, "weight"):
        if name == "d" and idx is None:
            term = datum.delta_weight()
        elif name in ("Lam", "a") and idx is not None:
            try:
                i = datum.node_index(idx)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
            term = datum.Lam(i) if name == "Lam" else datum.alpha(i)
        else:
            raise ParseError(f"unknown weight basis {name}[{idx}]" if idx else f"unknown weight basis {name}")
        acc = acc + term * c
    return AffineWeight(datum.label, acc.coeffs, acc.delta)


def parse_g_coweight(datum, text):
    """Parse a coweight of g; returns fundamental-coweight coordinates (integers)."""
    n = datum.g_rank
    cg = datum.g_cartan
    out = [Fraction(0)] * n
    for c, name, idx in _terms(text, "coweight"):
        if c.denominator != 1:
            raise ParseError(f"coweight coefficients must be integers in {text!r}")
        if name not in ("cw", "ca") or idx is None or idx == "o":
            raise ParseError(f"unknown coweight basis in {text!r}")
        j = int(idx)
        if not 1 <= j <= n:
            raise ParseError(f"node {j} out of range for g of rank {n}")
        if name == "cw":
            out[j - 1] += c
        else:
            # simple coroot alpha_j^vee = sum_k A[j][k] omega_k^vee
            for k in range(n):
                out[k] += c * cg[j - 1][k]
    return tuple(int(x) for x in out)


def parse_coweight(lattice, text):
    """Parse a coweight into the coordinates of the given coinvariant lattice."""
    mu_g = parse_g_coweight(lattice.datum, text)
    try:
        return lattice.from_g_omega(mu_g)
    except ValueError as exc:
        raise ParseError(f"{text!r}: {exc}") from None


def format_g_coweight(mu_g):
    parts = []
    for j, c in enumerate(mu_g, start=1):
        if c:
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign}{abs(c)}*cw[{j}]")
    return "".join(parts) or "0"


_ELEMENT_RE = re.compile(r"^\s*rho\[(.*)\]\s*\*\s*w\(([^()]*)\)\s*$")


def parse_word(datum, text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(datum.node_index(x.strip()) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad word {text!r}: {exc}") from None


def parse_element(group, text):
    """Parse 'rho[<coweight>]*w(<word>)'; the word may use o and 1..l."""
    m = _ELEMENT_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse Weyl element {text!r}")
    mu = parse_coweight(group.lattice, m.group(1))
    word = parse_word(group.datum, m.group(2))
    return group.translation(mu) * group.from_word(word)


def parse_facet(datum, text):
    text = text.strip()
    if not text:
        raise ParseError("empty facet")
    try:
        return tuple(sorted({datum.node_index(x.strip()) for x in text.split(",")}))
    except ValueError as exc:
        raise ParseError(f"bad facet {text!r}: {exc}") from None


def format_facet(Y):
    return ",".join("o" if i == 0 else str(i) for i in Y)
