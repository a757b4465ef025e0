"""The Brauer algebra B_n(omega) on the diagram basis.

A diagram is a perfect matching on the 2n points {top 0..n-1, bottom
n..2n-1}; concatenation closes with one factor of omega per closed loop.
Generators: s_i (simple transposition) and e_i (cup-cap).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainMismatch

Diagram = frozenset  # of sorted 2-tuples covering {0..2n-1}


def identity_diagram(n: int) -> Diagram:
    return frozenset((a, n + a) for a in range(n))


def s_diagram(n: int, i: int) -> Diagram:
    """s_i: tops i-1 and i crossed (1-based generator index)."""
    pairs = {a: n + a for a in range(n)}
    pairs[i - 1] = n + i
    pairs[i] = n + i - 1
    return frozenset((min(a, b), max(a, b)) for a, b in pairs.items())


def e_diagram(n: int, i: int) -> Diagram:
    """e_i: top arc {i-1, i} and bottom arc {i-1', i'} (1-based index)."""
    out = set()
    out.add((i - 1, i))
    out.add((n + i - 1, n + i))
    for a in range(n):
        if a not in (i - 1, i):
            out.add((a, n + a))
    return frozenset(out)


def diagram_mul(n: int, d1: Diagram, d2: Diagram):
    """Stack d1 above d2; return (diagram, number of closed loops)."""
    adj = {}

    def link(x, y):
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)

    for (x, y) in d1:
        link(("t", x) if x < n else ("m", x - n),
             ("t", y) if y < n else ("m", y - n))
    for (x, y) in d2:
        link(("m", x) if x < n else ("b", x - n),
             ("m", y) if y < n else ("b", y - n))
    ext = [("t", a) for a in range(n)] + [("b", a) for a in range(n)]
    seen = set()
    pairs = set()
    touched = set()
    for s in ext:
        if s in seen:
            continue
        seen.add(s)
        prev, cur = None, s
        while True:
            nbrs = adj[cur]
            nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
            prev, cur = cur, nxt
            if cur[0] == "m":
                touched.add(cur)
            else:
                seen.add(cur)
                a = cur[1] if cur[0] == "t" else n + cur[1]
                b = s[1] if s[0] == "t" else n + s[1]
                pairs.add((min(a, b), max(a, b)))
                break
    loops = 0
    unvisited = {("m", a) for a in range(n)} - touched
    unvisited = {m for m in unvisited if m in adj}
    while unvisited:
        s = unvisited.pop()
        prev, cur = None, s
        while True:
            nbrs = adj[cur]
            nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
            prev, cur = cur, nxt
            if cur == s:
                loops += 1
                break
            unvisited.discard(cur)
    return frozenset(pairs), loops


def all_diagrams(n: int):
    """All (2n-1)!! perfect matchings on 2n points, deterministic order."""
    points = list(range(2 * n))
    out = []

    def rec(rest, acc):
        if not rest:
            out.append(frozenset(acc))
            return
        a = rest[0]
        for k in range(1, len(rest)):
            b = rest[k]
            acc.append((a, b))
            rec(rest[1:k] + rest[k + 1:], acc)
            acc.pop()

    rec(points, [])
    return out


class BrauerAlgebra:
    """B_n(omega) over exact rationals."""

    def __init__(self, n: int, omega):
        self.n = n
        self.omega = Fraction(omega)
        self._mul_cache = {}

    def one(self) -> "BrauerElement":
        return BrauerElement(self, {identity_diagram(self.n): Fraction(1)})

    def zero(self) -> "BrauerElement":
        return BrauerElement(self, {})

    def s(self, i: int) -> "BrauerElement":
        return BrauerElement(self, {s_diagram(self.n, i): Fraction(1)})

    def e(self, i: int) -> "BrauerElement":
        return BrauerElement(self, {e_diagram(self.n, i): Fraction(1)})

    def from_terms(self, terms) -> "BrauerElement":
        return BrauerElement(self, dict(terms))

    def _mul_diagrams(self, d1, d2):
        key = (d1, d2)
        hit = self._mul_cache.get(key)
        if hit is None:
            hit = diagram_mul(self.n, d1, d2)
            self._mul_cache[key] = hit
        return hit


class BrauerElement:
    """Sparse rational combination of Brauer diagrams."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {d: Fraction(c) for d, c in terms.items() if c != 0}

    def _check(self, other):
        if not isinstance(other, BrauerElement):
            raise DomainMismatch("expected a Brauer element")
        if other.algebra.n != self.algebra.n or \
                other.algebra.omega != self.algebra.omega:
            raise DomainMismatch("mixed Brauer algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, Fraction(0)) + c
        return BrauerElement(self.algebra, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, Fraction(0)) - c
        return BrauerElement(self.algebra, out)

    def __neg__(self):
        return BrauerElement(self.algebra,
                             {d: -c for d, c in self.terms.items()})

    def scale(self, x) -> "BrauerElement":
        x = Fraction(x)
        return BrauerElement(self.algebra,
                             {d: c * x for d, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        w = alg.omega
        out = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = alg._mul_diagrams(d1, d2)
                c = c1 * c2 * w ** loops
                out[d] = out.get(d, Fraction(0)) + c
        return BrauerElement(alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, BrauerElement):
            return self.algebra.n == other.algebra.n and \
                self.algebra.omega == other.algebra.omega and \
                self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*%s" % (c, sorted(d))
                          for d, c in sorted(self.terms.items(),
                                             key=lambda t: sorted(t[0])))
