"""Exact arithmetic in BMW_n(q, nu) on a canonical-word basis.

Letters are encoded as small integers: T_i -> 2i, K_i -> 2i+1 (kappa_i),
1 <= i <= n-1; a word is a tuple of letters.  Inverse generators are
eliminated on input via T_i^-1 = T_i - delta + delta K_i.

Multiplication rewrites words onto a canonical spanning set using an
oriented rule system derived from the defining relations (each rule is an
exact consequence; the derivation is named next to the rule).  The rule
system is complete for n <= 4; for larger n the construction closes the
table by converting associativity defects -- which are exact linear
dependencies over the discovered spanning set -- into additional
word-elimination rules until the dimension reaches (2n-1)!!.  A failure to
close raises DIMENSION_MISMATCH.

Contexts carry either rational parameters (certified generic) or truncated
Laurent parameters for the classical-limit mode.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction

from .errors import (DimensionMismatch, DomainMismatch, NotGeneric,
                     RewriteLimit)
from .scalars import (ParamSet, TruncLaurent, format_rational, make_params,
                      parse_rational)

T_KIND, K_KIND = 0, 1

CACHE_FORMAT_VERSION = 1
DEFAULT_STEP_CAP = 10 ** 6
DEFAULT_N_CAP = 6


def letter(kind: int, i: int) -> int:
    return 2 * i + kind


def letter_index(l: int) -> int:
    return l >> 1


def letter_kind(l: int) -> int:
    return l & 1


def letter_name(l: int) -> str:
    return ("T%d" if letter_kind(l) == T_KIND else "K%d") % letter_index(l)


def word_name(w) -> str:
    return "*".join(letter_name(l) for l in w) if w else "1"


def double_factorial(m: int) -> int:
    r = 1
    while m > 1:
        r *= m
        m -= 2
    return r


class LaurentParams:
    """Parameter triple over truncated Laurent series (contraction mode)."""

    def __init__(self, q: TruncLaurent, nu: TruncLaurent, label: str):
        self.q = q
        self.nu = nu
        self.label = label
        qinv = q.invert()
        self.delta = q - qinv
        self.nu_inv = nu.invert()
        self.mu = (self.delta + self.nu_inv - nu) / self.delta
        self.c = -(qinv * self.nu_inv)


class AlgebraContext:
    """Immutable context: canonical words and memoized rewriting for one n.

    Use :func:`build_context`; the constructor itself performs the closure.
    """

    def __init__(self, n, params, step_cap=DEFAULT_STEP_CAP,
                 cache_dir=None, verify=True, n_cap=DEFAULT_N_CAP):
        if n < 1 or n > n_cap:
            raise DimensionMismatch("n = %d outside supported range 1..%d"
                                    % (n, n_cap))
        self.n = n
        self.params = params
        self.step_cap = step_cap
        if isinstance(params, ParamSet):
            if params.certified_n < n:
                raise NotGeneric("certified_n",
                                 "params certified only for n=%d"
                                 % params.certified_n)
            self._one = Fraction(1)
            self.rational = True
        elif isinstance(params, LaurentParams):
            self._one = TruncLaurent.const(1, params.q.prec)
            self.rational = False
        else:
            raise DomainMismatch("params must be ParamSet or LaurentParams")
        self.delta = params.delta
        self.nu = params.nu
        self.nu_inv = self._one / params.nu
        self.mu = params.mu
        self.letters = [letter(k, i)
                        for i in range(1, n) for k in (T_KIND, K_KIND)]
        self._memo = {}
        self._dyn = {}
        self._jm = {}
        self._cache_path = self._cache_file(cache_dir)
        self._load_cache()
        self.words = self._close()
        self.word_index = {w: k for k, w in enumerate(self.words)}
        if verify:
            report = self.verify_relations()
            bad = [r for r in report if not r["ok"]]
            if bad:
                raise DimensionMismatch(
                    "relation suite failed after build: %s" % bad[0])
        self._save_cache()

    # ------------------------------------------------------------------
    # rewriting rules (each an exact consequence of the defining relations)
    # ------------------------------------------------------------------

    def _pair_rule(self, ka, a, kb):
        """Same-index adjacent pair."""
        one, d, nu, mu = self._one, self.delta, self.nu, self.mu
        if ka == T_KIND and kb == T_KIND:
            # T^2 = 1 + delta T - delta nu K  (quadratic relation)
            return [((), one), ((letter(T_KIND, a),), d),
                    ((letter(K_KIND, a),), -(d * nu))]
        if ka == K_KIND and kb == K_KIND:
            return [((letter(K_KIND, a),), mu)]       # K^2 = mu K
        return [((letter(K_KIND, a),), nu)]           # TK = KT = nu K

    def _f_rule(self, j, ka, kb, kc):
        """A_j B_{j-1} C_j (high-low-high); None = canonical."""
        one, d, nui = self._one, self.delta, self.nu_inv
        Tj, Kj = letter(T_KIND, j), letter(K_KIND, j)
        Tl, Kl = letter(T_KIND, j - 1), letter(K_KIND, j - 1)
        if kb == T_KIND:
            if ka == T_KIND and kc == T_KIND:      # braid relation
                return [((Tl, Tj, Tl), one)]
            if ka == T_KIND and kc == K_KIND:      # rho-image of K_l T_j T_l = T_j T_l K_j
                return [((Kl, Tj, Tl), one)]
            if ka == K_KIND and kc == T_KIND:      # K_j T_l T_j = K_j K_l
                return [((Kj, Kl), one)]
            return [((Kj,), nui)]                  # K_j T_l K_j = nu^-1 K_j
        if ka == T_KIND and kc == T_KIND:
            # T_j K_l T_j = T_l^-1 K_j T_l^-1, inverses expanded
            out = []
            for (x, cx) in ((Tl, one), (None, -d), (Kl, d)):
                for (y, cy) in ((Tl, one), (None, -d), (Kl, d)):
                    frag = (() if x is None else (x,)) + (Kj,) + \
                           (() if y is None else (y,))
                    out.append((frag, cx * cy))
            return out
        if ka == T_KIND and kc == K_KIND:          # T_j K_l K_j = (T_l - d) K_j + d K_l K_j
            return [((Tl, Kj), one), ((Kj,), -d), ((Kl, Kj), d)]
        if ka == K_KIND and kc == T_KIND:          # K_j K_l T_j = K_j (T_l - d) + d K_j K_l
            return [((Kj, Tl), one), ((Kj,), -d), ((Kj, Kl), d)]
        return [((Kj,), one)]                      # K_j K_l K_j = K_j

    def _inv_rule(self, i, ka, kb, kc):
        """A_i B_{i+1} C_i (low-high-low); None = canonical."""
        one, d, nui = self._one, self.delta, self.nu_inv
        Ti, Ki = letter(T_KIND, i), letter(K_KIND, i)
        Th, Kh = letter(T_KIND, i + 1), letter(K_KIND, i + 1)
        if kb == T_KIND:
            if ka == T_KIND and kc == T_KIND:
                return None
            if ka == T_KIND and kc == K_KIND:      # T_i T_h K_i = K_h K_i
                return [((Kh, Ki), one)]
            if ka == K_KIND and kc == T_KIND:      # K_i T_h T_i = K_i K_h
                return [((Ki, Kh), one)]
            return [((Ki,), nui)]                  # K_i T_h K_i = nu^-1 K_i
        if ka == T_KIND and kc == T_KIND:
            return None
        if ka == T_KIND and kc == K_KIND:          # T_i K_h K_i = (T_h - d) K_i + d K_h K_i
            return [((Th, Ki), one), ((Ki,), -d), ((Kh, Ki), d)]
        if ka == K_KIND and kc == T_KIND:          # K_i K_h T_i = K_i (T_h - d) + d K_i K_h
            return [((Ki, Th), one), ((Ki,), -d), ((Ki, Kh), d)]
        return [((Ki,), one)]                      # K_i K_h K_i = K_i

    def _s_rule(self, i, kb, kc):
        """K_i B_{i-1} C_{i+1} K_i; None = canonical.

        The reducible cases follow from the cap absorptions
        K K T K = K T K K (exact) and K K K K = K T T K + d K T K K
        - d nu^-1 K, both proved from the tangle relations.
        """
        one, d, nui = self._one, self.delta, self.nu_inv
        Ki = letter(K_KIND, i)
        Tl = letter(T_KIND, i - 1)
        Th, Kh = letter(T_KIND, i + 1), letter(K_KIND, i + 1)
        if kb == T_KIND:
            return None
        if kc == T_KIND:
            return [((Ki, Tl, Kh, Ki), one)]
        return [((Ki, Tl, Th, Ki), one), ((Ki, Tl, Kh, Ki), d),
                ((Ki,), -(d * nui))]

    def _g2_rule(self, i, kx, ky):
        """K_{i+1} T_i X_{i+2} Y_{i+1} T_i -> canonical combination."""
        one, d, nui = self._one, self.delta, self.nu_inv
        Kh = letter(K_KIND, i + 1)
        Ti, Ki = letter(T_KIND, i), letter(K_KIND, i)
        Th = letter(T_KIND, i + 1)
        T2, K2 = letter(T_KIND, i + 2), letter(K_KIND, i + 2)
        if kx == T_KIND and ky == T_KIND:
            return [((Kh, Ti, K2, Th), one)]
        if kx == K_KIND and ky == T_KIND:
            return [((Kh, Ti, T2, Th), one), ((Kh, Ki), -d),
                    ((Kh, Ti, K2, Th), d)]
        if kx == T_KIND and ky == K_KIND:
            return [((Kh, Ki, K2, Th), one), ((Kh, Ki, K2), -d),
                    ((Kh, Ki, K2, Kh), d), ((Kh, Ki, Th), d * nui),
                    ((Kh, Ki), -(d * d * nui)), ((Kh,), d * d * nui),
                    ((Kh, Ki, T2, Th), -d), ((Kh, Ki, T2), d * d),
                    ((Kh, Ki, T2, Kh), -(d * d))]
        return [((Kh, Ki, T2, Th), one), ((Kh, Ki, T2), -d),
                ((Kh, Ti, K2, Kh), d)]

    def _g1_rule(self, i, kx):
        """T_i K_{i+1} T_i X_{i+2} K_{i+1} (the rho-image of _g2_rule)."""
        one, d, nui = self._one, self.delta, self.nu_inv
        Kh = letter(K_KIND, i + 1)
        Ti, Ki = letter(T_KIND, i), letter(K_KIND, i)
        Th = letter(T_KIND, i + 1)
        T2, K2 = letter(T_KIND, i + 2), letter(K_KIND, i + 2)
        if kx == T_KIND:
            return [((Th, Ki, K2, Kh), one), ((Ki, K2, Kh), -d),
                    ((Kh, Ki, K2, Kh), d), ((Th, Ki, Kh), d * nui),
                    ((Ki, Kh), -(d * d * nui)), ((Kh,), d * d * nui),
                    ((Th, Ki, T2, Kh), -d), ((Ki, T2, Kh), d * d),
                    ((Kh, Ki, T2, Kh), -(d * d))]
        return [((Th, Ki, T2, Kh), one), ((Ki, T2, Kh), -d),
                ((Kh, Ti, K2, Kh), d)]

    def _fuse_pair(self, j, z, c):
        """T_j z T_j with z of lower level carrying at most one (j-1)-letter."""
        one, d, nu = self._one, self.delta, self.nu
        Tj, Kj = letter(T_KIND, j), letter(K_KIND, j)
        bpos = None
        for t, l in enumerate(z):
            if letter_index(l) == j - 1:
                bpos = t
                break
        if bpos is None:
            return [(z, c), (z + (Tj,), c * d), (z + (Kj,), -(c * d * nu))]
        z1, B, z2 = z[:bpos], z[bpos], z[bpos + 1:]
        mid = self._f_rule(j, T_KIND, letter_kind(B), T_KIND)
        return [(z1 + frag + z2, c * cf) for (frag, cf) in mid]

    def _fam_f2(self, i, ka, kx, kd):
        """A_i T_{i+1} X_{i+2} T_{i+1} D_i with (A,D) != (T,T)."""
        one, d = self._one, self.delta
        Ai, Di = letter(ka, i), letter(kd, i)
        Th, Kh = letter(T_KIND, i + 1), letter(K_KIND, i + 1)
        Kj = letter(K_KIND, i + 2)
        out = []
        if kx == T_KIND:
            for (z, c) in self._inv_rule(i, ka, T_KIND, kd):
                out.extend(self._fuse_pair(i + 2, z, c))
            return out
        for (z, c) in self._inv_rule(i, ka, K_KIND, kd):
            out.extend(self._fuse_pair(i + 2, z, c))
        parts = [((Th,), one), ((), -d), ((Kh,), d)]
        for (x, cx) in parts:
            for (y, cy) in parts:
                if x == (Th,) and y == (Th,):
                    continue
                out.append(((Ai,) + x + (Kj,) + y + (Di,), -(cx * cy)))
        return out

    # ------------------------------------------------------------------
    # redex search
    # ------------------------------------------------------------------

    def _find_redex(self, w):
        one = self._one
        L = len(w)
        for p in range(L - 1):
            la, lb = w[p], w[p + 1]
            a, ka = letter_index(la), letter_kind(la)
            b, kb = letter_index(lb), letter_kind(lb)
            if a == b:
                return (p, p + 2, self._pair_rule(ka, a, kb))
            if a >= b + 2:
                # distant pair, sort ascending
                return (p, p + 2, [((lb, la), one)])
            if a == b + 1:
                # F-family: A_j B_{j-1} W C_j with W of index <= j-2
                j = a
                qpos = p + 2
                while qpos < L and letter_index(w[qpos]) <= j - 2:
                    qpos += 1
                if qpos < L and letter_index(w[qpos]) == j:
                    rep = self._f_rule(j, ka, kb, letter_kind(w[qpos]))
                    if rep is not None:
                        W = w[p + 2:qpos]
                        return (p, qpos + 1,
                                [(frag + W, c) for (frag, c) in rep])
            if b >= a + 1:
                # INV-family: A_i W B_{i+1} C_i with W of index >= i+2
                i = a
                qpos = p + 1
                while qpos < L and letter_index(w[qpos]) >= i + 2:
                    qpos += 1
                if (qpos + 1 < L and letter_index(w[qpos]) == i + 1
                        and letter_index(w[qpos + 1]) == i):
                    rep = self._inv_rule(i, ka, letter_kind(w[qpos]),
                                         letter_kind(w[qpos + 1]))
                    if rep is not None:
                        W = w[p + 1:qpos]
                        return (p, qpos + 2,
                                [(W + frag, c) for (frag, c) in rep])
            # G1: T_i K_{i+1} T_i [W] X_{i+2} K_{i+1}
            if (ka == T_KIND and kb == K_KIND and b == a + 1 and p + 2 < L
                    and w[p + 2] == letter(T_KIND, a)):
                i = a
                qpos = p + 3
                while qpos < L and (letter_index(w[qpos]) >= i + 3
                                    or letter_index(w[qpos]) <= i - 1):
                    qpos += 1
                if (qpos + 1 < L and letter_index(w[qpos]) == i + 2
                        and w[qpos + 1] == letter(K_KIND, i + 1)):
                    W = w[p + 3:qpos]
                    Whi = tuple(l for l in W if letter_index(l) >= i + 3)
                    Wlo = tuple(l for l in W if letter_index(l) <= i - 1)
                    rep = self._g1_rule(i, letter_kind(w[qpos]))
                    return (p, qpos + 2,
                            [(Whi + frag + Wlo, c) for (frag, c) in rep])
            # G2: K_{i+1} T_i [W] X_{i+2} Y_{i+1} T_i
            if ka == K_KIND and kb == T_KIND and b == a - 1:
                i = a - 1
                qpos = p + 2
                while qpos < L and letter_index(w[qpos]) >= i + 3:
                    qpos += 1
                if (qpos + 2 < L and letter_index(w[qpos]) == i + 2
                        and letter_index(w[qpos + 1]) == i + 1
                        and w[qpos + 2] == letter(T_KIND, i)):
                    rep = self._g2_rule(i, letter_kind(w[qpos]),
                                        letter_kind(w[qpos + 1]))
                    if rep is not None:
                        W = w[p + 2:qpos]
                        return (p, qpos + 3,
                                [(W + frag, c) for (frag, c) in rep])
            # S-family: K_i B_{i-1} [W] C_{i+1} K_i
            if ka == K_KIND and b == a - 1:
                i = a
                qpos = p + 2
                while qpos < L and (letter_index(w[qpos]) <= i - 2
                                    or letter_index(w[qpos]) >= i + 2):
                    qpos += 1
                if (qpos + 1 < L and letter_index(w[qpos]) == i + 1
                        and w[qpos + 1] == letter(K_KIND, i)):
                    rep = self._s_rule(i, kb, letter_kind(w[qpos]))
                    if rep is not None:
                        W = w[p + 2:qpos]
                        Whi = tuple(l for l in W
                                    if letter_index(l) >= i + 2)
                        Wlo = tuple(l for l in W
                                    if letter_index(l) <= i - 2)
                        return (p, qpos + 2,
                                [(Whi + frag + Wlo, c) for (frag, c) in rep])
            # FAM-F1: T_i T_{i+1} T_i [W] X_{i+2} K_{i+1}
            if (ka == T_KIND and kb == T_KIND and b == a + 1 and p + 2 < L
                    and w[p + 2] == letter(T_KIND, a)):
                i = a
                qpos = p + 3
                while qpos < L and (letter_index(w[qpos]) >= i + 3
                                    or letter_index(w[qpos]) <= i - 1):
                    qpos += 1
                if (qpos + 1 < L and letter_index(w[qpos]) == i + 2
                        and w[qpos + 1] == letter(K_KIND, i + 1)):
                    tail = self._inv_rule(i + 1, T_KIND,
                                          letter_kind(w[qpos]), K_KIND)
                    if tail is not None:
                        W = w[p + 3:qpos]
                        Whi = tuple(l for l in W if letter_index(l) >= i + 3)
                        Wlo = tuple(l for l in W if letter_index(l) <= i - 1)
                        head = (letter(T_KIND, i + 1), letter(T_KIND, i))
                        return (p, qpos + 2,
                                [(Whi + head + frag + Wlo, c)
                                 for (frag, c) in tail])
            # FAM-F2: A_i T_{i+1} [W] X_{i+2} T_{i+1} D_i, (A,D) != (T,T)
            if b == a + 1 and kb == T_KIND:
                i = a
                qpos = p + 2
                while qpos < L and letter_index(w[qpos]) >= i + 3:
                    qpos += 1
                if (qpos + 2 < L and letter_index(w[qpos]) == i + 2
                        and w[qpos + 1] == letter(T_KIND, i + 1)
                        and letter_index(w[qpos + 2]) == i):
                    kd = letter_kind(w[qpos + 2])
                    if not (ka == T_KIND and kd == T_KIND):
                        rep = self._fam_f2(i, ka, letter_kind(w[qpos]), kd)
                        W = w[p + 2:qpos]
                        return (p, qpos + 3,
                                [(W + frag, c) for (frag, c) in rep])
        return self._slide_redex(w)

    def _slide_redex(self, w):
        """Chain slides X_i (T_m..T_j) = (T_m..T_j) X_{i+1}, j <= i <= m-1.

        backslide: (T_m..T_j) X_g -> X_{g-1} (T_m..T_j), j+1 <= g <= m;
        suffix slide: P C -> C P' (P index-shifted) for a pinned prefix
        containing a kappa among its shifted letters.
        """
        one = self._one
        L = len(w)
        for s in range(L - 2):
            if letter_kind(w[s]) != T_KIND:
                continue
            e = s
            while e + 1 < L and w[e + 1] == letter(
                    T_KIND, letter_index(w[e]) - 1):
                e += 1
            if e == s or e + 1 >= L:
                continue
            m, j = letter_index(w[s]), letter_index(w[e])
            g = letter_index(w[e + 1])
            if j + 1 <= g <= m:
                frag = (letter(letter_kind(w[e + 1]), g - 1),) + w[s:e + 1]
                return (s, e + 2, [(frag, one)])
        # suffix slide
        if L == 0 or letter_kind(w[-1]) != T_KIND:
            return None
        s = L - 1
        while s > 0 and w[s - 1] == letter(T_KIND, letter_index(w[s]) + 1):
            s -= 1
        if L - s < 2 or s == 0:
            return None
        j, m = letter_index(w[-1]), letter_index(w[s])
        shifted = []
        has_k = False
        for l in w[:s]:
            ii, kk = letter_index(l), letter_kind(l)
            if j <= ii <= m - 1:
                shifted.append(letter(kk, ii + 1))
                if kk == K_KIND:
                    has_k = True
            elif ii <= j - 2:
                shifted.append(l)
            else:
                return None
        if not has_k:
            return None
        return (0, L, [(w[s:] + tuple(shifted), one)])

    # ------------------------------------------------------------------
    # reduction, closure, completion
    # ------------------------------------------------------------------

    def reduce_word(self, word):
        """Rewrite a word into {canonical word: coefficient}."""
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        pending = {word: self._one}
        done = {}
        steps = 0
        while pending:
            w, c = pending.popitem()
            red = self._find_redex(w)
            if red is None:
                rep = self._dyn.get(w)
                if rep is None:
                    prev = done.get(w)
                    done[w] = c if prev is None else prev + c
                    continue
                lo, hi = 0, len(w)
            else:
                lo, hi, rep = red
            steps += 1
            if steps > self.step_cap:
                raise RewriteLimit("step cap %d exceeded reducing %s"
                                   % (self.step_cap, word_name(word)))
            if red is None:
                items = rep.items() if isinstance(rep, dict) else rep
                for nw, coeff in items:
                    nc = c * coeff
                    if nw in pending:
                        nc = pending.pop(nw) + nc
                    if nc != 0:
                        pending[nw] = nc
                continue
            pre, post = w[:lo], w[hi:]
            for frag, coeff in rep:
                nw = pre + frag + post
                nc = c * coeff
                if nw in pending:
                    nc = pending.pop(nw) + nc
                if nc != 0:
                    pending[nw] = nc
        done = {w: c for w, c in done.items() if c != 0}
        self._memo[word] = done
        return done

    def _renormalize(self, vec):
        """Push a vector through the dynamic elimination rules."""
        if not self._dyn:
            return dict(vec)
        out = {}
        stack = list(vec.items())
        while stack:
            w, c = stack.pop()
            rep = self._dyn.get(w)
            if rep is None:
                prev = out.get(w)
                out[w] = c if prev is None else prev + c
            else:
                for u, cu in rep.items():
                    stack.append((u, c * cu))
        return {w: c for w, c in out.items() if c != 0}

    def _red(self, word):
        return self._renormalize(self.reduce_word(word))

    def _mul_vec_letter(self, vec, l):
        out = {}
        for w, c in vec.items():
            for u, cu in self._red(w + (l,)).items():
                prev = out.get(u)
                nc = c * cu if prev is None else prev + c * cu
                out[u] = nc
        return {w: c for w, c in out.items() if c != 0}

    def _closure_once(self):
        basis = {(): None}
        frontier = [()]
        while frontier:
            nxt = []
            for w in frontier:
                for l in self.letters:
                    for u in self._red(w + (l,)):
                        if u not in basis:
                            basis[u] = None
                            nxt.append(u)
            frontier = nxt
        return sorted(basis, key=lambda w: (len(w), w))

    def _close(self):
        want = double_factorial(2 * self.n - 1)
        basis = self._closure_once()
        rounds = 0
        while len(basis) != want:
            rounds += 1
            if rounds > 60:
                raise DimensionMismatch(
                    "closure stuck at %d words (expected %d) for n=%d"
                    % (len(basis), want, self.n))
            if len(basis) < want:
                raise DimensionMismatch(
                    "closure undershot: %d words < %d for n=%d"
                    % (len(basis), want, self.n))
            found = 0
            for w in basis:
                for g in self.letters:
                    vg = self._red(w + (g,))
                    for h in self.letters:
                        A = self._mul_vec_letter(vg, h)
                        B = {}
                        for v, cv in self._red((g, h)).items():
                            t = {w: cv}
                            for l in v:
                                t = self._mul_vec_letter(t, l)
                            for u, cu in t.items():
                                prev = B.get(u)
                                B[u] = cu if prev is None else prev + cu
                        D = dict(A)
                        for u, cu in B.items():
                            prev = D.get(u)
                            D[u] = -cu if prev is None else prev - cu
                        D = {u: c for u, c in D.items() if c != 0}
                        if D:
                            lead = max(D, key=lambda x: (len(x), x))
                            cl = D.pop(lead)
                            self._dyn[lead] = {u: -(c / cl)
                                               for u, c in D.items()}
                            found += 1
                if found >= 80:
                    break
            if found == 0:
                raise DimensionMismatch(
                    "no associativity defects but %d words != %d for n=%d"
                    % (len(basis), want, self.n))
            basis = self._closure_once()
        return basis

    # ------------------------------------------------------------------
    # cache
    # ------------------------------------------------------------------

    def _cache_file(self, cache_dir):
        if cache_dir is None:
            cache_dir = os.environ.get("BMWF_CACHE")
        if not cache_dir or not isinstance(self.params, ParamSet):
            return None
        key = "bmw-n%d-q%s-nu%s-v%d.json" % (
            self.n, str(self.params.q).replace("/", "_"),
            str(self.params.nu).replace("/", "_"), CACHE_FORMAT_VERSION)
        return os.path.join(cache_dir, key)

    def _load_cache(self):
        path = self._cache_path
        if path is None or not os.path.exists(path):
            return False
        try:
            with open(path) as f:
                data = json.load(f)
        except (OSError, ValueError):
            return False
        if data.get("version") != CACHE_FORMAT_VERSION:
            return False
        for ent in data.get("dyn", []):
            w = tuple(ent["word"])
            self._dyn[w] = {tuple(u): parse_rational(c)
                            for u, c in ent["expansion"]}
        for ent in data.get("table", []):
            w = tuple(ent["word"])
            self._memo[w] = {tuple(u): parse_rational(c)
                             for u, c in ent["expansion"]}
        return True

    def _save_cache(self):
        path = self._cache_path
        if path is None:
            return
        os.makedirs(os.path.dirname(path), exist_ok=True)
        data = {
            "version": CACHE_FORMAT_VERSION,
            "n": self.n,
            "q": format_rational(self.params.q),
            "nu": format_rational(self.params.nu),
            "dyn": [{"word": list(w),
                     "expansion": [[list(u), format_rational(c)]
                                   for u, c in sorted(v.items())]}
                    for w, v in sorted(self._dyn.items())],
            "table": [{"word": list(w),
                       "expansion": [[list(u), format_rational(c)]
                                     for u, c in sorted(v.items())]}
                      for w, v in sorted(self._memo.items())
                      if len(w) <= 1 or w[:-1] in self.word_index],
        }
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path),
                                   prefix=".bmwf-tmp-")
        try:
            with os.fdopen(fd, "w") as f:
                json.dump(data, f)
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass

    # ------------------------------------------------------------------
    # element constructors
    # ------------------------------------------------------------------

    def zero(self):
        return AlgebraElement(self, {})

    def one(self):
        return AlgebraElement(self, {(): self._one})

    def from_terms(self, terms):
        return AlgebraElement(self, dict(terms))

    def scalar(self, x):
        return AlgebraElement(self, {(): self._one * x})

    def gen_T(self, i):
        self._check_index(i)
        return AlgebraElement(self, {(letter(T_KIND, i),): self._one})

    def gen_K(self, i):
        self._check_index(i)
        return AlgebraElement(self, {(letter(K_KIND, i),): self._one})

    def gen_Tinv(self, i):
        """T_i^-1 = T_i - delta + delta K_i."""
        self._check_index(i)
        return AlgebraElement(self, {
            (letter(T_KIND, i),): self._one,
            (): -self.delta * self._one,
            (letter(K_KIND, i),): self.delta * self._one,
        })

    def _check_index(self, i):
        if not 1 <= i <= self.n - 1:
            raise IndexError("generator index %d outside 1..%d"
                             % (i, self.n - 1))

    def jm_element(self, k):
        """Jucys-Murphy element y_k = T_{k-1}...T_2 T_1^2 T_2...T_{k-1}."""
        if not 1 <= k <= self.n:
            raise IndexError("Jucys-Murphy index %d outside 1..%d"
                             % (k, self.n))
        hit = self._jm.get(k)
        if hit is not None:
            return hit
        if k == 1:
            y = self.one()
        else:
            y = self.gen_T(1) * self.gen_T(1)
            for i in range(2, k):
                y = self.gen_T(i) * y * self.gen_T(i)
        self._jm[k] = y
        return y

    def rho(self, elem):
        """The anti-automorphism fixing every generator (word reversal)."""
        out = {}
        for w, c in elem.terms.items():
            for u, cu in self._red(tuple(reversed(w))).items():
                prev = out.get(u)
                nc = c * cu if prev is None else prev + c * cu
                out[u] = nc
        return AlgebraElement(self, out)

    # ------------------------------------------------------------------
    # relation suite
    # ------------------------------------------------------------------

    def verify_relations(self):
        """Check the defining and derived relations instance by instance.

        Returns a list of {"relation", "instance", "ok"} dicts; the
        rho-images of the one-sided relations are included.
        """
        report = []

        def chk(name, inst, lhs, rhs):
            ok = (lhs - rhs).is_zero()
            report.append({"relation": name, "instance": inst, "ok": ok})

        n = self.n
        one = self.one()
        dlt = self.delta

        def T(i):
            return self.gen_T(i)

        def Ti(i):
            return self.gen_Tinv(i)

        def K(i):
            return self.gen_K(i)

        for i in range(1, n - 1):
            chk("braid", "i=%d" % i,
                T(i) * T(i + 1) * T(i), T(i + 1) * T(i) * T(i + 1))
        for i in range(1, n):
            for jj in range(i + 2, n):
                chk("distant", "i=%d j=%d" % (i, jj),
                    T(i) * T(jj), T(jj) * T(i))
        for i in range(1, n):
            chk("inverse", "i=%d" % i, T(i) * Ti(i), one)
            chk("inverse", "i=%d (left)" % i, Ti(i) * T(i), one)
            chk("kappa-def", "i=%d" % i,
                K(i), one - (T(i) - Ti(i)).scale(self._one / dlt))
            chk("KT=nuK", "i=%d" % i, K(i) * T(i), K(i).scale(self.nu))
            chk("TK=nuK", "i=%d" % i, T(i) * K(i), K(i).scale(self.nu))
            chk("K^2=muK", "i=%d" % i, K(i) * K(i), K(i).scale(self.mu))
        for i in range(1, n):
            for eps in (1, -1):
                j = i + eps
                if not 1 <= j <= n - 1:
                    continue
                chk("K T^e K = nu^-e K", "i=%d e=%+d" % (i, eps),
                    K(i) * T(j) * K(i), K(i).scale(self.nu_inv))
                chk("K T^-e K", "i=%d e=%+d" % (i, eps),
                    K(i) * Ti(j) * K(i), K(i).scale(self.nu))
                chk("K T T = T T K (2.7)", "i=%d e=%+d" % (i, eps),
                    K(i) * T(j) * T(i), T(j) * T(i) * K(j))
                chk("KKK=K", "i=%d e=%+d" % (i, eps),
                    K(i) * K(j) * K(i), K(i))
                dmt_i = T(i) - one.scale(dlt)
                dmt_j = T(j) - one.scale(dlt)
                chk("square exchange (2.9)", "i=%d e=%+d" % (i, eps),
                    dmt_i * K(j) * dmt_i, dmt_j * K(i) * dmt_j)
                chk("T K T = T^-1 K T^-1 (2.10)", "i=%d e=%+d" % (i, eps),
                    T(j) * K(i) * T(j), Ti(i) * K(j) * Ti(i))
                chk("K T T = K K (2.11)", "i=%d e=%+d" % (i, eps),
                    K(i) * T(j) * T(i), K(i) * K(j))
                chk("K T- T- = K K (2.12)", "i=%d e=%+d" % (i, eps),
                    K(i) * Ti(j) * Ti(i), K(i) * K(j))
                chk("K K (T - d) (2.13)", "i=%d e=%+d" % (i, eps),
                    K(j) * K(i) * dmt_j, K(j) * dmt_i)
                # rho-images
                chk("rho(2.7)", "i=%d e=%+d" % (i, eps),
                    T(i) * T(j) * K(i), K(j) * T(i) * T(j))
                chk("rho(2.11)", "i=%d e=%+d" % (i, eps),
                    T(i) * T(j) * K(i), K(j) * K(i))
                chk("rho(2.12)", "i=%d e=%+d" % (i, eps),
                    Ti(i) * Ti(j) * K(i), K(j) * K(i))
                chk("rho(2.13)", "i=%d e=%+d" % (i, eps),
                    dmt_j * K(i) * K(j), dmt_i * K(j))
        # Jucys-Murphy identities
        ys = [self.jm_element(k) for k in range(1, n + 1)]
        for a in range(n):
            for b in range(a + 1, n):
                chk("JM commute", "y%d y%d" % (a + 1, b + 1),
                    ys[a] * ys[b], ys[b] * ys[a])
        nu2 = self.nu * self.nu
        for j in range(1, n):
            chk("K y y = nu^2 K (2.23)", "j=%d" % j,
                K(j) * ys[j] * ys[j - 1], K(j).scale(nu2))
            chk("y y K = nu^2 K (2.23)", "j=%d" % j,
                ys[j - 1] * ys[j] * K(j), K(j).scale(nu2))
        return report


class AlgebraElement:
    """Sparse linear combination of canonical words over one scalar domain.

    The coefficient domain may be richer than the context's parameter
    domain (rational-function coefficients over a rational context during
    fusion); all terms of one element share a single domain.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {w: c for w, c in terms.items() if c != 0}

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise DomainMismatch("expected an algebra element")
        if other.ctx is not self.ctx:
            raise DomainMismatch("elements from different contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            out[w] = c if prev is None else prev + c
        return AlgebraElement(self.ctx, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            out[w] = -c if prev is None else prev - c
        return AlgebraElement(self.ctx, out)

    def __neg__(self):
        return AlgebraElement(self.ctx, {w: -c for w, c in self.terms.items()})

    def scale(self, x):
        return AlgebraElement(self.ctx,
                              {w: c * x for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        ctx = self.ctx
        out = {}
        # fold the right factor's words through the left vector, sharing
        # common prefixes via a trie
        trie = {}
        for w2, c2 in other.terms.items():
            node = trie
            for l in w2:
                node = node.setdefault(l, {})
            node[None] = c2

        def fold(vec, l):
            nxt = {}
            red = ctx._red
            for w, c in vec.items():
                for u, cu in red(w + (l,)).items():
                    prev = nxt.get(u)
                    nc = c * cu if prev is None else prev + c * cu
                    nxt[u] = nc
            return nxt

        stack = [(trie, self.terms)]
        while stack:
            node, vec = stack.pop()
            for l, child in node.items():
                if l is None:
                    c2 = child
                    for w, c in vec.items():
                        prev = out.get(w)
                        nc = c * c2 if prev is None else prev + c * c2
                        out[w] = nc
                else:
                    stack.append((child, fold(vec, l)))
        return AlgebraElement(ctx, out)

    def is_zero(self):
        return not self.terms

    def equals(self, other):
        self._check(other)
        return (self - other).is_zero()

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ctx is other.ctx and (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coefficients(self, f):
        """Apply f to every coefficient (e.g. evaluation of rational
        functions at a point)."""
        return AlgebraElement(self.ctx,
                              {w: f(c) for w, c in self.terms.items()})

    def coefficient(self, word):
        c = self.terms.get(tuple(word))
        if c is None:
            return self.ctx._one * 0
        return c

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda x: (len(x), x)):
            bits.append("(%s)*%s" % (self.terms[w], word_name(w)))
        return " + ".join(bits)


def build_context(n, params=None, q=None, nu=None, step_cap=DEFAULT_STEP_CAP,
                  cache_dir=None, verify=True, n_cap=DEFAULT_N_CAP):
    """Build an algebra context for n strands.

    Either pass a ParamSet/LaurentParams, or q and nu as rationals (which
    are then certified for n).
    """
    if params is None:
        params = make_params(q, nu, n)
    return AlgebraContext(n, params, step_cap=step_cap, cache_dir=cache_dir,
                          verify=verify, n_cap=n_cap)
