"""Classical limits to the Brauer algebra via truncated Laurent series.

Two contraction regimes are implemented:

* regime 1: q = e^h, nu = q^(1-omega), spectral points
  u = e^(2h(theta - (omega-1)/2)); generators go to s_i, e_i and the
  building blocks tend to s_i - e_i/(th1+th2) and s_i - 1/(th1-th2);
* regime 2: q = -e^h, nu = e^(h(omega-1)), u = e^(2h(-theta + (omega-1)/2)),
  producing the second family of limits (with kappa = omega/2 - 1) and
  idempotents for the transposed tableaux.

Brauer idempotents are obtained as constant terms of whole BMW
computations over Laurent parameters (the Jucys-Murphy interpolation run
with series scalars); first-order cancellations are handled by the
Laurent valuations.
"""

from __future__ import annotations

from fractions import Fraction

from .bmwcore import (AlgebraContext, K_KIND, LaurentParams, letter_index,
                      letter_kind)
from .brauer import BrauerAlgebra, BrauerElement, diagram_mul, e_diagram, \
    identity_diagram, s_diagram
from .combinatorics import (UpDownTableau, addable_boxes,
                            removable_boxes)
from .errors import NotGeneric
from .scalars import TruncLaurent

DEFAULT_TRUNCATION = 4


def laurent_params(regime: int, omega, prec: int = DEFAULT_TRUNCATION
                   ) -> LaurentParams:
    """The (q, nu) series of the chosen contraction regime."""
    omega = Fraction(omega)
    if regime == 1:
        q = TruncLaurent.exp_h(1, prec)
        nu = TruncLaurent.exp_h(1 - omega, prec)
        label = "regime1(omega=%s)" % omega
    elif regime == 2:
        q = TruncLaurent.exp_h(1, prec) * TruncLaurent.const(-1, prec)
        nu = TruncLaurent.exp_h(omega - 1, prec)
        label = "regime2(omega=%s)" % omega
    else:
        raise ValueError("regime must be 1 or 2")
    return LaurentParams(q=q, nu=nu, label=label)


def spectral_series(regime: int, theta, omega,
                    prec: int = DEFAULT_TRUNCATION) -> TruncLaurent:
    """u(theta): the Laurent series of a rational spectral parameter."""
    theta, omega = Fraction(theta), Fraction(omega)
    if regime == 1:
        return TruncLaurent.exp_h(2 * (theta - (omega - 1) / 2), prec)
    if regime == 2:
        return TruncLaurent.exp_h(2 * (-theta + (omega - 1) / 2), prec)
    raise ValueError("regime must be 1 or 2")


def _expected_blocks(regime, i, th1, th2, omega, brauer):
    """The limiting blocks of the paper's two regimes as Brauer elements."""
    th1, th2, omega = Fraction(th1), Fraction(th2), Fraction(omega)
    s, e, one = brauer.s(i), brauer.e(i), brauer.one()
    if regime == 1:
        q_block = s - e.scale(1 / (th1 + th2))
        t_block = s - one.scale(1 / (th1 - th2))
    else:
        vk = omega / 2 - 1
        q_block = s + one.scale(1 / (th1 + th2 - vk)) - \
            e.scale(1 / (th1 + th2))
        t_block = s - one.scale(1 / (th1 - th2)) + \
            e.scale(1 / (th1 - th2 - vk))
    return q_block, t_block


def contraction_block_check(regime: int, i: int, th1, th2, omega,
                            prec: int = DEFAULT_TRUNCATION) -> dict:
    """Compare the h^0 terms of the Laurent Q- and T-blocks with the
    limiting Brauer expressions.  Returns per-block pass flags."""
    p = laurent_params(regime, omega, prec)
    u1 = spectral_series(regime, th1, omega, prec)
    u2 = spectral_series(regime, th2, omega, prec)
    d, q, nu, c = p.delta, p.q, p.nu, p.c
    n = i + 1
    brauer = BrauerAlgebra(n, omega)
    s, e, one = brauer.s(i), brauer.e(i), brauer.one()

    # Q_i(u1, u2; c) = T_i + d/(c u1 u2 - 1) + d/(1 + nu^-1 q c u1 u2) K_i
    x = c * u1 * u2
    q_block = s + one.scale((d / (x - 1)).constant_term()) + \
        e.scale((d / (TruncLaurent.const(1, prec) + p.nu_inv * q * x))
                .constant_term())
    # T_i(u1, u2) = T_i + d/(u2/u1 - 1) + d/(1 + nu^-1 q u2/u1) K_i
    r = u2 / u1
    t_block = s + one.scale((d / (r - 1)).constant_term()) + \
        e.scale((d / (TruncLaurent.const(1, prec) + p.nu_inv * q * r))
                .constant_term())

    eq, et = _expected_blocks(regime, i, th1, th2, omega, brauer)
    return {"q_block": (q_block - eq).is_zero(),
            "t_block": (t_block - et).is_zero()}


# ---------------------------------------------------------------------------
# BMW words -> Brauer diagrams and the structure-constant oracle
# ---------------------------------------------------------------------------

def word_to_diagram(n: int, word):
    """T_i -> s_i, K_i -> e_i as a diagram; returns (diagram, loops)."""
    d = identity_diagram(n)
    loops = 0
    for l in word:
        g = s_diagram(n, letter_index(l)) if letter_kind(l) != K_KIND \
            else e_diagram(n, letter_index(l))
        d, extra = diagram_mul(n, d, g)
        loops += extra
    return d, loops


def constant_term_element(elem, brauer: BrauerAlgebra) -> BrauerElement:
    """h^0 part of a Laurent-coefficient BMW element as a Brauer element."""
    n = elem.ctx.n
    terms = {}
    for w, coeff in elem.terms.items():
        c0 = coeff.constant_term()
        if c0 == 0:
            continue
        d, loops = word_to_diagram(n, w)
        c0 = c0 * brauer.omega ** loops
        terms[d] = terms.get(d, Fraction(0)) + c0
    return BrauerElement(brauer, terms)


def structure_constant_oracle(ctx: AlgebraContext, omega) -> dict:
    """Constant terms of all canonical pair products must reproduce the
    independent Brauer multiplication under T -> s, K -> e.

    Also asserts that the canonical words map bijectively onto diagrams
    with no loop factors."""
    n = ctx.n
    brauer = BrauerAlgebra(n, omega)
    diag_of = {}
    seen = {}
    for w in ctx.words:
        d, loops = word_to_diagram(n, w)
        if loops:
            return {"ok": False, "reason": "loop in canonical word image"}
        if d in seen:
            return {"ok": False,
                    "reason": "canonical words not diagram-bijective"}
        seen[d] = w
        diag_of[w] = d
    checked = 0
    for w1 in ctx.words:
        e1 = ctx.from_terms({w1: ctx._one})
        for w2 in ctx.words:
            prod = e1 * ctx.from_terms({w2: ctx._one})
            got = constant_term_element(prod, brauer)
            d, loops = diagram_mul(n, diag_of[w1], diag_of[w2])
            want = BrauerElement(
                brauer, {d: brauer.omega ** loops})
            if not (got - want).is_zero():
                return {"ok": False,
                        "reason": "structure constants differ at (%r, %r)"
                        % (w1, w2)}
            checked += 1
    return {"ok": True, "pairs": checked}


# ---------------------------------------------------------------------------
# Brauer idempotents as constant terms of BMW computations
# ---------------------------------------------------------------------------

def _laurent_quantum_contents(tab, params: LaurentParams):
    q, nu = params.q, params.nu
    out = []
    for st in tab.steps:
        e = 2 * (st.col - st.row)
        if st.added:
            out.append(_tl_pow(q, e))
        else:
            out.append(nu * nu * _tl_pow(q, -e))
    return out


def _tl_pow(x: TruncLaurent, e: int) -> TruncLaurent:
    if e == 0:
        return TruncLaurent.const(1, x.prec)
    out = None
    base = x if e > 0 else x.invert()
    for _ in range(abs(e)):
        out = base if out is None else out * base
    return out


def _laurent_extension_spectrum(shape, params: LaurentParams):
    """[(added, box, series value)] over all one-box moves from shape."""
    q, nu = params.q, params.nu
    vals = []
    for (a, b) in addable_boxes(shape):
        vals.append((True, (a, b), _tl_pow(q, 2 * (b - a))))
    for (a, b) in removable_boxes(shape):
        vals.append((False, (a, b), nu * nu * _tl_pow(q, 2 * (a - b))))
    return vals


def brauer_idempotent_via_contraction(tab: UpDownTableau, regime: int,
                                      omega, prec: int = DEFAULT_TRUNCATION,
                                      ctx: AlgebraContext = None
                                      ) -> BrauerElement:
    """Constant term of the Jucys-Murphy interpolation run over Laurent
    parameters; the result is an idempotent of B_n(omega).

    Distinctness of the limiting (t-)classical contents is required;
    collisions raise NOT_GENERIC."""
    n = len(tab)
    omega = Fraction(omega)
    if ctx is None:
        params = laurent_params(regime, omega, prec)
        ctx = AlgebraContext(n, params, verify=False)
    params = ctx.params
    contents = _laurent_quantum_contents(tab, params)
    steps = tab.steps
    E = ctx.one()
    for k in range(2, n + 1):
        shape = tab.shapes[k - 2]
        ck = contents[k - 1]
        st = steps[k - 1]
        y = ctx.jm_element(k)
        for added, box, Y in _laurent_extension_spectrum(shape, params):
            if added == st.added and box == (st.row, st.col):
                continue  # the eigenvalue c_k itself
            den = ck - Y
            if den.is_zero():
                raise NotGeneric(
                    "classical content collision at step %d" % k)
            E = E * (y - ctx.one().scale(Y)).scale(den.invert())
    brauer = BrauerAlgebra(n, omega)
    return constant_term_element(E, brauer)


def _tl_same(a: TruncLaurent, b: TruncLaurent) -> bool:
    return (a - b).is_zero()
