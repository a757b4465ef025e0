"""JSON encodings of elements, idempotent records and diagrams.

Wire formats:

* rationals: "p/q" (or "p") in base 10;
* BMW element: {"algebra": "bmw", "n": 3, "params": {"q": "6/5",
  "nu": "7/3"}, "terms": [{"word": ["T1", "K2"], "coeff": "-3/7"}]};
  word letters "Ti", "Ui" (inverse, accepted on input only), "Ki";
* truncated Laurent series: {"val": v, "N": n, "coeffs": ["p/q", ...]};
* idempotent record: {"tableau": "1;2;2,1", "contents": [...],
  "method": "fusion", "element": {...}, "verified": {...}};
* Brauer element: diagrams as sorted pair lists [["1", "2'"], ...];
* Hecke element: permutations in one-line notation (1-based).
"""

from __future__ import annotations

from .bmwcore import (AlgebraContext, AlgebraElement, T_KIND,
                      letter_index, letter_kind)
from .brauer import BrauerAlgebra, BrauerElement
from .combinatorics import UpDownTableau
from .errors import DomainMismatch
from .hecke import HeckeAlgebra, HeckeElement
from .scalars import TruncLaurent, format_rational, parse_rational


def _letter_to_json(l) -> str:
    return ("T%d" if letter_kind(l) == T_KIND else "K%d") % letter_index(l)


def _sorted_words(terms):
    return sorted(terms, key=lambda w: (len(w), w))


def element_to_json(elem: AlgebraElement) -> dict:
    ctx = elem.ctx
    if ctx.rational:
        params = {"q": format_rational(ctx.params.q),
                  "nu": format_rational(ctx.params.nu)}
        enc = format_rational
    else:
        params = {"laurent": ctx.params.label}
        enc = laurent_to_json
    return {
        "algebra": "bmw",
        "n": ctx.n,
        "params": params,
        "terms": [{"word": [_letter_to_json(l) for l in w],
                   "coeff": enc(elem.terms[w])}
                  for w in _sorted_words(elem.terms)],
    }


def element_from_json(data: dict, ctx: AlgebraContext) -> AlgebraElement:
    if data.get("algebra") != "bmw":
        raise DomainMismatch("not a bmw element record")
    if data.get("n") != ctx.n:
        raise DomainMismatch("strand count mismatch")
    out = ctx.zero()
    for term in data["terms"]:
        piece = ctx.one()
        for tok in term["word"]:
            kind, i = tok[0], int(tok[1:])
            if kind == "T":
                piece = piece * ctx.gen_T(i)
            elif kind == "U":
                piece = piece * ctx.gen_Tinv(i)
            elif kind == "K":
                piece = piece * ctx.gen_K(i)
            else:
                raise ValueError("bad letter %r" % tok)
        out = out + piece.scale(parse_rational(term["coeff"]))
    return out


def laurent_to_json(x: TruncLaurent) -> dict:
    return {"val": x.val, "N": x.prec - x.val,
            "coeffs": [format_rational(c) for c in x.coeffs]}


def laurent_from_json(data: dict) -> TruncLaurent:
    coeffs = [parse_rational(c) for c in data["coeffs"]]
    return TruncLaurent(data["val"], coeffs, data["val"] + data["N"])


def idempotent_to_json(idem) -> dict:
    return {
        "tableau": idem.tableau.encode(),
        "contents": [format_rational(c) for c in idem.contents],
        "method": idem.method,
        "verified": dict(idem.verified),
        "element": element_to_json(idem.element),
    }


def brauer_point_name(p: int, n: int) -> str:
    return str(p + 1) if p < n else "%d'" % (p - n + 1)


def brauer_point_parse(tok: str, n: int) -> int:
    if tok.endswith("'"):
        return n + int(tok[:-1]) - 1
    return int(tok) - 1


def brauer_to_json(elem: BrauerElement) -> dict:
    n = elem.algebra.n
    terms = []
    for d in sorted(elem.terms, key=lambda d: sorted(d)):
        pairs = [[brauer_point_name(a, n), brauer_point_name(b, n)]
                 for a, b in sorted(d)]
        terms.append({"diagram": pairs,
                      "coeff": format_rational(elem.terms[d])})
    return {"algebra": "brauer", "n": n,
            "omega": format_rational(elem.algebra.omega), "terms": terms}


def brauer_from_json(data: dict) -> BrauerElement:
    n = data["n"]
    alg = BrauerAlgebra(n, parse_rational(data["omega"]))
    terms = {}
    for t in data["terms"]:
        d = frozenset(tuple(sorted((brauer_point_parse(a, n),
                                    brauer_point_parse(b, n))))
                      for a, b in t["diagram"])
        terms[d] = parse_rational(t["coeff"])
    return alg.from_terms(terms)


def hecke_to_json(elem: HeckeElement) -> dict:
    return {"algebra": "hecke", "n": elem.algebra.n,
            "q": format_rational(elem.algebra.q),
            "terms": [{"perm": [x + 1 for x in w],
                       "coeff": format_rational(elem.terms[w])}
                      for w in sorted(elem.terms)]}


def hecke_from_json(data: dict) -> HeckeElement:
    alg = HeckeAlgebra(data["n"], parse_rational(data["q"]))
    terms = {tuple(x - 1 for x in t["perm"]): parse_rational(t["coeff"])
             for t in data["terms"]}
    return alg.from_terms(terms)


def tableau_from_json(text: str) -> UpDownTableau:
    return UpDownTableau.decode(text)
