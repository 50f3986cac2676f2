"""Parsing and serialization for the JSON wire formats used by the CLI.

Series input schema (exactly one of "terms" / "numerator"):

    {"alpha": 3, "beta": 5,
     "terms": [{"shift": 0, "coeff": 1, "denom": ["alpha", "beta"]}, ...]}

    {"alpha": 3, "beta": 5,
     "numerator": [[exp, coeff], ...], "den_alpha": 1, "den_beta": 1}

Weights need not be coprime here; callers that require coprimality say so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .couples import FundamentalCouple
from .decomp import Decomposition, DepthReport, witness_module
from .semigroup import SemigroupPair, make_pair
from .series import ALPHA, BETA, LaurentPoly, RationalSeries, Term, to_rational
from .star import GeneralStarVerdict, StarVerdict, Violation


class SchemaError(ValueError):
    """Input JSON does not match the series schema."""


@dataclass(frozen=True)
class ParsedSeries:
    """Raw parsed input, weights in the order given (d1 <= d2 after normalize)."""

    d1: int
    d2: int
    terms: tuple[Term, ...] | None
    num: LaurentPoly | None
    den1: int
    den2: int

    @property
    def coprime(self) -> bool:
        return math.gcd(self.d1, self.d2) == 1

    def pair(self) -> SemigroupPair:
        return make_pair(self.d1, self.d2)

    def coprime_series(self) -> RationalSeries:
        S = self.pair()
        if self.terms is not None:
            return to_rational(S, self.terms)
        return RationalSeries(S, self.num, self.den1, self.den2)

    def general_numerator(self) -> tuple[LaurentPoly, int, int]:
        """Numerator over (1-t^d1)^den1 (1-t^d2)^den2 for the slice checker."""
        if self.terms is None:
            return self.num, self.den1, self.den2
        num = LaurentPoly.zero()
        for t in self.terms:
            piece = LaurentPoly.term(t.shift, t.coeff)
            if ALPHA not in t.denom:
                piece = piece.times_one_minus(self.d1)
            if BETA not in t.denom:
                piece = piece.times_one_minus(self.d2)
            num = num + piece
        return num, 1, 1


def _expect_int(obj, key, minimum=None):
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f'"{key}" must be an integer')
    if minimum is not None and v < minimum:
        raise SchemaError(f'"{key}" must be >= {minimum}')
    return v


def parse_series_obj(obj) -> ParsedSeries:
    if not isinstance(obj, dict):
        raise SchemaError("series input must be a JSON object")
    d1 = _expect_int(obj, "alpha", 1)
    d2 = _expect_int(obj, "beta", 1)
    has_terms = "terms" in obj
    has_num = "numerator" in obj
    if has_terms == has_num:
        raise SchemaError('exactly one of "terms" and "numerator" must be present')
    swapped = d1 > d2
    if swapped:
        d1, d2 = d2, d1
    if has_terms:
        raw = obj["terms"]
        if not isinstance(raw, list):
            raise SchemaError('"terms" must be a list')
        terms = []
        for i, t in enumerate(raw):
            if not isinstance(t, dict):
                raise SchemaError(f"terms[{i}] must be an object")
            shift = _expect_int(t, "shift")
            coeff = _expect_int(t, "coeff", 1)
            denom = t.get("denom", [])
            if not isinstance(denom, list) or len(set(denom)) != len(denom):
                raise SchemaError(f"terms[{i}].denom must be a duplicate-free list")
            if not set(denom) <= {ALPHA, BETA}:
                raise SchemaError(f'terms[{i}].denom entries must be "alpha"/"beta"')
            if swapped:
                denom = [BETA if g == ALPHA else ALPHA for g in denom]
            terms.append(Term(shift, coeff, frozenset(denom)))
        return ParsedSeries(d1, d2, tuple(terms), None, 1, 1)
    raw = obj["numerator"]
    if not isinstance(raw, list):
        raise SchemaError('"numerator" must be a list of [exponent, coefficient]')
    pairs = []
    for i, ec in enumerate(raw):
        if (
            not isinstance(ec, list)
            or len(ec) != 2
            or any(not isinstance(x, int) or isinstance(x, bool) for x in ec)
        ):
            raise SchemaError(f"numerator[{i}] must be [exponent, coefficient]")
        pairs.append((ec[0], ec[1]))
    den1 = obj.get("den_alpha", 1)
    den2 = obj.get("den_beta", 1)
    if den1 not in (0, 1) or den2 not in (0, 1):
        raise SchemaError('"den_alpha" and "den_beta" must be 0 or 1')
    if swapped:
        den1, den2 = den2, den1
    return ParsedSeries(d1, d2, None, LaurentPoly(pairs), den1, den2)


def series_to_obj(S: SemigroupPair, H: RationalSeries) -> dict:
    return {
        "alpha": S.alpha,
        "beta": S.beta,
        "numerator": [[e, c] for e, c in H.num.items()],
        "den_alpha": H.den_alpha,
        "den_beta": H.den_beta,
    }


def term_to_obj(t: Term) -> dict:
    return {"shift": t.shift, "coeff": t.coeff, "denom": sorted(t.denom)}


def violation_to_obj(v: Violation) -> dict:
    return {"I": list(v.I), "J": list(v.J), "n": v.n, "lhs": v.lhs, "rhs": v.rhs}


def verdict_to_obj(v: StarVerdict) -> dict:
    out = {"holds": v.holds}
    out["violation"] = violation_to_obj(v.violation) if v.violation else None
    return out


def general_verdict_to_obj(v: GeneralStarVerdict) -> dict:
    out = {"holds": v.holds, "delta": v.delta}
    out["pair"] = {"alpha": v.pair.alpha, "beta": v.pair.beta}
    if v.delta > 1:
        out["slices"] = [
            {"residue": k, **verdict_to_obj(sv)} for k, sv in enumerate(v.slices)
        ]
        first = next((sv.violation for sv in v.slices if sv.violation), None)
        out["violation"] = violation_to_obj(first) if first else None
    else:
        out["violation"] = (
            violation_to_obj(v.slices[0].violation) if v.slices[0].violation else None
        )
    return out


def couple_to_obj(c: FundamentalCouple) -> dict:
    return {"I": list(c.I), "J": list(c.J)}


def decomposition_to_obj(S: SemigroupPair, d: Decomposition) -> dict:
    return {
        "atoms": [term_to_obj(t) for t in d.atoms],
        "witness_module": witness_module(S, d),
        "provenance": d.provenance,
    }


def depth_report_to_obj(S: SemigroupPair, r: DepthReport) -> dict:
    out: dict = {"hdep": r.hdep}
    if r.star is not None:
        out["star"] = verdict_to_obj(r.star)
    if r.decomposition is not None:
        out["decomposition"] = decomposition_to_obj(S, r.decomposition)
    if r.caveat is not None:
        out["caveat"] = r.caveat
    return out
