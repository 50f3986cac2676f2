"""Command-line front end with JSON output and stable exit codes.

Exit codes: 0 = computed (the verdict lives inside the JSON), 2 = input
error, 3 = internal invariant violation.  With --quiet-status a negative
verdict is additionally reflected as exit code 1 for shell pipelines.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys

from . import couples, decomp, jsonio, oracle, series, star
from .errors import (
    DecompositionNotFoundError,
    HildepthError,
    InvariantBrokenError,
    StarFailsError,
)
from .semigroup import apery, conductor, gaps, genus, make_pair, present

EXIT_OK = 0
EXIT_VERDICT_NO = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _emit(obj) -> None:
    print(json.dumps(obj))


def _load_series(path: str) -> jsonio.ParsedSeries:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise jsonio.SchemaError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise jsonio.SchemaError(f"malformed JSON in {path}: {e}") from e
    return jsonio.parse_series_obj(obj)


def _cmd_semigroup(args) -> int:
    if math.gcd(args.A, args.B) != 1:
        raise jsonio.SchemaError(
            "semigroup requires coprime weights; only check/depth "
            "accept a common divisor (they reduce by residue slices)"
        )
    S = make_pair(args.A, args.B)
    _emit(
        {
            "alpha": S.alpha,
            "beta": S.beta,
            "gaps": list(gaps(S)),
            "conductor": conductor(S),
            "genus": genus(S),
            "apery_alpha": list(apery(S, S.alpha)),
            "apery_beta": list(apery(S, S.beta)),
        }
    )
    return EXIT_OK


def _cmd_couples(args) -> int:
    if math.gcd(args.A, args.B) != 1:
        raise jsonio.SchemaError(
            "couples requires coprime weights; only check/depth "
            "accept a common divisor (they reduce by residue slices)"
        )
    S = make_pair(args.A, args.B)
    if args.count:
        _emit({"alpha": S.alpha, "beta": S.beta, "count": couples.count_couples(S)})
        return EXIT_OK
    it = couples.enumerate_couples(S)
    if args.limit is not None:
        it = itertools.islice(it, args.limit)
    if args.jsonl:
        for c in it:
            _emit(jsonio.couple_to_obj(c))
        return EXIT_OK
    listed = [jsonio.couple_to_obj(c) for c in it]
    _emit(
        {
            "alpha": S.alpha,
            "beta": S.beta,
            "count": couples.count_couples(S),
            "couples": listed,
        }
    )
    return EXIT_OK


def _cmd_check(args) -> int:
    parsed = _load_series(args.file)
    num, den1, den2 = parsed.general_numerator()
    verdict = star.check_star_general(parsed.d1, parsed.d2, num, den1, den2)
    _emit(jsonio.general_verdict_to_obj(verdict))
    if args.quiet_status and not verdict.holds:
        return EXIT_VERDICT_NO
    return EXIT_OK


def _cmd_depth(args) -> int:
    parsed = _load_series(args.file)
    if parsed.coprime:
        S = parsed.pair()
        report = decomp.hilbert_depth(
            S, parsed.terms if parsed.terms is not None else parsed.coprime_series()
        )
        _emit(jsonio.depth_report_to_obj(S, report))
        if args.quiet_status and report.hdep == 0:
            return EXIT_VERDICT_NO
        return EXIT_OK
    delta = math.gcd(parsed.d1, parsed.d2)
    S = make_pair(parsed.d1 // delta, parsed.d2 // delta)
    num, den1, den2 = parsed.general_numerator()
    extra = {}
    for d, r in ((parsed.d1, den1), (parsed.d2, den2)):
        if r:
            extra[d] = extra.get(d, 0) + r
    H = series.RationalSeries(S, num, 0, 0, tuple(sorted(extra.items())))
    slices = []
    hdep = 2
    for k in range(delta):
        rep = decomp.hilbert_depth(S, series.veronese(H, delta, k))
        hdep = min(hdep, rep.hdep)
        slices.append({"residue": k, **jsonio.depth_report_to_obj(S, rep)})
    _emit(
        {
            "hdep": hdep,
            "delta": delta,
            "pair": {"alpha": S.alpha, "beta": S.beta},
            "slices": slices,
            "note": "slice reports use the reduced grading",
        }
    )
    if args.quiet_status and hdep == 0:
        return EXIT_VERDICT_NO
    return EXIT_OK


def _cmd_decompose(args) -> int:
    parsed = _load_series(args.file)
    if not parsed.coprime:
        raise jsonio.SchemaError("decompose requires coprime weights")
    S = parsed.pair()
    payload = parsed.terms if parsed.terms is not None else parsed.coprime_series()
    try:
        d = decomp.decompose(S, payload)
    except StarFailsError as e:
        _emit(
            {
                "decomposable": False,
                "reason": "criterion_violated",
                "violation": jsonio.violation_to_obj(e.violation),
            }
        )
        return EXIT_VERDICT_NO if args.quiet_status else EXIT_OK
    except DecompositionNotFoundError as e:
        _emit({"decomposable": False, "reason": "not_found", "detail": str(e)})
        return EXIT_VERDICT_NO if args.quiet_status else EXIT_OK
    obj = {"decomposable": True, **jsonio.decomposition_to_obj(S, d)}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(obj, fh)
            fh.write("\n")
    _emit(obj)
    return EXIT_OK


def _cmd_pd(args) -> int:
    parsed = _load_series(args.file)
    if not parsed.coprime:
        raise jsonio.SchemaError("pd requires coprime weights")
    S = parsed.pair()
    H = parsed.coprime_series()
    d = args.d if args.d is not None else S.product
    value = decomp.pd(H, d)
    _emit({"d": d, "pd": value, "unbounded": value is None})
    return EXIT_OK


def _selftest_checks(seed: int, quick: bool):
    span = 60 if quick else 200
    pairs = [make_pair(3, 5), make_pair(4, 7), make_pair(2, 9)]
    ok = all(
        oracle.brute_present(S, n) == present(S, n)
        for S in pairs
        for n in range(1, span + 1)
    )
    yield "presentations_match_bruteforce", ok, f"n in [1, {span}], {len(pairs)} pairs"

    count_pairs = [make_pair(2, 3), make_pair(3, 4), make_pair(3, 5), make_pair(4, 5)]
    if not quick:
        count_pairs.append(make_pair(4, 7))
    ok = all(
        couples.count_couples(S) == oracle.brute_count_couples(S) for S in count_pairs
    )
    yield "couple_counts_match_bruteforce", ok, f"{len(count_pairs)} pairs"

    S = make_pair(3, 5)
    corpus = oracle.make_corpus(S, seed, 8 if quick else 25)
    ok = True
    for entry in corpus.entries:
        ok = ok and star.check_star(S, entry.series).holds
        ok = ok and star.check_inequality_24(S, entry.series)
        for _, I, J in oracle.regression_vectors_3_5():
            ok = ok and star.holds_for_all_shifts(S, entry.series, I, J)
    yield "corpus_satisfies_criterion", ok, f"{len(corpus.entries)} series"

    S23 = make_pair(2, 3)
    deg = 4 if quick else 6
    ok = True
    for bits in itertools.product((0, 1), repeat=deg + 1):
        H = series.RationalSeries(
            S23, series.LaurentPoly(enumerate(bits)), 0, 0, ((6, 1),)
        )
        fast = star.check_star(S23, H).holds
        slow = oracle.brute_decomposable_dim1(S23, H)
        ok = ok and fast == slow
    yield "criterion_matches_search", ok, f"{2 ** (deg + 1)} series over (2, 3)"

    ok = True
    for entry in corpus.entries[: 5 if quick else 10]:
        d = decomp.decompose(S, entry.terms)
        ok = ok and decomp.verify_decomposition(S, entry.series, d)
    yield "decompositions_verify", ok, "corpus round-trip"


def _cmd_selftest(args) -> int:
    checks = []
    all_ok = True
    for name, ok, detail in _selftest_checks(args.seed, args.quick):
        checks.append({"name": name, "ok": ok, "detail": detail})
        all_ok = all_ok and ok
    _emit({"ok": all_ok, "checks": checks})
    return EXIT_OK if all_ok else EXIT_INTERNAL


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hildepth",
        description=(
            "Exact positive-depth criterion, couple enumeration and "
            "decomposition witnesses for series graded by two weights"
        ),
    )
    p.add_argument(
        "--quiet-status",
        action="store_true",
        help="also reflect a negative verdict as exit code 1",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("semigroup", help="gaps, conductor, genus, Apery sets")
    sp.add_argument("A", type=int)
    sp.add_argument("B", type=int)
    sp.set_defaults(fn=_cmd_semigroup)

    sp = sub.add_parser("couples", help="enumerate or count fundamental couples")
    sp.add_argument("A", type=int)
    sp.add_argument("B", type=int)
    sp.add_argument("--count", action="store_true", help="count only")
    sp.add_argument("--limit", type=int, default=None, help="stop after N couples")
    sp.add_argument("--jsonl", action="store_true", help="stream one couple per line")
    sp.set_defaults(fn=_cmd_couples)

    sp = sub.add_parser("check", help="decide the depth-positivity criterion")
    sp.add_argument("file")
    sp.set_defaults(fn=_cmd_check)

    sp = sub.add_parser("depth", help="depth classification with certificate")
    sp.add_argument("file")
    sp.set_defaults(fn=_cmd_depth)

    sp = sub.add_parser("decompose", help="construct a decomposition witness")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", default=None, help="also write JSON to a file")
    sp.set_defaults(fn=_cmd_decompose)

    sp = sub.add_parser("pd", help="largest r with (1 - t^d)^r * series nonnegative")
    sp.add_argument("file")
    sp.add_argument("--d", type=int, default=None, help="defaults to alpha*beta")
    sp.set_defaults(fn=_cmd_pd)

    sp = sub.add_parser("selftest", help="run the built-in oracle cross-checks")
    sp.add_argument("--quick", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=_cmd_selftest)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        if e.code not in (0, None):
            _emit({"error": "invalid arguments"})
            return EXIT_INPUT
        return EXIT_OK
    try:
        return args.fn(args)
    except (jsonio.SchemaError, ValueError) as e:
        _emit({"error": str(e)})
        return EXIT_INPUT
    except InvariantBrokenError as e:
        _emit({"error": str(e), "internal": True})
        return EXIT_INTERNAL
    except HildepthError as e:
        _emit({"error": str(e)})
        return EXIT_INPUT
    except Exception as e:  # pragma: no cover - last-resort guard
        _emit({"error": f"internal error: {e}", "internal": True})
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
