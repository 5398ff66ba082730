"""Command-line front end.

Subcommands: seq, stern, verify (prop-main | theorem | equivalence | lemmas),
spectrum, scan, bqf. Results go to stdout, diagnostics to stderr; ``--json``
switches to one JSON object per line. The exit status is 0 exactly when
every requested check passed, so verify sweeps can gate CI.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from . import theorems
from .diatomic import stern
from .spectrum import BQForm, MarkovValue, bqf_min, markov_value
from .theorems import VerificationReport
from .tree import block_labels, s_rec
from .words import format_word, parse_word


def _word_arg(text: str):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _form_arg(text: str) -> BQForm:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"form needs three coefficients, got {text!r}")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer coefficient in {text!r}")
    return BQForm(a, b, c)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markovwords",
        description="Ordered Markov words, palindromic shifts, exact spectrum values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print the word with index n")
    p_seq.add_argument("--A", type=_word_arg, default=(1, 1), metavar="WORD")
    p_seq.add_argument("--B", type=_word_arg, default=(2, 2), metavar="WORD")
    p_seq.add_argument("--n", type=int, required=True)
    p_seq.add_argument("--blocks", action="store_true", help="print the block word instead")
    p_seq.add_argument("--json", action="store_true")

    p_stern = sub.add_parser("stern", help="emit the diatomic sequence as index,value CSV")
    p_stern.add_argument("--upto", type=int, required=True, metavar="N")
    p_stern.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    vsub = p_verify.add_subparsers(dest="check", required=True)

    p_prop = vsub.add_parser("prop-main", help="d(n)-shift palindromicity sweep")
    p_prop.add_argument("--n-max", type=int, default=4096)
    p_prop.add_argument("--a", type=int, default=1, help="letter of the first seed (a,a)")
    p_prop.add_argument("--b", type=int, default=2, help="letter of the second seed (b,b)")

    p_thm = vsub.add_parser("theorem", help="block-rearrangement sweep over random seeds")
    p_thm.add_argument("--trials", type=int, default=200)
    p_thm.add_argument("--seed", type=int, default=42)
    p_thm.add_argument("--n-max", type=int, default=512)

    p_eq = vsub.add_parser("equivalence", help="graph builder vs index recursion")
    p_eq.add_argument("--levels", type=int, default=10)
    p_eq.add_argument("--pairs", type=int, default=20)
    p_eq.add_argument("--seed", type=int, default=42)

    p_lem = vsub.add_parser("lemmas", help="supporting identity suite")
    p_lem.add_argument("--k-max", type=int, default=4096)

    for p in (p_prop, p_thm, p_eq, p_lem):
        p.add_argument("--json", action="store_true")
        p.add_argument("--workers", type=int, default=1)

    p_spec = sub.add_parser("spectrum", help="exact Perron value of a period")
    p_spec.add_argument("--period", type=_word_arg, required=True, metavar="WORD")
    p_spec.add_argument("--digits", type=int, default=30)
    p_spec.add_argument("--json", action="store_true")

    p_scan = sub.add_parser("scan", help="tabulate spectrum values of S(1..n)")
    p_scan.add_argument("--n-max", type=int, default=64)
    p_scan.add_argument("--A", type=_word_arg, default=(1, 1), metavar="WORD")
    p_scan.add_argument("--B", type=_word_arg, default=(2, 2), metavar="WORD")
    p_scan.add_argument("--digits", type=int, default=30)
    p_scan.add_argument("--json", action="store_true")
    p_scan.add_argument("--workers", type=int, default=1)

    p_bqf = sub.add_parser("bqf", help="bounded lattice minimum of an indefinite form")
    p_bqf.add_argument("--form", type=_form_arg, required=True, metavar="A,B,C")
    p_bqf.add_argument("--radius", type=int, default=50)
    p_bqf.add_argument("--digits", type=int, default=30)
    p_bqf.add_argument("--json", action="store_true")

    return parser


def _emit(line: str) -> None:
    print(line)


def _surd_json(surd) -> dict:
    p, q, r, d = surd.as_tuple()
    return {"p": p, "q": q, "r": r, "D": d}


def _surd_text(surd) -> str:
    return "({},{},{},{})".format(*surd.as_tuple())


def _report_lines(reports: Iterable[VerificationReport], check: str, as_json: bool):
    """Yield (passed, line) pairs for a stream of reports."""
    for rep in reports:
        if as_json:
            payload = {"command": "verify", "check": check}
            payload.update(rep.to_json())
            yield rep.passed, json.dumps(payload)
        else:
            status = "PASS" if rep.passed else "FAIL"
            extra = f" witness={rep.witness}" if rep.witness is not None else ""
            counter = (
                f" counterexample={rep.counterexample}"
                if rep.counterexample is not None
                else ""
            )
            yield rep.passed, f"{status} {rep.claim} n={rep.n}{extra}{counter}"


def _parallel(worker, payloads: Sequence, workers: int) -> list:
    if workers <= 1:
        return [worker(p) for p in payloads]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, payloads))


def _prop_main_worker(payload) -> list[VerificationReport]:
    a, b, ns = payload
    return [theorems.verify_shift_palindromic(a, b, n) for n in ns]


def _theorem_worker(payload) -> VerificationReport:
    idx, wa, wb, n_max = payload
    return theorems.verify_rearrangement_pair(idx, wa, wb, n_max)


def _equivalence_worker(payload) -> VerificationReport:
    idx, wa, wb, levels = payload
    return theorems.verify_equivalence_pair(idx, wa, wb, levels)


def _scan_worker(payload) -> tuple[int, tuple, MarkovValue, bool]:
    a, b, n = payload
    period = s_rec(a, b, n)
    mv = markov_value(period)
    return n, period, mv, mv.value.compare(3) < 0


def _chunks(items: list, size: int) -> list[list]:
    return [items[i: i + size] for i in range(0, len(items), size)]


def _cmd_seq(args) -> int:
    if args.n < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return 2
    seq = s_rec(args.A, args.B, args.n)
    labels = "".join(block_labels(args.n))
    if args.json:
        _emit(json.dumps({
            "command": "seq",
            "n": args.n,
            "A": list(args.A),
            "B": list(args.B),
            "sequence": list(seq),
            "blocks": labels,
        }))
    elif args.blocks:
        _emit(labels)
    else:
        _emit(format_word(seq))
    return 0


def _cmd_stern(args) -> int:
    if args.upto < 0:
        print("error: --upto must be >= 0", file=sys.stderr)
        return 2
    for n in range(args.upto + 1):
        if args.json:
            _emit(json.dumps({"command": "stern", "n": n, "value": stern(n)}))
        else:
            _emit(f"{n},{stern(n)}")
    return 0


def _cmd_verify(args) -> int:
    if args.check == "prop-main":
        ns = list(range(1, args.n_max + 1))
        chunked = _chunks(ns, max(1, len(ns) // max(1, args.workers * 4)))
        payloads = [(args.a, args.b, chunk) for chunk in chunked]
        reports = [r for batch in _parallel(_prop_main_worker, payloads, args.workers)
                   for r in batch]
    elif args.check == "theorem":
        pairs = theorems.random_seed_pairs(args.trials, args.seed)
        payloads = [(i, wa, wb, args.n_max) for i, (wa, wb) in enumerate(pairs, 1)]
        reports = _parallel(_theorem_worker, payloads, args.workers)
    elif args.check == "equivalence":
        pairs = [((1, 1), (2, 2))] + theorems.random_word_pairs(args.pairs, args.seed)
        payloads = [(i, wa, wb, args.levels) for i, (wa, wb) in enumerate(pairs)]
        reports = _parallel(_equivalence_worker, payloads, args.workers)
    else:
        reports = list(theorems.iter_lemma_checks(args.k_max))

    failed = 0
    total = 0
    for passed, line in _report_lines(reports, args.check, args.json):
        _emit(line)
        total += 1
        failed += not passed
    print(f"{args.check}: {total - failed}/{total} passed", file=sys.stderr)
    return 0 if failed == 0 else 1


def _spectrum_payload(period, digits: int) -> dict:
    mv = markov_value(period)
    return {
        "period": list(period),
        "surd": _surd_json(mv.value),
        "decimal": mv.value.to_decimal(digits),
        "argmin": mv.argmin,
        "is_markov": mv.value.compare(3) < 0,
    }


def _cmd_spectrum(args) -> int:
    payload = _spectrum_payload(args.period, args.digits)
    if args.json:
        _emit(json.dumps({"command": "spectrum", **payload}))
    else:
        mv = markov_value(args.period)
        _emit(
            f"period={format_word(args.period)} surd={_surd_text(mv.value)} "
            f"decimal={payload['decimal']} argmin={payload['argmin']} "
            f"markov={str(payload['is_markov']).lower()}"
        )
    return 0


def _cmd_scan(args) -> int:
    if args.n_max < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return 2
    payloads = [(args.A, args.B, n) for n in range(1, args.n_max + 1)]
    rows = _parallel(_scan_worker, payloads, args.workers)
    for n, period, mv, markov in rows:
        if args.json:
            _emit(json.dumps({
                "command": "scan",
                "n": n,
                "period": list(period),
                "surd": _surd_json(mv.value),
                "decimal": mv.value.to_decimal(args.digits),
                "argmin": mv.argmin,
                "is_markov": markov,
            }))
        else:
            _emit(
                f"n={n} period={format_word(period)} surd={_surd_text(mv.value)} "
                f"decimal={mv.value.to_decimal(args.digits)} "
                f"markov={str(markov).lower()}"
            )
    return 0


def _cmd_bqf(args) -> int:
    try:
        result = bqf_min(args.form, args.radius)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    decimal = result.normalized.to_decimal(args.digits)
    if args.json:
        _emit(json.dumps({
            "command": "bqf",
            "form": [args.form.a, args.form.b, args.form.c],
            "radius": args.radius,
            "min_abs": result.min_abs,
            "point": list(result.point),
            "normalized": _surd_json(result.normalized),
            "decimal": decimal,
        }))
    else:
        _emit(
            f"form={args.form.a},{args.form.b},{args.form.c} radius={args.radius} "
            f"min_abs={result.min_abs} point=({result.point[0]},{result.point[1]}) "
            f"normalized={_surd_text(result.normalized)} decimal={decimal}"
        )
    return 0


_HANDLERS = {
    "seq": _cmd_seq,
    "stern": _cmd_stern,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "scan": _cmd_scan,
    "bqf": _cmd_bqf,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
