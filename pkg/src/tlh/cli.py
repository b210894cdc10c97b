"""Command-line front end: enumeration, products, factorization, forms, verification.

Subcommands: dims, enumerate, multiply, factorize, gram, verify.  Output is
human-readable text by default; --format structured prints line-delimited
JSON records with sorted keys, so identical inputs give byte-identical
output.  Exit status: 0 when every check passes, 1 when a mathematical
property is violated, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import pathlib
import random
import re
import sys
from math import comb

from tlh.algebra import (
    AlgebraElement,
    evaluate_word,
    normal_form,
    normal_form_random,
    positivity_check,
    verify_presentation,
)
from tlh.cellular import (
    CellLabel,
    IndependenceViolation,
    gram_matrix,
    lambda_poset,
    semisimplicity_check,
    tableaux,
    verify_branching,
    verify_cellular_axioms,
)
from tlh.diagram import enumerate_diagrams
from tlh.factor import FactorizationError, factorize
from tlh.ring import LaurentPoly
from tlh.tangle import random_tangle

DEFAULT_SEED = 20260825

#: Largest n each operation runs at without an explicit --cap override.
DEFAULT_CAPS = {
    "dims": 8,
    "enumerate": 8,
    "multiply": 8,
    "factorize": 6,
    "gram": 5,
    "presentation": 6,
    "associativity": 4,
    "positivity": 4,
    "cellular": 5,
    "semisimplicity": 5,
    "branching": 6,
}

SUITES = (
    "presentation",
    "associativity",
    "positivity",
    "cellular",
    "semisimplicity",
    "branching",
)

#: What passing each suite certifies; printed in the report header.
PROPERTIES = {
    "presentation": "defining relations and special-element identities of the generators",
    "associativity": "product associativity and order-independence of reduction",
    "positivity": "structure constants are positive integers times powers of [2]",
    "cellular": "cell-basis axioms: basis, flip symmetry, south-independent action",
    "semisimplicity": "every cell layer carries a symmetric nondegenerate bilinear form",
    "branching": "dropping the east strand triangularizes each layer over lower-rank layers",
}


class UsageError(Exception):
    """A malformed invocation; reported on stderr with exit status 2."""


class Report:
    """Collects output lines in the requested format and writes them once."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list = []

    def emit(self, record: dict, text: str):
        if self.fmt == "structured":
            self.lines.append(json.dumps(record, sort_keys=True, separators=(",", ":")))
        else:
            self.lines.append(text)

    def write(self, out_path):
        data = "".join(line + "\n" for line in self.lines)
        if out_path:
            pathlib.Path(out_path).write_text(data)
        else:
            sys.stdout.write(data)


def _require_n(args) -> int:
    if args.n is None:
        raise UsageError("this subcommand needs --n")
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    return args.n


def _check_cap(args, key: str, n: int):
    cap = DEFAULT_CAPS[key] if args.cap is None else args.cap
    if cap <= 0:
        raise UsageError(f"--cap must be positive, got {cap}")
    if n > cap:
        raise UsageError(f"{key} is capped at n <= {cap} (got n = {n}); override with --cap")


def _load_element(operand: str, n) -> AlgebraElement:
    """An operand: a JSON file path, or a word like 'U1 U2' or 'epsilon*beta'."""
    path = pathlib.Path(operand)
    if path.exists():
        return AlgebraElement.from_json(json.loads(path.read_text()))
    tokens = [t for t in re.split(r"[\s*,]+", operand.strip()) if t]
    if not tokens:
        raise UsageError("empty operand")
    if n is None:
        raise UsageError(f"operand {operand!r} is not a file; a generator word needs --n")
    try:
        return evaluate_word(tokens, n + 1)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_dims(args, report: Report) -> int:
    n = _require_n(args)
    _check_cap(args, "dims", n)
    total = 0
    for label in lambda_poset(n):
        dim = len(tableaux(label, n))
        total += dim * dim
        report.emit(
            {"kind": "dims", "label": str(label), "dim": dim},
            f"|M({label})| = {dim}",
        )
    formula = comb(2 * n + 2, n + 1) - 2 ** (n + 2) + n + 3
    enumerated = len(enumerate_diagrams(n + 1))
    ok = total == formula == enumerated
    report.emit(
        {
            "kind": "total",
            "sum_of_squares": total,
            "formula": formula,
            "enumerated": enumerated,
            "verdict": "pass" if ok else "fail",
        },
        f"sum of squares = {total}; closed form = {formula}; "
        f"enumerated = {enumerated}: {'pass' if ok else 'FAIL'}",
    )
    return 0 if ok else 1


def cmd_enumerate(args, report: Report) -> int:
    n = _require_n(args)
    _check_cap(args, "enumerate", n)
    if args.selector:
        label = CellLabel.parse(args.selector, n)
        for h in tableaux(label, n):
            report.emit({"kind": "tableau", "label": str(label), "half": h.to_json()}, str(h))
    else:
        for d in enumerate_diagrams(n + 1):
            report.emit({"kind": "diagram", "diagram": d.to_json()}, str(d))
    return 0


def cmd_multiply(args, report: Report) -> int:
    if args.n is not None:
        _check_cap(args, "multiply", _require_n(args))
    left = _load_element(args.left, args.n)
    right = _load_element(args.right, args.n)
    if left.m != right.m:
        raise UsageError(f"operands live on {left.m} and {right.m} strands")
    if args.n is not None and left.m != args.n + 1:
        raise UsageError(f"--n {args.n} means {args.n + 1} strands, but operands have {left.m}")
    product = left * right
    report.emit(product.to_json(), str(product))
    return 0


def cmd_factorize(args, report: Report) -> int:
    if args.element is not None:
        x = _load_element(args.element, args.n)
        terms = x.items()
        if len(terms) != 1 or terms[0][1] != LaurentPoly.one():
            raise UsageError("factorization needs a single basis diagram with coefficient 1")
        word = factorize(terms[0][0])
        report.emit(
            {"kind": "factorization", "diagram": terms[0][0].to_json(), "word": word},
            f"{terms[0][0]}  ->  {' '.join(word) if word else '1'}",
        )
        return 0
    n = _require_n(args)
    _check_cap(args, "factorize", n)
    code = 0
    for d in enumerate_diagrams(n + 1):
        try:
            word = factorize(d)
        except FactorizationError as exc:
            report.emit(
                {"kind": "factorization", "diagram": d.to_json(), "verdict": "fail", "detail": str(exc)},
                f"FAIL {d}: {exc}",
            )
            code = 1
            continue
        report.emit(
            {"kind": "factorization", "diagram": d.to_json(), "word": word},
            f"{d}  ->  {' '.join(word) if word else '1'}",
        )
    return code


def cmd_gram(args, report: Report) -> int:
    n = _require_n(args)
    _check_cap(args, "gram", n)
    labels = (CellLabel.parse(args.selector, n),) if args.selector else lambda_poset(n)
    checks = None if n <= 4 else 12
    code = 0
    for label in labels:
        try:
            form = gram_matrix(label, n, choice_checks=checks)
        except IndependenceViolation as exc:
            report.emit(
                {"kind": "gram", "label": str(label), "verdict": "fail", "detail": str(exc)},
                f"lambda = {label}: FAIL {exc}",
            )
            code = 1
            continue
        det = form.det()
        verdict = "degenerate" if det.is_zero() else "nondegenerate"
        record = {
            "kind": "gram",
            "label": str(label),
            "dim": form.n_rows,
            "gram_det": det.to_json(),
            "verdict": verdict,
        }
        text = f"lambda = {label}: dim {form.n_rows}, det = {det}, {verdict}"
        if args.selector:
            record["matrix"] = form.to_json()
            text += "\n" + str(form)
        report.emit(record, text)
        if det.is_zero():
            code = 1
    return code


def _associativity_problems(n: int, seed: int) -> list:
    m = n + 1
    problems = []
    elements = [AlgebraElement.from_diagram(d) for d in enumerate_diagrams(m)]
    if n <= 2:
        triples = itertools.product(elements, repeat=3)
    else:
        rng = random.Random(seed)
        triples = (
            (rng.choice(elements), rng.choice(elements), rng.choice(elements))
            for _ in range(1200)
        )
    for x, y, z in triples:
        if (x * y) * z != x * (y * z):
            problems.append(f"associativity fails on ({x}), ({y}), ({z})")
    rng = random.Random(seed + 1)
    for _ in range(1200):
        t = random_tangle(rng, m, m, max_dec=3, n_loops=rng.randint(0, 2))
        if dict(normal_form(t)) != normal_form_random(t, rng):
            problems.append(f"reduction order changes the normal form of {t}")
    return problems


def _run_suite(suite: str, n: int, seed: int) -> list:
    if suite == "presentation":
        return verify_presentation(n + 1)
    if suite == "associativity":
        return _associativity_problems(n, seed)
    if suite == "positivity":
        return positivity_check(n + 1)
    if suite == "cellular":
        return verify_cellular_axioms(n)
    if suite == "semisimplicity":
        return semisimplicity_check(n)
    assert suite == "branching", f"unknown suite {suite!r}"
    return verify_branching(n)


def cmd_verify(args, report: Report) -> int:
    n = _require_n(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    if "branching" in suites and n < 3:
        if args.suite == "branching":
            raise UsageError("the branching suite needs n >= 3")
        suites = tuple(s for s in suites if s != "branching")
    for suite in suites:
        _check_cap(args, suite, n)
    seed = DEFAULT_SEED if args.seed is None else args.seed
    failures = 0
    for suite in suites:
        report.emit(
            {"kind": "suite", "suite": suite, "n": n, "property": PROPERTIES[suite]},
            f"== {suite} (n = {n}): {PROPERTIES[suite]}",
        )
        problems = _run_suite(suite, n, seed)
        for p in problems:
            report.emit(
                {"kind": "check", "suite": suite, "verdict": "fail", "detail": p},
                f"FAIL {p}",
            )
        report.emit(
            {"kind": "result", "suite": suite, "verdict": "pass" if not problems else "fail", "failures": len(problems)},
            f"{'PASS' if not problems else 'FAIL'} {suite}: {len(problems)} violation(s)",
        )
        failures += len(problems)
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="Coxeter index; diagrams use n + 1 strands")
    common.add_argument("--lambda", dest="selector", default=None, metavar="LABEL",
                        help="cell label selector: 0, k, kb or mid")
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="structured prints line-delimited JSON records")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    common.add_argument("--cap", type=int, default=None, help="override the built-in size cap")
    common.add_argument("--out", default=None, metavar="PATH", help="write output to a file")

    parser = argparse.ArgumentParser(prog="tlh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="cell layer sizes and the total rank")
    p.set_defaults(func=cmd_dims)
    p = sub.add_parser("enumerate", parents=[common], help="list basis diagrams, or one layer's tableaux")
    p.set_defaults(func=cmd_enumerate)
    p = sub.add_parser("multiply", parents=[common], help="multiply two elements (JSON files or generator words)")
    p.add_argument("left", help="JSON file, or word such as 'U1 U2' or 'epsilon*beta'")
    p.add_argument("right", help="second operand")
    p.set_defaults(func=cmd_multiply)
    p = sub.add_parser("factorize", parents=[common], help="write basis diagrams as generator words")
    p.add_argument("element", nargs="?", default=None, help="JSON file or word; omit to list all diagrams at --n")
    p.set_defaults(func=cmd_factorize)
    p = sub.add_parser("gram", parents=[common], help="bilinear form matrices and determinants")
    p.set_defaults(func=cmd_gram)
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    report = Report(args.format)
    try:
        code = args.func(args, report)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.write(args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
