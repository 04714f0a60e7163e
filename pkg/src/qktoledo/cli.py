"""Command-line front end: reproducible exact reports.

Verbs: pullback, lift-check, classify, period-triple, selftest.  All scalars
print in the canonical Q(i, sqrt2) format; --json emits deterministic JSON
(sorted keys, seed echoed back), so fixed argv gives byte-identical output.
Exit codes: 0 success, 1 failed check, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .scalars import FieldElem, parse_field_elem
from .linalg import Subspace, herm_form
from .embeddings import BALL_SIG, W_SIG, make_embedding
from .toledo import pullback_constant
from .lifting import (classify_column, classify_linearity, holomorphy_check_u3u1u2,
                      horizontality_check, period_triple, twistor_lift_condition,
                      twistor_nonlift_check)
from .selftest import run_selftest

_CLI_EMBEDDINGS = {
    "rho": "rho",
    "totally-real": "totally_real",
    "phi": "phi",
    "sym-square": "sym_square",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qktoledo",
        description="Exact quaternionic pullback constants and period-domain checks.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("pullback", help="pullback constants of the 4-form")
    p.add_argument("--embedding", required=True, choices=sorted(_CLI_EMBEDDINGS))
    p.add_argument("--n", type=int, default=2, help="ball dimension (default 2)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lift-check", help="seeded holomorphic lifting checks")
    p.add_argument("--domain", required=True, choices=["twistor", "u3u1u2"])
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="linearity classification of a differential")
    p.add_argument("--embedding", required=True, choices=sorted(_CLI_EMBEDDINGS))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("period-triple", help="flag of a negative line in C^{2,1}")
    p.add_argument("--vector", required=True,
                   help='comma-separated exact components, e.g. "0,0,1" or "1/2,i,1"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("selftest", help="re-run every golden exact check")
    p.add_argument("--json", action="store_true")

    return parser


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))


def _cmd_pullback(args) -> int:
    name = _CLI_EMBEDDINGS[args.embedding]
    embedding = make_embedding(name, args.n)
    report = pullback_constant(embedding)
    if args.json:
        _emit_json(report.to_json_dict())
        return 0
    print(f"embedding: {args.embedding}")
    print(f"convention: {report.convention}")
    print(f"omega_on_basis: {report.omega_value}")
    print(f"Omega0^2_on_basis: {report.omega0sq_value}")
    print(f"ratio_to_OmegaB2: {report.ratio}")
    return 0


def _random_pair(rng) -> tuple:
    """Nonzero a in Q(i)^2 with small integer coordinates."""
    while True:
        a = tuple(FieldElem(rng.randint(-3, 3), rng.randint(-3, 3))
                  for _ in range(2))
        if any(a):
            return a


def _random_negative_line(rng):
    """A negative vector for the (2,1) form plus a direction orthogonal to it."""
    while True:
        v0 = (FieldElem(Fraction(rng.randint(-1, 1), 2), Fraction(rng.randint(-1, 1), 2)),
              FieldElem(Fraction(rng.randint(-1, 1), 2), Fraction(rng.randint(-1, 1), 2)),
              FieldElem(1))
        if herm_form(v0, v0, BALL_SIG).real_sign() < 0:
            break
    basis = Subspace.span(3, [v0]).perp(BALL_SIG).basis
    acc = (FieldElem(0), FieldElem(0), FieldElem(0))
    for b in basis:
        coef = FieldElem(rng.randint(-2, 2), rng.randint(-2, 2))
        acc = tuple(x + coef * y for x, y in zip(acc, b))
    return v0, acc


def _fmt_vec(vec) -> str:
    return "(" + ", ".join(str(x) for x in vec) + ")"


def _cmd_lift_check(args) -> int:
    rng = random.Random(args.seed)
    samples = []
    all_ok = True
    for _ in range(args.samples):
        if args.domain == "twistor":
            a = _random_pair(rng)
            verdict = twistor_nonlift_check(a)
            ok = not verdict.member
            record = verdict.to_json_dict()
            record["input"] = f"a={_fmt_vec(a)}"
            record["pass"] = ok
        else:
            a = _random_pair(rng)
            holo = holomorphy_check_u3u1u2(a)
            v0, w = _random_negative_line(rng)
            horiz = horizontality_check(v0, w)
            ok = holo and horiz
            record = {
                "check": "u3u1u2-lift",
                "input": f"a={_fmt_vec(a)}; v0={_fmt_vec(v0)}; w={_fmt_vec(w)}",
                "verdict": f"holomorphic={holo}, horizontal={horiz}",
                "violations": [],
                "pass": ok,
            }
        samples.append(record)
        all_ok = all_ok and ok
    summary = "PASS" if all_ok else "FAIL"
    if args.json:
        _emit_json({"check": args.domain, "seed": args.seed,
                    "samples": samples, "summary": summary})
    else:
        print(f"domain: {args.domain}  samples: {args.samples}  seed: {args.seed}")
        for k, record in enumerate(samples):
            status = "PASS" if record["pass"] else "FAIL"
            print(f"  sample {k}: {record['input']} -> {record['verdict']} [{status}]")
        print(f"summary: {summary}")
    return 0 if all_ok else 1


def _cmd_classify(args) -> int:
    embedding = make_embedding(_CLI_EMBEDDINGS[args.embedding])
    rows = embedding.values[0].p
    components = [{"column": col, "row": row,
                   "verdict": classify_linearity(embedding, col, row)}
                  for col in (1, 2) for row in range(1, rows + 1)]
    columns = {str(col): classify_column(embedding, col) for col in (1, 2)}
    condition = twistor_lift_condition(embedding)
    if args.json:
        _emit_json({"embedding": args.embedding, "components": components,
                    "columns": columns, "twistor_lift_condition": condition})
        return 0
    print(f"embedding: {args.embedding}")
    for item in components:
        print(f"  column {item['column']}, component {item['row']}: {item['verdict']}")
    print(f"column 1 overall: {columns['1']}")
    print(f"column 2 overall: {columns['2']}")
    status = "holds" if condition else "fails"
    print(f"twistor lift necessary condition (col 1 conjugate-linear, "
          f"col 2 linear): {status}")
    return 0


def _cmd_period_triple(args, parser) -> int:
    try:
        components = [parse_field_elem(part) for part in args.vector.split(",")]
    except ValueError as exc:
        parser.error(f"cannot parse --vector: {exc}")
    try:
        triple = period_triple(components)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        payload = {"vector": [str(c) for c in components]}
        for label, space in triple.parts():
            payload[label] = {
                "dimension": space.dim,
                "definiteness": space.definiteness(W_SIG),
                "basis": [[str(x) for x in row] for row in space.basis],
            }
        _emit_json(payload)
        return 0
    print(f"vector: {_fmt_vec(components)}")
    for label, space in triple.parts():
        print(f"{label}: dimension {space.dim}, "
              f"{space.definiteness(W_SIG)} definite")
        for row in space.basis:
            print(f"  [{', '.join(str(x) for x in row)}]")
    return 0


def _cmd_selftest(args) -> int:
    all_ok, results = run_selftest()
    if args.json:
        _emit_json({"summary": "PASS" if all_ok else "FAIL",
                    "checks": [{"name": name, "pass": ok, "detail": detail}
                               for name, ok, detail in results]})
    else:
        for name, ok, detail in results:
            print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
        print(f"selftest: {'PASS' if all_ok else 'FAIL'} "
              f"({sum(1 for _, ok, _ in results if ok)}/{len(results)})")
    return 0 if all_ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "pullback":
        if args.embedding == "sym-square" and args.n != 2:
            parser.error("sym-square is defined for --n 2 only")
        return _cmd_pullback(args)
    if args.verb == "lift-check":
        return _cmd_lift_check(args)
    if args.verb == "classify":
        return _cmd_classify(args)
    if args.verb == "period-triple":
        return _cmd_period_triple(args, parser)
    return _cmd_selftest(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
