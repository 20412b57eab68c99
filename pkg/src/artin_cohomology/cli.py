"""Command-line front end.

Every subcommand prints a human-readable table, or with ``--json`` a single
JSON document.  Exit status is 0 when every check passes, 1 on a mismatch and
2 on usage or internal errors.  Set ``ARTIN_COHOMOLOGY_LOG`` to a logging
level name (``INFO``, ``DEBUG``) for progress messages on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field

from .closed_form import predict_affine, predict_qt, predict_t, specialize_prediction
from .coxeter import BudgetError, CoxeterDiagram, diagram_from_shorthand, group_poincare_oracle, type_a, type_b
from .orbit import artin_presentation, finite_parabolic_subsets
from .poly import BiLaurent, q_number, qt_even_number
from .reps import verify_all
from .salvetti import build_complex, parse_specialization, specialize_complex
from .smith import complex_cohomology
from .spectral import e1_prediction, verify_e1
from .suites import SUITES, Check, run_suite

LOG_ENV = "ARTIN_COHOMOLOGY_LOG"
log = logging.getLogger("artin_cohomology")


@dataclass
class RunReport:
    """What a command did: its argv, per-check status, timing and emitted payload."""

    command: list[str]
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    artifacts: dict = field(default_factory=dict)
    text: str = ""
    exit_code: int | None = None
    json_mode: bool = False

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def status(self) -> int:
        if self.exit_code is not None:
            return self.exit_code
        return 0 if self.ok else 1

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "ok": self.ok,
            "seconds": round(self.seconds, 4),
            "checks": [c.to_json() for c in self.checks],
            "artifacts": self.artifacts,
        }


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _family_rank(args) -> tuple[str, int]:
    if args.rank < 1:
        raise UsageError("--rank must be at least 1")
    return args.family, args.rank


def poincare_factors(family: str, n: int) -> list[BiLaurent]:
    """Linear-ish factors of the weighted Poincare polynomial, trivial factors dropped."""
    out = []
    if family == "A":
        for k in range(2, n + 2):
            out.append(q_number(k))
    else:
        for k in range(1, n + 1):
            if k > 1:
                out.append(q_number(k))
            out.append(qt_even_number(k).exact_div(q_number(k)))
    return [f for f in out if f != 1]


def cmd_poincare(args, rep: RunReport):
    fam, n = _family_rank(args)
    factors = poincare_factors(fam, n)
    total = BiLaurent.one()
    for f in factors:
        total = total * f
    factored = "".join(f"({f})" for f in factors) or "1"
    rep.artifacts = {"family": fam, "rank": n, "factored": factored, "expanded": str(total)}
    lines = [f"W_{fam}{n}(q,t) = {factored}", f"           = {total}"]
    if args.oracle:
        diagram = type_a(n) if fam == "A" else type_b(n)
        oracle = group_poincare_oracle(diagram, cap=args.cap)
        agree = oracle == total
        rep.checks.append(Check(f"oracle {fam}{n}", "pass" if agree else "fail", f"oracle = {oracle}"))
        rep.artifacts["oracle"] = str(oracle)
        lines.append(f"oracle agreement: {'yes' if agree else 'NO'}")
    rep.text = "\n".join(lines)


def cmd_complex(args, rep: RunReport):
    fam, n = _family_rank(args)
    cx = build_complex(fam, n)
    if args.spec:
        cx = specialize_complex(cx, parse_specialization(args.spec))
    defects = cx.square_defects()
    rep.checks.append(Check("delta^2=0", "fail" if defects else "pass", str(defects) if defects else ""))
    rep.artifacts = cx.to_json()
    if args.emit:
        rep.text = json.dumps(rep.artifacts, indent=1)
    else:
        lines = [f"{cx.label} over {cx.ring!r}", "ranks: " + " ".join(map(str, cx.ranks))]
        lines.append("delta o delta = 0" if not defects else f"delta o delta != 0 in degrees {defects}")
        rep.text = "\n".join(lines)


def cmd_cohomology(args, rep: RunReport):
    fam, n = _family_rank(args)
    spec = parse_specialization(args.spec)
    h = complex_cohomology(specialize_complex(build_complex(fam, n), spec))
    rep.artifacts = {"family": fam, "rank": n, "spec": args.spec, "ring": repr(h.ring), "cohomology": h.to_json()}
    rep.text = f"H^*({fam}{n}) over {h.ring!r}\n{h}"


def cmd_predict(args, rep: RunReport):
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    if args.kind == "t":
        h = predict_t(n)
        rep.artifacts = {"kind": "t", "n": n, "cohomology": h.to_json()}
        rep.text = str(h)
    elif args.kind == "affine":
        if n < 2:
            raise UsageError("affine predictions need --n >= 2")
        a = predict_affine(n)
        rep.artifacts = {
            "kind": "affine",
            "n": n,
            "betti": list(a.betti),
            "euler_characteristic": a.euler_characteristic,
            "q_modules": [{"degree": i, "cyclotomic": list(m), "free_rank": f} for i, (m, f) in sorted(a.q_modules.items())],
        }
        rep.text = f"betti numbers of G(A~{n - 1}): {a.betti}\neuler characteristic: {a.euler_characteristic}"
    else:
        pred = predict_qt(n)
        if args.spec:
            h = specialize_prediction(pred, parse_specialization(args.spec))
            rep.artifacts = {"kind": "qt", "n": n, "spec": args.spec, "cohomology": h.to_json()}
            rep.text = str(h)
        else:
            rep.artifacts = {"kind": "qt", "n": n, "prediction": pred.to_json()}
            rep.text = str(pred)


def _suite_table(checks: list[Check]) -> str:
    width = max((len(c.name) for c in checks), default=0)
    lines = [f"{c.name:<{width}}  {c.status.upper():<4}  {c.seconds:7.3f}s  {c.detail}".rstrip() for c in checks]
    passed = sum(c.status == "pass" for c in checks)
    lines.append(f"{passed}/{len(checks)} passed")
    return "\n".join(lines)


def cmd_verify(args, rep: RunReport):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        rep.checks.extend(run_suite(name, args.n_max))
    rep.artifacts = {"suites": names, "n_max": args.n_max}
    rep.text = _suite_table(rep.checks)


def cmd_spectral(args, rep: RunReport):
    page = e1_prediction(args.n)
    rep.artifacts = page.to_json()
    lines = [f"E1 page for B{args.n} (s = column, r = row)"]
    for (s, r), ms in sorted(page.entries.items()):
        lines.append(f"  ({s},{r}): " + " + ".join(f"{{{m}}}" for m in ms))
    lines.append("  free: " + ", ".join(f"({s},{r})" for s, r in page.free))
    if args.check:
        res = verify_e1(args.n)
        rep.checks.extend(
            Check(f"E1 ({c.s},{c.r})", "pass" if c.ok else "fail", f"torsion {list(c.torsion)}") for c in res.checks
        )
        lines.append(f"checked against SNF: {'all positions agree' if res.ok else 'MISMATCH'}")
    rep.text = "\n".join(lines)


def cmd_reps(args, rep: RunReport):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    reports = verify_all(args.n)
    for r in reports:
        rep.checks.append(Check(r.label, "pass" if r.ok else "fail"))
    rep.artifacts = {"n": args.n, "reports": [r.to_json() for r in reports]}
    rep.text = _suite_table(rep.checks)


def _load_diagram(args) -> CoxeterDiagram:
    if getattr(args, "diagram", None):
        with open(args.diagram) as fh:
            return CoxeterDiagram.from_json(json.load(fh))
    if getattr(args, "family", None):
        return diagram_from_shorthand(args.family)
    raise UsageError("give --family or --diagram")


def cmd_euler(args, rep: RunReport):
    d = _load_diagram(args)
    c = finite_parabolic_subsets(d)
    rep.artifacts = {
        "diagram": d.to_json(),
        "f_vector": list(c.f_vector),
        "euler_characteristic": c.euler_characteristic,
        "subsets": [[d.vertices[i] for i in j] for j in c.subsets],
    }
    rep.text = str(c.euler_characteristic) if args.quiet else f"f-vector {c.f_vector}\neuler characteristic {c.euler_characteristic}"


def cmd_presentation(args, rep: RunReport):
    p = artin_presentation(_load_diagram(args))
    rep.artifacts = p.to_json()
    rep.text = str(p)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    parser = _Parser(prog="artin-cohomology", description="Exact cohomology of Artin groups of type A, B and A~.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_args(p):
        p.add_argument("--family", choices=("A", "B"), required=True)
        p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("poincare", parents=[common], help="weighted Poincare polynomial")
    family_args(p)
    p.add_argument("--oracle", action="store_true", help="compare with a Cayley-graph enumeration")
    p.add_argument("--cap", type=int, default=10_000, help="largest group order the oracle may enumerate")
    p.set_defaults(run=cmd_poincare)

    p = sub.add_parser("complex", parents=[common], help="build the weighted Salvetti complex")
    family_args(p)
    p.add_argument("--spec", help="specialization: q=-1, d=N, generic, frac, t=VALUE, point:Q,T")
    p.add_argument("--emit", action="store_true", help="print the matrices as JSON")
    p.set_defaults(run=cmd_complex)

    p = sub.add_parser("cohomology", parents=[common], help="cohomology by Smith normal form")
    family_args(p)
    p.add_argument("--spec", required=True, help="specialization onto a PID: q=-1, d=N, generic, frac, t=VALUE")
    p.set_defaults(run=cmd_cohomology)

    p = sub.add_parser("predict", parents=[common], help="closed-form cohomology")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("qt", "t", "affine"), default="qt")
    p.add_argument("--spec", help="base change for --kind qt (q=-1, d=N, generic, frac)")
    p.set_defaults(run=cmd_predict)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    p.add_argument("--n-max", type=int, default=None, help="largest rank (suite default if omitted)")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("spectral", help="spectral sequence pages")
    ssub = p.add_subparsers(dest="page", required=True, parser_class=_Parser)
    e1 = ssub.add_parser("e1", parents=[common], help="predicted E1 page")
    e1.add_argument("--n", type=int, required=True)
    e1.add_argument("--check", action="store_true", help="compare every position with a direct computation")
    e1.set_defaults(run=cmd_spectral)

    p = sub.add_parser("reps", help="braid representation checks")
    rsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    rv = rsub.add_parser("verify", parents=[common], help="check relations and the equivalence")
    rv.add_argument("--n", type=int, required=True)
    rv.set_defaults(run=cmd_reps)

    for name, fn, helptext in (
        ("euler", cmd_euler, "cell counts and Euler characteristic of the orbit-space model"),
        ("presentation", cmd_presentation, "standard Artin presentation"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--family", help="A:n, B:n, Atilde:n or Ctilde:n")
        g.add_argument("--diagram", help="diagram JSON file")
        if name == "euler":
            p.add_argument("--quiet", action="store_true", help="print only the Euler characteristic")
        p.set_defaults(run=fn)
    return parser


def _setup_logging():
    level = os.environ.get(LOG_ENV)
    if level:
        logging.basicConfig(stream=sys.stderr, level=level.upper(), format="%(levelname)s %(name)s: %(message)s")


def dispatch(argv: list[str]) -> RunReport:
    """Parse ``argv`` and run the command; errors become a report with status 2."""
    rep = RunReport(list(argv))
    t0 = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        rep.json_mode = args.json
        args.run(args, rep)
    except UsageError as exc:
        rep.text, rep.exit_code = str(exc), 2
    except SystemExit as exc:  # --help
        rep.exit_code = 0 if not exc.code else 2
    except (ValueError, TypeError, ArithmeticError, BudgetError, OSError) as exc:
        rep.text, rep.exit_code = f"error: {exc}", 2
    rep.seconds = time.perf_counter() - t0
    return rep


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    argv = sys.argv[1:] if argv is None else argv
    rep = dispatch(argv)
    if rep.exit_code == 2:
        if rep.text:
            print(rep.text, file=sys.stderr)
        return 2
    if rep.json_mode:
        print(json.dumps(rep.to_json(), indent=1, sort_keys=True))
    elif rep.text:
        print(rep.text)
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
