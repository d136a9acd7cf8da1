"""Command-line front end.

Exit codes: 0 every check passed, 1 some check failed, 2 usage or parse
error, 3 unsupported instance.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import fixtures as fx
from .demos import DEMOS
from .errors import EnumerationBoundExceeded, NoAdjointError, NotPositive, OrthoError, UnsupportedInstance
from .exact import format_rational
from .io import InstanceError, dump_instance, load_instance, product_to_json
from .operators import RK_ABS_MAX_DIM, AdjointKind, adjoint, classify, rk_abs
from .product import neutral_basis, quotient, verify
from .theorems import run_builtin, run_instance

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: list
    checks: list = field(default_factory=list)

    def add(self, name, verdict, value=None, witness=None):
        self.checks.append({"name": name, "verdict": verdict, "value": value, "witness": witness})

    @property
    def exit_code(self) -> int:
        return EXIT_FAIL if any(c["verdict"] == "fail" for c in self.checks) else EXIT_OK

    def to_json(self) -> dict:
        return {"command": self.command, "checks": self.checks, "exit_code": self.exit_code}

    def render(self) -> str:
        lines = ["$ orthospace " + " ".join(self.command)]
        for c in self.checks:
            text = f"{c['name']:<28} {c['verdict']}"
            if c["value"] is not None:
                text += f"  {_show(c['value'])}"
            if c["witness"] is not None:
                text += f"  witness: {_show(c['witness'])}"
            lines.append(text)
        return "\n".join(lines)


def _show(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _matrix_json(m):
    return [[format_rational(x) for x in m.row(i)] for i in range(m.rows)]


def _pick(mapping: dict, name: str | None, kind: str):
    if name is None:
        if len(mapping) != 1:
            raise UsageError(f"instance has {len(mapping)} {kind}s; name one explicitly")
        return next(iter(mapping.items()))
    if name not in mapping:
        raise UsageError(f"no {kind} named {name!r} (have: {', '.join(mapping) or 'none'})")
    return name, mapping[name]


# -- subcommands ----------------------------------------------------------------

def cmd_verify(args, report: Report):
    inst = load_instance(args.path)
    names = [args.product] if args.product else list(inst.products)
    if not names:
        raise UsageError("instance file contains no products")
    for name in names:
        _, p = _pick(inst.products, name, "product")
        r = verify(p)
        for axiom, ok in (("positivity", r.positivity_ok), ("orthosymmetry", r.orthosymmetry_ok),
                          ("symmetry", r.symmetry_ok)):
            w = next((w.to_json() for w in r.witnesses if w.axiom == axiom), None)
            report.add(f"{name}.{axiom}", "pass" if ok else "fail", witness=w)
        if not r.steinberg_consistent:
            report.add(f"{name}.steinberg", "fail", "axioms hold but the tensor is asymmetric")
        if r.ok:
            neutral = neutral_basis(p.checked())
            report.add(f"{name}.neutral_dim", "pass", neutral.dim)
            report.add(f"{name}.neutral_basis", "pass", [b.to_json() for b in neutral.basis])
            report.add(f"{name}.definite", "pass", neutral.dim == 0)


def _checked_product(inst, name):
    _, p = _pick(inst.products, name, "product")
    r = verify(p)
    if not r.ok:
        raise _CheckFailure(f"product {name!r} fails the axioms: {r.summary()}")
    return p.checked()


class _CheckFailure(Exception):
    pass


def cmd_classify(args, report: Report):
    inst = load_instance(args.path)
    _, t = _pick(inst.operators, args.operator, "operator")
    pL = pM = None
    if args.products:
        pL, pM = (_checked_product(inst, n) for n in args.products)
    c = classify(t, pL, pM, lp_max_dim=args.max_dim or 8)
    for key, value in c.flags().items():
        if key == "selfadjoint" and value is None:
            continue
        report.add(key, "unsupported" if value is None else "pass", value)
    if c.adjoint is not None:
        report.add("adjoint", "pass", c.adjoint.kind.value)
        if c.adjoint.operator is not None:
            report.add("adjoint.matrix", "pass", _matrix_json(c.adjoint.operator.matrix))


def cmd_adjoint(args, report: Report):
    inst = load_instance(args.path)
    _, t = _pick(inst.operators, args.operator, "operator")
    pL, pM = (_checked_product(inst, n) for n in args.products)
    res = adjoint(pL, pM, t)
    report.add("kind", "pass", res.kind.value)
    if res.operator is not None:
        key = "adjoint" if res.kind is AdjointKind.UNIQUE else "particular"
        report.add(key, "pass", _matrix_json(res.operator.matrix))
    if res.homogeneous:
        report.add("homogeneous_dim", "pass", len(res.homogeneous))
        report.add("homogeneous_basis", "pass", [_matrix_json(h.matrix) for h in res.homogeneous])


def cmd_abs(args, report: Report):
    inst = load_instance(args.path)
    _, t = _pick(inst.operators, args.operator, "operator")
    a = rk_abs(t, max_dim=args.max_dim or RK_ABS_MAX_DIM)
    report.add("modulus", "pass", _matrix_json(a.matrix))
    report.add("agrees_with_entrywise", "pass", True)


def cmd_quotient(args, report: Report):
    inst = load_instance(args.path)
    name, _ = _pick(inst.products, args.product, "product")
    p = _checked_product(inst, name)
    q = quotient(p)
    report.add("neutral_dim", "pass", neutral_basis(p).dim)
    report.add("representatives", "pass", [i + 1 for i in q.complement])
    report.add("induced", "pass", product_to_json(q.induced))
    report.add("induced.verified", "pass" if verify(q.induced).ok else "fail", True)
    report.add("induced.definite", "pass" if neutral_basis(q.induced).dim == 0 else "fail", True)


def cmd_theorems(args, report: Report):
    if args.cases < 0:
        raise UsageError("--cases must be nonnegative")
    if args.builtin == bool(args.path):
        raise UsageError("give exactly one of an instance path or --builtin")
    if args.builtin:
        results = run_builtin(args.seed, args.cases)
    else:
        results = run_instance(load_instance(args.path), args.seed, args.cases)
    for r in results:
        report.add(r.name, "pass" if r.passed else "fail",
                   f"cases={r.cases} applicable={r.applicable}", r.counterexample)


def cmd_demo(args, report: Report):
    res = DEMOS[args.name]()
    for key, value in res.observations.items():
        report.add(key, "pass", repr(float(value)))
    for key, ok in res.checks.items():
        report.add(key, "pass" if ok else "fail", f"tolerance={res.tolerance:g} (floating point)")


def cmd_fixtures(args, report: Report | None):
    if args.action == "list":
        return "\n".join(fx.FIXTURE_NAMES) + "\n"
    if not args.name:
        raise UsageError("fixtures export needs a fixture name")
    try:
        inst = fx.fixture_instance(args.name, args.args)
    except KeyError:
        raise UsageError(f"unknown fixture {args.name!r} (have: {', '.join(fx.FIXTURE_NAMES)})") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return dump_instance(inst)


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--max-dim", type=int, default=None, help="enumeration bound override")

    parser = argparse.ArgumentParser(prog="orthospace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the product axioms and the neutral part")
    p.add_argument("path", help="instance file, or - for stdin")
    p.add_argument("--product")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="decide the operator classes")
    p.add_argument("path")
    p.add_argument("operator")
    p.add_argument("--products", nargs=2, metavar=("PL", "PM"))
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("adjoint", parents=[common], help="solve for the adjoints of an operator")
    p.add_argument("path")
    p.add_argument("operator")
    p.add_argument("--products", nargs=2, metavar=("PL", "PM"), required=True)
    p.set_defaults(fn=cmd_adjoint)

    p = sub.add_parser("abs", parents=[common], help="modulus |T| via the Riesz-Kantorovich formula")
    p.add_argument("path")
    p.add_argument("operator")
    p.set_defaults(fn=cmd_abs)

    p = sub.add_parser("quotient", parents=[common], help="definite quotient by the neutral part")
    p.add_argument("path")
    p.add_argument("--product")
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("theorems", parents=[common], help="run the property suites")
    p.add_argument("path", nargs="?")
    p.add_argument("--builtin", action="store_true", help="use generated instances")
    p.add_argument("--seed", type=int, default=fx.DEFAULT_SEED)
    p.add_argument("--cases", type=int, default=200)
    p.set_defaults(fn=cmd_theorems)

    p = sub.add_parser("demo", parents=[common], help="floating-point demonstrations")
    p.add_argument("name", choices=sorted(DEMOS))
    p.set_defaults(fn=cmd_demo)

    p = sub.add_parser("fixtures", help="export built-in fixtures as instance files")
    p.add_argument("action", choices=["export", "list"])
    p.add_argument("name", nargs="?")
    p.add_argument("args", nargs="*")
    p.set_defaults(fn=cmd_fixtures, json=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    raw = list(sys.argv[1:] if argv is None else argv)
    try:
        if args.command == "fixtures":
            sys.stdout.write(cmd_fixtures(args, None))
            return EXIT_OK
        report = Report(raw)
        args.fn(args, report)
    except (InstanceError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedInstance, EnumerationBoundExceeded) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (_CheckFailure, NoAdjointError, NotPositive) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OrthoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
