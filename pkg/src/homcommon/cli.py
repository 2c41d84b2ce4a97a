"""Command-line front end: identity verification, goodness checking,
commonness certification, falsification, and the acceptance suite.

Reports go to stdout as JSON (or a table for repro-all).  Exit codes:
0 pass / good, 1 violation found / not good, 2 usage or data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import acceptance, data
from .commonness import (CommonPairSpec, certify_pair_via_templates, common_gap_objective,
                         dk3k2_verify, falsify, pair_gap, solve_simple_tree_p)
from .cone import certificate_to_json, check_good
from .gluing import template_from_json
from .graphons import density, sample_graphon
from .graphs import BudgetExceededError, make_family
from .identities import (c5_goodman_residual, expansion_residual, goodman_residual)


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    tolerance_identity: float = 1e-10
    tolerance_inequality: float = 1e-9
    work_budget: int = 10**8
    output_path: str | None = None

    def __post_init__(self):
        if self.tolerance_identity <= 0 or self.tolerance_inequality <= 0:
            raise ValueError("tolerances must be positive")
        if self.work_budget <= 0:
            raise ValueError("work budget must be positive")


def _parse_seeds(spec: str) -> list[int]:
    """Accept '0..99', a single integer, or a comma list."""
    spec = spec.strip()
    if ".." in spec:
        lo, _, hi = spec.partition("..")
        return list(range(int(lo), int(hi) + 1))
    if "," in spec:
        return [int(x) for x in spec.split(",") if x.strip()]
    return [int(spec)]


def _emit(report: dict, config: RunConfig):
    text = json.dumps(report, indent=2, sort_keys=True, default=str)
    print(text)
    if config.output_path:
        with open(config.output_path, "w") as fh:
            fh.write(text + "\n")


def _load_template_arg(spec: str):
    if spec in data.TEMPLATE_NAMES:
        return data.load_template(spec)
    with open(spec) as fh:
        return template_from_json(json.load(fh))


def _cmd_verify(args, config: RunConfig) -> int:
    seeds = _parse_seeds(args.seeds)
    tol = args.tolerance if args.tolerance is not None else config.tolerance_identity
    k2 = make_family("path", 2)
    worst = 0.0
    for s in seeds:
        w = sample_graphon(s, args.max_blocks)
        if args.identity == "goodman":
            worst = max(worst, abs(goodman_residual(w, config.work_budget)))
        elif args.identity == "c5goodman":
            worst = max(worst, abs(c5_goodman_residual(w, config.work_budget)))
        else:
            for h in (k2, make_family("path", 3), make_family("complete", 3),
                      make_family("cycle", 5), make_family("complete_minus_edge", 4)):
                for p in (0.0, 0.3, density(k2, w)):
                    worst = max(worst, abs(expansion_residual(h, w, p, config.work_budget)))
    report = {"identity": args.identity, "seeds": len(seeds),
              "max_abs_residual": worst, "tolerance": tol, "passed": worst < tol}
    _emit(report, config)
    return 0 if report["passed"] else 1


def _cmd_glue_check(args, config: RunConfig) -> int:
    template = _load_template_arg(args.template)
    cert = check_good(template)
    payload = certificate_to_json(cert)
    if args.certificate:
        with open(args.certificate, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    _emit(payload, config)
    return 0 if cert.verdict == "good" else 1


def _cmd_pair_gap(args, config: RunConfig) -> int:
    spec = CommonPairSpec(data.parse_graph_spec(args.h1),
                          data.parse_graph_spec(args.h2), args.p1)
    worst = None
    for s in _parse_seeds(args.seeds):
        gap = pair_gap(spec, sample_graphon(s, args.max_blocks))
        if worst is None or gap < worst:
            worst = gap
    report = {"h1": args.h1, "h2": args.h2, "p1": args.p1, "min_gap": worst,
              "tolerance": config.tolerance_inequality,
              "passed": worst >= -config.tolerance_inequality}
    _emit(report, config)
    return 0 if report["passed"] else 1


def _cmd_certify(args, config: RunConfig) -> int:
    verdict = certify_pair_via_templates(_load_template_arg(args.template1), args.l1,
                                         _load_template_arg(args.template2), args.l2,
                                         args.p1)
    report = {"certified": verdict.certified, "reason": verdict.reason,
              "p1": verdict.p1, "m": verdict.m,
              "h1_edge_count": verdict.h1_edge_count,
              "h2_edge_count": verdict.h2_edge_count,
              "balance_residual": verdict.balance_residual,
              "certificate1": certificate_to_json(verdict.certificate1),
              "certificate2": certificate_to_json(verdict.certificate2)}
    _emit(report, config)
    return 0 if verdict.certified else 1


def _cmd_solve_p(args, config: RunConfig) -> int:
    p1 = solve_simple_tree_p(args.e1, args.v1, args.e2, args.v2, args.m)
    _emit({"p1": p1, "p2": 1.0 - p1, "m": args.m}, config)
    return 0


def _cmd_dk3k2(args, config: RunConfig) -> int:
    report = dk3k2_verify(pair_gap_seeds=_parse_seeds(args.seeds))
    _emit(report, config)
    return 0 if report["passed"] else 1


def _cmd_falsify(args, config: RunConfig) -> int:
    target = data.parse_graph_spec(args.target)
    seed = args.seed if args.seed is not None else config.seed
    result = falsify(common_gap_objective(target), seed=seed,
                     restarts=args.restarts, steps=args.steps)
    violation = result.best_gap < -args.threshold
    report = {"target": args.target, "seed": seed, "restarts": args.restarts,
              "best_gap": result.best_gap, "evaluations": result.evaluations,
              "violation_found": violation,
              "witness": {"measures": list(result.best_kernel.measures),
                          "values": [list(r) for r in result.best_kernel.values]}}
    _emit(report, config)
    return 1 if violation else 0


def _cmd_repro_all(args, config: RunConfig) -> int:
    ok = acceptance.run_all()
    print("acceptance suite:", "ALL PASS" if ok else "FAILURES PRESENT")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homcommon", allow_abbrev=False,
        description="Homomorphism densities, gluing templates, and commonness certificates")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=10**8,
                        help="work budget in elementary enumeration steps")
    parser.add_argument("--tolerance-identity", type=float, default=1e-10)
    parser.add_argument("--tolerance-inequality", type=float, default=1e-9)
    parser.add_argument("--json-out", default=None, help="also write the report here")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="numeric identity suites")
    vsub = verify.add_subparsers(dest="verify_what", required=True)
    ident = vsub.add_parser("identity")
    ident.add_argument("identity", choices=("goodman", "c5goodman", "expansion"))
    ident.add_argument("--seeds", default="0..99")
    ident.add_argument("--tolerance", type=float, default=None)
    ident.add_argument("--max-blocks", type=int, default=4)
    ident.set_defaults(handler=_cmd_verify)

    glue = sub.add_parser("glue", help="gluing template goodness")
    gsub = glue.add_subparsers(dest="glue_what", required=True)
    gcheck = gsub.add_parser("check")
    gcheck.add_argument("template", help="template JSON path or bundled name")
    gcheck.add_argument("--certificate", default=None)
    gcheck.set_defaults(handler=_cmd_glue_check)

    common = sub.add_parser("common", help="commonness gaps and certificates")
    csub = common.add_subparsers(dest="common_what", required=True)

    cgap = csub.add_parser("pair-gap")
    cgap.add_argument("--h1", required=True)
    cgap.add_argument("--h2", required=True)
    cgap.add_argument("--p1", type=float, required=True)
    cgap.add_argument("--seeds", default="0..99")
    cgap.add_argument("--max-blocks", type=int, default=4)
    cgap.set_defaults(handler=_cmd_pair_gap)

    ccert = csub.add_parser("certify")
    ccert.add_argument("--template1", required=True)
    ccert.add_argument("--l1", type=int, required=True)
    ccert.add_argument("--template2", required=True)
    ccert.add_argument("--l2", type=int, required=True)
    ccert.add_argument("--p1", type=float, required=True)
    ccert.set_defaults(handler=_cmd_certify)

    csolve = csub.add_parser("solve-p")
    csolve.add_argument("--e1", type=int, required=True)
    csolve.add_argument("--v1", type=int, required=True)
    csolve.add_argument("--e2", type=int, required=True)
    csolve.add_argument("--v2", type=int, required=True)
    csolve.add_argument("--m", type=int, required=True)
    csolve.set_defaults(handler=_cmd_solve_p)

    cdk = csub.add_parser("dk3k2-verify")
    cdk.add_argument("--seeds", default="0..19")
    cdk.set_defaults(handler=_cmd_dk3k2)

    cfal = csub.add_parser("falsify")
    cfal.add_argument("--target", required=True,
                      help="graph JSON path, family string, or bundled name (paw, k3uk2, ...)")
    cfal.add_argument("--seed", type=int, default=None)
    cfal.add_argument("--restarts", type=int, default=50)
    cfal.add_argument("--steps", type=int, default=200)
    cfal.add_argument("--threshold", type=float, default=1e-4)
    cfal.set_defaults(handler=_cmd_falsify)

    repro = sub.add_parser("repro-all", help="run the full acceptance suite")
    repro.set_defaults(handler=_cmd_repro_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        config = RunConfig(seed=args.seed,
                           tolerance_identity=args.tolerance_identity,
                           tolerance_inequality=args.tolerance_inequality,
                           work_budget=args.budget,
                           output_path=args.json_out)
        return args.handler(args, config)
    except BudgetExceededError as exc:
        print(f"error: work budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
