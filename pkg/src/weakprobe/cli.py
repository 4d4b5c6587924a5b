"""Command-line entry points.

Subcommands reproduce every number in the library from the shell:

    weakprobe weak-value  --config setup.json
    weakprobe concentrate --config setup.json
    weakprobe sweep       --config setup.json --phi-min 1e-3 --phi-max 0.1 --points 20
    weakprobe search      --config space.json --seed 42 --samples 10000

Exit codes: 0 success, 1 input error, 2 orthogonal (or never-succeeding)
post-selection, 3 degenerate probe. Computed metrics print with 9
significant digits and LF line endings so outputs are byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .concentrate import ConcentrationReport, concentration_report
from .config import (
    build_setup,
    build_space,
    load_setup_config,
    load_space_config,
)
from .errors import ConfigError, DegenerateProbe, PostSelectionImpossible, PostSelectionOrthogonal
from .measurement import weak_value
from .search import CandidateResult, SearchConfig, pareto_filter, random_search

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_ORTHOGONAL = 2
EXIT_DEGENERATE = 3


def _round9(x: float) -> float:
    # shortest float that prints the value to 9 significant digits
    return float(f"{float(x):.9g}")


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the CLI contract
    # reserves 2 for orthogonal post-selection, so remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _report_dict(report: ConcentrationReport) -> dict:
    return {
        "weak_value": {
            "re": _round9(report.weak_value.real),
            "im": _round9(report.weak_value.imag),
        },
        "witness_gap": _round9(report.witness_gap),
        "first_order_gain": _round9(report.first_order_gain),
        "ratio_first_order": _round9(report.ratio_first_order),
        "ratio_exact": _round9(report.ratio_exact),
        "success_probability_exact": _round9(report.success_probability_exact),
        "verdict": report.verdict,
    }


def cmd_weak_value(args) -> int:
    setup = build_setup(load_setup_config(args.config))
    value = weak_value(setup.ancilla)
    payload = {
        "re": _round9(value.real),
        "im": _round9(value.imag),
        "overlap_abs": _round9(abs(setup.ancilla.overlap)),
    }
    _emit(json.dumps(payload) + "\n", args.output)
    return EXIT_OK


def cmd_concentrate(args) -> int:
    setup = build_setup(load_setup_config(args.config))
    report = concentration_report(setup)
    _emit(json.dumps(_report_dict(report), indent=2) + "\n", args.output)
    return EXIT_OK


def _sweep_rows(cfg, phis) -> list[dict]:
    rows = []
    for phi in phis:
        report = concentration_report(build_setup(cfg, phi=float(phi)))
        rows.append(
            {
                "phi": _round9(phi),
                "ratio_first_order": _round9(report.ratio_first_order),
                "ratio_exact": _round9(report.ratio_exact),
                "abs_gap": _round9(abs(report.ratio_exact - report.ratio_first_order)),
                "success_exact": _round9(report.success_probability_exact),
            }
        )
    return rows


def cmd_sweep(args) -> int:
    if args.phi_min <= 0 or args.phi_min >= args.phi_max:
        raise ConfigError(f"phi range: need 0 < phi_min < phi_max, got [{args.phi_min}, {args.phi_max}]")
    if args.points < 2:
        raise ConfigError(f"points: need >= 2, got {args.points}")
    cfg = load_setup_config(args.config)
    phis = np.geomspace(args.phi_min, args.phi_max, args.points)
    rows = _sweep_rows(cfg, phis)
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.output)
    else:
        header = "phi,ratio_first_order,ratio_exact,abs_gap,success_exact"
        lines = [header] + [
            f"{r['phi']:.9g},{r['ratio_first_order']:.9g},{r['ratio_exact']:.9g},"
            f"{r['abs_gap']:.9g},{r['success_exact']:.9g}"
            for r in rows
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _front_entry(result: CandidateResult, space) -> dict:
    pre = [[v.real, v.imag] for v in result.ingredients.pre.amplitudes]
    post = [[v.real, v.imag] for v in result.ingredients.post.amplitudes]
    obs = space.observable_pool[result.ingredients.observable_index].matrix
    return {
        "index": result.index,
        # ingredient vectors at full precision so entries replay exactly
        "pre": pre,
        "post": post,
        "observable_index": result.ingredients.observable_index,
        "observable": [[[v.real, v.imag] for v in row] for row in obs],
        "weak_value": {
            "re": _round9(result.weak_value.real),
            "im": _round9(result.weak_value.imag),
        },
        "first_order_gain": _round9(result.first_order_gain),
        "success_probability_exact": _round9(result.success_probability_exact),
    }


def cmd_search(args) -> int:
    space_cfg = load_space_config(args.config)
    space = build_space(space_cfg)
    try:
        config = SearchConfig(seed=args.seed, samples=args.samples, min_success=args.min_success)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    front = pareto_filter(random_search(space, config))
    payload = {
        "seed": args.seed,
        "samples": args.samples,
        "min_success": args.min_success,
        "front": [_front_entry(r, space) for r in front],
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="weakprobe", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_wv = sub.add_parser("weak-value", help="weak value of the configured ancilla selection")
    p_wv.add_argument("--config", required=True)
    p_wv.add_argument("--output", default=None)
    p_wv.set_defaults(func=cmd_weak_value)

    p_conc = sub.add_parser("concentrate", help="full concentration report for one setup")
    p_conc.add_argument("--config", required=True)
    p_conc.add_argument("--output", default=None)
    p_conc.set_defaults(func=cmd_concentrate)

    p_sweep = sub.add_parser("sweep", help="entropy ratios over a log-spaced phi range")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--phi-min", type=float, required=True)
    p_sweep.add_argument("--phi-max", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--output", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    p_search = sub.add_parser("search", help="random ingredient search, Pareto front output")
    p_search.add_argument("--config", required=True)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--samples", type=int, default=1000)
    p_search.add_argument("--min-success", type=float, default=0.01)
    p_search.add_argument("--output", default=None)
    p_search.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"weakprobe: config error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PostSelectionOrthogonal, PostSelectionImpossible) as exc:
        print(f"weakprobe: post-selection error: {exc}", file=sys.stderr)
        return EXIT_ORTHOGONAL
    except DegenerateProbe as exc:
        print(f"weakprobe: degenerate probe: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
