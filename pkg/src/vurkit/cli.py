"""Command line surface: bound | entropic | oracle | lur | continuous | demo.

Inputs are UTF-8 JSON files or built-in fixture names.  Every randomized
command takes and echoes a seed, so published numbers are reproducible.
Exit codes: 2 parse failure, 3 dimension mismatch, 4 non-Hermitian input,
5 invalid state, 6 bad alpha.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import engine, entropic, fixtures, io
from .config import DEFAULT_TOLERANCES, TOOL_VERSION, Tolerances, with_overrides
from .core import SpectralObservable, is_mub, overlap_stats
from .errors import DimensionMismatchError, FileFormatError, VurkitError
from .lur import LocalObservablePair, lur_test
from .oracle import OracleConfig, minimize_variance_sum


def _parse_tolerances(args) -> Tolerances:
    overrides = {}
    for item in args.tol or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise FileFormatError(f"--tol expects NAME=VALUE, got {item!r}")
        try:
            overrides[name.strip()] = float(value)
        except ValueError as exc:
            raise FileFormatError(f"--tol value for {name!r} is not a number: {value!r}") from exc
    try:
        return with_overrides(DEFAULT_TOLERANCES, overrides)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def _resolve_observable_token(token: str, tol: Tolerances) -> list[SpectralObservable]:
    if token in fixtures.OBSERVABLE_SETS:
        return list(fixtures.OBSERVABLE_SETS[token]())
    if token in fixtures.SINGLE_OBSERVABLES:
        return [fixtures.SINGLE_OBSERVABLES[token]()]
    path = Path(token)
    if not path.exists():
        raise FileFormatError(f"no such file or fixture: {token}")
    return [io.load_observable(path, tol)]


def _resolve_observables(tokens, tol: Tolerances) -> list[SpectralObservable]:
    out: list[SpectralObservable] = []
    for token in tokens:
        out.extend(_resolve_observable_token(token, tol))
    return out


def _require_equal_dims(observables) -> int:
    dims = sorted({o.dim for o in observables})
    if len(dims) != 1:
        raise DimensionMismatchError(f"observables have mixed dimensions {dims}")
    return dims[0]


def _resolve_state(token: str, tol: Tolerances):
    if token in fixtures.STATES:
        return fixtures.STATES[token]()
    path = Path(token)
    if not path.exists():
        raise FileFormatError(f"no such file or fixture: {token}")
    return io.load_state(path, tol)


def _resolve_pairs(tokens, tol: Tolerances) -> list[LocalObservablePair]:
    if len(tokens) == 1 and tokens[0] in fixtures.PAIR_SETS:
        return list(fixtures.PAIR_SETS[tokens[0]]())
    if len(tokens) % 2 != 0:
        raise FileFormatError("--pairs expects a pair-set fixture or an even number of "
                              "observables, alternating first-side and second-side")
    out = []
    for i in range(0, len(tokens), 2):
        a_list = _resolve_observable_token(tokens[i], tol)
        b_list = _resolve_observable_token(tokens[i + 1], tol)
        if len(a_list) != 1 or len(b_list) != 1:
            raise FileFormatError("each --pairs entry must name a single observable")
        out.append(LocalObservablePair(a_list[0], b_list[0]))
    return out


def _emit(args, report: io.RunReport, text_lines: list[str]) -> int:
    if args.json:
        print(report.to_json())
    else:
        for line in text_lines:
            print(line)
    return 0


def _constant_line(constant: entropic.EntropicConstant) -> str:
    return f"C = {constant.value:.9f} nats ({constant.source.value}; {constant.inputs_digest})"


def cmd_bound(args) -> int:
    tol = _parse_tolerances(args)
    observables = _resolve_observables(args.observables, tol)
    _require_equal_dims(observables)
    if args.auto_constant:
        constant = entropic.best_entropic_constant(observables)
    else:
        constant = entropic.user_supplied(args.constant)
    if args.optimize:
        report = engine.optimize_alpha(observables, constant)
    else:
        report = engine.bound_at_alpha(observables, args.alpha, constant)
    lines = [_constant_line(constant), f"alpha = {report.alpha!r}"]
    for k, r in enumerate(report.per_operator, start=1):
        lines.append(f"operator {k}: beta* = {r.beta_star:.9f}, M = {r.value:.9f}, "
                     f"bracket [{r.bracket[0]:g}, {r.bracket[1]:g}]")
    lines.append(f"raw bound = {report.raw_bound:.9f}")
    lines.append(f"lower bound = {report.lower_bound:.9f} (clamped: {'yes' if report.clamped else 'no'})")
    run = io.RunReport(command=args.argv, seed=None,
                       inputs={"observables": list(args.observables),
                               "count": len(observables), "dim": observables[0].dim},
                       payload=io.bound_report_payload(report))
    return _emit(args, run, lines)


def cmd_entropic(args) -> int:
    tol = _parse_tolerances(args)
    observables = _resolve_observables(args.observables, tol)
    if len(observables) < 2:
        raise FileFormatError("entropic needs at least two observables")
    dim = _require_equal_dims(observables)
    overlaps = []
    for i in range(len(observables)):
        for j in range(i + 1, len(observables)):
            overlaps.append((i + 1, j + 1, overlap_stats(observables[i], observables[j]).c))
    mub = is_mub(observables, tol.mub)
    candidates = []
    if len(observables) == 2:
        c = min(overlaps[0][2], 1.0)
        candidates.append(entropic.maassen_uffink(c))
        if c >= entropic.DE_VICENTE_DEFAULT_MIN_C:
            candidates.append(entropic.de_vicente_analytic(c))
    elif mub:
        candidates.append(entropic.wu_mub_bound(len(observables), dim))
    selected = entropic.best_entropic_constant(observables)

    lines = [f"{len(observables)} observables, dimension {dim}"]
    lines.extend(f"overlap c({i},{j}) = {c:.9f}" for i, j, c in overlaps)
    lines.append(f"mutually unbiased: {'yes' if mub else 'no'}")
    lines.extend(f"candidate: {_constant_line(k)}" for k in candidates)
    lines.append(f"selected: {_constant_line(selected)}")
    run = io.RunReport(command=args.argv, seed=None,
                       inputs={"observables": list(args.observables),
                               "count": len(observables), "dim": dim},
                       payload={
                           "overlaps": [{"i": i, "j": j, "c": float(c)} for i, j, c in overlaps],
                           "mutually_unbiased": bool(mub),
                           "candidates": [io.constant_payload(k) for k in candidates],
                           "selected": io.constant_payload(selected),
                       })
    return _emit(args, run, lines)


def cmd_oracle(args) -> int:
    tol = _parse_tolerances(args)
    observables = _resolve_observables(args.observables, tol)
    _require_equal_dims(observables)
    config = OracleConfig(restarts=args.restarts, max_iters=args.max_iters, seed=args.seed)
    result = minimize_variance_sum(observables, config)
    amplitudes = ", ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in result.argmin_state.vector)
    lines = [
        f"minimum variance sum = {result.minimum:.9f}",
        f"restarts agreeing = {result.restarts_agreeing}/{config.restarts}",
        f"argmin state = [{amplitudes}]",
        f"seed = {config.seed}",
    ]
    run = io.RunReport(command=args.argv, seed=config.seed,
                       inputs={"observables": list(args.observables),
                               "count": len(observables), "dim": observables[0].dim,
                               "restarts": config.restarts, "max_iters": config.max_iters},
                       payload=io.oracle_result_payload(result, config.restarts))
    return _emit(args, run, lines)


def cmd_lur(args) -> int:
    tol = _parse_tolerances(args)
    state = _resolve_state(args.state, tol)
    pairs = _resolve_pairs(args.pairs, tol)
    if args.u_a is not None and args.u_b is not None:
        report = lur_test(pairs, state, u_a=args.u_a, u_b=args.u_b)
    elif args.auto_constant:
        c_a = entropic.best_entropic_constant([p.a_side for p in pairs])
        c_b = entropic.best_entropic_constant([p.b_side for p in pairs])
        report = lur_test(pairs, state, c_a, c_b, u_a=args.u_a, u_b=args.u_b)
    elif args.c_a is not None and args.c_b is not None:
        report = lur_test(pairs, state, entropic.user_supplied(args.c_a),
                          entropic.user_supplied(args.c_b), u_a=args.u_a, u_b=args.u_b)
    else:
        raise FileFormatError("lur needs --auto-C, or --C-a and --C-b, or --u-a and --u-b")
    lines = [
        f"lhs (variance sum of lifted pairs) = {report.lhs:.9f}",
        f"U_A = {report.u_a:.9f}",
        f"U_B = {report.u_b:.9f}",
        f"margin = {report.margin:.9f}",
        f"verdict: {report.verdict.value}",
    ]
    run = io.RunReport(command=args.argv, seed=None,
                       inputs={"state": args.state, "pairs": list(args.pairs)},
                       payload=io.lur_report_payload(report))
    return _emit(args, run, lines)


def cmd_continuous(args) -> int:
    alpha_used, bound = engine.continuous_pair_bound(args.constant, args.alpha)
    closed_form = args.alpha is None
    lines = [
        f"alpha = {alpha_used!r}" + (" (closed form)" if closed_form else ""),
        f"lower bound = {bound:.9f}",
    ]
    run = io.RunReport(command=args.argv, seed=None,
                       inputs={"C": float(args.constant),
                               "alpha": None if closed_form else float(args.alpha)},
                       payload={"alpha_used": float(alpha_used), "lower_bound": float(bound),
                                "closed_form_alpha": closed_form})
    return _emit(args, run, lines)


def cmd_demo(args) -> int:
    """Run the built-in showcases end to end with one seed."""
    two_ln2 = entropic.wu_full_mub(2)
    four_ln2 = entropic.wu_full_mub(3)
    pauli = fixtures.pauli3()
    qutrit = fixtures.qutrit4()

    pauli_fixed = engine.bound_at_alpha(pauli, 0.597, two_ln2)
    pauli_opt = engine.optimize_alpha(pauli, two_ln2)
    qutrit_fixed = engine.bound_at_alpha(qutrit, 1.92, four_ln2)
    qutrit_opt = engine.optimize_alpha(qutrit, four_ln2)

    config = OracleConfig(restarts=args.restarts, seed=args.seed)
    pauli_min = minimize_variance_sum(pauli, config)
    qutrit_min = minimize_variance_sum(qutrit, config)

    c_cont = 1.0 + math.log(math.pi)
    alpha_star, cont_auto = engine.continuous_pair_bound(c_cont)
    _, cont_fixed = engine.continuous_pair_bound(c_cont, 1.0)

    pairs = fixtures.pauli_pairs()
    u = pauli_opt.lower_bound
    lur_reports = {name: lur_test(pairs, fixtures.STATES[name](), u_a=u, u_b=u)
                   for name in ("singlet", "ket00", "mixed2")}

    lines = [
        f"qubit triple:  floor {pauli_fixed.lower_bound:.4f} at alpha 0.597, "
        f"optimized {pauli_opt.lower_bound:.4f} at alpha {pauli_opt.alpha:.4f}, "
        f"true minimum {pauli_min.minimum:.4f}",
        f"qutrit quadruple: floor {qutrit_fixed.lower_bound:.4f} at alpha 1.92, "
        f"optimized {qutrit_opt.lower_bound:.4f} at alpha {qutrit_opt.alpha:.4f}, "
        f"true minimum {qutrit_min.minimum:.4f}",
        f"continuous pair (C = 1 + ln pi): floor {cont_fixed:.6f} at alpha 1, "
        f"closed-form alpha* {alpha_star:.6f}",
        "separability test with the qubit triple on both sides "
        f"(U_A = U_B = {u:.4f}):",
    ]
    for name, rep in lur_reports.items():
        lines.append(f"  {name}: lhs {rep.lhs:.4f}, margin {rep.margin:+.4f} -> {rep.verdict.value}")

    run = io.RunReport(command=args.argv, seed=args.seed,
                       inputs={"restarts": args.restarts},
                       payload={
                           "pauli3": {"fixed": io.bound_report_payload(pauli_fixed),
                                      "optimized": io.bound_report_payload(pauli_opt),
                                      "oracle": io.oracle_result_payload(pauli_min, config.restarts)},
                           "qutrit4": {"fixed": io.bound_report_payload(qutrit_fixed),
                                       "optimized": io.bound_report_payload(qutrit_opt),
                                       "oracle": io.oracle_result_payload(qutrit_min, config.restarts)},
                           "continuous": {"C": c_cont, "alpha_star": float(alpha_star),
                                          "bound_at_alpha_1": float(cont_fixed),
                                          "bound_closed_form": float(cont_auto)},
                           "lur": {name: io.lur_report_payload(rep)
                                   for name, rep in lur_reports.items()},
                       })
    return _emit(args, run, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vurkit",
        description="State-independent lower bounds on variance sums of Hermitian "
                    "observables, with a brute-force oracle and a separability test.")
    parser.add_argument("--version", action="version", version=f"vurkit {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit a machine-readable run report")
        p.add_argument("--tol", action="append", metavar="NAME=VALUE",
                       help="override a named tolerance (repeatable)")

    p = sub.add_parser("bound", help="variance-sum floor for a set of observables")
    p.add_argument("observables", nargs="+", metavar="OBS",
                   help="observable JSON files or fixture names")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--C", type=float, dest="constant", help="entropy-sum constant (nats)")
    g.add_argument("--auto-C", action="store_true", dest="auto_constant",
                   help="select the strongest applicable entropy constant")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--alpha", type=float, help="Gaussian width parameter")
    g.add_argument("--optimize", action="store_true", help="optimize the width parameter")
    add_common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("entropic", help="entropy-sum constants for a set of observables")
    p.add_argument("observables", nargs="+", metavar="OBS")
    add_common(p)
    p.set_defaults(func=cmd_entropic)

    p = sub.add_parser("oracle", help="brute-force minimum of the variance sum over pure states")
    p.add_argument("observables", nargs="+", metavar="OBS")
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("lur", help="local-uncertainty separability test on a bipartite state")
    p.add_argument("--state", required=True, help="state JSON file or fixture name")
    p.add_argument("--pairs", required=True, nargs="+", metavar="OBS",
                   help="pair-set fixture, or observables alternating side A and side B")
    p.add_argument("--auto-C", action="store_true", dest="auto_constant",
                   help="select entropy constants for both sides automatically")
    p.add_argument("--C-a", type=float, dest="c_a", help="entropy constant for side A")
    p.add_argument("--C-b", type=float, dest="c_b", help="entropy constant for side B")
    p.add_argument("--u-a", type=float, help="explicit variance floor for side A")
    p.add_argument("--u-b", type=float, help="explicit variance floor for side B")
    add_common(p)
    p.set_defaults(func=cmd_lur)

    p = sub.add_parser("continuous", help="variance-sum floor for a continuous pair from C alone")
    p.add_argument("--C", type=float, dest="constant", required=True,
                   help="entropy-sum constant (nats)")
    p.add_argument("--alpha", type=float, default=None,
                   help="width parameter (omit for the closed-form optimum)")
    add_common(p)
    p.set_defaults(func=cmd_continuous)

    p = sub.add_parser("demo", help="run the built-in showcases end to end")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=16)
    add_common(p)
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    try:
        return args.func(args)
    except VurkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
