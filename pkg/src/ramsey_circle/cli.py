"""Command-line entry point wiring every checker together.

Exit codes are part of the interface and shared by all subcommands:

  0  success: verified, witness found as expected, or all batch items pass
  1  valid negative verdict (no witness / violation found / sweep exhausted)
  2  usage, input or pipeline error
  3  refutation: a computation contradicted a published result
  4  unknown (solver timeout)

``--json`` switches to a stable machine-readable output (schema version 1,
sorted keys, no timestamps); the human format is never parsed by tests.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import shlex
import subprocess
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import beatty, doubling, majority as majority_mod, robust, satgen, uniform
from .core import (DiscreteInstance, DistanceTuple, ParseError,
                   RefutationError, discretize, parse_colouring,
                   parse_fraction, parse_fraction_list, serialize_colouring)
from .detector import (CopyWitness, DuplicateSubsetSumError, count_copies,
                       detect_bruteforce, detect_dp)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_REFUTATION = 3
EXIT_UNKNOWN = 4

SCHEMA = 1


@dataclass(frozen=True)
class RunConfig:
    command: str
    json_output: bool
    seed: int
    parallelism: int


def _emit(cfg: RunConfig, payload: dict, human: Sequence[str]) -> None:
    if cfg.json_output:
        body = {"schema": SCHEMA, "command": cfg.command}
        body.update(payload)
        print(json.dumps(body, sort_keys=True, default=str))
    else:
        for line in human:
            print(line)


def _witness_payload(w: CopyWitness) -> dict:
    return {"vertices": list(w.vertices), "gap_order": list(w.gap_order),
            "colour": w.colour}


def _parse_gaps(text: str, n: Optional[int] = None) -> DiscreteInstance:
    """Gaps given either as integers (direct) or fractions (discretised).

    With n given, a fractional tuple is scaled to match it; integer gaps
    must already sum to it.
    """
    fractions = parse_fraction_list(text)
    if all(f.denominator == 1 for f in fractions):
        gaps = tuple(int(f) for f in fractions)
        inst = DiscreteInstance(n=sum(gaps), gaps=gaps)
        if n is not None and inst.n != n:
            raise ValueError(f"gaps sum to {inst.n} but the colouring has n={n}")
        return inst
    d = DistanceTuple(fractions)
    base = d.lcm_denominator()
    if n is None:
        return discretize(d)
    if n % base:
        raise ValueError(f"colouring size {n} is not a multiple of lcm denominator {base}")
    return discretize(d, n // base)


def _parse_distance_tuple(text: str) -> DistanceTuple:
    return DistanceTuple(parse_fraction_list(text))


def _read_restriction(path: str) -> list[tuple[int, ...]]:
    orders = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        orders.append(tuple(int(tok) for tok in line.replace(",", " ").split()))
    if not orders:
        raise ValueError(f"restriction file {path} lists no cyclic orders")
    return orders


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_check(cfg: RunConfig, args) -> int:
    c = parse_colouring(Path(args.input).read_text(encoding="utf-8"))
    inst = _parse_gaps(args.gaps, n=c.n)
    restriction = _read_restriction(args.restrict) if args.restrict else None
    if args.count:
        red, blue = count_copies(c, inst)
        _emit(cfg, {"red_count": red, "blue_count": blue,
                    "total": red + blue, "n": inst.n},
              [f"red copies: {red}", f"blue copies: {blue}"])
        return EXIT_OK if red + blue else EXIT_NEGATIVE
    if args.brute:
        witness = detect_bruteforce(c, inst, restriction=restriction)
    elif args.dp:
        if restriction is not None:
            raise ValueError("--restrict requires the brute-force detector")
        witness = detect_dp(c, inst)
    else:
        if restriction is not None:
            witness = detect_bruteforce(c, inst, restriction=restriction)
        else:
            try:
                witness = detect_dp(c, inst)
            except DuplicateSubsetSumError:
                witness = detect_bruteforce(c, inst)
    if witness is None:
        _emit(cfg, {"witness": None, "n": inst.n}, ["no monochromatic copy"])
        return EXIT_NEGATIVE
    # the witness itself is always printed as JSON, in either output mode
    _emit(cfg, {"witness": _witness_payload(witness), "n": inst.n},
          [json.dumps(_witness_payload(witness), sort_keys=True)])
    return EXIT_OK


def _cmd_uniform_check(cfg: RunConfig, args) -> int:
    failures = []
    for t in range(1, args.max_t + 1):
        if uniform.residue_check(args.k, t) is None:
            failures.append(t)
    payload = {"k": args.k, "max_t": args.max_t, "failures": failures}
    if failures:
        _emit(cfg, payload,
              [f"REFUTATION: no red-window ordering for k={args.k}, "
               f"t in {failures}; this contradicts the published verification"])
        return EXIT_REFUTATION
    _emit(cfg, payload, [f"all t in [1, {args.max_t}] admit a red copy for k={args.k}"])
    return EXIT_OK


def _cmd_witness_search(cfg: RunConfig, args) -> int:
    d = _parse_distance_tuple(args.gaps)
    t = uniform.nonpower_witness(d, args.max_t)
    payload = {"gaps": [str(x) for x in d.distances], "max_t": args.max_t, "t": t}
    if t is None:
        _emit(cfg, payload, [f"none (no witness t <= {args.max_t})"])
        return EXIT_NEGATIVE
    _emit(cfg, payload, [f"t = {t}"])
    return EXIT_OK


def _cmd_beatty_check(cfg: RunConfig, args) -> int:
    alphas = parse_fraction_list(args.alphas)
    if args.half:
        pair = beatty.BeattyPair.half_shift(alphas)
    elif args.betas:
        pair = beatty.BeattyPair(alphas=alphas, betas=parse_fraction_list(args.betas))
    else:
        raise ValueError("provide --betas or --half")
    verdict = beatty.partition_check(pair, args.limit)
    payload = {"alphas": [str(a) for a in pair.alphas],
               "betas": [str(b) for b in pair.betas],
               "limit": args.limit, "kind": verdict.kind,
               "value": verdict.value,
               "sequences": list(verdict.sequences) if verdict.sequences else None}
    if verdict.ok:
        human = [f"partition of [0, {args.limit}): ok"]
        if args.half and pair.is_half_shift():
            report = beatty.fraenkel_diagnostics(pair, max(args.limit, 2 * pair.common_numerator()))
            payload["diagnostics"] = {
                "period_length": report.period_length,
                "symmetric": report.symmetric,
                "consecutive_ok": list(report.consecutive_ok),
                "densities": [str(x) for x in report.densities],
                "power_flag": report.power_flag,
                "exact": report.exact,
            }
            human.append(f"period length {report.period_length}, symmetric: {report.symmetric}, "
                         f"densities {[str(x) for x in report.densities]}, "
                         f"power: {report.power_flag}")
        _emit(cfg, payload, human)
        return EXIT_OK
    if verdict.kind == "collision":
        i, j = verdict.sequences
        _emit(cfg, payload, [f"collision at value {verdict.value} (sequences {i} and {j})"])
    else:
        _emit(cfg, payload, [f"gap at value {verdict.value}"])
    return EXIT_NEGATIVE


def _parse_period(text: str) -> beatty.BalancedWord:
    tokens = [tok for tok in text.replace(",", " ").split() if tok]
    if len(tokens) == 1 and not tokens[0].isdigit():
        tokens = list(tokens[0])
    if all(tok.isdigit() for tok in tokens):
        letters = [int(tok) for tok in tokens]
    else:
        letters = [ord(tok) - ord("a") + 1 for tok in tokens]
        if any(not 1 <= s <= 26 for s in letters):
            raise ValueError(f"cannot read period {text!r}: use letters a..z or integers")
    return beatty.BalancedWord(tuple(letters))


def _cmd_balanced_check(cfg: RunConfig, args) -> int:
    word = _parse_period(args.period)
    verdict = beatty.balanced_check(word)
    dens = beatty.densities(word)
    payload = {"period": list(word.period), "balanced": verdict.balanced,
               "densities": [str(x) for x in dens],
               "letter": verdict.letter, "window_length": verdict.window_length,
               "positions": list(verdict.positions) if verdict.positions else None}
    if verdict.balanced:
        _emit(cfg, payload, [f"balanced; densities {[str(x) for x in dens]}"])
        return EXIT_OK
    _emit(cfg, payload,
          [f"not balanced: letter {verdict.letter} differs by more than 1 over "
           f"windows of length {verdict.window_length} at starts {verdict.positions}"])
    return EXIT_NEGATIVE


def _cmd_doubling(cfg: RunConfig, args) -> int:
    if args.xs:
        values = list(parse_fraction_list(args.xs))
        payload: dict = {"xs": [str(x) for x in values]}
    else:
        if args.k is None or args.t is None:
            raise ValueError("provide either --xs or both --k and --t")
        orbit = doubling.orbit_from_uniform(args.k, args.t)
        values = list(orbit.xs)
        payload = {"k": args.k, "t": args.t, "xs": [str(x) for x in values]}
    pi = doubling.prefix_permutation(values)
    payload["permutation"] = list(pi) if pi else None
    if pi is None:
        _emit(cfg, payload, ["none"])
        return EXIT_NEGATIVE
    _emit(cfg, payload, [" ".join(map(str, pi))])
    return EXIT_OK


def _cmd_suitable(cfg: RunConfig, args) -> int:
    d = _parse_distance_tuple(args.gaps)
    suitable = robust.is_suitable(d, args.t)
    payload = {"gaps": [str(x) for x in d.distances], "t": args.t,
               "suitable": suitable}
    human = [f"t = {args.t} suitable: {suitable}"]
    if d.k == 3:
        strong = suitable and robust.is_strongly_suitable(d, args.t)
        payload["strongly_suitable"] = strong
        human.append(f"strongly suitable: {strong}")
    _emit(cfg, payload, human)
    return EXIT_OK if suitable else EXIT_NEGATIVE


def _cmd_suitable_search(cfg: RunConfig, args) -> int:
    d = _parse_distance_tuple(args.gaps)
    analysis = robust.TripleAnalysis(d)
    t = robust.strongly_suitable_search(d, args.max_t)
    payload = {"gaps": [str(x) for x in d.distances], "max_t": args.max_t,
               "t": t, "t_set_empty": analysis.t_set_empty}
    if t is not None:
        _emit(cfg, payload, [f"t = {t}"])
        return EXIT_OK
    if analysis.t_set_empty:
        q = next(q for q in analysis.denominators if q == 2)
        _emit(cfg, payload, [f"none: T empty (a distance has denominator {q}, "
                             "which divides every 2t)"])
    else:
        _emit(cfg, payload, [f"none (searched T up to t = {args.max_t})"])
    return EXIT_NEGATIVE


def _cmd_nearly_ramsey(cfg: RunConfig, args) -> int:
    d = _parse_distance_tuple(args.gaps)
    result = robust.nearly_ramsey_finite_check(d, args.n)
    payload = {"gaps": [str(x) for x in d.distances], "n": args.n,
               "verified": result.verified,
               "colourings_checked": result.colourings_checked}
    if result.verified:
        _emit(cfg, payload,
              [f"verified over all {result.colourings_checked} colourings of "
               f"Z_{args.n} with vertex 0 black"])
        return EXIT_OK
    payload["counterexample"] = serialize_colouring(result.counterexample)
    if robust.is_claimed_nearly_ramsey(d):
        # for these triples the forcing argument covers every fitting N
        _emit(cfg, payload,
              ["REFUTATION: colouring with no copy avoiding a colour:",
               serialize_colouring(result.counterexample).rstrip()])
        return EXIT_REFUTATION
    _emit(cfg, payload,
          ["not forced: a colouring avoids both colours, e.g.",
           serialize_colouring(result.counterexample).rstrip()])
    return EXIT_NEGATIVE


def _cmd_majority(cfg: RunConfig, args) -> int:
    params = majority_mod.MajorityParams(k=args.k, eps=parse_fraction(args.eps))
    verdict = majority_mod.majority_verify(params)
    if args.emit:
        c = majority_mod.majority_colouring(params, verdict.grid)
        Path(args.emit).write_text(serialize_colouring(c), encoding="utf-8")
    payload = {"k": args.k, "eps": str(params.eps), "grid": verdict.grid,
               "density_gap": str(verdict.density_gap),
               "no_red_copy": verdict.no_red_copy,
               "witness": _witness_payload(verdict.witness) if verdict.witness else None}
    if verdict.no_red_copy:
        _emit(cfg, payload,
              [f"no red copy on grid {verdict.grid}; red denser by {verdict.density_gap}"])
        return EXIT_OK
    _emit(cfg, payload,
          [f"REFUTATION: red copy found at vertices {list(verdict.witness.vertices)}"])
    return EXIT_REFUTATION


def _cmd_cnf(cfg: RunConfig, args) -> int:
    formula = satgen.cnf_generate(args.k)
    text = satgen.dimacs_write(formula, comments=(f"k = {args.k}",))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        if not cfg.json_output:
            print(f"wrote {formula.num_vars} variables, {formula.num_clauses} "
                  f"clauses to {args.out}")
    return EXIT_OK


def _cmd_solve(cfg: RunConfig, args) -> int:
    outcome = satgen.verify_unavoidable(args.k, solver_command=args.solver,
                                        timeout=args.timeout)
    payload = {"k": args.k, "status": outcome.status,
               "model": serialize_colouring(outcome.model) if outcome.model else None}
    if outcome.status == "UNSAT":
        _emit(cfg, payload, [f"UNSAT: every colouring of the {2**args.k - 1}-gon "
                             "contains a monochromatic copy"])
        return EXIT_OK
    if outcome.status == "SAT":
        _emit(cfg, payload, ["REFUTATION: counterexample colouring found:",
                             serialize_colouring(outcome.model).rstrip()])
        return EXIT_REFUTATION
    _emit(cfg, payload, ["unknown (solver timeout)"])
    return EXIT_UNKNOWN


# ---------------------------------------------------------------------------
# batch runner

def _parse_sweep(path: Path) -> list[tuple[int, list[str]]]:
    items = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = shlex.split(line)
        try:
            expected = int(tokens[0])
        except (ValueError, IndexError):
            raise ValueError(f"{path}:{lineno}: expected '<exit-code> <args...>'") from None
        if not tokens[1:]:
            raise ValueError(f"{path}:{lineno}: missing subcommand")
        items.append((expected, tokens[1:]))
    return items


def _run_sweep_item(argv: list[str], spec_dir: Path) -> int:
    resolved = [str(spec_dir / arg[2:]) if arg.startswith("@/") else arg
                for arg in argv]
    env = dict(os.environ)
    pkg_parent = str(Path(__file__).resolve().parent.parent)
    env["PYTHONPATH"] = pkg_parent + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run([sys.executable, "-m", "ramsey_circle", *resolved],
                          capture_output=True, env=env)
    return proc.returncode


def _cmd_batch(cfg: RunConfig, args) -> int:
    spec_path = Path(args.spec)
    items = _parse_sweep(spec_path)
    spec_dir = spec_path.resolve().parent
    results: list[Optional[int]] = [None] * len(items)
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, cfg.parallelism)) as pool:
        futures = {pool.submit(_run_sweep_item, argv, spec_dir): i
                   for i, (_, argv) in enumerate(items)}
        for future in concurrent.futures.as_completed(futures):
            results[futures[future]] = future.result()
    report_items = []
    passed = 0
    saw_error = False
    for (expected, argv), actual in zip(items, results):
        ok = actual == expected
        passed += ok
        if not ok and actual == EXIT_ERROR:
            saw_error = True
        report_items.append({"argv": argv, "expected": expected,
                             "actual": actual, "pass": ok})
    report = {"schema": SCHEMA, "command": "batch", "total": len(items),
              "passed": passed, "failed": len(items) - passed,
              "items": report_items}
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    if cfg.json_output or not args.report:
        sys.stdout.write(text)
    else:
        print(f"{passed}/{len(items)} passed")
    if passed == len(items):
        return EXIT_OK
    return EXIT_ERROR if saw_error else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser and dispatch

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsey-circle",
        description="Exact verification toolkit for Ramsey distance tuples "
                    "on the unit circle.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized sweeps (reserved, default 0)")
    parser.add_argument("--parallel", type=int, default=1,
                        help="worker count for batch runs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="search a colouring for a monochromatic copy")
    p.add_argument("--input", required=True, help="colouring file")
    p.add_argument("--gaps", required=True, help="fractions 4/7,2/7,1/7 or integers 4,2,1")
    engine = p.add_mutually_exclusive_group()
    engine.add_argument("--dp", action="store_true", help="force the subset-sum DP detector")
    engine.add_argument("--brute", action="store_true", help="force the brute-force detector")
    p.add_argument("--restrict", help="file of allowed cyclic gap orders")
    p.add_argument("--count", action="store_true", help="count monochromatic copies per colour")

    p = sub.add_parser("uniform-check", help="red-window orderings for the doubling tuple")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-t", type=int, required=True)

    p = sub.add_parser("witness-search", help="smallest t whose uniform colouring avoids a tuple")
    p.add_argument("--gaps", required=True)
    p.add_argument("--max-t", type=int, required=True)

    p = sub.add_parser("beatty-check", help="bounded partition check for Beatty sequences")
    p.add_argument("--alphas", required=True)
    p.add_argument("--betas")
    p.add_argument("--half", action="store_true", help="use betas = alphas / 2")
    p.add_argument("--limit", type=int, required=True)

    p = sub.add_parser("balanced-check", help="balance condition of a periodic word")
    p.add_argument("--period", required=True, help="e.g. a,b,a,c,a,b,a or 1,2,1,3,1,2,1")

    p = sub.add_parser("doubling", help="prefix-balanced ordering of a doubling orbit")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--xs", help="explicit values, e.g. 3/5,3/5,3/5,-9/10,-9/10")

    p = sub.add_parser("suitable", help="does c_t avoid monochromatic copies of a triple")
    p.add_argument("--gaps", required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("suitable-search", help="smallest strongly-suitable t in T")
    p.add_argument("--gaps", required=True)
    p.add_argument("--max-t", type=int, required=True)

    p = sub.add_parser("nearly-ramsey", help="exhaust colourings of Z_n with a black vertex")
    p.add_argument("--gaps", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("majority", help="verify the denser-red colouring has no red copy")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", required=True, help="exact fraction, e.g. 1/100")
    p.add_argument("--emit", help="write the discretised colouring to a file")

    p = sub.add_parser("cnf", help="write the DIMACS formula for k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True, help="output path, or - for stdout")

    p = sub.add_parser("solve", help="run an external SAT solver on the formula for k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--solver", help="solver command (default: RAMSEY_SAT_SOLVER "
                                    "or the bundled reference solver)")
    p.add_argument("--timeout", type=float, help="seconds before giving up")

    p = sub.add_parser("batch", help="run a sweep spec and report pass/fail")
    p.add_argument("spec", help="line-oriented file: <expected-exit> <args...>")
    p.add_argument("--report", help="write the JSON report to this path")

    return parser


_HANDLERS = {
    "check": _cmd_check,
    "uniform-check": _cmd_uniform_check,
    "witness-search": _cmd_witness_search,
    "beatty-check": _cmd_beatty_check,
    "balanced-check": _cmd_balanced_check,
    "doubling": _cmd_doubling,
    "suitable": _cmd_suitable,
    "suitable-search": _cmd_suitable_search,
    "nearly-ramsey": _cmd_nearly_ramsey,
    "majority": _cmd_majority,
    "cnf": _cmd_cnf,
    "solve": _cmd_solve,
    "batch": _cmd_batch,
}


def dispatch(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    cfg = RunConfig(command=args.command, json_output=args.json,
                    seed=args.seed, parallelism=args.parallel)
    try:
        return _HANDLERS[args.command](cfg, args)
    except RefutationError as exc:
        print(f"REFUTATION: {exc}", file=sys.stderr)
        return EXIT_REFUTATION
    except (ParseError, ValueError, OSError, satgen.SolverError,
            beatty.PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
