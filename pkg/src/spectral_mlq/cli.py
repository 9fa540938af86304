"""Command-line front end: ``spectral-mlq <subcommand> ...``.

Exit codes: 0 on success, 1 on usage or domain errors, 2 when a check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Dict, List, Sequence

from . import core, jt, mlq, rmx, tasep, verify
from .mlq import MLQ
from .poly import Poly

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2


class UsageError(Exception):
    """Bad command-line input that argparse itself cannot detect."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Argument parsing helpers
# ---------------------------------------------------------------------------

def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip())


def _points(text: str) -> tuple[tuple[int, int], ...]:
    """``"3,1;1,2"`` -> ``((3, 1), (1, 2))``."""
    out = []
    for part in text.split(";"):
        xy = _ints(part)
        if len(xy) != 2:
            raise UsageError(f"lattice point {part!r} must be 'x,y'")
        out.append(xy)
    return tuple(out)


def _need_n(args: argparse.Namespace, fallback: int | None = None) -> int:
    n = args.n if args.n is not None else fallback
    if n is None:
        raise UsageError("this subcommand needs -n")
    if n < 1:
        raise UsageError("-n must be positive")
    return n


def _emit(args: argparse.Namespace, text: str, obj: object) -> None:
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _poly_obj(p: Poly) -> dict:
    return {"text": p.to_text(), "terms": p.to_json_obj()}


def _status(ok: bool) -> str:
    return "ok" if ok else "MISMATCH"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_apply(args: argparse.Namespace) -> int:
    u = core.parse_word(args.word)
    n = _need_n(args, len(u))
    if n != len(u):
        raise UsageError(f"-n {n} does not match the word length {len(u)}")
    w = u
    for text in args.queue:
        w = core.queue_apply(core.parse_queue(text, n), w)
    out = core.format_word(w)
    _emit(args, out, {"word": core.format_word(u), "queues": [list(core.parse_queue(t, n)) for t in args.queue],
                      "result": out})
    return EXIT_OK


def cmd_swt(args: argparse.Namespace) -> int:
    u = core.parse_word(args.word)
    if args.n is not None and args.n != len(u):
        raise UsageError(f"-n {args.n} does not match the word length {len(u)}")
    sigma = _ints(args.sigma) if args.sigma else None
    p = mlq.spectral_weight(u, sigma)
    _emit(args, p.to_text(), {"word": core.format_word(u), "sigma": list(sigma) if sigma else None,
                              "weight": _poly_obj(p)})
    return EXIT_OK


def cmd_dual(args: argparse.Namespace) -> int:
    n = _need_n(args)
    c = rmx.Configuration(n, core.parse_queue(args.q1, n), core.parse_queue(args.q2, n))
    d = rmx.dual_configuration(c)
    rec = rmx.sp_record(c)
    text = rmx.describe_dual(c)
    if args.trace:
        text += "\ntrace = " + rec.trace()
    obj = {"n": n, "q1": list(d.q1), "q2": list(d.q2), "unbalanced": list(rec.unbalanced_sites)}
    if args.trace:
        obj["trace"] = rec.trace()
    _emit(args, text, obj)
    return EXIT_OK


def cmd_braid_check(args: argparse.Namespace) -> int:
    n = _need_n(args)
    ok, detail = verify.check_braid(n)
    _emit(args, f"braid relation up to n={n}: {_status(ok)} ({detail})", {"n": n, "ok": ok, "detail": detail})
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_jt(args: argparse.Namespace) -> int:
    n = _need_n(args)
    spec = jt.SurfaceSpec(_ints(args.sites), _ints(args.values))
    p = jt.jt_spectral_weight(spec, n)
    u = core.format_word(jt.u_of_v(spec, n))
    lines = [f"u(v) = {u}", f"weight = {p.to_text()}"]
    obj: Dict[str, object] = {"word": u, "weight": _poly_obj(p)}
    ok = True
    if args.check_bruteforce:
        ok = p == jt.spectral_weight_of_spec(spec, n)
        lines.append(f"MLQ enumeration: {_status(ok)}")
        obj["agrees"] = ok
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_psi(args: argparse.Namespace) -> int:
    n = _need_n(args)
    sites, t = _ints(args.sites), _ints(args.lacunar)
    p = jt.psi_t(sites, t, n)
    lines = [f"merged word = {core.format_word(jt.merged_w0_word(sites, t, n))}", f"psi = {p.to_text()}"]
    obj: Dict[str, object] = {"psi": _poly_obj(p)}
    ok = True
    if args.check:
        ok = p == jt.psi_t_via_merge(sites, t, n) == jt.psi_t_by_definition(sites, t, n)
        lines.append(f"merge and subset sums: {_status(ok)}")
        obj["agrees"] = ok
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_sst(args: argparse.Namespace) -> int:
    n = _need_n(args)
    lam, s = _ints(args.shape), _ints(args.surface)
    if len(lam) != len(s):
        raise UsageError("--shape and --surface need the same length")
    count = sum(1 for _ in jt.enumerate_sst(lam, s))
    total = jt.sst_sum(lam, s, n)
    det = jt.sst_determinant(lam, s, n)
    ok = total == det
    text = f"tableaux = {count}\nsum = {total.to_text()}\ndeterminant: {_status(ok)}"
    _emit(args, text, {"count": count, "sum": _poly_obj(total), "agrees": ok})
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_lgv_check(args: argparse.Namespace) -> int:
    n = _need_n(args, 6)
    if args.starts or args.ends:
        if not (args.starts and args.ends):
            raise UsageError("give both --starts and --ends")
        a, b = _points(args.starts), _points(args.ends)
        if len(a) != len(b):
            raise UsageError("--starts and --ends need the same number of points")
        det = jt.lgv_determinant(a, b, n)
        ok = det == jt.nilp_sum(a, b, n)
        _emit(args, f"determinant = {det.to_text()}\npath families: {_status(ok)}",
              {"determinant": _poly_obj(det), "agrees": ok})
    else:
        ok, detail = verify.check_lgv(n, trials=args.trials, seed=args.seed)
        _emit(args, f"random admissible tuples: {_status(ok)} ({detail})", {"ok": ok, "detail": detail})
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _type_arg(args: argparse.Namespace) -> tuple[int, ...]:
    m = _ints(args.type)
    if args.n is not None and args.n != sum(m):
        raise UsageError(f"-n {args.n} does not match the type total {sum(m)}")
    if not core.is_packed_type(m):
        raise UsageError(f"type {m} has an empty class")
    return m


def cmd_tasep_stationary(args: argparse.Namespace) -> int:
    m = _type_arg(args)
    pi = tasep.stationary_distribution(m)
    lines = [f"{core.format_word(u)} {p}" for u, p in pi.items()]
    obj: Dict[str, object] = {"type": list(m), "distribution": {core.format_word(u): str(p) for u, p in pi.items()}}
    ok = True
    if args.compare_swt:
        ref = tasep.normalize({u: p.at_ones() for u, p in mlq.spectral_weights(m).items()})
        ok = ref == pi
        lines.append(f"spectral weights at x=1: {_status(ok)}")
        obj["agrees"] = ok
    if args.matrix:
        obj["matrix"] = tasep.matrix_to_json(tasep.transition_matrix(m))
        lines.append(json.dumps(obj["matrix"]))
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_tasep_intertwining(args: argparse.Namespace) -> int:
    n = _need_n(args, 5)
    results = [verify.check_intertwining(n), verify.check_psi_tilde(n)]
    ok = all(r[0] for r in results)
    text = "\n".join([f"intertwining: {_status(results[0][0])} ({results[0][1]})",
                      f"weighted commutativity: {_status(results[1][0])} ({results[1][1]})"])
    _emit(args, text, {"n": n, "ok": ok, "details": [r[1] for r in results]})
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_tasep_sample(args: argparse.Namespace) -> int:
    m = _type_arg(args)
    if not 1 <= args.i <= sum(m):
        raise UsageError(f"-i must lie in [1..{sum(m)}]")
    counts = tasep.sample_queue_chain(m, args.i, args.steps, args.seed)
    lines = [f"{core.format_word(u)} {c}" for u, c in counts.items()]
    _emit(args, "\n".join(lines), {"type": list(m), "i": args.i, "steps": args.steps, "seed": args.seed,
                                   "counts": {core.format_word(u): c for u, c in counts.items()}})
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    if args.mlq is not None:
        n = _need_n(args)
        q = mlq.parse_mlq(args.mlq, n)
        _emit(args, mlq.render_graveyard(q), {"mlq": q.to_json_obj(),
                                              "labels": [{str(k): v for k, v in f.items()}
                                                         for f in mlq.canonical_labeling(q)]})
    else:
        if not (args.queue and args.word):
            raise UsageError("render needs --mlq, or --queue with --word")
        u = core.parse_word(args.word)
        q = core.parse_queue(args.queue, len(u))
        _emit(args, mlq.render_queue_diagram(q, u),
              {"word": core.format_word(u), "queue": list(q), "result": core.format_word(core.queue_apply(q, u))})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    n = _need_n(args, 5)
    if args.format == "text":
        expected = verify.EXPECTED_SECONDS.get(n)
        note = f"about {expected} s for all suites" if expected else "no timing reference for this n"
        print(f"verify suite={args.suite} n={n} ({note})")
    failed = 0
    records = []
    for o in verify.run_suite(args.suite, n):
        failed += not o.ok
        line = f"[{'PASS' if o.ok else 'FAIL'}] {o.suite}: {o.name} ({o.detail})"
        if args.timings:
            line += f" {o.seconds:.2f}s"
        records.append({"suite": o.suite, "name": o.name, "ok": o.ok, "detail": o.detail})
        if args.format == "text":
            print(line, flush=True)
    if args.format == "json":
        print(json.dumps({"n": n, "suite": args.suite, "failed": failed, "checks": records}, sort_keys=True))
    else:
        print(f"{len(records) - failed}/{len(records)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _common(suppress: bool) -> argparse.ArgumentParser:
    """Global flags; subparsers use suppressed defaults so either position works."""
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("-n", type=int, default=d(None), help="number of sites")
    p.add_argument("--format", choices=("text", "json"), default=d("text"), help="output format")
    p.add_argument("--seed", type=int, default=d(0), help="seed for random choices")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectral-mlq", description="Multiline queues with spectral parameters.",
                     parents=[_common(False)])
    common = [_common(True)]
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable[[argparse.Namespace], int], help_text: str, parent=sub) -> argparse.ArgumentParser:
        p = parent.add_parser(name, help=help_text, parents=common)
        p.set_defaults(func=fn)
        return p

    p = add("apply", cmd_apply, "apply queues to a word")
    p.add_argument("--queue", action="append", required=True, help="sites, e.g. 1,4,8,9 (repeat to compose)")
    p.add_argument("--word", required=True)

    p = add("swt", cmd_swt, "spectral weight of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--sigma", help="twist in one-line notation, e.g. 2,1")

    p = add("dual", cmd_dual, "dual configuration of a pair of queues")
    p.add_argument("--q1", required=True)
    p.add_argument("--q2", required=True)
    p.add_argument("--trace", action="store_true", help="show the parenthesis matching")

    add("braid-check", cmd_braid_check, "check the braid relation exhaustively up to n")

    p = add("jt", cmd_jt, "determinant formula for u(v)")
    p.add_argument("--sites", required=True)
    p.add_argument("--values", required=True)
    p.add_argument("--check-bruteforce", action="store_true", help="compare with MLQ enumeration")

    p = add("psi", cmd_psi, "product-determinant for a lacunar set")
    p.add_argument("--sites", required=True)
    p.add_argument("--lacunar", default="", help="lacunar set, e.g. 1,4")
    p.add_argument("--check", action="store_true", help="compare with merges and subset sums")

    p = add("sst", cmd_sst, "semistandard tableaux with fixed surface")
    p.add_argument("--shape", required=True)
    p.add_argument("--surface", required=True)

    p = add("lgv-check", cmd_lgv_check, "lattice paths against the determinant")
    p.add_argument("--starts", help="points x,y separated by ';'")
    p.add_argument("--ends", help="points x,y separated by ';'")
    p.add_argument("--trials", type=int, default=50)

    p = add("tasep", lambda a: EXIT_OK, "multispecies TASEP")
    tsub = p.add_subparsers(dest="tasep_command", required=True, parser_class=_Parser)
    q = add("stationary", cmd_tasep_stationary, "exact stationary distribution", tsub)
    q.add_argument("--type", required=True, help="packed type, e.g. 1,2,1")
    q.add_argument("--compare-swt", action="store_true")
    q.add_argument("--matrix", action="store_true", help="include the transition matrix")
    add("check-intertwining", cmd_tasep_intertwining, "operator identities up to n", tsub)
    q = add("sample", cmd_tasep_sample, "run the queue chain", tsub)
    q.add_argument("--type", required=True)
    q.add_argument("-i", type=int, required=True, help="queue size")
    q.add_argument("--steps", type=int, default=10000)

    p = add("render", cmd_render, "ASCII diagrams")
    p.add_argument("--mlq", help="queues separated by ';', e.g. '3;1,3,4'")
    p.add_argument("--queue")
    p.add_argument("--word")

    p = add("verify", cmd_verify, "run property suites")
    p.add_argument("--suite", choices=("all",) + tuple(verify.SUITES), default="all")
    p.add_argument("--timings", action="store_true", help="append elapsed seconds to each line")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, core.IllDefinedMerge) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"spectral-mlq: error: {msg}", file=sys.stderr)
        return EXIT_ERROR
    except BrokenPipeError:
        # the reader went away (e.g. `| head`); silence the final flush
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


def run(argv: List[str]) -> int:
    return main(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
