"""Command-line front end.

Exit codes: 0 property holds / success, 1 property fails, 2 usage or parse
error, 3 plant not live or has an unobservable cycle, 4 no supervisor
exists, 5 a component has no supervisor, 6 product exceeds the state budget.
"""

from __future__ import annotations

import argparse
import sys
import time
import warnings
from pathlib import Path
from typing import Any, Sequence

from .automata import Dfa, sync_product
from .dot import to_dot
from .errors import (
    AssumptionViolated,
    ComponentSynthesisFailed,
    FaultSynthError,
    NotPrognosable,
    ParseError,
    ProductTooLarge,
)
from .io import dumps_automaton, load_automaton, load_extras, save_automaton
from .languages import Projection
from .modular import DEFAULT_BUDGET, Guarantee, ModularPlant, cross_check_global, modular_enforce, validate
from .report import dumps_report, make_report
from .synthesis import Diagnosis, Prognosis, SynthesisProblem, synthesize
from .verification import (
    build_verifier,
    check_diagnosable,
    check_k_prognosable,
    max_prognosis_horizon,
    observer,
    uncertain_states,
    verifier_as_dfa,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ASSUMPTION, EXIT_NO_SOLUTION, EXIT_COMPONENT, EXIT_TOO_LARGE = range(7)


class _Ctx:
    def __init__(self, args: argparse.Namespace, argv: Sequence[str]):
        self.args = args
        self.argv = list(argv)
        self.start = time.perf_counter()

    def timing(self) -> float | None:
        if getattr(self.args, "timing", False):
            return (time.perf_counter() - self.start) * 1000.0
        return None

    def emit(self, rep: dict[str, Any]) -> None:
        text = dumps_report(rep)
        path = getattr(self.args, "report", None)
        if path:
            Path(path).write_text(text, encoding="utf-8")
        if not getattr(self.args, "quiet", False):
            sys.stdout.write(text)


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------ verify
def _cmd_verify(ctx: _Ctx) -> int:
    a = ctx.args
    g = load_automaton(a.plant)
    p = Projection.observable(g.alphabet)
    if a.property == "prognosis":
        r = check_k_prognosable(g, a.k, a.force)
        prop = "prognosability" if a.k == 0 else "k-prognosability"
        ctx.emit(make_report(ctx.argv, property=prop, verdict=r.verdict, parameters=r.parameters,
                             witness=r.witness, projection=p, notes=r.notes,
                             timing_ms=ctx.timing()))
        return EXIT_OK if r.verdict else EXIT_FAIL
    if a.property == "diagnosis":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            r = check_diagnosable(g, a.force)
        ctx.emit(make_report(ctx.argv, property=r.property, verdict=r.verdict,
                             parameters=r.parameters, witness=r.witness, projection=p,
                             notes=r.notes, timing_ms=ctx.timing()))
        return EXIT_OK if r.verdict else EXIT_FAIL
    try:
        k = max_prognosis_horizon(g, a.force)
    except NotPrognosable as exc:
        ctx.emit(make_report(ctx.argv, property="maximal prognosis horizon", verdict=False,
                             notes=[str(exc)], timing_ms=ctx.timing()))
        return EXIT_FAIL
    ctx.emit(make_report(ctx.argv, property="maximal prognosis horizon", verdict=True,
                         result=str(k), parameters={"k": k}, timing_ms=ctx.timing()))
    return EXIT_OK


# -------------------------------------------------------------- synthesize
def _trace_dicts(trace) -> list[dict[str, Any]]:
    return [{"step": t.step, "removed": list(t.removed), "size": t.size} for t in trace]


def _explain(trace) -> None:
    for t in trace:
        removed = ", ".join(t.removed) if t.removed else "nothing"
        print(f"{t.step}: removed {removed}; {t.size} states left", file=sys.stderr)


def _cmd_synthesize(ctx: _Ctx) -> int:
    a = ctx.args
    g = load_automaton(a.plant)
    mode = Prognosis(a.k) if a.mode == "prognosis" else Diagnosis()
    unc = None
    if a.uncontrollable:
        extra_unc = frozenset(e.strip() for e in a.uncontrollable.split(",") if e.strip())
        unknown = sorted(extra_unc - set(g.alphabet.names))
        if unknown:
            raise ValueError(f"unknown event(s) in --uncontrollable: {', '.join(unknown)}")
        unc = g.alphabet.uncontrollable | extra_unc
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = synthesize(SynthesisProblem(g, mode, unc, force=a.force))
    if a.explain:
        _explain(res.trace)
    params: dict[str, Any] = {"k": a.k} if a.mode == "prognosis" else {}
    params["iterations"] = res.iterations
    extra = {"maximality_guaranteed": res.maximality_guaranteed}
    if res.no_solution:
        ctx.emit(make_report(ctx.argv, property=f"synthesis ({mode})", verdict=False,
                             result="NoSolution", parameters=params,
                             trace=_trace_dicts(res.trace), notes=res.notes, extra=extra,
                             timing_ms=ctx.timing()))
        return EXIT_NO_SOLUTION
    sup = res.supervisor.renamed(f"{g.name}_sup" if g.name else "supervisor")
    if a.output:
        save_automaton(sup, a.output)
    params["states"] = sup.n_states
    ctx.emit(make_report(ctx.argv, property=f"synthesis ({mode})", verdict=True,
                         result=a.output or "stdout", parameters=params,
                         trace=_trace_dicts(res.trace), notes=res.notes, extra=extra,
                         timing_ms=ctx.timing()))
    if not a.output:
        sys.stdout.write(dumps_automaton(sup))
    return EXIT_OK


def _cmd_modular(ctx: _Ctx) -> int:
    a = ctx.args
    comps = [load_automaton(p) for p in a.plants]
    mp = ModularPlant(comps)
    errors = validate(mp)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    mode = Prognosis(0) if a.mode == "prognosis" else Diagnosis()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            res = modular_enforce(mp, mode)
        except ComponentSynthesisFailed as exc:
            ctx.emit(make_report(ctx.argv, property=f"modular synthesis ({mode})", verdict=False,
                                 result="ComponentSynthesisFailed",
                                 parameters={"component": exc.index}, notes=[str(exc)],
                                 timing_ms=ctx.timing()))
            return EXIT_COMPONENT
        outdir = Path(a.output)
        outdir.mkdir(parents=True, exist_ok=True)
        files = []
        for i, (g, s) in enumerate(zip(comps, res.local_supervisors), start=1):
            name = f"S_{i}.json"
            save_automaton(s.renamed(f"{g.name}_sup" if g.name else f"S_{i}"), outdir / name)
            files.append(name)
        extra: dict[str, Any] = {"supervisors": files, "nonconflicting": res.nonconflicting,
                                 "guarantee": res.global_guarantee.value}
        verdict = res.global_guarantee != Guarantee.NOT_GUARANTEED
        notes: list[str] = []
        if a.cross_check and verdict:
            cc = cross_check_global(mp, res, mode, a.budget)
            extra["cross_check"] = {"property": cc.property, "verdict": cc.verdict,
                                    "parameters": cc.parameters}
            notes.extend(cc.notes)
            verdict = verdict and cc.verdict
    rep = make_report(ctx.argv, property=f"modular synthesis ({mode})", verdict=verdict,
                      result=res.global_guarantee.value, notes=notes, extra=extra,
                      timing_ms=ctx.timing())
    (Path(a.output) / "report.json").write_text(dumps_report(rep), encoding="utf-8")
    ctx.emit(rep)
    return EXIT_OK if verdict else EXIT_FAIL


# ------------------------------------------------------------------ inspect
def _cmd_observer(ctx: _Ctx) -> int:
    g = load_automaton(ctx.args.plant)
    obs = observer(g)
    _write_or_print(dumps_automaton(obs.dfa.renamed(f"Obs({g.name})" if g.name else "observer")),
                    ctx.args.output)
    return EXIT_OK


def _cmd_verifier(ctx: _Ctx) -> int:
    g = load_automaton(ctx.args.plant)
    v = build_verifier(g)
    d = verifier_as_dfa(v)
    extras = None
    if ctx.args.N is not None:
        flagged = uncertain_states(v, g, ctx.args.N)
        extras = {"N": ctx.args.N,
                  "uncertain": [v.label(i) for i, p in enumerate(v.pairs) if p in flagged]}
    _write_or_print(dumps_automaton(d, extras), ctx.args.output)
    return EXIT_OK


def _cmd_compose(ctx: _Ctx) -> int:
    comps = [load_automaton(p) for p in ctx.args.plants]
    budget = ctx.args.budget
    _write_or_print(dumps_automaton(sync_product(comps, max_states=budget)), ctx.args.output)
    return EXIT_OK


def _cmd_export_dot(ctx: _Ctx) -> int:
    d: Dfa = load_automaton(ctx.args.file)
    flagged = load_extras(ctx.args.file).get("uncertain", [])
    _write_or_print(to_dot(d, flagged), ctx.args.output)
    return EXIT_OK


# ------------------------------------------------------------------ parser
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="faultsynth",
                                 description="Verify and enforce fault prognosability and "
                                             "diagnosability of finite automata.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--report", metavar="PATH", help="also write the report to PATH")
        p.add_argument("--quiet", action="store_true", help="do not print the report")
        p.add_argument("--timing", action="store_true", help="record wall-clock time")
        p.add_argument("--force", action="store_true",
                       help="skip the liveness and unobservable-cycle precondition")

    v = sub.add_parser("verify", help="check a property of a plant")
    vs = v.add_subparsers(dest="property", required=True)
    vp = vs.add_parser("prognosis")
    vp.add_argument("--k", type=int, default=0)
    vp.add_argument("plant")
    common(vp)
    for name in ("diagnosis", "max-k"):
        q = vs.add_parser(name)
        q.add_argument("plant")
        common(q)
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("synthesize", help="compute the supremal supervisor")
    ss = s.add_subparsers(dest="mode", required=True)
    for name in ("prognosis", "diagnosis"):
        q = ss.add_parser(name)
        if name == "prognosis":
            q.add_argument("--k", type=int, default=0)
        q.add_argument("plant")
        q.add_argument("-o", "--output")
        q.add_argument("--uncontrollable", help="comma-separated extra uncontrollable events")
        q.add_argument("--explain", action="store_true", help="print the iteration trace")
        common(q)
        q.set_defaults(k=getattr(q, "k", 0))
    s.set_defaults(func=_cmd_synthesize)

    m = sub.add_parser("modular", help="modular plants")
    ms = m.add_subparsers(dest="action", required=True)
    mq = ms.add_parser("synthesize")
    mq.add_argument("--mode", choices=("prognosis", "diagnosis"), required=True)
    mq.add_argument("plants", nargs="+")
    mq.add_argument("-o", "--output", required=True, help="output directory")
    mq.add_argument("--cross-check", action="store_true")
    mq.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(mq)
    m.set_defaults(func=_cmd_modular)

    o = sub.add_parser("observer", help="write the observer automaton")
    o.add_argument("plant")
    o.add_argument("-o", "--output")
    o.set_defaults(func=_cmd_observer)

    w = sub.add_parser("verifier", help="write the verifier automaton")
    w.add_argument("plant")
    w.add_argument("--N", type=int, help="flag uncertain pairs for this observation bound")
    w.add_argument("-o", "--output")
    w.set_defaults(func=_cmd_verifier)

    c = sub.add_parser("compose", help="synchronous product of automata")
    c.add_argument("plants", nargs="+")
    c.add_argument("-o", "--output")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.set_defaults(func=_cmd_compose)

    d = sub.add_parser("export-dot", help="render an automaton file as DOT")
    d.add_argument("file")
    d.add_argument("-o", "--output")
    d.set_defaults(func=_cmd_export_dot)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "mode", None) == "diagnosis" and not hasattr(args, "k"):
        args.k = 0
    ctx = _Ctx(args, argv)
    try:
        return args.func(ctx)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssumptionViolated as exc:
        print(f"error: {exc} (use --force to proceed anyway)", file=sys.stderr)
        return EXIT_ASSUMPTION
    except ProductTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (ValueError, FaultSynthError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
