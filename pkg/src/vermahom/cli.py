"""Command line front end.

Subcommands: decide, factorize, witness, trace, orbit, hasse, sweep.
Results go to stdout (JSON by default, DOT for hasse, optional text for
trace and sweep); diagnostics go to stderr as one machine-parsable line.
Exit codes: 0 success, 1 usage or parse error, 2 domain error.

Negative weight entries start with ``-``, so quote weight arguments in
shells: ``--source "-2,-4,2,3,-1,4"``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass

from .bruhat import ElementaryStep, HomDecision, decide_hom, factorize, hasse
from .errors import VermaHomError
from .obstruction import Witness, find_witness
from .sweep import run_sweep
from .translation import TranslationTrace, degeneration_trace
from .weights import BlockWeight, Composition
from .weyl import DEFAULT_ORBIT_CAP, enumerate_orbit


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors on exit code 1 (2 is for domain errors)."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let weight arguments such as "-2,-4,2,3,-1,4" pass as values
        self._negative_number_matcher = re.compile(r"^-\d+(?:,-?\d+)*$")

    def error(self, message):
        self.exit(1, f"error: usage: {message}\n")


@dataclass
class Request:
    subcommand: str
    composition: Composition | None = None
    source: BlockWeight | None = None
    target: BlockWeight | None = None
    weight: BlockWeight | None = None
    orbit_cap: int = DEFAULT_ORBIT_CAP
    fmt: str = "json"
    max_n: int = 7
    values: tuple[int, ...] = (0, 1, 2, 3)
    check_chains: bool = False
    check_witnesses: bool = False


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from exc


# ---------------------------------------------------------------------------
# serialization


def weight_to_list(w: BlockWeight) -> list[int]:
    return list(w.entries)


def weight_from_list(values, comp: Composition) -> BlockWeight:
    return BlockWeight(comp, tuple(values))


def step_to_dict(step: ElementaryStep) -> dict:
    return {
        "p": step.p,
        "q": step.q,
        "before": weight_to_list(step.before),
        "after": weight_to_list(step.after),
    }


def step_from_dict(data: dict, comp: Composition) -> ElementaryStep:
    return ElementaryStep(
        p=data["p"],
        q=data["q"],
        before=weight_from_list(data["before"], comp),
        after=weight_from_list(data["after"], comp),
    )


def witness_to_dict(w: Witness) -> dict:
    return {
        "class_size": w.class_size,
        "level_index": w.level_index,
        "slot_index": w.slot_index,
        "position": w.position,
        "threshold": w.threshold,
    }


def witness_from_dict(data: dict) -> Witness:
    return Witness(
        class_size=data["class_size"],
        level_index=data["level_index"],
        slot_index=data["slot_index"],
        position=data["position"],
        threshold=data["threshold"],
    )


def decision_to_dict(decision: HomDecision) -> dict:
    return {
        "exists": decision.exists,
        "reason": decision.reason,
        "chain": None
        if decision.chain is None
        else [step_to_dict(s) for s in decision.chain],
        "witness": None
        if decision.witness is None
        else witness_to_dict(decision.witness),
    }


def trace_to_dict(trace: TranslationTrace) -> dict:
    return {
        "target": weight_to_list(trace.target),
        "source": weight_to_list(trace.source),
        "witness": witness_to_dict(trace.witness),
        "stages": [
            {
                "step": st.step,
                "d": st.d,
                "target": weight_to_list(st.target),
                "source": weight_to_list(st.source),
                "direction": st.direction,
                "shift_target": list(st.shift_target),
                "shift_source": list(st.shift_source),
                "level": st.level,
                "condition": st.condition,
                "legal_target": st.legal_target,
                "legal_source": st.legal_source,
            }
            for st in trace.stages
        ],
        "final_target": weight_to_list(trace.final_target),
        "final_source": weight_to_list(trace.final_source),
    }


def trace_to_text(trace: TranslationTrace) -> str:
    """Human-readable rendering: one line per stage, changed blocks listed."""

    def sset(blocks):
        return "{" + ",".join(str(j) for j in blocks) + "}"

    lines = [
        f"witness: threshold c={trace.witness.threshold} at block s={trace.witness.position}",
        f"start        {trace.target}  {trace.source}",
    ]
    for st in trace.stages:
        sign = "-" if st.direction < 0 else "+"
        lines.append(
            f"step {st.step} d={st.d}  {st.target}  {st.source}  "
            f"{sign}{sset(st.shift_target)}/{sign}{sset(st.shift_source)} "
            f"at level {st.level}, condition ({st.condition}) "
            f"{'ok' if st.legal_target and st.legal_source else 'FAILED'}"
        )
    lines.append(f"final        {trace.final_target}  {trace.final_source}")
    return "\n".join(lines)


def hasse_to_dot(edges) -> str:
    """DOT digraph; arrows point from the larger weight down to the smaller."""
    nodes = sorted(
        {e[0] for e in edges} | {e[1] for e in edges}, key=lambda w: w.entries
    )
    lines = ["digraph descent_order {"]
    for node in nodes:
        lines.append(f'  "{node}";')
    for lower, upper in edges:
        lines.append(f'  "{upper}" -> "{lower}";')
    lines.append("}")
    return "\n".join(lines)


def sweep_to_text(report) -> str:
    d = report.to_dict()
    lines = [
        f"sweep over n <= {d['max_n']}, values {d['values']}:",
        f"  compositions      {d['compositions']}",
        f"  orbits            {d['orbits']}",
        f"  elements          {d['elements']}",
        f"  ordered pairs     {d['pairs']}",
        f"  comparable pairs  {d['comparable_pairs']}",
        f"  oracle mismatches {len(d['oracle_mismatches'])}",
        f"  order violations  {len(d['order_violations'])}",
    ]
    if d["checked_chains"]:
        lines.append(f"  chain failures    {len(d['chain_failures'])}")
    if d["checked_witnesses"]:
        lines.append(f"  witness failures  {len(d['witness_failures'])}")
    lines.append(f"  ok                {d['ok']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# dispatch


def run(request: Request) -> str:
    """Execute a parsed request and return the payload for stdout."""
    if request.subcommand == "decide":
        decision = decide_hom(request.source, request.target)
        return json.dumps(decision_to_dict(decision), indent=2)
    if request.subcommand == "factorize":
        chain = factorize(request.source, request.target)
        return json.dumps([step_to_dict(s) for s in chain], indent=2)
    if request.subcommand == "witness":
        wit = find_witness(request.source, request.target)
        return json.dumps(witness_to_dict(wit), indent=2)
    if request.subcommand == "trace":
        wit = find_witness(request.source, request.target)
        trace = degeneration_trace(request.target, request.source, wit)
        if request.fmt == "text":
            return trace_to_text(trace)
        return json.dumps(trace_to_dict(trace), indent=2)
    if request.subcommand == "orbit":
        orbit = enumerate_orbit(request.weight, request.orbit_cap)
        return json.dumps([weight_to_list(w) for w in orbit])
    if request.subcommand == "hasse":
        edges = hasse(request.weight, request.orbit_cap)
        return hasse_to_dot(edges)
    if request.subcommand == "sweep":
        start = time.perf_counter()
        report = run_sweep(
            max_n=request.max_n,
            values=request.values,
            orbit_cap=request.orbit_cap,
            check_chains=request.check_chains,
            check_witnesses=request.check_witnesses,
        )
        elapsed = time.perf_counter() - start
        print(f"sweep finished in {elapsed:.1f}s", file=sys.stderr)
        if request.fmt == "text":
            return sweep_to_text(report)
        return json.dumps(report.to_dict(), indent=2)
    raise AssertionError(request.subcommand)


def _build_parser() -> _Parser:
    parser = _Parser(prog="vermahom", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, weights=("source", "target")):
        p.add_argument("--composition", required=True, help="block sizes, e.g. 4,1,2,1,2,4")
        for name in weights:
            p.add_argument(f"--{name}", required=True, help="block weight, e.g. \"-2,-4,2,3,-1,4\"")
        p.add_argument("--orbit-cap", type=int, default=DEFAULT_ORBIT_CAP)

    p = sub.add_parser("decide", help="decide whether source embeds into target")
    add_common(p)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("factorize", help="chain of elementary steps from target to source")
    add_common(p)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("witness", help="non-comparability witness (threshold, position)")
    add_common(p)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("trace", help="five-round degeneration trace of a refuted pair")
    add_common(p)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("orbit", help="enumerate the block-permutation orbit")
    add_common(p, weights=("weight",))
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("hasse", help="cover relations of the orbit as a DOT digraph")
    add_common(p, weights=("weight",))
    p.add_argument("--format", choices=["dot"], default="dot")

    p = sub.add_parser("sweep", help="exhaustive oracle-equivalence sweep")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--values", default="0,1,2,3", help="entry values, e.g. 0,1,2,3")
    p.add_argument("--orbit-cap", type=int, default=DEFAULT_ORBIT_CAP)
    p.add_argument("--check-chains", action="store_true")
    p.add_argument("--check-witnesses", action="store_true")
    p.add_argument("--format", choices=["json", "text"], default="json")

    return parser


def _build_request(args) -> Request:
    request = Request(subcommand=args.subcommand)
    request.fmt = getattr(args, "format", "json")
    request.orbit_cap = getattr(args, "orbit_cap", DEFAULT_ORBIT_CAP)
    if args.subcommand == "sweep":
        request.max_n = args.max_n
        request.values = _parse_ints(args.values)
        request.check_chains = args.check_chains
        request.check_witnesses = args.check_witnesses
        return request
    comp = Composition(_parse_ints(args.composition))
    request.composition = comp
    for name in ("source", "target", "weight"):
        text = getattr(args, name, None)
        if text is not None:
            setattr(request, name, BlockWeight(comp, _parse_ints(text)))
    return request


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        request = _build_request(args)
    except ValueError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 1
    except VermaHomError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    try:
        payload = run(request)
    except VermaHomError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    print(payload)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
