"""Command-line interface.

Exit codes: 0 success, 1 campaign failures, 2 rank-bound violation,
3 structural/direct mismatch, 64 usage error, 66 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import fileformat, harness
from .cycles import contract, disjoint_cycles, theta, NotDisjointError
from .graph import GainGraph, UndirectedGraph, connected_components
from .optimality import bounds, characterize
from .spectral import UnstableRankError, rank, rank_underlying
from .transform import crucial_subgraph

EX_OK = 0
EX_FAIL = 1
EX_UNSOUND = 2
EX_MISMATCH = 3
EX_USAGE = 64
EX_NOINPUT = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EX_USAGE)


def _label(v: int) -> int:
    return v + 1


def _labels(vs) -> str:
    return " ".join(str(_label(v)) for v in sorted(vs))


def _load(path: str) -> GainGraph:
    try:
        return fileformat.read(path)
    except OSError as exc:
        raise FileNotFoundError(f"{path}: {exc.strerror or exc}") from None
    except fileformat.ParseError as exc:
        raise FileNotFoundError(f"{path}: {exc}") from None


def _yn(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_rank(args) -> int:
    phi = _load(args.file)
    r = rank(phi)
    print(f"r(Phi) {r.rank}")
    print(f"r(G) {rank_underlying(phi)}")
    print(f"method {r.method}")
    print(f"tolerance {'none' if r.tolerance_used is None else format(r.tolerance_used, '.3g')}")
    print(f"stable {_yn(r.stable)}")
    return EX_OK if r.stable else EX_FAIL


def cmd_inertia(args) -> int:
    r = rank(_load(args.file))
    i = r.inertia
    print(f"inertia {i.i_plus} {i.i_minus} {i.i_zero}")
    if not r.stable:
        print("stable false")
        return EX_FAIL
    return EX_OK


def cmd_theta(args) -> int:
    phi = _load(args.file)
    print(f"theta {theta(phi)}")
    print(f"omega {len(connected_components(phi.graph))}")
    return EX_OK


def cmd_cycles(args) -> int:
    dc = disjoint_cycles(_load(args.file))
    if not dc.disjoint:
        if dc.shared_vertex is not None:
            print(f"not-disjoint shared-vertex {_label(dc.shared_vertex)}")
        else:
            print(f"not-disjoint more-than-theta {len(dc.witness)}")
        for w in dc.witness:
            print("witness " + " ".join(str(_label(v)) for v in w))
        return EX_OK
    for c in dc.cycles:
        verts = " ".join(str(_label(v)) for v in c.vertices)
        print(f"cycle {verts}\tgain {c.gain}\ttype {c.cycle_type}\tp_mod_4 {c.parity}")
    return EX_OK


def cmd_check_bounds(args) -> int:
    b = bounds(_load(args.file))
    print(f"r(Phi) {b.r_phi}")
    print(f"r(G) {b.r_g}")
    print(f"theta {b.theta}")
    print(f"lower {b.lower}")
    print(f"upper {b.upper}")
    print(f"lower_optimal {_yn(b.is_lower_optimal)}")
    print(f"upper_optimal {_yn(b.is_upper_optimal)}")
    if not b.in_bounds:
        print("SOUNDNESS VIOLATION", file=sys.stderr)
        return EX_UNSOUND
    return EX_OK


def cmd_check_optimal(args) -> int:
    phi = _load(args.file)
    direct = bounds(phi).optimal(args.direction)
    rep = characterize(phi, args.direction)
    print(f"direction {args.direction}")
    print(f"direct {_yn(direct)}")
    print(f"structural {_yn(rep.verdict)}")
    types = "n/a" if rep.condition_types is None else _yn(rep.condition_types)
    print(f"condition_disjoint {_yn(rep.condition_disjoint)}")
    print(f"condition_types {types}")
    print(f"condition_crucial {_yn(rep.condition_crucial)}")
    if args.explain:
        for e in rep.type_evidence:
            verts = " ".join(str(_label(v)) for v in e.vertices)
            print(f"  cycle {verts}: type {e.cycle_type}, p mod 4 = {e.order_mod_4}, {'ok' if e.ok else 'fails'}")
        print(f"  residual: {rep.residual_description()}")
    return EX_OK if rep.verdict == direct else EX_MISMATCH


def cmd_crucial(args) -> int:
    res = crucial_subgraph(_load(args.file))
    for s in res.steps:
        print(f"delta {s.step_index + 1}: pendant {_label(s.pendant)} neighbor {_label(s.neighbor)}")
    print(f"k {res.k}")
    print(f"residual vertices {_labels(res.residual.vertices)}")
    sys.stdout.write(fileformat.serialize(res.residual))
    return EX_OK


def _graph_text(g: UndirectedGraph) -> str:
    return fileformat.serialize(GainGraph(g))


def cmd_contract(args) -> int:
    phi = _load(args.file)
    try:
        c = contract(phi)
    except NotDisjointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_FAIL
    for t, cyc in sorted(c.origin.items()):
        print(f"t {_label(t)} = cycle " + " ".join(str(_label(v)) for v in cyc.vertices))
    print(f"C_G {_labels(c.cycle_vertices)}")
    print(f"U {_labels(c.outside_vertices)}")
    print(f"T_G vertices {_labels(c.t_graph.vertices)}")
    sys.stdout.write(_graph_text(c.t_graph))
    print(f"Gamma_G vertices {_labels(c.gamma_graph.vertices)}")
    sys.stdout.write(_graph_text(c.gamma_graph))
    return EX_OK


def _qs(text: str) -> tuple[int, ...]:
    try:
        qs = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad denominator list {text!r}") from None
    if not qs or min(qs) < 1:
        raise argparse.ArgumentTypeError("denominators must be positive")
    return qs


def cmd_verify(args) -> int:
    if args.campaign not in harness.CAMPAIGNS:
        raise UsageError(f"unknown campaign {args.campaign!r}; choose from {', '.join(harness.CAMPAIGNS)}")
    scope = harness.Scope(n=args.n, q=args.q, trials=args.trials, seed=args.seed,
                          exhaustive=args.exhaustive, family=args.family, workers=args.workers)
    report = harness.run_campaign(args.campaign, scope)
    for line in report.failure_lines():
        print(line)
    print(f"# {report.summary()}")
    return EX_OK if report.passed else EX_FAIL


def cmd_replay(args) -> int:
    if args.campaign not in harness.CAMPAIGNS:
        raise UsageError(f"unknown campaign {args.campaign!r}")
    try:
        failures = harness.replay(args.campaign, args.instance)
    except fileformat.ParseError as exc:
        raise FileNotFoundError(str(exc)) from None
    for f in failures:
        print("\t".join((args.campaign, f.tag, f.instance, f.expected, f.actual)))
    return EX_FAIL if failures else EX_OK


def cmd_gen_random(args) -> int:
    cfg = harness.GeneratorConfig(n=args.n, edge_probability=args.p, gain_denominator=args.q, seed=args.seed)
    sys.stdout.write(fileformat.serialize(harness.random_gain_graph(cfg)))
    return EX_OK


def _probability(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad probability {text!r}") from None
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError("probability must lie in [0, 1]")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gainrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, help_ in (
        ("rank", cmd_rank, "r(Phi), r(G), method and tolerance"),
        ("inertia", cmd_inertia, "(i+, i-, i0) of A(Phi)"),
        ("theta", cmd_theta, "cycle space dimension and component count"),
        ("cycles", cmd_cycles, "disjoint cycles with gains and Types, or a witness"),
        ("check-bounds", cmd_check_bounds, "rank bounds report (exit 2 on violation)"),
        ("crucial", cmd_crucial, "delta-steps and the crucial subgraph"),
        ("contract", cmd_contract, "T_G and Gamma_G"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.set_defaults(func=fn)

    p = sub.add_parser("check-optimal", help="direct vs structural optimality (exit 3 on mismatch)")
    p.add_argument("file")
    p.add_argument("--direction", choices=("lower", "upper"), required=True)
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_check_optimal)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--q", type=_qs, default=(4,), help="gain denominator(s), comma separated")
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--family", choices=("general", "cyclic"), default="general")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("replay", help="re-run one campaign check on an inline instance")
    p.add_argument("campaign")
    p.add_argument("instance")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("gen-random", help="emit a random gain graph file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_probability, default=Fraction(1, 2))
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gainrank: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"gainrank: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except UnstableRankError as exc:
        print(f"gainrank: {exc}", file=sys.stderr)
        return EX_FAIL


if __name__ == "__main__":
    sys.exit(main())
