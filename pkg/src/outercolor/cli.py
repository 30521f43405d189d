"""Command-line front end.

Exit codes: 0 success, 1 input error, 10 infeasible, 11 verification
failure, 20 outside the covered hypotheses, 30 solver/oracle divergence.
"""

from __future__ import annotations

import argparse
import itertools
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import InfeasibleSpec, OutercolorError, ParseError, PreconditionViolated, ValidationError
from .extend import INFEASIBLE, NOT_COVERED, SUCCESS, ExtensionInstance, extend, extend_connected
from .fileio import GraphFile, format_certificate, parse, parse_certificate, reproducer
from .graph import OuterplaneGraph, detect_structures
from .instances import DEFAULT_CAP, EnumerationSpec, enumerate_instances, random_instance
from .oracle import EdgeListGraph, check_coloring, count_extensions

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 10
EXIT_VERIFY = 11
EXIT_NOT_COVERED = 20
EXIT_DIVERGENCE = 30


class _InputError(Exception):
    pass


def _read(path: str, fmt: Optional[str]) -> GraphFile:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise _InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        gf = parse(text)
    except (ParseError, ValidationError) as e:
        raise _InputError(f"{type(e).__name__}: {e}") from None
    if fmt and gf.fmt != fmt:
        raise _InputError(f"expected {fmt} format, file is {gf.fmt}")
    return gf


def _need_biconnected(gf: GraphFile) -> OuterplaneGraph:
    if gf.graph is None:
        raise _InputError("graph is connected but not biconnected; no Hamiltonian outer cycle")
    return gf.graph


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    gf = _read(args.file, args.format)
    if gf.graph is None:
        c = gf.connected
        _emit(f"valid connected n={len(c.order)} edges={len(c.edges)} precolored={len(gf.precolored)}\n", args.out)
        return EXIT_OK
    g = gf.graph
    _emit(f"valid n={g.n} chords={len(g.chords)} triangles={g.triangle_count} "
          f"precolored={len(gf.precolored)}\n", args.out)
    return EXIT_OK


def cmd_faces(args) -> int:
    g = _need_biconnected(_read(args.file, args.format))
    lines = [f"face {' '.join(map(str, f.vertices))}" for f in g.faces]
    lines += [f"triangle {' '.join(map(str, t.face.vertices))} {t.cls} outer-edges {t.outer_edge_count}"
              for t in g.triangles]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_structures(args) -> int:
    g = _need_biconnected(_read(args.file, args.format))
    rep = detect_structures(g)
    j = lambda vs: " ".join(map(str, vs))
    lines = [f"triangle {j(t.face.vertices)} {t.cls}" for t in rep.triangles]
    lines += [f"diamond shared {j(d.shared_edge)} apexes {j(d.diamond_vertices)}" for d in rep.diamonds]
    lines += [f"cake triangles {j(c.triangles[0].vertices)} / {j(c.triangles[1].vertices)} "
              f"common {c.common_vertex} face {j(c.face.vertices)}" for c in rep.cakes]
    lines += [f"hamburger marginal {j(h.marginal.vertices)} other {j(h.other.vertices)} "
              f"face {j(h.face.vertices)}" for h in rep.hamburgers]
    _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return EXIT_OK


def _outcome_code(outcome: str) -> int:
    return {SUCCESS: EXIT_OK, INFEASIBLE: EXIT_INFEASIBLE, NOT_COVERED: EXIT_NOT_COVERED}[outcome]


def cmd_extend(args) -> int:
    gf = _read(args.file, args.format)
    try:
        if gf.graph is not None:
            res = extend(ExtensionInstance(gf.graph, gf.precolored))
        else:
            res = extend_connected(gf.connected, gf.precolored)
    except PreconditionViolated as e:
        print(f"not-covered: {e}", file=sys.stderr)
        return EXIT_NOT_COVERED
    trace = [f"outcome {res.outcome}"] + list(res.certificate)
    if res.witness:
        trace.append(f"witness {res.witness}")
    if res.diagnostic:
        trace.append(f"diagnostic {res.diagnostic}")
    _emit(format_certificate(res.coloring, trace), args.out)
    if res.outcome == INFEASIBLE:
        print(f"infeasible: {res.witness}", file=sys.stderr)
    elif res.outcome == NOT_COVERED:
        print(f"not-covered: {res.diagnostic}", file=sys.stderr)
    return _outcome_code(res.outcome)


def cmd_verify(args) -> int:
    gf = _read(args.file, args.format)
    try:
        col = parse_certificate(Path(args.certificate).read_text())
    except OSError as e:
        raise _InputError(f"cannot read {args.certificate}: {e.strerror}") from None
    except ParseError as e:
        raise _InputError(f"ParseError: {e}") from None
    graph = gf.graph if gf.graph is not None else EdgeListGraph(gf.connected.vertices, gf.connected.edges)
    bad = check_coloring(graph, col, gf.precolored)
    if bad is not None:
        print(f"invalid: {bad}", file=sys.stderr)
        return EXIT_VERIFY
    print("ok")
    return EXIT_OK


# ---------------------------------------------------------------- batch drivers

@dataclass
class CaseReport:
    index: int
    outcome: str
    fallback: bool = False
    counterexample: bool = False
    divergence: Optional[str] = None
    reproducer: Optional[str] = None
    name: str = ""


@dataclass
class Summary:
    instances: int = 0
    successes: int = 0
    infeasible: int = 0
    not_covered: int = 0
    fallbacks: int = 0
    counterexamples: int = 0
    divergences: int = 0
    archived: list[str] = field(default_factory=list)

    def add(self, r: CaseReport):
        self.instances += 1
        self.successes += r.outcome == SUCCESS
        self.infeasible += r.outcome == INFEASIBLE
        self.not_covered += r.outcome == NOT_COVERED
        self.fallbacks += r.fallback
        self.counterexamples += r.counterexample
        self.divergences += r.divergence is not None

    def line(self) -> str:
        return (f"instances {self.instances} successes {self.successes} infeasible {self.infeasible} "
                f"not-covered {self.not_covered} oracle-fallbacks {self.fallbacks} "
                f"counterexample-candidates {self.counterexamples} divergences {self.divergences}")


def check_case(index: int, g: OuterplaneGraph, pre: dict[int, int]) -> CaseReport:
    """Run the solver on one instance and compare it with the oracle."""
    try:
        res = extend(ExtensionInstance(g, pre))
    except PreconditionViolated as e:
        return CaseReport(index, NOT_COVERED, divergence=None, name=str(e))
    rep = CaseReport(index, res.outcome, res.fallback, res.counterexample)
    feasible = count_extensions(g, pre) > 0
    notes = [f"outcome {res.outcome}"] + res.certificate
    if res.outcome == SUCCESS:
        bad = check_coloring(g, res.coloring, pre)
        if bad is not None:
            rep.divergence = f"unsound success: {bad}"
    elif res.outcome == INFEASIBLE and feasible:
        rep.divergence = "infeasible reported but oracle finds an extension"
    if rep.divergence or res.fallback or res.counterexample:
        kind = "divergence" if rep.divergence else ("counterexample" if res.counterexample else "fallback")
        rep.name = f"{kind}-n{g.n}-{index:06d}.txt"
        rep.reproducer = reproducer(g, pre, ([rep.divergence] if rep.divergence else []) + notes)
    return rep


def _run_cases(cases, jobs: int):
    if jobs <= 1:
        return [check_case(i, g, p) for i, (g, p) in enumerate(cases)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(check_case, range(len(cases)), *zip(*cases), chunksize=64))


def _finish_batch(args, reports) -> int:
    summary = Summary()
    archive = Path(args.out) if args.out else None
    first_div = None
    for r in sorted(reports, key=lambda r: r.index):
        summary.add(r)
        if r.reproducer is None:
            continue
        if r.divergence and first_div is None:
            first_div = r
        if archive is not None or r.divergence:
            d = archive or Path("reproducers")
            d.mkdir(parents=True, exist_ok=True)
            (d / r.name).write_text(r.reproducer)
            summary.archived.append(str(d / r.name))
    print(f"seed {args.seed}")
    print(summary.line())
    if first_div is not None:
        print(f"divergence: {first_div.divergence} (reproducer {first_div.name})", file=sys.stderr)
        return EXIT_DIVERGENCE
    return EXIT_OK


def random_precoloring(g: OuterplaneGraph, k: int, rng: random.Random) -> Optional[dict[int, int]]:
    verts = list(g.vertices)
    for _ in range(200):
        pick = sorted(rng.sample(verts, k))
        if all(not g.adjacent(a, b) for a, b in itertools.combinations(pick, 2)):
            return {v: rng.choice((1, 2, 3)) for v in pick}
    return None


def fuzz_cases(n: int, triangles: int, seed: int, iters: int):
    rng = random.Random(seed)
    cases = []
    for _ in range(iters):
        g = random_instance(n, triangles, seed=rng.randrange(2 ** 32))
        k = 3 if triangles == 1 or (triangles == 0 and rng.random() < 0.5) else 2
        pre = random_precoloring(g, k, rng)
        if pre is not None:
            cases.append((g, pre))
    return cases


def cmd_fuzz(args) -> int:
    if args.n is None or args.triangles is None:
        raise _InputError("fuzz needs --n and --triangles")
    try:
        cases = fuzz_cases(args.n, args.triangles, args.seed, args.iters)
    except InfeasibleSpec as e:
        raise _InputError(str(e)) from None
    return _finish_batch(args, _run_cases(cases, args.jobs))


def enumerate_cases(n_max: int, triangles: int, diamond_violations: bool = False, n_min: int = 3):
    """All canonical instances with the given triangle count and every independent
    precolored set the extension statements cover, with every color assignment."""
    ks = (3,) if triangles == 1 else (2,) if triangles == 2 else (2, 3)
    cases = []
    for n in range(n_min, n_max + 1):
        for g in enumerate_instances(EnumerationSpec(n, triangles)):
            apex_pairs = {tuple(sorted(d.diamond_vertices)) for d in detect_structures(g).diamonds}
            for k in ks:
                for sub in itertools.combinations(g.vertices, k):
                    if any(g.adjacent(a, b) for a, b in itertools.combinations(sub, 2)):
                        continue
                    for cs in itertools.product((1, 2, 3), repeat=k):
                        if diamond_violations and not (k == 2 and sub in apex_pairs and cs[0] != cs[1]):
                            continue
                        cases.append((g, dict(zip(sub, cs))))
    return cases


def cmd_enumerate(args) -> int:
    if args.n_max is None or args.triangles is None:
        raise _InputError("enumerate needs --n-max and --triangles")
    if not 3 <= args.n_max <= DEFAULT_CAP:
        raise _InputError(f"--n-max must lie in 3..{DEFAULT_CAP}")
    cases = enumerate_cases(args.n_max, args.triangles, args.diamond_violations)
    return _finish_batch(args, _run_cases(cases, args.jobs))


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="outercolor", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="output file (or archive directory for batch commands)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", choices=("outerplane", "edges"))
        return sp

    for name, fn in (("validate", cmd_validate), ("faces", cmd_faces),
                     ("structures", cmd_structures), ("extend", cmd_extend)):
        sp = common(sub.add_parser(name))
        sp.add_argument("file")
        sp.set_defaults(fn=fn)
    sp = common(sub.add_parser("verify"))
    sp.add_argument("file")
    sp.add_argument("certificate")
    sp.set_defaults(fn=cmd_verify)

    sp = common(sub.add_parser("fuzz"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--triangles", type=int)
    sp.add_argument("--iters", type=int, default=100)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(fn=cmd_fuzz)

    sp = common(sub.add_parser("enumerate"))
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--triangles", type=int)
    sp.add_argument("--diamond-violations", action="store_true",
                    help="only precolor diamond apex pairs with different colors")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(fn=cmd_enumerate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command not in ("fuzz", "enumerate"):
        print(f"seed {args.seed}", file=sys.stderr)
    try:
        return args.fn(args)
    except _InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OutercolorError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
