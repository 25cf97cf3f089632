"""
``walk`` command-line front end.

Subcommands: ``classical``, ``quantum``, ``mixing``, ``verify``.
Exit codes: 0 success, 1 usage error, 2 graph-spec/validation error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import classical, mixing, quantum, verification
from .classical import GeneratorConvention
from .errors import CayleyWalkError
from .graphs import Graph, GraphSpec, build
from .quantum import HamiltonianConvention

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SPEC = 2
EXIT_VERIFY = 3

CLASSICAL_CONVENTIONS = {
    "laplacian": GeneratorConvention.COMBINATORIAL_LAPLACIAN,
    "normalized": GeneratorConvention.NORMALIZED_LAPLACIAN,
    "product-normalized": GeneratorConvention.PRODUCT_NORMALIZED,
}
QUANTUM_CONVENTIONS = {
    "adjacency": HamiltonianConvention.ADJACENCY,
    "normalized": HamiltonianConvention.NORMALIZED_ADJACENCY,
    "product-averaged": HamiltonianConvention.PRODUCT_AVERAGED,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    graph: Optional[str] = None
    convention: Optional[str] = None
    t_min: float = 0.0
    t_max: float = 10.0
    steps: int = 100
    start: int = 0
    epsilon: float = 1e-6
    fmt: str = "csv"
    output: Optional[str] = None
    amplitudes: bool = False
    only: Optional[list[str]] = None
    tolerance: float = 1e-9

    def check(self) -> None:
        if self.t_min > self.t_max:
            raise UsageError(f"--t-min ({self.t_min}) must not exceed --t-max ({self.t_max})")
        if self.steps < 1:
            raise UsageError(f"--steps must be >= 1, got {self.steps}")

    def times(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.steps)


def fmt_float(x: float) -> str:
    """Shortest round-trip decimal form."""
    return repr(float(x))


def load_graph(source: str) -> Graph:
    """Parse ``--graph``: inline JSON, or ``@path`` to a JSON file."""
    if source.startswith("@"):
        try:
            text = Path(source[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read graph file {source[1:]!r}: {exc}") from exc
    else:
        text = source
    return build(GraphSpec.from_json(text))


def _start_vertex(cfg: RunConfig, g: Graph) -> int:
    if not 0 <= cfg.start < g.vertex_count:
        raise UsageError(f"--start {cfg.start} out of range for graph on {g.vertex_count} vertices")
    return cfg.start


def _convention(cfg: RunConfig, table: dict, default: str):
    name = cfg.convention or default
    if name not in table:
        raise UsageError(f"convention {name!r} not valid for {cfg.command}; choose from {sorted(table)}")
    return table[name]


def classical_table(cfg: RunConfig) -> tuple[list[str], list[list[float]]]:
    g = load_graph(cfg.graph)
    conv = _convention(cfg, CLASSICAL_CONVENTIONS, "product-normalized")
    p0 = classical.point_mass(g.vertex_count, _start_vertex(cfg, g))
    h = classical.spectral(classical.generator(g, conv))
    times = cfg.times()
    probs = classical.trajectory(h, p0, times)
    tv = mixing.tv_to_uniform(probs)
    header = ["t"] + [f"P{j}" for j in range(g.vertex_count)] + ["tv_to_uniform"]
    rows = np.column_stack([times, probs, tv]).tolist()
    return header, rows


def quantum_table(cfg: RunConfig) -> tuple[list[str], list[list[float]]]:
    g = load_graph(cfg.graph)
    conv = _convention(cfg, QUANTUM_CONVENTIONS, "product-averaged")
    psi0 = quantum.basis_state(g.vertex_count, _start_vertex(cfg, g))
    h = quantum.spectral(quantum.hamiltonian(g, conv))
    times = cfg.times()
    amps = quantum.amplitude_trajectory(h, psi0, times)
    probs = quantum.measure(amps)
    tv = mixing.tv_to_uniform(probs)
    n = g.vertex_count
    header = ["t"] + [f"P{j}" for j in range(n)] + ["tv_to_uniform"]
    cols = [times, probs, tv]
    if cfg.amplitudes:
        header += [f"Re{j}" for j in range(n)] + [f"Im{j}" for j in range(n)]
        cols += [amps.real, amps.imag]
    return header, np.column_stack(cols).tolist()


def render_table(header: Sequence[str], rows: Sequence[Sequence[float]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"columns": list(header), "rows": [[float(x) for x in r] for r in rows]}) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt_float(x) for x in r])
    return buf.getvalue()


def mixing_report(cfg: RunConfig) -> dict:
    g = load_graph(cfg.graph)
    conv = _convention(cfg, QUANTUM_CONVENTIONS, "product-averaged")
    psi0 = quantum.basis_state(g.vertex_count, _start_vertex(cfg, g))
    h = quantum.spectral(quantum.hamiltonian(g, conv))
    if cfg.t_max <= 0:
        raise UsageError("--t-max must be positive for mixing")
    report = mixing.instantaneous_mixing_search(h, psi0, cfg.t_max, max(cfg.steps, 16), cfg.epsilon)
    avg, uniform = mixing.average_mixing_check(h, psi0)
    out = {"graph": g.spec.to_dict(), "vertices": g.vertex_count, "convention": conv.value}
    out.update(report.to_dict())
    out["average"] = {"distribution": avg.tolist(), "uniform": uniform,
                      "tv_to_uniform": float(mixing.tv_to_uniform(avg))}
    return out


def verify_lines(cfg: RunConfig) -> tuple[list[str], bool]:
    try:
        checks = verification.run_suite(cfg.only)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    lines = []
    ok = True
    for c in checks:
        passed = c.passed(cfg.tolerance)
        ok &= passed
        lines.append(f"{c.name}\t{c.max_error:.3e}\t{'PASS' if passed else 'FAIL'}")
    lines.append(f"{sum(c.passed(cfg.tolerance) for c in checks)}/{len(checks)} checks passed "
                 f"at tolerance {cfg.tolerance:g}")
    return lines, ok


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="walk", description="Continuous-time classical and quantum walks on product Cayley graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, t_max: float, steps: int):
        p.add_argument("--graph", required=True, help="graph spec as inline JSON or @file")
        p.add_argument("--convention", help="generator / Hamiltonian convention")
        p.add_argument("--t-min", type=float, default=0.0)
        p.add_argument("--t-max", type=float, default=t_max)
        p.add_argument("--steps", type=int, default=steps)
        p.add_argument("--start", type=int, default=0, help="initial vertex (default 0)")
        p.add_argument("--output", help="write here instead of stdout")

    for name in ("classical", "quantum"):
        p = sub.add_parser(name, help=f"time sweep of the {name} walk")
        common(p, 10.0, 100)
        p.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")
        if name == "quantum":
            p.add_argument("--amplitudes", action="store_true", help="add Re/Im amplitude columns")

    p = sub.add_parser("mixing", help="instantaneous and average uniform-mixing analysis (JSON)")
    common(p, 200.0, 20000)
    p.add_argument("--epsilon", type=float, default=1e-6)
    p.add_argument("--format", choices=("json",), default="json", dest="fmt")

    p = sub.add_parser("verify", help="closed-form, factorization and hygiene checks")
    p.add_argument("--only", action="append", choices=sorted(verification.SUITES),
                   help="restrict to a suite (repeatable)")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--output")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, **{k: v for k, v in vars(args).items()
                                               if k != "command" and v is not None})
    try:
        cfg.check()
        if cfg.command == "classical":
            _emit(render_table(*classical_table(cfg), cfg.fmt), cfg)
        elif cfg.command == "quantum":
            _emit(render_table(*quantum_table(cfg), cfg.fmt), cfg)
        elif cfg.command == "mixing":
            _emit(json.dumps(mixing_report(cfg), indent=2) + "\n", cfg)
        else:
            lines, ok = verify_lines(cfg)
            _emit("\n".join(lines) + "\n", cfg)
            return EXIT_OK if ok else EXIT_VERIFY
    except UsageError as exc:
        print(f"walk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CayleyWalkError as exc:
        print(f"walk: invalid input: {exc}", file=sys.stderr)
        return EXIT_SPEC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
