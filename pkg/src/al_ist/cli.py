"""Command-line front door for batch computations.

One job per process invocation.  Subcommands:

  solve       certified window solve; CSV table n, re, im, budget
  reference   RK4 lattice snapshot; sequence JSON
  compare     solver vs reference, per-site deviation table and verdict
  nlft        transfer-matrix product (a, b) plus identity residuals; JSON
  multiplier  scattering-multiplier bundle and bound checks; JSON
              (the polynomial order is read from --n0)
  bench       NLFT product wall-clock vs window size; CSV plus fitted
              exponent on stdout (timings are inherently nondeterministic,
              so bench output is exempt from the byte-identical guarantee)

Exit codes: 0 success, 1 compare found deviations beyond the allowance,
2 validation error, 3 numerical guard tripped.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .datagen import dense_random_sequence
from .errors import NumericalGuardError, ValidationError
from .laurent import CircleGrid, lp_eval_grid
from .nlft import identity_grid, nlft_forward, szego_identity_check
from .reference import rk4_integrate
from .sequence import Sequence
from .seqio import csv_table, fmt, json_text, laurent_to_doc, read_sequence, sequence_to_text
from .solver import solve_window_detailed
from .multiplier import g_bundle, p_poly

COMMANDS = ("solve", "reference", "compare", "nlft", "multiplier", "bench")
BENCH_SIZES = (256, 1024, 4096)


@dataclass(frozen=True)
class JobSpec:
    """Validated job description; numeric ranges are checked on construction
    and command-specific requirements in run()."""

    command: str
    input_path: str | None = None
    output_path: str | None = None
    t: float | None = None
    n0: int = 0
    eps: float | None = None
    eta: float | None = None
    h: float = 1e-3
    radius: int | None = None
    grid: int | None = None
    seed: int = 0
    boundary: str = "zero"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.t is not None and not math.isfinite(self.t):
            raise ValidationError("t must be finite")
        if self.eps is not None and not 0.0 < self.eps < 1.0:
            raise ValidationError("eps must lie in (0, 1)")
        if self.eta is not None and not 0.0 < self.eta <= 1.0:
            raise ValidationError("eta must lie in (0, 1]")
        if not (math.isfinite(self.h) and self.h > 0.0):
            raise ValidationError("h must be positive")
        if self.radius is not None and self.radius < 1:
            raise ValidationError("radius must be a positive integer")
        if self.grid is not None and self.grid < 2:
            raise ValidationError("grid size must be at least 2")
        if self.seed < 0:
            raise ValidationError("seed must be nonnegative")
        if self.boundary not in ("zero", "periodic"):
            raise ValidationError('boundary must be "zero" or "periodic"')


def _require(ok: bool, message: str):
    if not ok:
        raise ValidationError(message)


def _emit(job: JobSpec, text: str):
    if job.output_path is None:
        sys.stdout.write(text)
    else:
        with open(job.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _input_sequence(job: JobSpec) -> Sequence:
    _require(job.input_path is not None, f"{job.command} needs --in")
    return read_sequence(job.input_path)


def _run_solve(job: JobSpec) -> int:
    _require(job.t is not None, "solve needs --t")
    _require(job.eps is not None, "solve needs --eps")
    datum = _input_sequence(job)
    window, budgets, _ = solve_window_detailed(datum, job.t, job.n0, job.eps, job.eta)
    rows = [
        [window.offset + i, float(v.real), float(v.imag), float(b)]
        for i, (v, b) in enumerate(zip(window.values, budgets))
    ]
    _emit(job, csv_table(["n", "re", "im", "budget"], rows))
    return 0


def _run_reference(job: JobSpec) -> int:
    _require(job.t is not None, "reference needs --t")
    datum = _input_sequence(job)
    state = rk4_integrate(datum, job.t, job.h, job.radius, job.boundary)
    _emit(job, sequence_to_text(state.q))
    return 0


def _run_compare(job: JobSpec) -> int:
    _require(job.t is not None, "compare needs --t")
    _require(job.eps is not None, "compare needs --eps")
    datum = _input_sequence(job)

    def reference_pair():
        coarse = rk4_integrate(datum, job.t, job.h, job.radius, job.boundary)
        fine = rk4_integrate(datum, job.t, job.h / 2.0, job.radius, job.boundary)
        return coarse, fine

    with ThreadPoolExecutor(max_workers=2) as pool:
        solve_future = pool.submit(
            solve_window_detailed, datum, job.t, job.n0, job.eps, job.eta
        )
        reference_future = pool.submit(reference_pair)
        window, budgets, _ = solve_future.result()
        coarse, fine = reference_future.result()

    rows = []
    failures = 0
    for i, value in enumerate(window.values):
        n = window.offset + i
        ref = fine.q.at(n)
        # Richardson estimate for the fourth-order reference, plus a roundoff
        # floor; the certified budget covers the solver side.
        ref_error = abs(coarse.q.at(n) - ref) / 15.0 + 1e-12
        deviation = abs(value - ref)
        allowance = job.eps + ref_error
        ok = deviation <= allowance
        failures += 0 if ok else 1
        rows.append(
            [
                n,
                float(value.real),
                float(value.imag),
                float(ref.real),
                float(ref.imag),
                float(deviation),
                float(allowance),
                "pass" if ok else "fail",
            ]
        )
    header = ["n", "re", "im", "ref_re", "ref_im", "deviation", "allowance", "verdict"]
    _emit(job, csv_table(header, rows))
    return 1 if failures else 0


def _run_nlft(job: JobSpec) -> int:
    datum = _input_sequence(job)
    m = nlft_forward(datum).validate()
    grid = CircleGrid(job.grid) if job.grid is not None else identity_grid(datum)
    szego_lhs, szego_rhs, _ = szego_identity_check(datum, grid)
    doc = {
        "a": laurent_to_doc(m.a),
        "b": laurent_to_doc(m.b),
        "a_at_zero": float(m.a_at_zero().real),
        "unitarity_residual": m.unitarity_residual(grid),
        "szego_identity": {"lhs": szego_lhs, "rhs": szego_rhs, "residual": abs(szego_lhs - szego_rhs)},
        "grid": grid.size,
    }
    _emit(job, json_text(doc))
    return 0


def _run_multiplier(job: JobSpec) -> int:
    _require(job.t is not None, "multiplier needs --t")
    _require(job.n0 >= 1, "multiplier needs a positive order in --n0")
    order = job.n0
    bundle = g_bundle(order, job.t)
    size = job.grid if job.grid is not None else max(64, 1 << (4 * order - 1).bit_length())
    grid = CircleGrid(size)
    phase = np.exp(1j * job.t * (grid.nodes + 1.0 / grid.nodes))
    p_error = float(np.max(np.abs(lp_eval_grid(p_poly(order, job.t), grid) - phase)))
    g_peak = float(np.max(np.abs(lp_eval_grid(bundle.g, grid))))
    doc = {
        "n": order,
        "t": job.t,
        "delta": bundle.delta,
        "p_error_max": p_error,
        "g_peak": g_peak,
        "checks": {
            "p_within_delta": p_error <= bundle.delta,
            "g_inside_disk": g_peak < 1.0,
        },
        "grid": size,
        "g": laurent_to_doc(bundle.g),
    }
    _emit(job, json_text(doc))
    return 0


def _run_bench(job: JobSpec) -> int:
    rows = []
    logs = []
    for size in BENCH_SIZES:
        datum = dense_random_sequence(job.seed + size, 0, size, 0.5)
        best = math.inf
        for _ in range(3):
            start = time.perf_counter()
            nlft_forward(datum)
            best = min(best, time.perf_counter() - start)
        rows.append([size, size, best])
        logs.append((math.log(size), math.log(best)))
    slope = np.polyfit([x for x, _ in logs], [y for _, y in logs], 1)[0]
    _emit(job, csv_table(["N", "sites", "seconds"], rows))
    sys.stdout.write(f"fitted exponent: {fmt(float(slope))}\n")
    return 0


_DISPATCH = {
    "solve": _run_solve,
    "reference": _run_reference,
    "compare": _run_compare,
    "nlft": _run_nlft,
    "multiplier": _run_multiplier,
    "bench": _run_bench,
}


def run(job: JobSpec) -> int:
    """Execute one job; returns the process exit status."""
    try:
        return _DISPATCH[job.command](job)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except NumericalGuardError as exc:
        print(f"numerical guard tripped: {exc}", file=sys.stderr)
        return 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="al-ist",
        description="Defocusing Ablowitz-Ladik lattice solver via the nonlinear Fourier transform.",
    )
    parser.add_argument("--cmd", required=True, choices=COMMANDS, help="subcommand to run")
    parser.add_argument("--in", dest="input_path", help="input sequence file")
    parser.add_argument("--out", dest="output_path", help="output file (default: stdout)")
    parser.add_argument("--t", type=float, help="evolution time")
    parser.add_argument("--n0", type=int, default=0, help="center site (multiplier: polynomial order)")
    parser.add_argument("--eps", type=float, help="certified accuracy target")
    parser.add_argument("--eta", type=float, help="Szego-product lower bound override")
    parser.add_argument("--h", type=float, default=1e-3, help="reference integrator step")
    parser.add_argument("--radius", type=int, help="reference lattice truncation radius")
    parser.add_argument("--grid", type=int, help="evaluation grid size")
    parser.add_argument("--seed", type=int, default=0, help="bench datum seed")
    parser.add_argument("--boundary", choices=("zero", "periodic"), default="zero")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = JobSpec(
            command=args.cmd,
            input_path=args.input_path,
            output_path=args.output_path,
            t=args.t,
            n0=args.n0,
            eps=args.eps,
            eta=args.eta,
            h=args.h,
            radius=args.radius,
            grid=args.grid,
            seed=args.seed,
            boundary=args.boundary,
        )
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
