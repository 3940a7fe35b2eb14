"""Command-line front end.

Subcommands::

    cauchyprod chi      LOC_Z SCALE_Z LOC_W SCALE_W
    cauchyprod kl       LOC_Z SCALE_Z LOC_W SCALE_W
    cauchyprod affinity LOC_Z SCALE_Z LOC_W SCALE_W
    cauchyprod reduce   LOC_Z SCALE_Z LOC_W SCALE_W
    cauchyprod classify FILE [--n-max N] [--report PATH]
    cauchyprod simulate FILE [--trials T] [--horizon H] [--seed S]
                             [--out PATH] [--embedding {location,scale}]

Exit codes: 0 decided/success, 2 malformed input, 3 inconclusive
classification, 4 resource cap exceeded.  Scalars are printed with 17
significant digits, enough to reparse the exact double.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .dichotomy import (
    VERDICT_INCONCLUSIVE,
    classify,
)
from .divergence import hellinger_affinity, kakutani_term, kl_divergence
from .halfplane import UHPoint, act, chi, reduce_to_canonical
from .montecarlo import (
    DIVERGENCE_THRESHOLD,
    ResourceLimitError,
    TrajectoryBatch,
    simulate_log_ratios,
)
from .seqfile import SequenceFileError, parse_sequence_file

__all__ = ["main", "entrypoint", "EXIT_OK", "EXIT_USAGE", "EXIT_INCONCLUSIVE", "EXIT_RESOURCE"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
EXIT_RESOURCE = 4

DEFAULT_N_MAX = 1 << 16
DEFAULT_TRIALS = 1000
DEFAULT_HORIZON = 10_000
DEFAULT_SEED = 42


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cauchyprod",
        description="Equivalence vs. singularity of infinite products of Cauchy measures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pair_command(name: str, help_text: str):
        cmd = sub.add_parser(name, help=help_text)
        for arg in ("loc_z", "scale_z", "loc_w", "scale_w"):
            cmd.add_argument(arg, type=float)
        return cmd

    add_pair_command("chi", "scale-normalized squared distance of a pair")
    add_pair_command("kl", "Kullback-Leibler divergence of a pair")
    add_pair_command("affinity", "Hellinger affinity of a pair")
    add_pair_command("reduce", "canonical axis form (lam*i, i) and the map reaching it")

    cls = sub.add_parser("classify", help="decide a sequence file: equivalent or singular")
    cls.add_argument("file", type=Path)
    cls.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    cls.add_argument("--report", type=Path, default=None, help="write the JSON report here")

    sim = sub.add_parser("simulate", help="log-ratio trajectories for a sequence file")
    sim.add_argument("file", type=Path)
    sim.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    sim.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    sim.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sim.add_argument("--out", type=Path, default=None, help="write the trajectory CSV here")
    sim.add_argument(
        "--embedding",
        choices=("location", "scale"),
        default=None,
        help="override the file's embedding of chi values into pairs",
    )
    return parser


def _parse_pair(args) -> tuple[UHPoint, UHPoint]:
    values = (args.loc_z, args.scale_z, args.loc_w, args.scale_w)
    if not all(math.isfinite(v) for v in values):
        raise ValueError("pair coordinates must be finite")
    return UHPoint(args.loc_z, args.scale_z), UHPoint(args.loc_w, args.scale_w)


def _print_chain(z: UHPoint, w: UHPoint) -> None:
    t = chi(z, w)
    print(f"kakutani_term = {_fmt(kakutani_term(z, w))}")
    print(f"half_kl = {_fmt(0.5 * kl_divergence(z, w))}")
    print(f"eighth_chi = {_fmt(0.125 * t)}")


def _cmd_chi(args) -> int:
    z, w = _parse_pair(args)
    print(f"chi = {_fmt(chi(z, w))}")
    _print_chain(z, w)
    return EXIT_OK


def _cmd_kl(args) -> int:
    z, w = _parse_pair(args)
    print(f"kl_divergence = {_fmt(kl_divergence(z, w))}")
    _print_chain(z, w)
    return EXIT_OK


def _cmd_affinity(args) -> int:
    z, w = _parse_pair(args)
    print(f"hellinger_affinity = {_fmt(hellinger_affinity(z, w))}")
    _print_chain(z, w)
    return EXIT_OK


def _cmd_reduce(args) -> int:
    z, w = _parse_pair(args)
    form = reduce_to_canonical(z, w)
    m = form.map
    image_z = act(m, z)
    image_w = act(m, w)
    print(f"lambda = {_fmt(form.lam)}")
    for name in ("a", "b", "c", "d"):
        print(f"{name} = {_fmt(getattr(m, name))}")
    print(f"image_z = {_fmt(image_z.location)} {_fmt(image_z.scale)}")
    print(f"image_w = {_fmt(image_w.location)} {_fmt(image_w.scale)}")
    return EXIT_OK


def _load_spec(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None
    try:
        return parse_sequence_file(text)
    except SequenceFileError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None


def _cmd_classify(args) -> int:
    spec = _load_spec(args.file)
    if spec is None:
        return EXIT_USAGE
    try:
        report = classify(spec.to_sequence(), n_max=args.n_max)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"verdict = {report.verdict}")
    print(f"basis = {report.basis}")
    if report.suggestion is not None:
        print(f"suggestion = {report.suggestion}")
    if args.report is not None:
        document = report.to_dict()
        document["sequence"] = {
            "kind": spec.kind,
            "embedding": spec.embedding,
            "tail": spec.tail,
        }
        args.report.write_text(json.dumps(document, indent=2) + "\n")
    if report.verdict == VERDICT_INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _trajectory_csv(batch: TrajectoryBatch) -> str:
    lines = ["trial,checkpoint,log_ratio_sum"]
    for t in range(batch.log_ratio_paths.shape[0]):
        row = batch.log_ratio_paths[t]
        for k, n in enumerate(batch.checkpoints):
            lines.append(f"{t},{n},{float(row[k])!r}")
    s = batch.summary
    lines.append("# summary cauchy-trajectory-summary/1")
    lines.append(f"# seed = {batch.seed}")
    lines.append(f"# trials = {batch.log_ratio_paths.shape[0]}")
    lines.append(f"# horizon = {batch.horizon}")
    lines.append(f"# threshold = {s.threshold!r}")
    lines.append("# checkpoint,median,mean,frac_above,inverse_ratio_mean,inverse_ratio_se")
    for k, n in enumerate(batch.checkpoints):
        lines.append(
            "# "
            + ",".join(
                [
                    str(n),
                    repr(float(s.medians[k])),
                    repr(float(s.means[k])),
                    repr(float(s.frac_above[k])),
                    repr(float(s.inverse_ratio_means[k])),
                    repr(float(s.inverse_ratio_ses[k])),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _cmd_simulate(args) -> int:
    spec = _load_spec(args.file)
    if spec is None:
        return EXIT_USAGE
    embedding = args.embedding if args.embedding is not None else spec.embedding
    try:
        batch = simulate_log_ratios(
            spec.to_sequence(),
            trials=args.trials,
            horizon=args.horizon,
            seed=args.seed,
            threshold=DIVERGENCE_THRESHOLD,
            embedding=embedding,
        )
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _trajectory_csv(batch)
    if args.out is not None:
        args.out.write_text(text)
        final_median = float(batch.summary.medians[-1])
        print(f"wrote {args.out} ({batch.log_ratio_paths.shape[0]} trials)")
        print(f"final_median = {_fmt(final_median)}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


_COMMANDS = {
    "chi": _cmd_chi,
    "kl": _cmd_kl,
    "affinity": _cmd_affinity,
    "reduce": _cmd_reduce,
    "classify": _cmd_classify,
    "simulate": _cmd_simulate,
}


def main(argv=None) -> int:
    """Run one command; returns the exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help.
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())
