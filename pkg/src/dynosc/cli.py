"""Command-line front end.

    dynosc verify  [--preset NAME | --config PATH] [--appendix-b-denominator ...]
                   [--tau-convention ...]
    dynosc evolve  (--preset NAME | --config PATH) --out DIR
    dynosc moments (--preset NAME | --config PATH) [--check]

Exit codes: 0 all checks pass / files written, 1 check failure, 2 config
error, 3 I/O error.  Frame CSVs carry the header x,density,re_psi,im_psi
(p,density,re_a,im_a for momentum frames), LF line endings, and floats as
shortest round-trip decimals, so identical configs produce byte-identical
output.  Each evolve run writes a manifest.json listing every written file
with its sha256.
"""

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .config import PRESET_NAMES, load_config, preset_config
from .errors import ConfigError
from .flows import BETA0_QUARTIC, BETA0_SQUARED, MomentSet, classical_moments
from .oracle import MINUS_GAMMA, MINUS_TWO_GAMMA, dft_momentum, quadrature_moment
from .states import MOMENTUM, POSITION, StateSpec, sample_frame, uniform_grid
from .verification import run_acceptance, scoped_checks

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3


def _fmt(value):
    """Shortest round-trip decimal of a 64-bit float."""
    return repr(float(value))


def _resolve_config(args):
    if args.config and args.preset:
        raise ConfigError("give either --config or --preset, not both")
    if args.config:
        return load_config(args.config)
    if args.preset:
        return preset_config(args.preset)
    return None


def _add_source_options(parser):
    parser.add_argument("--config", metavar="PATH",
                        help="JSON run configuration")
    parser.add_argument("--preset", choices=PRESET_NAMES,
                        help="built-in run configuration")


@dataclass(frozen=True)
class FramePacket:
    """One exported frame: index, time, named columns, closed-form moments."""

    frame_index: int
    t: float
    columns: dict
    moments: MomentSet

    def __post_init__(self):
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) != 1:
            raise ValueError("all columns must have equal length")


def build_packet(config, index, t, representation):
    spec = StateSpec(config.params, config.n)
    grid = uniform_grid(config.grid.x_min, config.grid.x_max,
                        config.grid.points)
    frame = sample_frame(spec, representation, grid, t)
    if representation == POSITION:
        names = ("x", "density", "re_psi", "im_psi")
    else:
        names = ("p", "density", "re_a", "im_a")
    columns = dict(zip(names, (frame.grid, frame.density(),
                               frame.amplitudes.real, frame.amplitudes.imag)))
    moments = classical_moments(config.params, config.n, t)
    return FramePacket(index, float(t), columns, moments)


def cmd_verify(args):
    try:
        config = _resolve_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if config is not None:
        groups = {"scoped checks": scoped_checks(
            config, args.appendix_b_denominator, args.tau_convention)}
    else:
        groups = run_acceptance(args.appendix_b_denominator,
                                args.tau_convention)
    failures = 0
    for label, results in groups.items():
        print(f"== {label} ==")
        for result in results:
            print(result.line())
            failures += 0 if result.passed else 1
    print(f"{'ALL CHECKS PASS' if failures == 0 else f'{failures} CHECK(S) FAILED'}")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


def _frame_rows(packet):
    rows = [",".join(packet.columns)]
    for values in zip(*packet.columns.values()):
        rows.append(",".join(_fmt(v) for v in values))
    return "\n".join(rows) + "\n"


def _moment_rows(config, check=False):
    header = "t,mean_x,mean_p,var_x,var_p,product,energy"
    if check:
        header += ",err_mean_x,err_mean_p,err_var_x,err_var_p"
    rows = [header]
    spec = StateSpec(config.params, config.n)
    grid = uniform_grid(config.grid.x_min, config.grid.x_max, config.grid.points)
    for t in config.time.times():
        m = classical_moments(config.params, config.n, t)
        row = [t, m.mean_x, m.mean_p, m.var_x, m.var_p, m.product, m.energy]
        if check:
            pos = sample_frame(spec, POSITION, grid, t)
            mom = dft_momentum(pos)
            qx = quadrature_moment(pos, 1)
            qp = quadrature_moment(mom, 1)
            qvx = quadrature_moment(pos, 2) - qx * qx
            qvp = quadrature_moment(mom, 2) - qp * qp
            row += [abs(qx - m.mean_x) / max(1.0, abs(m.mean_x)),
                    abs(qp - m.mean_p) / max(1.0, abs(m.mean_p)),
                    abs(qvx - m.var_x) / max(1.0, abs(m.var_x)),
                    abs(qvp - m.var_p) / max(1.0, abs(m.var_p))]
        rows.append(",".join(_fmt(v) for v in row))
    return "\n".join(rows) + "\n"


def cmd_moments(args):
    try:
        config = _resolve_config(args)
        if config is None:
            raise ConfigError("moments needs --config or --preset")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    sys.stdout.write(_moment_rows(config, check=args.check))
    return EXIT_OK


def _write(path, text):
    data = text.encode("utf-8")
    path.write_bytes(data)
    return hashlib.sha256(data).hexdigest()


def cmd_evolve(args):
    try:
        config = _resolve_config(args)
        if config is None:
            raise ConfigError("evolve needs --config or --preset")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        probe = out_dir / ".write_probe"
        probe.write_bytes(b"")
        probe.unlink()
    except OSError as exc:
        print(f"output directory not writable: {exc}", file=sys.stderr)
        return EXIT_IO
    want_position = ("position_density" in config.outputs
                     or "wavefunction" in config.outputs)
    want_momentum = "momentum_density" in config.outputs
    manifest = {"schema_version": 1, "config_echo": config.to_dict(),
                "frames": []}
    try:
        for index, t in enumerate(config.time.times(), start=1):
            emitted = []
            if want_position:
                emitted.append((f"position_{index:04d}.csv",
                                build_packet(config, index, t, POSITION)))
            if want_momentum:
                emitted.append((f"momentum_{index:04d}.csv",
                                build_packet(config, index, t, MOMENTUM)))
            for name, packet in emitted:
                digest = _write(out_dir / name, _frame_rows(packet))
                manifest["frames"].append(
                    {"index": index, "t": t, "file": name, "sha256": digest})
        if "moments" in config.outputs:
            digest = _write(out_dir / "moments.csv", _moment_rows(config))
            manifest["moments_file"] = {"file": "moments.csv", "sha256": digest}
        manifest_text = json.dumps(manifest, indent=2, sort_keys=True) + "\n"
        (out_dir / "manifest.json").write_bytes(manifest_text.encode("utf-8"))
    except OSError as exc:
        print(f"write failed: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(manifest['frames'])} frame file(s) to {out_dir}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dynosc",
        description="Dynamic harmonic-oscillator states: verify, export, tabulate.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the verification battery")
    _add_source_options(verify)
    verify.add_argument("--appendix-b-denominator",
                        choices=(BETA0_QUARTIC, BETA0_SQUARED),
                        default=BETA0_QUARTIC,
                        help="momentum-map denominator convention "
                             "(beta0sq is a negative control and fails)")
    verify.add_argument("--tau-convention",
                        choices=(MINUS_GAMMA, MINUS_TWO_GAMMA), default=None,
                        help="pin the comoving time convention instead of "
                             "adjudicating between both")
    verify.set_defaults(func=cmd_verify)

    evolve = sub.add_parser("evolve", help="export per-frame CSV data")
    _add_source_options(evolve)
    evolve.add_argument("--out", metavar="DIR", required=True,
                        help="output directory")
    evolve.set_defaults(func=cmd_evolve)

    moments = sub.add_parser("moments", help="print the closed-form moment table")
    _add_source_options(moments)
    moments.add_argument("--check", action="store_true",
                         help="append relative errors against quadrature")
    moments.set_defaults(func=cmd_moments)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
