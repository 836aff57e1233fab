"""Command-line interface.

Subcommands: spectrum, wavefunction, smatrix, amplitude, validate.
Output is a deterministic JSON envelope (CSV is a flat lossy view):

    {"schema_version": "1", "command": ..., "channel": {...},
     "payload": [...], "provenance": {"equations": [...]}}

Floats are emitted with shortest round-trip repr (<= 17 significant
digits), so every number in the payload equals the library value
bit-for-bit after json parsing, and identical flags give byte-identical
output.  Exit codes: 0 success, 2 usage/parse error, 3 domain error
(no states, coincident directions), 4 validation-suite failure.
"""

import argparse
import json
import math
import sys

from . import scattering, spectrum, validation, wavefields
from .errors import DomainError, NCKeplerError

SCHEMA_VERSION = "1"

USAGE_EXIT = 2
DOMAIN_EXIT = 3
VALIDATION_EXIT = 4


def _parse_s_triple(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"--s needs three comma-separated integers, got {text!r}")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--s components must be integers, got {text!r}")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("--s components must be nonnegative")
    return tuple(values)


def _parse_direction(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"direction needs 'theta,phi' in radians, got {text!r}")
    try:
        theta, phi = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed angle in {text!r}")
    if not (0.0 <= theta <= 0.5 * math.pi and 0.0 <= phi <= 0.5 * math.pi):
        raise argparse.ArgumentTypeError(
            f"angles must lie in the closed octant [0, pi/2], got {text!r}")
    return theta, phi


def _parse_grid(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid needs 'start:stop:count', got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed grid {text!r}")
    if count < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"bad grid range {text!r}")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _tolerance_override(text):
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"--tol needs suite=value, got {text!r}")
    name, _, raw = text.partition("=")
    try:
        return name, float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad tolerance value in {text!r}")


def _envelope(command, channel, payload, equations):
    channel_echo = None
    if channel is not None:
        channel_echo = {"s1": channel.s1, "s2": channel.s2, "s3": channel.s3,
                        "gamma": channel.gamma}
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "channel": channel_echo,
        "payload": payload,
        "provenance": {"equations": list(equations)},
    }


def _complex_fields(value):
    return {"re": value.real, "im": value.imag}


def _flatten_for_csv(rows):
    lines = []
    if not rows:
        return ""
    header = list(rows[0])
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(repr(row[k]) if isinstance(row[k], float)
                              else str(row[k]) for k in header))
    return "\n".join(lines) + "\n"


def _emit(envelope, csv_rows, args):
    if args.format == "json":
        text = json.dumps(envelope, indent=2) + "\n"
    else:
        text = _flatten_for_csv(csv_rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args):
    channel = spectrum.ChannelSpec(*args.s, gamma=args.gamma)
    if args.jmax < channel.s_total:
        print(f"no states: jmax = {args.jmax} below the lowest level "
              f"j = {channel.s_total}", file=sys.stderr)
        return DOMAIN_EXIT
    payload = []
    csv_rows = []
    for j in range(channel.s_total, args.jmax + 1):
        energy = spectrum.bound_energy(channel, j)
        count = spectrum.degeneracy(channel, j)
        states = [{"j": qn.j, "l": qn.l, "m": qn.m, "k1": qn.k1, "k2": qn.k2, "n": qn.n}
                  for qn in spectrum.enumerate_states(channel, j)]
        payload.append({"j": j, "energy": energy, "degeneracy": count, "states": states})
        csv_rows.append({"j": j, "energy": energy, "degeneracy": count})
    envelope = _envelope("spectrum", channel, payload,
                         ["bound-energy", "level-degeneracy"])
    if 0 in (channel.s1, channel.s2, channel.s3):
        envelope["note"] = ("borderline channel: each s_i = 0 term is an attractive "
                            "-1/(8 x_i^2) well rather than a barrier")
    _emit(envelope, csv_rows, args)
    return 0


def _resolve_state(parser, channel, args):
    candidates = spectrum.enumerate_states(channel, args.j)
    if args.l is not None:
        candidates = [qn for qn in candidates if qn.l == args.l]
    if args.m is not None:
        candidates = [qn for qn in candidates if qn.m == args.m]
    if len(candidates) != 1:
        listing = "; ".join(f"(j={qn.j}, l={qn.l}, m={qn.m}, n={qn.n})"
                            for qn in candidates) or "none"
        parser.error(f"state selector matches {len(candidates)} states: {listing}")
    return candidates[0]


def cmd_wavefunction(args, parser):
    channel = spectrum.ChannelSpec(*args.s, gamma=args.gamma)
    qn = _resolve_state(parser, channel, args)
    payload = []
    for r in args.r_grid:
        point = wavefields.RadialPoint(r)
        radial = wavefields.radial_wavefunction(channel, qn.j, qn.l, point)
        for theta in args.theta_grid:
            for phi in args.phi_grid:
                direction = wavefields.AngularDirection(theta, phi)
                angular = wavefields.angular_wavefunction(channel, qn.l, qn.m, direction)
                payload.append({"r": r, "theta": theta, "phi": phi,
                                "psi": radial * angular})
    envelope = _envelope("wavefunction", channel, payload,
                         ["bound-energy", "radial-wavefunction", "angular-wavefunction"])
    envelope["state"] = {"j": qn.j, "l": qn.l, "m": qn.m, "k1": qn.k1,
                         "k2": qn.k2, "n": qn.n,
                         "energy": spectrum.bound_energy(channel, qn.j)}
    _emit(envelope, payload, args)
    return 0


def cmd_smatrix(args):
    channel = spectrum.ChannelSpec(*args.s, gamma=args.gamma)
    state = scattering.make_scattering_state(channel, args.energy)
    payload = []
    for l in range(args.lmax + 1):
        element = scattering.partial_wave_element(state, l)
        phase = math.atan2(element.imag, element.real)
        if phase <= -math.pi:
            phase = math.pi
        payload.append({"l": l, "re": element.real, "im": element.imag, "phase": phase})
    envelope = _envelope("smatrix", channel, payload, ["partial-wave-s-matrix"])
    envelope["scattering"] = {"energy": state.energy, "p": state.p, "rho": state.rho}
    _emit(envelope, payload, args)
    return 0


def cmd_amplitude(args):
    channel = spectrum.ChannelSpec(*args.s, gamma=args.gamma)
    state = scattering.make_scattering_state(channel, args.energy)
    request = scattering.AmplitudeRequest(
        in_dir=wavefields.AngularDirection(*args.in_dir),
        out_dir=wavefields.AngularDirection(*args.out_dir),
        l_max=args.lmax,
        method=args.method)
    if args.method == "partial_wave":
        value, detail = scattering.amplitude_partial_wave_detailed(state, request)
        meta = {"l_max": detail["l_max"],
                "abel_epsilons": detail["abel_epsilons"],
                "damped_sums": [_complex_fields(v) for v in detail["damped_sums"]]}
    else:
        value, detail = scattering.amplitude_integral_detailed(state, request)
        meta = {"grid_sizes": detail["grid_sizes"], "rel_change": detail["rel_change"]}
    row = {"method": args.method, "re": value.real, "im": value.imag, "metadata": meta}
    envelope = _envelope("amplitude", channel, [row],
                         ["amplitude-partial-wave", "amplitude-integral-representation"])
    envelope["scattering"] = {"energy": state.energy, "p": state.p, "rho": state.rho}
    csv_rows = [{"method": args.method, "re": value.real, "im": value.imag}]
    _emit(envelope, csv_rows, args)
    return 0


def cmd_validate(args):
    names = args.suite or list(validation.SUITES)
    overrides = dict(args.tol or [])
    unknown = set(overrides) - set(validation.SUITES)
    if unknown:
        print(f"unknown suites in --tol: {sorted(unknown)}", file=sys.stderr)
        return USAGE_EXIT
    records = validation.run_suites(names, overrides)
    payload = records
    envelope = _envelope("validate", None, payload, sorted(set(names)))
    csv_rows = [{"suite": r["suite"], "check": r["check"], "value": r["value"],
                 "tolerance": r["tolerance"], "passed": r["passed"]} for r in records]
    _emit(envelope, csv_rows, args)
    failed = [r for r in records if not r["passed"]]
    for r in failed:
        print(f"FAIL [{r['suite']}] {r['check']}: {r['value']:.3e} "
              f"(tol {r['tolerance']:.3e})", file=sys.stderr)
    return VALIDATION_EXIT if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nckepler",
        description="Bound states and scattering of the non-central Kepler-Coulomb problem")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, channel=True):
        if channel:
            p.add_argument("--s", type=_parse_s_triple, required=True,
                           metavar="s1,s2,s3", help="barrier strengths (nonnegative integers)")
            p.add_argument("--gamma", type=_positive_float, required=True,
                           help="Coulomb strength (> 0)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_spec = sub.add_parser("spectrum", help="bound-state levels and degeneracies")
    add_common(p_spec)
    p_spec.add_argument("--jmax", type=int, required=True)

    p_wave = sub.add_parser("wavefunction", help="wavefunction values on a grid")
    add_common(p_wave)
    p_wave.add_argument("--j", type=int, required=True)
    p_wave.add_argument("--l", type=int, default=None)
    p_wave.add_argument("--m", type=int, default=None)
    p_wave.add_argument("--r-grid", type=_parse_grid, default=_parse_grid("0.5:20:8"),
                        metavar="start:stop:count")
    p_wave.add_argument("--theta-grid", type=_parse_grid, default=_parse_grid("0.3:1.2:4"),
                        metavar="start:stop:count")
    p_wave.add_argument("--phi-grid", type=_parse_grid, default=_parse_grid("0.3:1.2:4"),
                        metavar="start:stop:count")

    p_sm = sub.add_parser("smatrix", help="partial-wave S-matrix elements")
    add_common(p_sm)
    p_sm.add_argument("--energy", type=_positive_float, required=True)
    p_sm.add_argument("--lmax", type=_nonnegative_int, default=32)

    p_amp = sub.add_parser("amplitude", help="scattering amplitude")
    add_common(p_amp)
    p_amp.add_argument("--energy", type=_positive_float, required=True)
    p_amp.add_argument("--in-dir", type=_parse_direction, required=True,
                       metavar="theta,phi")
    p_amp.add_argument("--out-dir", type=_parse_direction, required=True,
                       metavar="theta,phi")
    p_amp.add_argument("--method", choices=("partial_wave", "integral_rep"),
                       default="partial_wave")
    p_amp.add_argument("--lmax", type=int, default=420)

    p_val = sub.add_parser("validate", help="run the validation suites")
    add_common(p_val, channel=False)
    p_val.add_argument("--suite", action="append", choices=sorted(validation.SUITES),
                       help="restrict to one suite (repeatable)")
    p_val.add_argument("--tol", action="append", type=_tolerance_override,
                       metavar="suite=value", help="tolerance override (repeatable)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "spectrum":
            return cmd_spectrum(args)
        if args.command == "wavefunction":
            return cmd_wavefunction(args, parser)
        if args.command == "smatrix":
            return cmd_smatrix(args)
        if args.command == "amplitude":
            return cmd_amplitude(args)
        if args.command == "validate":
            return cmd_validate(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT
    except NCKeplerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
