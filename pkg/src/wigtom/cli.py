"""Command line front end.

Subcommands:

  wigner    -- Wigner quadrant (or selected cells) of a named state
  sparsity  -- randomized-harmonic sparsity / pruning-infidelity sweep
  qkt       -- quantum kicked top with per-kick selective readout
  portrait  -- classical stroboscopic phase portraits

Every option can also be supplied through ``--config FILE`` (lines of
``key = value``, '#' comments); explicit flags override the file. Each
output starts with a comment header echoing the fully resolved
configuration, so a run can be reproduced byte-for-byte from its own
output. Exit codes: 0 success, 2 usage/parse error, 3 domain error.
"""
import argparse
import json
import os
import sys
import tempfile

import numpy as np

from . import __version__
from .errors import DimensionMismatch, DomainError
from .kicked_top import (
    K_PRESETS,
    POINT_CHAOTIC,
    POINT_REGULAR,
    QKTParams,
    angle_grid,
    phase_portrait,
    run_qkt,
)
from .phase_space import (
    build_frame,
    expand_full,
    matrix_to_csv,
    quadrant_to_json_dict,
    wigner_fidelity,
    wigner_transform,
)
from .qmat import projector
from .states import (
    basis_state,
    bell_state,
    harmonic_state,
    randomized_harmonic,
    spin_coherent,
    two_qubit_scs,
)
from .tomography import (
    CellSelection,
    circuit_read,
    direct_read,
    prune,
    sparsity,
)


class UsageError(Exception):
    """Bad flags, config keys, or spec syntax: exit code 2."""


# --------------------------------------------------------------------------
# option plumbing

def _int(v):
    return int(v)


def _float(v):
    return float(v)


def _str(v):
    return str(v)


def _bool(v):
    if isinstance(v, bool):
        return v
    low = str(v).strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {v!r}")


def _choice(*allowed):
    def parse(v):
        v = str(v)
        if v not in allowed:
            raise ValueError(f"expected one of {', '.join(allowed)}; got {v!r}")
        return v
    return parse


# One option: (name, parser, default, help). A default of None means
# "not set"; command-specific resolution fills those in.
_COMMON = [
    ("out", _str, None, "output file (default: stdout); relative paths land in $WIGTOM_OUT_DIR when set"),
    ("config", _str, None, "key = value config file; flags override it"),
]

_OPTIONS = {
    "wigner": [
        ("state", _str, "basis:0",
         "state spec: basis:<n> | plusplus | bell | scs:<theta>,<phi> "
         "| harmonic:<j> | randharm:<j>,<eta>"),
        ("n", _int, 4, "Hilbert dimension"),
        ("method", _choice("direct", "circuit"), "direct", "readout method"),
        ("shots", _int, 0, "samples per cell for the circuit method (0 = exact)"),
        ("seed", _int, 0, "base RNG seed (state randomization and sampling)"),
        ("cells", _str, "", "selective readout cells 'q,p;q,p;...' (default: full quadrant)"),
        ("full", _bool, False, "also emit the expanded 2N x 2N grid"),
        ("format", _choice("csv", "json"), "csv", "output format"),
    ] + _COMMON,
    "sparsity": [
        ("n", _int, 8, "Hilbert dimension"),
        ("j", _int, 0, "harmonic index"),
        ("etas", _str, "0.0,0.1,0.2,0.4,0.6,0.8,1.0", "comma list of randomization strengths"),
        ("thresholds", _str, "0.1,0.01", "comma list of pruning thresholds"),
        ("seeds", _int, 200, "number of random states per eta"),
        ("seed", _int, 0, "base RNG seed"),
        ("format", _choice("csv", "json"), "csv", "output format"),
    ] + _COMMON,
    "qkt": [
        ("k", _float, None, "chaoticity parameter"),
        ("k_preset", _choice(*K_PRESETS), None,
         "named chaoticity: " + ", ".join(f"{n} = {v:g}" for n, v in K_PRESETS.items())),
        ("point", _choice("R", "C"), None,
         "initial condition preset: R = (pi/2, pi) regular, C = (1.0, 2.5) chaotic"),
        ("theta0", _float, None, "initial polar angle (radians)"),
        ("phi0", _float, None, "initial azimuthal angle (radians)"),
        ("kicks", _int, 10, "number of drive periods"),
        ("cells", _str, "", "readout cells 'q,p;q,p;...' (default: the q=0 row)"),
        ("method", _choice("direct", "circuit"), "direct", "readout method"),
        ("shots", _int, 0, "samples per cell for the circuit method (0 = exact)"),
        ("seed", _int, 0, "base RNG seed for sampled readout"),
        ("format", _choice("csv", "jsonl"), "csv", "output format"),
    ] + _COMMON,
    "portrait": [
        ("k", _float, None, "chaoticity parameter"),
        ("k_preset", _choice(*K_PRESETS), None, "named chaoticity preset"),
        ("grid", _str, None, "seed grid 'THETAxPHI', e.g. 20x20 (default)"),
        ("point", _choice("R", "C"), None, "single-seed portrait from a preset point"),
        ("steps", _int, 500, "stroboscopic steps per seed"),
        ("format", _choice("csv"), "csv", "output format"),
    ] + _COMMON,
}

_NOT_ECHOED = {"out", "config"}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="wigtom",
        description="Discrete Wigner phase space, selective tomography, kicked top")
    parser.add_argument("--version", action="version", version=f"wigtom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for command, table in _OPTIONS.items():
        cmd_parser = sub.add_parser(command)
        for name, parse, default, help_text in table:
            flag = "--" + name.replace("_", "-")
            if parse is _bool:
                cmd_parser.add_argument(flag, dest=name, action="store_const",
                                        const=True, default=None, help=help_text)
            else:
                cmd_parser.add_argument(flag, dest=name, type=str, default=None,
                                        metavar=name.upper(), help=help_text)
    return parser


def _load_config_file(path):
    values = {}
    try:
        with open(path) as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, eq, value = line.partition("=")
                if not eq:
                    raise UsageError(f"{path}:{lineno}: expected 'key = value'")
                values[key.strip()] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    return values


def _resolve(command, args):
    """Merge flags over config-file values over defaults.

    Returns (resolved dict, flag-level dict, config-level dict); the
    level dicts let commands detect same-level option conflicts.
    """
    table = _OPTIONS[command]
    names = {name: (parse, default) for name, parse, default, _ in table}

    flag_level = {}
    for name, (parse, _default) in names.items():
        raw = getattr(args, name)
        if raw is None:
            continue
        try:
            flag_level[name] = parse(raw)
        except ValueError as exc:
            raise UsageError(f"--{name.replace('_', '-')}: {exc}") from exc

    config_level = {}
    config_path = flag_level.get("config")
    if config_path:
        for key, raw in _load_config_file(config_path).items():
            if key not in names or key == "config":
                raise UsageError(f"unknown config key {key!r} for command {command!r}")
            try:
                config_level[key] = names[key][0](raw)
            except ValueError as exc:
                raise UsageError(f"config key {key!r}: {exc}") from exc

    resolved = {}
    for name, (_parse, default) in names.items():
        if name in flag_level:
            resolved[name] = flag_level[name]
        elif name in config_level:
            resolved[name] = config_level[name]
        else:
            resolved[name] = default
    return resolved, flag_level, config_level


def _pick_exclusive(levels, *names):
    """First level that sets any of `names` wins; two at once is an error."""
    for level in levels:
        present = [name for name in names if level.get(name) is not None]
        if len(present) > 1:
            flags = " and ".join("--" + n.replace("_", "-") for n in present)
            raise UsageError(f"{flags} cannot be combined")
        if present:
            return present[0], level[present[0]]
    return None, None


def _resolve_k(levels):
    which, value = _pick_exclusive(levels, "k", "k_preset")
    if which == "k":
        return value
    if which == "k_preset":
        return K_PRESETS[value]
    return 0.5


def _format_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def _header_lines(command, echo):
    lines = [f"# wigtom {__version__}", f"# command = {command}"]
    lines += [f"# {key} = {_format_value(echo[key])}" for key in sorted(echo)]
    return lines


def _json_envelope(command, echo, payload):
    doc = {"version": __version__,
           "config": {"command": command,
                      **{k: echo[k] for k in sorted(echo)}}}
    doc.update(payload)
    return json.dumps(doc, indent=1) + "\n"


def _write_output(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    base_dir = os.environ.get("WIGTOM_OUT_DIR")
    path = out
    if base_dir and not os.path.isabs(out):
        path = os.path.join(base_dir, out)
    path = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), prefix=".wigtom-tmp-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --------------------------------------------------------------------------
# spec parsing

def parse_state_spec(spec):
    """Syntax-check a state spec into (name, args); ranges checked later."""
    name, colon, arg = spec.partition(":")
    try:
        if name == "basis":
            return ("basis", (int(arg),))
        if name in ("plusplus", "bell"):
            if colon:
                raise ValueError(f"{name} takes no arguments")
            return (name, ())
        if name == "scs":
            theta, phi = (float(x) for x in arg.split(","))
            return ("scs", (theta, phi))
        if name == "harmonic":
            return ("harmonic", (int(arg),))
        if name == "randharm":
            j, eta = arg.split(",")
            return ("randharm", (int(j), float(eta)))
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(f"malformed state spec {spec!r}: {exc}") from exc
    raise UsageError(f"unrecognized state spec {spec!r}")


def build_state(parsed_spec, dim, seed):
    """Realize a parsed state spec as a density matrix of dimension N."""
    name, args = parsed_spec
    if name == "basis":
        return projector(basis_state(args[0], dim))
    if name == "plusplus":
        return projector(harmonic_state(0, dim))
    if name == "bell":
        if dim != 4:
            raise DimensionMismatch(f"bell state lives in dimension 4, not {dim}")
        return projector(bell_state())
    if name == "scs":
        if dim == 2:
            return projector(spin_coherent(*args))
        if dim == 4:
            return two_qubit_scs(*args)
        raise DimensionMismatch(
            f"spin coherent states are provided for dimensions 2 and 4, not {dim}")
    if name == "harmonic":
        return projector(harmonic_state(args[0], dim))
    if name == "randharm":
        return projector(randomized_harmonic(args[0], dim, args[1], seed))
    raise UsageError(f"unrecognized state spec name {name!r}")


def parse_cells(text):
    cells = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            q, p = (int(x) for x in chunk.split(","))
        except ValueError as exc:
            raise UsageError(f"malformed cell {chunk!r}: {exc}") from exc
        cells.append((q, p))
    if not cells:
        raise UsageError("empty cell list")
    return cells


def _cells_string(cells):
    return ";".join(f"{q},{p}" for q, p in cells)


# --------------------------------------------------------------------------
# commands

def cmd_wigner(resolved, levels):
    spec = parse_state_spec(resolved["state"])
    if resolved["method"] == "direct" and resolved["shots"]:
        raise UsageError("--shots applies only to --method circuit")
    if resolved["shots"] < 0:
        raise UsageError("--shots must be >= 0")

    dim = resolved["n"]
    frame = build_frame(dim)
    rho = build_state(spec, dim, resolved["seed"])
    echo = {k: v for k, v in resolved.items() if k not in _NOT_ECHOED}

    if resolved["cells"]:
        sel = CellSelection.make(dim, parse_cells(resolved["cells"]))
        echo["cells"] = _cells_string(sel.cells)
        if resolved["method"] == "direct":
            result = direct_read(frame, rho, sel)
        else:
            result = circuit_read(frame, rho, sel, shots=resolved["shots"],
                                  seed=resolved["seed"])
        if resolved["format"] == "json":
            return _json_envelope("wigner", echo, result.to_json_dict())
        lines = _header_lines("wigner", echo)
        lines.append("# layout = quadrant rows q=0..N-1, columns p=0..N-1; unread cells empty")
        return "\n".join(lines) + "\n" + result.to_csv()

    if resolved["method"] == "direct":
        quadrant = wigner_transform(frame, rho)
        method_label = "direct"
    else:
        result = circuit_read(frame, rho, CellSelection.full(dim),
                              shots=resolved["shots"], seed=resolved["seed"])
        quadrant = result.values.reshape(dim, dim)
        method_label = result.method
    if resolved["format"] == "json":
        payload = {"method": method_label, "shots": resolved["shots"],
                   **quadrant_to_json_dict(quadrant)}
        if resolved["full"]:
            payload["full"] = [[float(x) for x in row]
                               for row in expand_full(quadrant)]
        return _json_envelope("wigner", echo, payload)
    lines = _header_lines("wigner", echo)
    lines.append("# layout = quadrant rows q=0..N-1, columns p=0..N-1")
    text = "\n".join(lines) + "\n" + matrix_to_csv(quadrant)
    if resolved["full"]:
        text += "# layout = full grid rows q=0..2N-1, columns p=0..2N-1\n"
        text += matrix_to_csv(expand_full(quadrant))
    return text


def _parse_float_list(text, what, lo=None, hi=None):
    try:
        values = [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"malformed {what} list {text!r}: {exc}") from exc
    if not values:
        raise UsageError(f"empty {what} list")
    for v in values:
        if (lo is not None and v < lo) or (hi is not None and v > hi):
            raise UsageError(f"{what} value {v!r} outside [{lo}, {hi}]")
    return values


def cmd_sparsity(resolved, levels):
    etas = _parse_float_list(resolved["etas"], "eta", lo=0.0, hi=1.0)
    thresholds = _parse_float_list(resolved["thresholds"], "threshold", lo=0.0, hi=1.0)
    if resolved["seeds"] < 1:
        raise UsageError("--seeds must be >= 1")
    dim, j = resolved["n"], resolved["j"]
    frame = build_frame(dim)

    rows = []
    for eta in etas:
        rho_sp = {t: [] for t in thresholds}
        w_sp = {t: [] for t in thresholds}
        infid = {t: [] for t in thresholds}
        for i in range(resolved["seeds"]):
            psi = randomized_harmonic(j, dim, eta, seed=[resolved["seed"], i])
            rho = projector(psi)
            quadrant = wigner_transform(frame, rho)
            for t in thresholds:
                rho_sp[t].append(sparsity(rho, t))
                w_sp[t].append(sparsity(quadrant, t))
                infid[t].append(1.0 - wigner_fidelity(quadrant, prune(quadrant, t)))
        for t in thresholds:
            rows.append({
                "eta": eta, "threshold": t,
                "rho_sparsity_mean": _mean(rho_sp[t]), "rho_sparsity_std": _std(rho_sp[t]),
                "w_sparsity_mean": _mean(w_sp[t]), "w_sparsity_std": _std(w_sp[t]),
                "infidelity_mean": _mean(infid[t]), "infidelity_std": _std(infid[t]),
            })

    echo = {k: v for k, v in resolved.items() if k not in _NOT_ECHOED}
    if resolved["format"] == "json":
        return _json_envelope("sparsity", echo, {"rows": rows})
    columns = ["eta", "threshold",
               "rho_sparsity_mean", "rho_sparsity_std",
               "w_sparsity_mean", "w_sparsity_std",
               "infidelity_mean", "infidelity_std"]
    lines = _header_lines("sparsity", echo)
    lines.append("# columns = " + ",".join(columns))
    body = "".join(",".join(repr(float(row[c])) for c in columns) + "\n" for row in rows)
    return "\n".join(lines) + "\n" + body


def _mean(xs):
    return float(np.mean(xs))


def _std(xs):
    return float(np.std(xs, ddof=1)) if len(xs) > 1 else 0.0


def cmd_qkt(resolved, levels):
    k = _resolve_k(levels)
    which, value = _pick_exclusive(levels, "point", "theta0")
    _pick_exclusive(levels, "point", "phi0")
    if which == "point":
        theta0, phi0 = POINT_REGULAR if value == "R" else POINT_CHAOTIC
    else:
        got_theta = resolved["theta0"] is not None
        got_phi = resolved["phi0"] is not None
        if got_theta != got_phi:
            raise UsageError("--theta0 and --phi0 must be given together")
        theta0, phi0 = ((resolved["theta0"], resolved["phi0"]) if got_theta
                        else POINT_REGULAR)
    if resolved["kicks"] < 0:
        raise UsageError("--kicks must be >= 0")
    if resolved["method"] == "direct" and resolved["shots"]:
        raise UsageError("--shots applies only to --method circuit")

    cells = (parse_cells(resolved["cells"]) if resolved["cells"]
             else [(0, p) for p in range(4)])
    sel = CellSelection.make(4, cells)
    params = QKTParams(k=k, kicks=resolved["kicks"], theta0=theta0, phi0=phi0,
                       selection=sel, method=resolved["method"],
                       shots=resolved["shots"], seed=resolved["seed"])
    run = run_qkt(params)

    echo = {key: resolved[key] for key in
            ("format", "kicks", "method", "seed", "shots")}
    echo.update(k=k, theta0=theta0, phi0=phi0, cells=_cells_string(sel.cells))
    lines = _header_lines("qkt", echo)
    if resolved["format"] == "jsonl":
        return "\n".join(lines) + "\n" + run.to_jsonl()
    labels = [f"W({q},{p})" for q, p in sel.cells]
    lines.append("# columns = " + ",".join(["t"] + labels + ["S"]))
    return "\n".join(lines) + "\n" + run.to_csv()


def cmd_portrait(resolved, levels):
    k = _resolve_k(levels)
    which, value = _pick_exclusive(levels, "grid", "point")
    echo = {"format": resolved["format"], "k": k, "steps": resolved["steps"]}
    if which == "point":
        seeds = [POINT_REGULAR if value == "R" else POINT_CHAOTIC]
        echo["point"] = value
    else:
        grid_text = value if which == "grid" else "20x20"
        try:
            n_theta, n_phi = (int(x) for x in grid_text.lower().split("x"))
        except ValueError as exc:
            raise UsageError(f"malformed grid {grid_text!r}: {exc}") from exc
        if n_theta < 1 or n_phi < 1:
            raise UsageError(f"grid {grid_text!r} must be at least 1x1")
        seeds = angle_grid(n_theta, n_phi)
        echo["grid"] = f"{n_theta}x{n_phi}"
    if resolved["steps"] < 1:
        raise UsageError("--steps must be >= 1")

    cloud = phase_portrait(k, seeds, resolved["steps"])

    lines = _header_lines("portrait", echo)
    lines.append("# columns = seed_id,step,theta,phi")
    body = []
    for seed_id in range(cloud.shape[0]):
        for step in range(cloud.shape[1]):
            theta, phi = cloud[seed_id, step]
            body.append(f"{seed_id},{step + 1},{float(theta)!r},{float(phi)!r}\n")
    return "\n".join(lines) + "\n" + "".join(body)


_RUNNERS = {
    "wigner": cmd_wigner,
    "sparsity": cmd_sparsity,
    "qkt": cmd_qkt,
    "portrait": cmd_portrait,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        resolved, flag_level, config_level = _resolve(args.command, args)
        text = _RUNNERS[args.command](resolved, (flag_level, config_level))
    except UsageError as exc:
        print(f"wigtom: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError) as exc:
        print(f"wigtom: error: {exc}", file=sys.stderr)
        return 3
    _write_output(text, resolved.get("out"))
    return 0


def console_main():
    sys.exit(main())
