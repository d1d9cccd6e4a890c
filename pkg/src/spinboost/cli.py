"""Command-line sweeps emitting Wigner-angle and entropy curves as CSV or JSON.

Exit status: 0 on success, 2 on usage errors, 1 on runtime errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .discrete import two_point_entropy, two_point_entropy_closed_form
from .engine import BoostScenario, entropy_curve
from .lorentz import rapidity, wigner_angle, wigner_angle_rapidity
from .wavepacket import EXTENT

MODES = ("wigner-angle", "entropy-curve", "two-point", "figure")
FIGURES = ("fig1", "fig2a", "fig2b")

FIG1_SPEEDS = (0.5, 0.9, 0.985)
FIG2A_V1 = 0.985
FIG2B_SCENARIOS = ((0.999, 161.0), (0.99995, None))  # None -> theta-f-deg

DEFAULTS = {
    "mode": None,
    "figure": None,
    "v1": 0.985,
    "v2": None,
    "theta-deg": 90.0,
    "sigma": 1.0,
    "xi-min": 0.0,
    "xi-max": 12.0,
    "xi-steps": 60,
    "theta-steps": 181,
    "nodes": 48,
    "output": "-",
    "format": "csv",
    "no-timestamp": False,
    "theta-f-deg": 170.0,
    "fig2a-thetas-deg": "45,90,135",
}

COLUMNS = {
    "wigner-angle": ("theta_deg", "v1", "v2", "omega_deg"),
    "entropy-curve": ("xi", "v2", "entropy"),
    "two-point": ("xi", "v2", "omega_deg", "entropy_closed_form", "entropy_matrix"),
}


class UsageError(Exception):
    """Malformed or contradictory configuration."""


@dataclass(frozen=True)
class SweepConfig:
    mode: str
    figure: str | None = None
    v1: float = 0.985
    v2: float | None = None
    theta_deg: float = 90.0
    sigma: float = 1.0
    xi_min: float = 0.0
    xi_max: float = 12.0
    xi_steps: int = 60
    theta_steps: int = 181
    nodes: int = 48
    output: str = "-"
    format: str = "csv"
    no_timestamp: bool = False
    theta_f_deg: float = 170.0
    fig2a_thetas_deg: tuple = (45.0, 90.0, 135.0)

    @property
    def xi_values(self):
        return tuple(np.linspace(self.xi_min, self.xi_max, self.xi_steps))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser():
    p = _Parser(prog="spinboost", description=__doc__.splitlines()[0])
    S = argparse.SUPPRESS
    p.add_argument("--mode", choices=MODES, default=S)
    p.add_argument("--figure", choices=FIGURES, default=S)
    p.add_argument("--v1", type=float, default=S, help="packet (first boost) speed, default 0.985")
    p.add_argument("--v2", type=float, default=S, help="second boost speed (wigner-angle; default v1)")
    p.add_argument("--theta-deg", type=float, default=S, help="boost angle in degrees, default 90")
    p.add_argument("--sigma", type=float, default=S, help="packet width sigma/m, default 1")
    p.add_argument("--xi-min", type=float, default=S)
    p.add_argument("--xi-max", type=float, default=S)
    p.add_argument("--xi-steps", type=int, default=S)
    p.add_argument("--theta-steps", type=int, default=S, help="theta grid size for wigner-angle")
    p.add_argument("--nodes", type=int, default=S, help="grid nodes per axis, default 48")
    p.add_argument("--output", default=S, help="file ('-' for stdout); a directory in figure mode")
    p.add_argument("--format", choices=("csv", "json"), default=S)
    p.add_argument("--config", default=None, help="flat JSON object keyed by flag names")
    p.add_argument("--no-timestamp", action="store_true", default=S)
    p.add_argument("--theta-f-deg", type=float, default=S, help="second fig2b angle, default 170")
    p.add_argument("--fig2a-thetas-deg", default=S, help="comma list, default 45,90,135")
    return p


def _load_config_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config file must hold a flat JSON object")
    out = {}
    for key, value in data.items():
        k = key.replace("_", "-")
        if k not in DEFAULTS:
            raise UsageError(f"unknown config key {key!r}")
        out[k] = value
    return out


def parse_config(argv=None):
    """Merge CLI flags over config-file keys over defaults and validate."""
    ns = vars(_parser().parse_args(argv))
    config_path = ns.pop("config", None)
    merged = dict(DEFAULTS)
    if config_path:
        merged.update(_load_config_file(config_path))
    merged.update({k.replace("_", "-"): v for k, v in ns.items()})

    def num(key, kind=float):
        val = merged[key]
        if isinstance(val, bool) or not isinstance(val, (int, float, str)):
            raise UsageError(f"{key} must be a number, got {val!r}")
        try:
            return kind(val)
        except ValueError as exc:
            raise UsageError(f"{key} must be a number, got {val!r}") from exc

    mode = merged["mode"]
    if mode is None:
        raise UsageError("mode is required (--mode)")
    if mode not in MODES:
        raise UsageError(f"mode must be one of {MODES}, got {mode!r}")
    figure = merged["figure"]
    if mode == "figure" and figure not in FIGURES:
        raise UsageError(f"figure must be one of {FIGURES} in figure mode")
    if mode != "figure" and figure is not None:
        raise UsageError("figure is only valid with --mode figure")

    v1 = num("v1")
    if not 0 < v1 < 1:
        raise UsageError(f"v1 must lie in (0, 1), got {v1}")
    v2 = merged["v2"]
    if v2 is not None:
        v2 = num("v2")
        if mode != "wigner-angle":
            raise UsageError("v2 is only used in wigner-angle mode")
        if not 0 < v2 < 1:
            raise UsageError(f"v2 must lie in (0, 1), got {v2}")
    theta = num("theta-deg")
    if not 0 < theta < 180:
        raise UsageError(f"theta-deg must lie in (0, 180), got {theta}")
    theta_f = num("theta-f-deg")
    if not 0 < theta_f < 180:
        raise UsageError(f"theta-f-deg must lie in (0, 180), got {theta_f}")
    sigma = num("sigma")
    if not sigma > 0:
        raise UsageError(f"sigma must be positive, got {sigma}")
    xi_min, xi_max, xi_steps = num("xi-min"), num("xi-max"), num("xi-steps", int)
    if xi_min < 0:
        raise UsageError("xi-min must be >= 0")
    if not xi_min < xi_max:
        raise UsageError("xi-min must be smaller than xi-max")
    if xi_steps < 2:
        raise UsageError("xi-steps must be >= 2")
    theta_steps = num("theta-steps", int)
    if theta_steps < 3:
        raise UsageError("theta-steps must be >= 3")
    nodes = num("nodes", int)
    if nodes < 8:
        raise UsageError("nodes must be >= 8")
    fmt = merged["format"]
    if fmt not in ("csv", "json"):
        raise UsageError(f"format must be csv or json, got {fmt!r}")
    raw = merged["fig2a-thetas-deg"]
    try:
        parts = raw.split(",") if isinstance(raw, str) else list(raw)
        thetas = tuple(float(t) for t in parts)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"fig2a-thetas-deg must be a list of angles, got {raw!r}") from exc
    if not thetas or any(not 0 < t < 180 for t in thetas):
        raise UsageError("fig2a-thetas-deg entries must lie in (0, 180)")
    if not isinstance(merged["no-timestamp"], bool):
        raise UsageError("no-timestamp must be true or false")

    return SweepConfig(
        mode=mode,
        figure=figure,
        v1=v1,
        v2=v2,
        theta_deg=theta,
        sigma=sigma,
        xi_min=xi_min,
        xi_max=xi_max,
        xi_steps=xi_steps,
        theta_steps=theta_steps,
        nodes=nodes,
        output=str(merged["output"]),
        format=fmt,
        no_timestamp=merged["no-timestamp"],
        theta_f_deg=theta_f,
        fig2a_thetas_deg=thetas,
    )


# --- row producers -----------------------------------------------------------


def wigner_rows(v1, v2, theta_steps):
    theta = np.linspace(0.0, np.pi, theta_steps)
    omega = wigner_angle(v1, v2, theta)
    return [
        (float(np.degrees(t)), float(v1), float(v2), float(np.degrees(w)))
        for t, w in zip(theta, omega)
    ]


def entropy_rows(cfg: SweepConfig, v1, theta_deg):
    sc = BoostScenario(
        v1=v1,
        theta=np.radians(theta_deg),
        sigma_over_m=cfg.sigma,
        xi_values=cfg.xi_values,
        nodes_per_axis=cfg.nodes,
    )
    return [(p.xi, p.v2, p.entropy) for p in entropy_curve(sc).points]


def two_point_rows(cfg: SweepConfig):
    th = np.radians(cfg.theta_deg)
    xi1 = rapidity(cfg.v1)
    rows = []
    for xi in cfg.xi_values:
        w = wigner_angle_rapidity(xi1, xi, th)
        rows.append(
            (
                float(xi),
                float(np.tanh(xi)),
                float(np.degrees(w)),
                two_point_entropy_closed_form(cfg.v1, th, xi),
                two_point_entropy(cfg.v1, th, xi),
            )
        )
    return rows


# --- output ------------------------------------------------------------------


def _fmt(x):
    if isinstance(x, float):
        return repr(x)
    return str(x)


def render(columns, rows, meta, fmt, timestamp=None):
    """Serialize rows with a metadata block; deterministic for fixed inputs."""
    meta = dict(meta)
    if timestamp is not None:
        meta["generated"] = timestamp
    if fmt == "json":
        doc = {"meta": meta, "rows": [dict(zip(columns, r)) for r in rows]}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    for k, v in meta.items():
        buf.write(f"# {k}: {v}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(x) for x in r])
    return buf.getvalue()


def _base_meta(cfg: SweepConfig, kind):
    return {"tool": f"spinboost {__version__}", "mode": kind}


def _entropy_meta(cfg, v1, theta_deg):
    return {
        "v1": v1,
        "theta_deg": theta_deg,
        "sigma_over_m": cfg.sigma,
        "xi": f"{cfg.xi_min}..{cfg.xi_max} ({cfg.xi_steps} points)",
        "grid": f"{cfg.nodes} nodes/axis, +-{EXTENT:g} sigma per lobe",
    }


def build_outputs(cfg: SweepConfig):
    """List of ``(name, columns, rows, meta)``; ``name`` is None for the single
    output of non-figure modes."""
    if cfg.mode == "wigner-angle":
        v2 = cfg.v1 if cfg.v2 is None else cfg.v2
        meta = _base_meta(cfg, cfg.mode) | {"v1": cfg.v1, "v2": v2}
        return [(None, COLUMNS["wigner-angle"], wigner_rows(cfg.v1, v2, cfg.theta_steps), meta)]
    if cfg.mode == "entropy-curve":
        meta = _base_meta(cfg, cfg.mode) | _entropy_meta(cfg, cfg.v1, cfg.theta_deg)
        return [(None, COLUMNS["entropy-curve"], entropy_rows(cfg, cfg.v1, cfg.theta_deg), meta)]
    if cfg.mode == "two-point":
        meta = _base_meta(cfg, cfg.mode) | {
            "v1": cfg.v1,
            "theta_deg": cfg.theta_deg,
            "xi": f"{cfg.xi_min}..{cfg.xi_max} ({cfg.xi_steps} points)",
        }
        return [(None, COLUMNS["two-point"], two_point_rows(cfg), meta)]

    outputs = []
    if cfg.figure == "fig1":
        for v in FIG1_SPEEDS:
            meta = _base_meta(cfg, "figure fig1") | {"v1": v, "v2": v}
            outputs.append((f"fig1_v{v:g}", COLUMNS["wigner-angle"], wigner_rows(v, v, cfg.theta_steps), meta))
    elif cfg.figure == "fig2a":
        for th in cfg.fig2a_thetas_deg:
            meta = _base_meta(cfg, "figure fig2a") | _entropy_meta(cfg, FIG2A_V1, th)
            if th != 90.0:
                meta["note"] = f"theta={th:g} deg is an illustrative preset, not a published value"
            rows = entropy_rows(cfg, FIG2A_V1, th)
            outputs.append((f"fig2a_theta{th:g}", COLUMNS["entropy-curve"], rows, meta))
    else:
        for v1, th in FIG2B_SCENARIOS:
            preset = th is not None
            th = th if preset else cfg.theta_f_deg
            meta = _base_meta(cfg, "figure fig2b") | _entropy_meta(cfg, v1, th)
            if not preset:
                meta["note"] = f"theta={th:g} deg is an illustrative preset, not a published value"
            rows = entropy_rows(cfg, v1, th)
            outputs.append((f"fig2b_v{v1:g}_theta{th:g}", COLUMNS["entropy-curve"], rows, meta))
    return outputs


def run(cfg: SweepConfig, stdout=None):
    """Execute a validated config; returns the process exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stamp = None if cfg.no_timestamp else datetime.now(timezone.utc).isoformat(timespec="seconds")
    outputs = build_outputs(cfg)
    ext = "json" if cfg.format == "json" else "csv"
    if cfg.mode == "figure":
        if cfg.output == "-":
            raise UsageError("figure mode needs --output DIRECTORY")
        outdir = Path(cfg.output)
        outdir.mkdir(parents=True, exist_ok=True)
        for name, cols, rows, meta in outputs:
            (outdir / f"{name}.{ext}").write_text(
                render(cols, rows, meta, cfg.format, stamp), encoding="utf-8", newline="\n"
            )
        return 0
    (_, cols, rows, meta), = outputs
    text = render(cols, rows, meta, cfg.format, stamp)
    if cfg.output == "-":
        stdout.write(text)
    else:
        Path(cfg.output).write_text(text, encoding="utf-8", newline="\n")
    return 0


def main(argv=None):
    try:
        cfg = parse_config(argv)
        return run(cfg)
    except UsageError as exc:
        print(f"spinboost: usage error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"spinboost: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
