"""Scenario files: INI-style ``[medium]``, ``[cavity]``, ``[sweep]``, ``[output]``.

Example::

    [medium]
    omega_c = 3
    delta_p = 5
    c6 = 2e4
    density = 0.24
    alpha = 70

    [cavity]
    t_mirror = 0.5
    cavity_detuning = 0

    [sweep]
    kind = input_output
    vary = delta_p
    values = 1, 2, 3, 4, 5

Numeric values may use ``pi`` and basic arithmetic (``3*pi/2``).
"""

from __future__ import annotations

import ast
import configparser
import hashlib
import math
import operator
from dataclasses import dataclass, field
from pathlib import Path

from .cavity import CavityConfig
from .errors import ParameterError
from .params import MediumParams

__all__ = ["Scenario", "Variant", "ScenarioParseError", "load_scenario", "parse_scenario",
           "SWEEP_KINDS"]

SWEEP_KINDS = ("input_output", "transmission_profile", "hysteresis", "scaling", "eta_scan")

MEDIUM_KEYS = ("omega_c", "delta_p", "delta_c", "c6", "density", "alpha", "gamma2", "gamma12",
               "gamma13", "length", "lambda_probe")
MEDIUM_REQUIRED = ("omega_c", "c6", "density", "alpha")
CAVITY_KEYS = ("t_mirror", "r_mirror", "cavity_detuning")
SWEEP_KEYS = {
    "kind": str, "vary": str, "values": "list", "parameter": str, "exponent": float,
    "x_max": float, "n_samples": int, "i_i_max": float, "n_steps": int, "i_t_max": float,
    "delta_p_min": float, "delta_p_max": float, "n_points": int,
}
OUTPUT_KEYS = {"dir": str, "svg": bool, "title": str}
VARIABLE = MEDIUM_KEYS[:-2] + ("t_mirror", "cavity_detuning")


class ScenarioParseError(ValueError):
    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Div: operator.truediv, ast.Pow: operator.pow, ast.USub: operator.neg,
        ast.UAdd: operator.pos}


def _eval_number(text: str, key: str) -> float:
    def walk(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](walk(node.operand))
        raise ValueError
    try:
        return float(walk(ast.parse(text.strip(), mode="eval").body))
    except (SyntaxError, ValueError, ZeroDivisionError, TypeError):
        raise ScenarioParseError(f"key '{key}': cannot parse {text!r} as a number", key) from None


@dataclass(frozen=True)
class Variant:
    label: str
    medium: MediumParams
    cavity: CavityConfig
    factor: float = 1.0


@dataclass(frozen=True)
class Scenario:
    medium: MediumParams
    cavity: CavityConfig
    kind: str
    vary: str | None = None
    values: tuple[float, ...] = ()
    options: dict = field(default_factory=dict)
    out_dir: Path | None = None
    svg: bool = False
    title: str = ""
    source: Path | None = None
    digest: str = ""

    def option(self, key, default=None):
        return self.options.get(key, default)

    def variants(self) -> list[Variant]:
        """One validated parameter set per curve, in file order."""
        if self.vary is None:
            return [Variant("base", self.medium, self.cavity)]
        out = []
        ref = self.values[0]
        for v in self.values:
            medium, cavity = self.medium, self.cavity
            if self.vary in ("t_mirror", "cavity_detuning"):
                cavity = _build(CavityConfig, {**vars(cavity), self.vary: v})
            elif self.vary == "density":
                # optical density follows the atom number at fixed sigma_abs * length
                medium = _build(medium.evolve, {"density": v,
                                                "alpha": medium.alpha * v / medium.density})
            else:
                medium = _build(medium.evolve, {self.vary: v})
            factor = v / ref if self.vary in ("omega_c", "density") else 1.0
            out.append(Variant(f"{self.vary}={v:.6g}", medium, cavity, factor))
        return out


def _build(factory, kwargs):
    try:
        return factory(**kwargs)
    except ParameterError:
        raise
    except TypeError as exc:
        raise ParameterError(str(exc)) from None


def _section(cp, name, allowed, required=False):
    if not cp.has_section(name):
        if required:
            raise ParameterError(f"missing section [{name}]", name)
        return {}
    items = dict(cp.items(name))
    for key in items:
        if key not in allowed:
            raise ParameterError(f"unknown key '{key}' in [{name}]", key)
    return items


def _typed(items: dict, spec: dict) -> dict:
    out = {}
    for key, raw in items.items():
        kind = spec[key]
        if kind is str:
            out[key] = raw.strip()
        elif kind is bool:
            low = raw.strip().lower()
            if low not in ("yes", "no", "true", "false", "1", "0", "on", "off"):
                raise ScenarioParseError(f"key '{key}': expected a boolean, got {raw!r}", key)
            out[key] = low in ("yes", "true", "1", "on")
        elif kind is int:
            value = _eval_number(raw, key)
            if value != int(value):
                raise ScenarioParseError(f"key '{key}': expected an integer, got {raw!r}", key)
            out[key] = int(value)
        elif kind == "list":
            parts = [s for s in raw.replace("\n", ",").split(",") if s.strip()]
            out[key] = tuple(_eval_number(s, key) for s in parts)
        else:
            out[key] = _eval_number(raw, key)
    return out


def parse_scenario(text: str, source: Path | None = None) -> Scenario:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ScenarioParseError(f"malformed scenario file: {exc}".splitlines()[0]) from None
    for name in cp.sections():
        if name not in ("medium", "cavity", "sweep", "output"):
            raise ParameterError(f"unknown section [{name}]", name)

    medium_raw = _section(cp, "medium", MEDIUM_KEYS, required=True)
    cavity_raw = _section(cp, "cavity", CAVITY_KEYS, required=True)
    sweep = _typed(_section(cp, "sweep", SWEEP_KEYS, required=True), SWEEP_KEYS)
    output = _typed(_section(cp, "output", OUTPUT_KEYS), OUTPUT_KEYS)

    medium_vals = {k: _eval_number(v, k) for k, v in medium_raw.items()}
    cavity_vals = {k: _eval_number(v, k) for k, v in cavity_raw.items()}
    for key in MEDIUM_REQUIRED:
        if key not in medium_vals:
            raise ParameterError(f"missing required key '{key}' in [medium]", key)
    if "t_mirror" not in cavity_vals:
        raise ParameterError("missing required key 't_mirror' in [cavity]", "t_mirror")
    r_mirror = cavity_vals.pop("r_mirror", None)
    medium = _build(MediumParams, medium_vals)
    cavity = _build(CavityConfig, cavity_vals)
    if r_mirror is not None and r_mirror != cavity.r_mirror:
        raise ParameterError("r_mirror must equal 1 - t_mirror", "r_mirror")

    kind = sweep.pop("kind", None)
    if kind is None:
        raise ParameterError("missing required key 'kind' in [sweep]", "kind")
    if kind not in SWEEP_KINDS:
        raise ParameterError(f"unknown sweep kind {kind!r}; expected one of {SWEEP_KINDS}", "kind")
    vary = sweep.pop("vary", None)
    values = sweep.pop("values", ())
    if kind == "scaling":
        parameter = sweep.get("parameter")
        if parameter not in ("omega_c", "density"):
            raise ParameterError("scaling needs parameter = omega_c or density", "parameter")
        if "exponent" not in sweep:
            raise ParameterError("missing required key 'exponent' in [sweep]", "exponent")
        if vary not in (None, parameter):
            raise ParameterError("'vary' must match 'parameter' for scaling", "vary")
        vary = parameter
    if vary is not None:
        if vary not in VARIABLE:
            raise ParameterError(f"cannot vary {vary!r}", "vary")
        if not values:
            raise ParameterError("'vary' requires a non-empty 'values' list", "values")
    elif values:
        raise ParameterError("'values' given without 'vary'", "values")
    if kind == "hysteresis" and "i_i_max" not in sweep:
        raise ParameterError("missing required key 'i_i_max' in [sweep]", "i_i_max")
    if kind == "eta_scan":
        for key in ("delta_p_min", "delta_p_max"):
            if key not in sweep:
                raise ParameterError(f"missing required key '{key}' in [sweep]", key)
    for key in ("n_samples", "n_steps", "n_points"):
        if key in sweep and sweep[key] < 2:
            raise ParameterError(f"{key} must be >= 2", key)
    for key in ("x_max", "i_i_max", "i_t_max", "exponent"):
        if key in sweep and not (math.isfinite(sweep[key]) and sweep[key] > 0):
            raise ParameterError(f"{key} must be positive", key)

    scenario = Scenario(
        medium=medium, cavity=cavity, kind=kind, vary=vary, values=tuple(values),
        options=sweep, out_dir=Path(output["dir"]) if "dir" in output else None,
        svg=output.get("svg", False), title=output.get("title", ""), source=source,
        digest=hashlib.sha256(text.encode()).hexdigest(),
    )
    scenario.variants()  # validate every parameter set before any computation
    return scenario


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioParseError(f"cannot read scenario file {path}: {exc.strerror}") from None
    return parse_scenario(text, source=path)
