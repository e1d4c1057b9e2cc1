"""CSV, SVG and manifest writers used by the command-line front end."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .bistability import HysteresisTrace, SteadyStateCurve, TransmissionProfile

__all__ = ["emit_csv", "emit_table", "emit_svg", "read_csv", "fmt"]


def fmt(value) -> str:
    """Fixed 12-significant-digit formatting used in every data file."""
    return f"{float(value):.12g}"


def _open(path: Path):
    try:
        return open(path, "w", newline="")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc


def emit_table(header, columns, path, comments=()) -> Path:
    """Write equal-length columns under ``header`` followed by ``#``-comment lines."""
    path = Path(path)
    with _open(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in zip(*columns):
            writer.writerow([v if isinstance(v, str) else fmt(v) for v in row])
        for line in comments:
            fh.write(line + "\n")
    return path


def emit_csv(data, path) -> Path:
    """Serialize a curve, transmission profile or hysteresis trace.

    Curves get ``x,i_in,i_out,transmission`` and ``#fold`` comment lines,
    profiles ``i_out,transmission`` with ``#peak`` lines, hysteresis traces
    ``i_in,i_out,branch`` (all ``up`` rows, then all ``down`` rows) with
    ``#jump`` lines.
    """
    if isinstance(data, SteadyStateCurve):
        comments = [f"#fold count={len(data.turning_points)}"]
        comments += [f"#fold x={fmt(tp.x)},i_in={fmt(tp.i_in)},i_out={fmt(tp.i_out)},kind={tp.kind}"
                     for tp in data.turning_points]
        return emit_table(["x", "i_in", "i_out", "transmission"],
                          [data.x, data.i_in, data.i_out, data.transmission], path, comments)
    if isinstance(data, TransmissionProfile):
        comments = [f"#peak count={len(data.peak_positions)}"]
        comments += [f"#peak i_out={fmt(p)},transmission={fmt(h)}"
                     for p, h in zip(data.peak_positions, data.peak_heights)]
        return emit_table(["i_out", "transmission"], [data.i_out, data.transmission], path,
                          comments)
    if isinstance(data, HysteresisTrace):
        rows = np.vstack([data.upward, data.downward])
        branch = ["up"] * len(data.upward) + ["down"] * len(data.downward)
        comments = [f"#jump count={len(data.jumps)}"]
        comments += [f"#jump i_in={fmt(j.i_in)},i_out_before={fmt(j.i_out_before)},"
                     f"i_out_after={fmt(j.i_out_after)},direction={j.direction}"
                     for j in data.jumps]
        return emit_table(["i_in", "i_out", "branch"], [rows[:, 0], rows[:, 1], branch], path,
                          comments)
    raise TypeError(f"cannot serialize {type(data).__name__} to CSV")


def read_csv(path):
    """Parse a file written by :func:`emit_csv`: ``(header, rows, comment_lines)``.

    Numeric cells become floats, others stay strings.
    """
    header, rows, comments = None, [], []
    with open(path, newline="") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                comments.append(line)
            elif header is None:
                header = line.split(",")
            elif line:
                rows.append([_cell(c) for c in line.split(",")])
    return header, rows, comments


def _cell(text):
    try:
        return float(text)
    except ValueError:
        return text


# color and dash per curve, in the order the figures list them
_STYLES = [("tab:blue", "-", 1.6), ("tab:red", ":", 1.8), ("tab:green", "--", 1.6),
           ("m", "-", 0.8), ("k", "-.", 1.2), ("tab:orange", "-", 1.2)]


def emit_svg(series, path, title="", xlabel="input intensity $I_i$ (units of $\\Gamma_2^2$)",
             ylabel="output intensity $I_t$ (units of $\\Gamma_2^2$)") -> Path:
    """Static SVG plot; ``series`` is a list of ``(label, xs, ys)``.

    Single-point series are drawn as a marker. Text is kept as SVG text and
    no date metadata is written, so output is reproducible.
    """
    import matplotlib
    from matplotlib.figure import Figure

    series = list(series)
    if not series or all(len(xs) == 0 for _, xs, _ in series):
        raise ValueError("emit_svg needs at least one non-empty series")
    path = Path(path)
    with matplotlib.rc_context({"svg.fonttype": "none", "svg.hashsalt": "ring-ob"}):
        fig = Figure(figsize=(6.0, 4.5))
        ax = fig.subplots()
        for i, (label, xs, ys) in enumerate(series):
            color, dash, width = _STYLES[i % len(_STYLES)]
            marker = "o" if len(xs) == 1 else None
            ax.plot(xs, ys, color=color, linestyle=dash, linewidth=width, marker=marker,
                    label=label, gid=f"curve-{i}")
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        if title:
            ax.set_title(title)
        if any(label for label, _, _ in series):
            ax.legend(frameon=False)
        fig.tight_layout()
        try:
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    return path
