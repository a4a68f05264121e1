"""Report envelopes for CLI output, and matplotlib figures written next to them."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import jsonschema

from . import __version__

_INT_LIST = {"type": "array", "items": {"type": "integer"}}

SCHEMAS: dict[str, dict] = {
    "balance": {
        "type": "object",
        "required": ["balanced"],
        "properties": {
            "balanced": {"type": "boolean"},
            "partition": {"type": "array", "items": _INT_LIST, "minItems": 2, "maxItems": 2},
            "witness_circuit": _INT_LIST,
        },
    },
    "frustration": {
        "type": "object",
        "required": ["frustration_index", "balanced"],
        "properties": {"frustration_index": {"type": "integer", "minimum": 0}},
    },
    "chromatic": {
        "type": "object",
        "required": ["value", "t_used", "k_used", "coloring", "chi"],
        "properties": {
            "value": {"type": "integer"},
            "t_used": {"type": "integer"},
            "k_used": {"type": "integer"},
            "coloring": {"type": "array", "items": {"type": "string"}},
        },
    },
    "spectrum": {
        "type": "object",
        "required": ["values", "min", "max", "classes", "sampled", "witnesses"],
        "properties": {
            "values": _INT_LIST,
            "sampled": {"type": "boolean"},
            "witnesses": {"type": "object"},
        },
    },
    "construct": {
        "type": "object",
        "required": ["family", "n", "edges"],
    },
    "verify": {
        "type": "object",
        "required": ["suite", "passed", "instances"],
        "properties": {"passed": {"type": "boolean"}, "instances": {"type": "integer"}},
    },
    "dp-check": {
        "type": "object",
        "required": ["t", "k", "transversal", "colorable", "agree"],
    },
}


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


@dataclass
class ReportEnvelope:
    command: str
    argv: list[str]
    input_digest: str | None
    result: dict
    nodes: int = 0
    seconds: float = 0.0
    version: str = __version__
    figures: list[str] = field(default_factory=list)

    def validate(self) -> None:
        jsonschema.validate(self.result, SCHEMAS[self.command])

    def as_dict(self) -> dict:
        return {
            "command": " ".join(self.argv),
            "input_digest": self.input_digest,
            "result": self.result,
            "stats": {"nodes": self.nodes, "seconds": round(self.seconds, 4)},
            "version": self.version,
            "figures": self.figures,
        }

    def render(self, fmt: str = "plain") -> str:
        self.validate()
        data = self.as_dict()
        if fmt == "machine":
            return json.dumps(data, sort_keys=True)
        lines: list[str] = []
        _flatten("", data, lines)
        return "\n".join(lines)


def _flatten(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        if not value and prefix:
            out.append(f"{prefix}: {{}}")
        for key, sub in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), sub, out)
    elif isinstance(value, list) and any(isinstance(x, (dict, list)) for x in value):
        for i, sub in enumerate(value):
            _flatten(f"{prefix}[{i}]", sub, out)
    elif isinstance(value, list):
        out.append(f"{prefix}: {' '.join(str(x) for x in value)}")
    elif value is None:
        out.append(f"{prefix}: -")
    elif isinstance(value, bool):
        out.append(f"{prefix}: {'yes' if value else 'no'}")
    else:
        out.append(f"{prefix}: {value}")


# figures


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def plot_spectrum(result, path: str | Path, title: str = "") -> Path:
    """Bar chart: number of switching classes attaining each chromatic value."""
    plt = _pyplot()
    values = sorted(result.counts)
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar([str(v) for v in values], [result.counts[v] for v in values], color="0.35", width=0.6)
    label = r"$\chi_{sym}$" if result.t is None else rf"$\chi^{{{result.t}}}_{{sym}}$"
    ax.set_xlabel(label)
    ax.set_ylabel("switching classes")
    if result.sampled:
        ax.set_ylabel("sampled classes")
    if title:
        ax.set_title(title, fontsize=10)
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_t_profile(values: dict[int, int], chi: int, delta: int, path: str | Path, title: str = "") -> Path:
    """chi^t_sym against t, with the 2 chi - t ceiling and the Delta + 1 / Delta + 2 levels."""
    plt = _pyplot()
    ts = sorted(values)
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.plot(ts, [2 * chi - t for t in ts], ls="--", color="0.6", label=r"$2\chi - t$")
    ax.axhline(delta + 2, ls=":", color="0.6", label=r"$\Delta + 2$")
    ax.plot(ts, [values[t] for t in ts], marker="o", color="k", label=r"$\chi^t_{sym}$")
    ax.set_xticks(ts)
    ax.set_xlabel("t")
    ax.set_ylabel("colors")
    ax.legend(frameon=False, fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
