"""Report records and their JSON / CSV encodings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .statmap import Phase


def encode(value):
    """Turn report values into JSON-ready data.

    Complex numbers become ``{"re", "im"}``; phases add ``"exponent"`` as an
    exact ``"p/q"`` string; fractions become ``"p/q"`` strings.
    """
    if isinstance(value, Phase):
        z = complex(value)
        return {"re": z.real, "im": z.imag, "exponent": str(value.r)}
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        z = complex(value)
        return {"re": z.real, "im": z.imag}
    if isinstance(value, np.ndarray):
        return [encode(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def decode_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass
class Report:
    command: str
    params: dict
    rows: list[dict] = field(default_factory=list)
    residuals: dict[str, float] = field(default_factory=dict)
    tol: float = 1e-10

    @property
    def passed(self) -> bool:
        return all(r < self.tol for r in self.residuals.values())

    def worst(self, name: str, value: float) -> None:
        self.residuals[name] = max(self.residuals.get(name, 0.0), float(value))

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": encode(self.params),
            "rows": encode(self.rows),
            "residuals": encode(self.residuals),
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=True)

    def to_csv(self) -> str:
        flat_rows = [dict(section="row", **_flatten(encode(r))) for r in self.rows]
        flat_rows += [{"section": "residual", "name": k, "value": v}
                      for k, v in self.residuals.items()]
        flat_rows.append({"section": "passed", "value": self.passed})
        columns = []
        for r in flat_rows:
            columns += [c for c in r if c not in columns]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat_rows)
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()

    @classmethod
    def from_json(cls, text: str) -> Report:
        data = json.loads(text)
        return cls(data["command"], data["params"], data["rows"], data["residuals"],
                   tol=data["params"].get("tol", 1e-10))


def _flatten(data, prefix=""):
    out = {}
    if isinstance(data, dict):
        for k, v in data.items():
            out.update(_flatten(v, f"{prefix}{k}."))
    elif isinstance(data, list):
        for i, v in enumerate(data):
            out.update(_flatten(v, f"{prefix}{i}."))
    else:
        out[prefix.rstrip(".")] = data
    return out


def config_dict(config) -> dict:
    return asdict(config)
