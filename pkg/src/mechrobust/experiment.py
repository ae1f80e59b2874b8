"""Declarative experiment grids and their aggregated result tables.

A config is a JSON document::

    {
      "name": "table6",
      "hw": [{"label": "PW", "type": "pw_standin"}],
      "sw": [{"label": "SF95", "type": "scale_free", "n": 95, "m_attach": 2}],
      "coupling": [{"label": "10%", "mode": "random", "q": 0.1}],
      "strategies": ["degree", "betweenness", "closeness", "random"],
      "replicas": 30,
      "base_seed": 0,
      "tie_break": "lowest",
      "output": {"path": "table6.csv", "format": "csv"}
    }

Network ``type`` is one of ``modular`` (n, m_modules, base_density, p),
``scale_free`` (n, m_attach, preprune_fraction), ``pw_standin``, ``dsm``
(path) or ``edge_list`` (path). Either layer may be omitted to study a
single network; its label is then ``-`` and ``coupling`` must be omitted.

Seeds: replica ``r`` uses ``base_seed + r``. Each stochastic stream (a
generator, a coupling block, a random attack) draws its seed as the first
64-bit word of ``SeedSequence(base_seed + r, spawn_key=[crc32(stream)])``
where ``stream`` names the draw, e.g. ``"hw:HM"`` or
``"attack:random:PW|SF95|10%"``.
"""
from __future__ import annotations

import csv
import io as _io
import json
import logging
import statistics
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

import numpy as np

from .attack import Strategy, attack_sequence
from .coupling import CouplingSpec
from .errors import InputError
from .generators import (
    ModularSpec,
    ScaleFreeSpec,
    generate,
    generate_pw_standin,
)
from .graph import Graph, compose_interdependent
from .robustness import robustness_coefficient

log = logging.getLogger(__name__)

NONE_LABEL = "-"
CSV_COLUMNS = ("hw", "sw", "coupling", "strategy", "mean", "std", "n")


def stream_seed(base_seed: int, replica: int, stream: str) -> int:
    ss = np.random.SeedSequence(base_seed + replica, spawn_key=[zlib.crc32(stream.encode())])
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class NetworkSource:
    label: str
    type: str
    params: dict = field(default_factory=dict)

    TYPES = ("modular", "scale_free", "pw_standin", "dsm", "edge_list")

    @classmethod
    def from_dict(cls, d: dict, default_label: str) -> NetworkSource:
        d = dict(d)
        kind = d.pop("type", None)
        if kind not in cls.TYPES:
            raise InputError(f"network type must be one of {cls.TYPES}, got {kind!r}")
        label = str(d.pop("label", default_label))
        return cls(label, kind, d)

    def to_dict(self) -> dict:
        return {"label": self.label, "type": self.type, **self.params}

    @property
    def stochastic(self) -> bool:
        if self.type in ("dsm", "edge_list"):
            return False
        if self.type == "modular":
            return self.params.get("p", 0.0) > 0 or self.params.get("base_density", 1.0) < 1.0
        return True

    def build(self, seed: int) -> Graph:
        from . import io as gio

        p = self.params
        if self.type == "modular":
            return generate(ModularSpec(p["n"], p["m_modules"], p.get("base_density", 1.0),
                                        p.get("p", 0.0), seed))
        if self.type == "scale_free":
            return generate(ScaleFreeSpec(p["n"], p.get("m_attach", 2), seed,
                                          p.get("preprune_fraction", 0.0)))
        if self.type == "pw_standin":
            return generate_pw_standin(seed)
        if self.type == "dsm":
            return gio.read_dsm(p["path"])
        return gio.read_edge_list(p["path"])


@dataclass(frozen=True)
class CouplingEntry:
    label: str
    spec: CouplingSpec

    @classmethod
    def from_dict(cls, d: dict) -> CouplingEntry:
        d = dict(d)
        label = d.pop("label", None)
        spec = CouplingSpec(**d)
        if label is None:
            label = f"{spec.mode}:{spec.q if spec.mode == 'random' else spec.kind}"
        return cls(str(label), spec)

    def to_dict(self) -> dict:
        out = {"label": self.label, "mode": self.spec.mode}
        for key in ("q", "kind", "pattern_path"):
            if getattr(self.spec, key) is not None:
                out[key] = getattr(self.spec, key)
        if self.spec.mode != "random":
            out["placement"] = self.spec.placement
        return out


@dataclass(frozen=True)
class ExperimentConfig:
    hw: tuple[NetworkSource, ...]
    sw: tuple[NetworkSource, ...]
    coupling: tuple[CouplingEntry, ...]
    strategies: tuple[str, ...]
    replicas: int = 30
    base_seed: int = 0
    tie_break: str = "lowest"
    output_path: str | None = None
    output_format: str = "csv"
    name: str = "experiment"

    def __post_init__(self):
        if not self.hw and not self.sw:
            raise InputError("config needs at least one hw or sw network")
        if self.hw and self.sw and not self.coupling:
            raise InputError("two-layer configs need at least one coupling entry")
        if not (self.hw and self.sw) and self.coupling:
            raise InputError("coupling given but only one layer configured")
        if self.replicas < 1:
            raise InputError("replicas must be at least 1")
        if not self.strategies:
            raise InputError("no attack strategies configured")
        for s in self.strategies:
            Strategy(s)
        if self.tie_break not in ("lowest", "random"):
            raise InputError("tie_break must be 'lowest' or 'random'")
        if self.output_format not in ("csv", "json"):
            raise InputError("output format must be csv or json")
        for group in (self.hw, self.sw, self.coupling):
            labels = [x.label for x in group]
            if len(set(labels)) != len(labels):
                raise InputError(f"duplicate labels {labels}")

    @classmethod
    def from_dict(cls, d: dict) -> ExperimentConfig:
        try:
            out = d.get("output", {}) or {}
            return cls(
                hw=tuple(NetworkSource.from_dict(x, f"hw{i}") for i, x in enumerate(d.get("hw", []) or [])),
                sw=tuple(NetworkSource.from_dict(x, f"sw{i}") for i, x in enumerate(d.get("sw", []) or [])),
                coupling=tuple(CouplingEntry.from_dict(x) for x in d.get("coupling", []) or []),
                strategies=tuple(str(s).lower() for s in d.get("strategies", [s.value for s in Strategy])),
                replicas=int(d.get("replicas", 30)),
                base_seed=int(d.get("base_seed", 0)),
                tie_break=d.get("tie_break", "lowest"),
                output_path=out.get("path"),
                output_format=out.get("format", "csv"),
                name=d.get("name", "experiment"),
            )
        except (TypeError, KeyError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"invalid experiment config: {exc}") from exc

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "hw": [x.to_dict() for x in self.hw],
            "sw": [x.to_dict() for x in self.sw],
            "coupling": [x.to_dict() for x in self.coupling],
            "strategies": list(self.strategies),
            "replicas": self.replicas,
            "base_seed": self.base_seed,
            "tie_break": self.tie_break,
        }
        if self.output_path:
            d["output"] = {"path": self.output_path, "format": self.output_format}
        return d

    def with_overrides(self, **kw) -> ExperimentConfig:
        d = {f: getattr(self, f) for f in self.__dataclass_fields__}
        d.update({k: v for k, v in kw.items() if v is not None})
        return ExperimentConfig(**d)

    def cell_keys(self) -> list[tuple[str, str, str, str]]:
        hw = [x.label for x in self.hw] or [NONE_LABEL]
        sw = [x.label for x in self.sw] or [NONE_LABEL]
        cp = [x.label for x in self.coupling] or [NONE_LABEL]
        return list(product(hw, sw, cp, self.strategies))


def load_config(path) -> ExperimentConfig:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: {exc}") from None
    return ExperimentConfig.from_dict(data)


@dataclass
class Cell:
    values: list[float] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def mean(self) -> float:
        return statistics.fmean(self.values) if self.values else float("nan")

    @property
    def std(self) -> float:
        return statistics.stdev(self.values) if len(self.values) > 1 else 0.0


@dataclass
class ResultTable:
    """Robustness values keyed by (hw, sw, coupling, strategy)."""

    cells: dict[tuple[str, str, str, str], Cell] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    def __getitem__(self, key) -> Cell:
        return self.cells[tuple(key)]

    def mean(self, hw=NONE_LABEL, sw=NONE_LABEL, coupling=NONE_LABEL, strategy="random") -> float:
        return self.cells[(hw, sw, coupling, strategy)].mean

    def __eq__(self, other):
        if not isinstance(other, ResultTable):
            return NotImplemented
        return list(self.cells.items()) == list(other.cells.items())


def _replica_task(args):
    config, hw_src, sw_src, cp, replica = args
    base = config.base_seed
    out = []
    hw = hw_src.build(stream_seed(base, replica, f"hw:{hw_src.label}")) if hw_src else None
    sw = sw_src.build(stream_seed(base, replica, f"sw:{sw_src.label}")) if sw_src else None
    labels = (hw_src.label if hw_src else NONE_LABEL, sw_src.label if sw_src else NONE_LABEL,
              cp.label if cp else NONE_LABEL)
    tag = "|".join(labels)
    if hw is not None and sw is not None:
        b = cp.spec.build(hw.id_bound, sw.id_bound, stream_seed(base, replica, f"coupling:{tag}"))
        g = compose_interdependent(hw, sw, b).graph
    else:
        g = hw if hw is not None else sw
    for strategy in config.strategies:
        seed = stream_seed(base, replica, f"attack:{strategy}:{tag}")
        trace = attack_sequence(g, strategy, seed=seed, tie_break=config.tie_break)
        out.append((labels + (strategy,), robustness_coefficient(trace).r_percent))
    return out


def run_experiment(config: ExperimentConfig, workers: int = 1, write: bool = True) -> ResultTable:
    """Synthesise, couple, attack and score every cell of the grid.

    Each (hw, sw, coupling, replica) combination is an independent task;
    ``workers > 1`` spreads tasks over processes. Aggregation follows the
    config's grid order, so output does not depend on scheduling. Failed
    tasks are recorded in ``table.failures``; when writing, a
    ``<output>.failures.json`` manifest accompanies the partial results.
    """
    hws = config.hw or (None,)
    sws = config.sw or (None,)
    cps = config.coupling or (None,)
    tasks = [(config, h, s, c, r) for h in hws for s in sws for c in cps for r in range(config.replicas)]
    table = ResultTable({key: Cell() for key in config.cell_keys()})

    def coords(task):
        _, h, s, c, r = task
        return {"hw": h.label if h else NONE_LABEL, "sw": s.label if s else NONE_LABEL,
                "coupling": c.label if c else NONE_LABEL, "replica": r}

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_replica_task, t) for t in tasks]
            outcomes = []
            for t, f in zip(tasks, futures):
                try:
                    outcomes.append((t, f.result(), None))
                except Exception as exc:  # noqa: BLE001 - reported in the manifest
                    outcomes.append((t, None, exc))
    else:
        outcomes = []
        for t in tasks:
            try:
                outcomes.append((t, _replica_task(t), None))
            except Exception as exc:  # noqa: BLE001 - reported in the manifest
                outcomes.append((t, None, exc))

    for t, result, exc in outcomes:
        if exc is not None:
            entry = {**coords(t), "error": f"{type(exc).__name__}: {exc}"}
            log.error("cell failed: %s", entry)
            table.failures.append(entry)
            continue
        for key, r in result:
            table.cells[key].values.append(r)

    if write and config.output_path:
        write_results(table, config.output_path, config.output_format)
        manifest = Path(str(config.output_path) + ".failures.json")
        if table.failures:
            manifest.write_text(json.dumps(table.failures, indent=2) + "\n")
    return table


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def results_csv(table: ResultTable) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for (hw, sw, cp, st), cell in table.cells.items():
        w.writerow([hw, sw, cp, st, _fmt(cell.mean), _fmt(cell.std), cell.n])
    return buf.getvalue()


def results_json(table: ResultTable) -> str:
    nested: dict = {}
    for (hw, sw, cp, st), cell in table.cells.items():
        nested.setdefault(hw, {}).setdefault(sw, {}).setdefault(cp, {})[st] = {
            "mean": round(cell.mean, 4),
            "std": round(cell.std, 4),
            "n": cell.n,
            "values": cell.values,
        }
    return json.dumps(nested, indent=2) + "\n"


def write_results(table: ResultTable, path, fmt: str = "csv") -> None:
    """CSV: one row per cell, columns hw, sw, coupling, strategy, mean, std, n.

    JSON: nested hw -> sw -> coupling -> strategy -> {mean, std, n, values}.
    Means and standard deviations carry 4 decimals; per-replica values are
    kept at full precision so the JSON form round-trips.
    """
    if not table.cells:
        raise InputError("refusing to write an empty result table")
    text = results_csv(table) if fmt == "csv" else results_json(table) if fmt == "json" else None
    if text is None:
        raise InputError(f"unknown result format {fmt!r}")
    Path(path).write_text(text)


def read_results_json(path) -> ResultTable:
    with open(path) as fh:
        nested = json.load(fh)
    table = ResultTable()
    for hw, by_sw in nested.items():
        for sw, by_cp in by_sw.items():
            for cp, by_st in by_cp.items():
                for st, cell in by_st.items():
                    table.cells[(hw, sw, cp, st)] = Cell([float(v) for v in cell["values"]])
    return table
