"""Command-line front end.

Subcommands::

    fockfringe fringe --source pair_fock:2 --out-csv fringes.csv --out-json summary.json
    fockfringe verify
    fockfringe state --source kitten:2 --stage inside

Sources are written ``name[:arg,arg,...]``: ``single_photon``,
``pair_fock:K``, ``squeezed_vacuum:ALPHA,CUTOFF[,POSTSELECT]``, ``noon:N``,
``kitten:N``. A JSON config file may supply any option; flags given on the
command line win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

from . import analysis, checks, fock, network, sources

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2


class ConfigError(ValueError):
    pass


@dataclass
class SourceSpec:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def parse(cls, value) -> "SourceSpec":
        if isinstance(value, dict):
            value = dict(value)
            kind = value.pop("type", None)
            if kind is None:
                raise ConfigError("source object needs a 'type' field")
            return cls(kind, value)._validated()
        if not isinstance(value, str):
            raise ConfigError(f"source must be a string or object, got {value!r}")
        kind, _, argtext = value.partition(":")
        args = [a.strip() for a in argtext.split(",")] if argtext else []
        names = {
            "single_photon": [],
            "pair_fock": ["k"],
            "squeezed_vacuum": ["alpha", "cutoff", "postselect_total"],
            "noon": ["n"],
            "kitten": ["n"],
        }.get(kind.strip())
        if names is None:
            raise ConfigError(f"unknown source {kind!r}")
        if len(args) > len(names):
            raise ConfigError(f"too many arguments for source {kind!r}")
        return cls(kind.strip(), dict(zip(names, args)))._validated()

    def _validated(self) -> "SourceSpec":
        p = self.params
        try:
            if self.kind == "single_photon":
                pass
            elif self.kind in ("pair_fock", "noon", "kitten"):
                key = "k" if self.kind == "pair_fock" else "n"
                if key not in p:
                    raise ConfigError(f"source {self.kind!r} needs parameter {key!r}")
                p[key] = int(p[key])
            elif self.kind == "squeezed_vacuum":
                if "alpha" not in p:
                    raise ConfigError("squeezed_vacuum needs alpha")
                p["alpha"] = _parse_complex(p["alpha"])
                p["cutoff"] = int(p.get("cutoff", sources.DEFAULT_PAIR_CUTOFF))
                post = p.get("postselect_total")
                p["postselect_total"] = None if post in (None, "") else int(post)
            else:
                raise ConfigError(f"unknown source {self.kind!r}")
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"bad parameters for {self.kind}: {exc}") from None
        return self

    def label(self) -> str:
        if not self.params:
            return self.kind
        parts = []
        for v in self.params.values():
            if isinstance(v, complex):
                v = f"{v.real:g}" if v.imag == 0 else f"{v:g}"
            parts.append("" if v is None else str(v))
        return f"{self.kind}:{','.join(parts).rstrip(',')}"

    def build(self) -> fock.PureState:
        p = self.params
        try:
            if self.kind == "single_photon":
                return sources.single_photon()
            if self.kind == "pair_fock":
                return sources.pair_fock(p["k"])
            if self.kind == "noon":
                return sources.noon(p["n"])
            if self.kind == "kitten":
                return sources.kitten_input(p["n"])
            spec = sources.SqueezedVacuumSpec(p["alpha"], p["cutoff"])
            state = sources.squeezed_vacuum(spec)
            if p["postselect_total"] is not None:
                state, prob = fock.postselect_total(state, p["postselect_total"])
                if prob == 0.0:
                    raise ConfigError(
                        f"post-selection on {p['postselect_total']} photons has probability 0"
                    )
            return state
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def default_stage(self) -> str:
        # a NOON state already lives inside the interferometer
        return "output" if self.kind == "noon" else "full"


def _parse_complex(value) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ConfigError("complex alpha must be given as [re, im]")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, str):
        return complex(value.replace(" ", ""))
    return complex(value)


@dataclass
class ExperimentConfig:
    source: SourceSpec
    grid_size: int = analysis.DEFAULT_GRID_SIZE
    patterns: list[analysis.DetectionPattern] | None = None
    out_csv: str | None = None
    out_json: str | None = None
    threshold: float = analysis.HARMONIC_THRESHOLD
    stage: str | None = None

    @classmethod
    def from_mapping(cls, raw: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        if raw.get("source") is None:
            raise ConfigError("config needs a source")
        data = dict(raw)
        data["source"] = SourceSpec.parse(data["source"])
        try:
            data["grid_size"] = int(data.get("grid_size") or analysis.DEFAULT_GRID_SIZE)
            threshold = data.get("threshold")
            data["threshold"] = float(threshold) if threshold is not None else analysis.HARMONIC_THRESHOLD
            pats = data.get("patterns")
            if isinstance(pats, str):
                pats = pats.split(",")
            if pats is not None:
                data["patterns"] = [
                    analysis.DetectionPattern.parse(p) if isinstance(p, str)
                    else analysis.DetectionPattern(p)
                    for p in pats
                ]
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
        config = cls(**data)
        config.validate()
        return config

    def validate(self) -> None:
        if self.grid_size < 8:
            raise ConfigError("grid_size must be at least 8")
        if self.threshold <= 0:
            raise ConfigError("threshold must be positive")
        if self.stage is not None and self.stage not in analysis.STAGES:
            raise ConfigError(f"stage must be one of {analysis.STAGES}")

    @property
    def effective_stage(self) -> str:
        return self.stage or self.source.default_stage()


def fringe_csv(table: analysis.FringeTable, patterns=None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["phi", "pattern", "probability"])
    chosen = table.patterns if patterns is None else list(patterns)
    for i, phi in enumerate(table.phi):
        for pattern in chosen:
            values = table.series.get(tuple(pattern))
            prob = 0.0 if values is None else values[i]
            writer.writerow([f"{phi:.17g}", pattern.label(), f"{prob:.17g}"])
    return buf.getvalue()


def summarize(config: ExperimentConfig, table: analysis.FringeTable) -> dict:
    chosen = table.patterns if config.patterns is None else config.patterns
    entries = []
    for pattern in chosen:
        values = table.series.get(tuple(pattern))
        if values is None:
            values = 0.0 * table.phi
        entry = {
            "pattern": pattern.label(),
            "visibility": analysis.visibility(values),
            "harmonics": {
                str(k): v
                for k, v in analysis.harmonic_spectrum(values, table.phi, config.threshold).items()
            },
            "reduction_factor": (
                analysis.debroglie_reduction_factor(values, config.threshold, table.phi)
                if values.any() else 0
            ),
        }
        if pattern.total() == 4 and len(pattern) == 2:
            entry["classical_reference"] = [
                float(v) for v in analysis.classical_reference(pattern, table.phi)
            ]
        entries.append(entry)
    return {
        "source": config.source.label(),
        "stage": config.effective_stage,
        "grid_size": config.grid_size,
        "patterns": entries,
    }


def run(config: ExperimentConfig) -> dict:
    """Scan the configured source, write the requested files, return the summary."""
    state = config.source.build()
    table = analysis.fringe_scan(state, config.grid_size, config.effective_stage)
    summary = summarize(config, table)
    if config.out_csv:
        Path(config.out_csv).write_text(fringe_csv(table, config.patterns))
    if config.out_json:
        Path(config.out_json).write_text(json.dumps(summary, indent=2) + "\n")
    return summary


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fockfringe", description="Multi-photon Mach-Zehnder fringe simulator")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fr = sub.add_parser("fringe", help="scan the arm phase and analyse the fringes")
    fr.add_argument("--config", type=Path)
    fr.add_argument("--source")
    fr.add_argument("--grid-size", dest="grid_size", type=int)
    fr.add_argument("--patterns", help="comma-separated nA:nB list")
    fr.add_argument("--out-csv", dest="out_csv")
    fr.add_argument("--out-json", dest="out_json")
    fr.add_argument("--threshold", type=float)
    fr.add_argument("--stage", choices=analysis.STAGES)

    sub.add_parser("verify", help="compare simulations with the closed-form fringe formulas")

    st = sub.add_parser("state", help="print the amplitude table of a source")
    st.add_argument("--source", required=True)
    st.add_argument("--stage", choices=("input", "inside"), default="input",
                    help="'inside' applies the input beam splitter first")
    return parser


def _load_config(args) -> ExperimentConfig:
    raw: dict = {}
    if args.config is not None:
        try:
            raw = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
    for name in ("source", "grid_size", "patterns", "out_csv", "out_json", "threshold", "stage"):
        value = getattr(args, name)
        if value is not None:
            raw[name] = value
    return ExperimentConfig.from_mapping(raw)


def _cmd_fringe(args) -> int:
    config = _load_config(args)
    summary = run(config)
    for entry in summary["patterns"]:
        print(f"{entry['pattern']:>6s}  visibility {entry['visibility']:.12f}  "
              f"reduction {entry['reduction_factor']}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = checks.run_all()
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def _cmd_state(args) -> int:
    state = SourceSpec.parse(args.source).build()
    if args.stage == "inside":
        state = network.apply_beam_splitter(state, network.BeamSplitter())
    print(f"{'ket':>12s} {'re':>14s} {'im':>14s} {'prob':>14s}")
    for ket, amp in state:
        print(f"{','.join(map(str, ket)):>12s} {amp.real:14.10f} {amp.imag:14.10f} {abs(amp) ** 2:14.10f}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"fringe": _cmd_fringe, "verify": _cmd_verify, "state": _cmd_state}[args.command]
    try:
        return handler(args)
    except ConfigError as exc:
        print(f"fockfringe: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"fockfringe: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
