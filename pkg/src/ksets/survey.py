"""Iterative edge-stripping survey: strip, filter, deduplicate, classify.

One stage takes the surviving KS representatives at b edges and produces
those at b-1: strip one edge from each input, drop unconnected children,
remove exact duplicates, remove isomorphic duplicates, keep the KS sets,
and archive any criticals among them.  Stages checkpoint to the output
directory (survivors, criticals, one JSON record each) and a rerun resumes
at the first missing stage.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .canon import canonical_form
from .cell600 import build_600cell
from .coloring import has_parity_proof, is_critical, is_ks
from .loops import biggest_loop
from .mmp import (
    Hypergraph,
    LENIENT,
    is_connected,
    parse_mmp,
    serialize_mmp,
)
from .strip import SamplerSeed, StripPlan, strip_one_each

log = logging.getLogger(__name__)

# every critical set reported so far falls in this window; anything outside
# would be a genuinely new kind and deserves a loud flag, not a quiet tally
KNOWN_VERTEX_RANGE = (26, 60)
KNOWN_EDGE_RANGE = (13, 41)


class ConfigError(ValueError):
    """Malformed survey configuration."""


@dataclass(frozen=True)
class SurveyConfig:
    """Parameters of one survey run.

    ``increment`` is either a fixed thinning increment or None for
    auto-calibration against ``target`` from a pilot sample at each stage.
    """

    start: Hypergraph | None = None  # None: the built 600-cell 60-75
    target: int = 50000
    min_edges: int = 0
    increment: float | None = None
    selection_mode: str = "uniform"
    seed: SamplerSeed = field(default_factory=lambda: SamplerSeed(0))
    workers: int = 1
    output_dir: Path = Path("survey-out")

    def __post_init__(self) -> None:
        if self.target < 1:
            raise ConfigError("target must be at least 1")
        if not 0 <= self.min_edges <= 75:
            raise ConfigError("edge range must lie within [0, 75]")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.increment is not None and self.increment < 1:
            raise ConfigError("increment must be >= 1")

    def start_hypergraph(self) -> Hypergraph:
        return self.start if self.start is not None else build_600cell().hypergraph


def parse_config(text: str, base_dir: Path | None = None) -> SurveyConfig:
    """Key-value config lines: ``key = value``, '#' comments, blank lines
    ignored.  Keys: start (path to an MMP file, or '600-cell'), target,
    min-edges, increment (number or 'auto'), mode, seed, workers, out."""
    values: dict[str, str] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {ln}: expected 'key = value'")
        key, val = (part.strip() for part in line.split("=", 1))
        if key in values:
            raise ConfigError(f"line {ln}: duplicate key {key!r}")
        values[key] = val
    known = {"start", "target", "min-edges", "increment", "mode", "seed",
             "workers", "out"}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"unknown keys: {sorted(unknown)}")
    base = base_dir or Path(".")
    kwargs: dict = {}
    try:
        if values.get("start", "600-cell") != "600-cell":
            path = base / values["start"]
            lines = path.read_text().splitlines()
            hs = [parse_mmp(line, LENIENT) for line in lines if line.strip()]
            if len(hs) != 1:
                raise ConfigError(f"{path}: expected exactly one MMP line")
            kwargs["start"] = hs[0]
        if "target" in values:
            kwargs["target"] = int(values["target"])
        if "min-edges" in values:
            kwargs["min_edges"] = int(values["min-edges"])
        inc = values.get("increment", "auto")
        kwargs["increment"] = None if inc == "auto" else float(inc)
        if "mode" in values:
            kwargs["selection_mode"] = values["mode"]
        if "seed" in values:
            kwargs["seed"] = SamplerSeed(int(values["seed"]))
        if "workers" in values:
            kwargs["workers"] = int(values["workers"])
        if "out" in values:
            kwargs["output_dir"] = base / values["out"]
    except (ValueError, OSError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc
    return SurveyConfig(**kwargs)


@dataclass(frozen=True)
class StageResult:
    """Survivor counts down one stage's filter chain."""

    edges: int
    inputs: int
    children: int
    connected: int
    exact_unique: int
    non_isomorphic: int
    ks: int
    criticals_odd: int
    criticals_even: int
    seconds: float

    def __post_init__(self) -> None:
        chain = (
            self.children,
            self.connected,
            self.exact_unique,
            self.non_isomorphic,
            self.ks,
        )
        if any(a < b for a, b in zip(chain, chain[1:])):
            raise ValueError(f"filter chain counts increased: {chain}")

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)

    @staticmethod
    def from_json(line: str) -> "StageResult":
        return StageResult(**json.loads(line))


def calibrate_increment(sample: Sequence[Hypergraph], target: int) -> float:
    """Thinning increment so one strip+connectivity stage over the sample's
    population lands near ``target`` survivors.

    The pilot measures the connected-child yield per input; increment 1 is
    returned (with a warning) when the pilot finds no survivors at all.
    """
    sample = list(sample)
    if not sample:
        raise ValueError("calibration sample is empty")
    if target < 1:
        raise ValueError("target must be at least 1")
    survivors = 0
    for h in sample:
        for i in range(h.num_edges):
            if is_connected(h.without_edge(i)):
                survivors += 1
    if survivors == 0:
        log.warning("calibration pilot found no surviving children")
        return 1.0
    return max(1.0, survivors / target)


def _is_ks_line(line: str) -> tuple[str, bool]:
    h = parse_mmp(line)
    return line, is_ks(h)


def _critical_line(line: str) -> tuple[str, bool]:
    h = parse_mmp(line)
    return line, is_critical(h)


def _pmap(fn, lines: list[str], workers: int) -> list[tuple[str, bool]]:
    if workers <= 1 or len(lines) < 64:
        return [fn(line) for line in lines]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(lines) // (workers * 8))
        return list(pool.map(fn, lines, chunksize=chunk))


def run_stage(
    inputs: Sequence[Hypergraph], cfg: SurveyConfig, edges: int
) -> tuple[StageResult, list[Hypergraph], list[Hypergraph]]:
    """One filter stage: returns (record, KS survivors, criticals)."""
    t0 = time.monotonic()
    if cfg.increment is not None:
        increment = cfg.increment
    else:
        pilot = list(inputs[:100])
        increment = calibrate_increment(pilot, cfg.target)
    plan = StripPlan(
        k=1,
        increment=increment,
        selection_mode=cfg.selection_mode,
        seed=SamplerSeed(cfg.seed.seed + edges, cfg.seed.provenance),
    )
    # strip_one_each thins per the plan and removes exact duplicates
    stripped = list(strip_one_each(inputs, plan))
    kept = [h for h in stripped if is_connected(h)]
    seen_certs: set[str] = set()
    reps: list[Hypergraph] = []
    for h in kept:
        cert = canonical_form(h).text
        if cert not in seen_certs:
            seen_certs.add(cert)
            reps.append(h)
    lines = [serialize_mmp(h) for h in reps]
    ks_flags = dict(_pmap(_is_ks_line, lines, cfg.workers))
    ks_sets = [h for h, line in zip(reps, lines) if ks_flags[line]]
    ks_lines = [serialize_mmp(h) for h in ks_sets]
    crit_flags = dict(_pmap(_critical_line, ks_lines, cfg.workers))
    criticals = [h for h, line in zip(ks_sets, ks_lines) if crit_flags[line]]
    odd = sum(1 for h in criticals if h.num_edges % 2 == 1)
    result = StageResult(
        edges=edges,
        inputs=len(inputs),
        children=len(stripped),
        connected=len(kept),
        exact_unique=len(kept),
        non_isomorphic=len(reps),
        ks=len(ks_sets),
        criticals_odd=odd,
        criticals_even=len(criticals) - odd,
        seconds=round(time.monotonic() - t0, 3),
    )
    return result, ks_sets, criticals


def _stage_paths(out: Path, edges: int) -> tuple[Path, Path, Path]:
    return (
        out / f"edges-{edges:02d}.mmp",
        out / f"edges-{edges:02d}.criticals.mmp",
        out / f"edges-{edges:02d}.json",
    )


def _load_lines(path: Path) -> list[Hypergraph]:
    return [
        parse_mmp(line)
        for line in path.read_text().splitlines()
        if line.strip()
    ]


def run_survey(cfg: SurveyConfig) -> Iterator[StageResult]:
    """Drive stages from the start hypergraph down to cfg.min_edges.

    Every stage writes its survivors, criticals, and record before the next
    begins; stages whose files already exist are loaded, not recomputed, so
    an interrupted run resumes where it stopped.  All randomness derives
    from cfg.seed.
    """
    out = cfg.output_dir
    out.mkdir(parents=True, exist_ok=True)
    start = cfg.start_hypergraph()
    survivors = [start]
    for edges in range(start.num_edges - 1, cfg.min_edges - 1, -1):
        mmp_path, crit_path, json_path = _stage_paths(out, edges)
        if mmp_path.exists() and json_path.exists():
            survivors = _load_lines(mmp_path)
            result = StageResult.from_json(json_path.read_text())
            yield result
            continue
        if not survivors:
            log.info("no survivors left at %d edges; stopping", edges + 1)
            return
        result, survivors, criticals = run_stage(survivors, cfg, edges)
        for h in criticals:
            _flag_if_novel(h)
        mmp_path.write_text(
            "".join(serialize_mmp(h) + "\n" for h in survivors)
        )
        crit_path.write_text(
            "".join(serialize_mmp(h) + "\n" for h in criticals)
        )
        json_path.write_text(result.to_json() + "\n")
        yield result


def _flag_if_novel(h: Hypergraph) -> None:
    vlo, vhi = KNOWN_VERTEX_RANGE
    elo, ehi = KNOWN_EDGE_RANGE
    if not (vlo <= h.num_vertices <= vhi and elo <= h.num_edges <= ehi):
        log.warning(
            "critical set %s outside every known signature range; "
            "this would be a new kind of set, please inspect: %s",
            h.signature,
            serialize_mmp(h),
        )


@dataclass(frozen=True)
class CriticalFinding:
    hypergraph: Hypergraph
    parity: bool
    loop_size: int


def find_criticals(hs: Iterable[Hypergraph]) -> Iterator[CriticalFinding]:
    """Criticals among the inputs, annotated and deduplicated.

    Each critical survivor is emitted once per isomorphism class with its
    parity-proof flag and maximal loop size, ready for signature tallies.
    """
    seen: set[str] = set()
    for h in hs:
        if not is_critical(h):
            continue
        cert = canonical_form(h).text
        if cert in seen:
            continue
        seen.add(cert)
        _flag_if_novel(h)
        size, _ = biggest_loop(h)
        yield CriticalFinding(h, has_parity_proof(h), size)
