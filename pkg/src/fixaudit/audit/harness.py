from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..formats import decode_graph6, encode_graph6
from .claims import CLAIMS, HYPOTHESES, UNITS, AuditConfig, run_check, violates
from .corpus import ConfigError, CorpusSpec, corpus
from .minimize import minimize


@dataclass
class AuditReport:
    claim: str
    config: dict
    corpus: dict
    graphs_checked: int = 0
    instances_checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    runtime_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "hypothesis": HYPOTHESES[self.claim],
            "unit": UNITS[self.claim],
            "config": self.config,
            "corpus": self.corpus,
            "graphs_checked": self.graphs_checked,
            "instances_checked": self.instances_checked,
            "skipped": self.skipped,
            "violations": self.violations,
            "runtime_ms": self.runtime_ms,
        }

    @classmethod
    def from_json(cls, data: dict) -> "AuditReport":
        return cls(
            claim=data["claim"],
            config=data["config"],
            corpus=data["corpus"],
            graphs_checked=data["graphs_checked"],
            instances_checked=data["instances_checked"],
            skipped=data["skipped"],
            violations=data["violations"],
            runtime_ms=data["runtime_ms"],
        )


def _audit_one(args):
    claim, g6, cfg = args
    g = decode_graph6(g6)
    out = run_check(claim, g, cfg)
    if out is None:
        return None
    instances, violations = out
    minimized = None
    if violations and cfg.minimize:
        minimized = encode_graph6(minimize(g, violates(claim, cfg)))
    return instances, [
        {"graph6": g6, "witness": w, "minimized_graph6": minimized} for w in violations
    ]


def run_audit(claim: str, spec: CorpusSpec, config: AuditConfig | None = None, progress=None) -> AuditReport:
    """Audit one claim over a corpus; results are merged in corpus order."""
    if claim not in CLAIMS:
        raise ConfigError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}")
    config = config or AuditConfig()
    if config.jobs < 1:
        raise ConfigError("jobs must be >= 1")
    start = time.perf_counter()
    report = AuditReport(claim, config.to_json(), spec.to_json())
    tasks = [(claim, encode_graph6(g), config) for g in corpus(spec)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = pool.map(_audit_one, tasks, chunksize=8)
            results = list(results)
    else:
        results = map(_audit_one, tasks)
    for i, res in enumerate(results, 1):
        if progress is not None:
            progress(i, len(tasks))
        if res is None:
            report.skipped += 1
            continue
        instances, violations = res
        report.graphs_checked += 1
        report.instances_checked += instances
        report.violations.extend(violations)
    report.runtime_ms = round((time.perf_counter() - start) * 1000, 3)
    return report


def reverify(claim: str, violation: dict, config: AuditConfig | None = None) -> bool:
    """Recheck a stored violation from its graph6 alone.

    The raw witness must recur when the claim is rerun on the stored graph, and
    a stored minimized graph must still violate the claim.
    """
    config = config or AuditConfig()
    g = decode_graph6(violation["graph6"])
    out = run_check(claim, g, config)
    if out is None or violation["witness"] not in out[1]:
        return False
    if violation.get("minimized_graph6"):
        return violates(claim, config)(decode_graph6(violation["minimized_graph6"]))
    return True


def config_from_json(data: dict) -> AuditConfig:
    return AuditConfig(**{k: data[k] for k in ("max_cycle_len", "large_graph_cycle_cap", "minimize", "jobs") if k in data})


def reverify_report(report: AuditReport) -> list[int]:
    """Indices of violations that do not re-verify."""
    cfg = config_from_json(report.config)
    return [i for i, v in enumerate(report.violations) if not reverify(report.claim, v, cfg)]
