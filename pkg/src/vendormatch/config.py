"""Dataclass configuration for thresholds and pipeline runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

#: Defaults established by trial and error in the source experiments.
DEFAULT_R_THRESHOLD = 0.01
DEFAULT_FALLBACK_THRESHOLD = 0.009
DEFAULT_WUP_THRESHOLD = 0.9


@dataclass(frozen=True)
class Thresholds:
    """Decision thresholds for extraction and semantic matching.

    ``r_threshold`` admits a candidate whose best relatedness falls under
    it; ``fallback_threshold`` is the second-chance bound applied when the
    primary test fails; ``wup_threshold`` is the minimum phrase similarity
    that counts as a semantic match.
    """

    r_threshold: float = DEFAULT_R_THRESHOLD
    fallback_threshold: float = DEFAULT_FALLBACK_THRESHOLD
    wup_threshold: float = DEFAULT_WUP_THRESHOLD

    def __post_init__(self) -> None:
        if self.r_threshold <= 0:
            raise ValueError("r_threshold must be strictly positive")
        if self.fallback_threshold <= 0:
            raise ValueError("fallback_threshold must be strictly positive")
        if not 0 < self.wup_threshold <= 1:
            raise ValueError("wup_threshold must lie in (0, 1]")


@dataclass
class RunConfig:
    """Everything one end-to-end run needs."""

    vendors_dir: Path
    queries_dir: Path
    marking_path: Path
    taxonomy_path: Path
    thresholds: Thresholds = field(default_factory=Thresholds)
    output_format: str = "text"
    update_marking: bool = True

    def __post_init__(self) -> None:
        self.vendors_dir = Path(self.vendors_dir)
        self.queries_dir = Path(self.queries_dir)
        self.marking_path = Path(self.marking_path)
        self.taxonomy_path = Path(self.taxonomy_path)
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format: {self.output_format!r}")
