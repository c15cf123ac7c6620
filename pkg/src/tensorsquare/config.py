"""Run configuration shared by the library entry points and the CLI."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, replace
from pathlib import Path

from .coset_enum import DEFAULT_ELEMENT_CAP, DEFAULT_MAX_COSETS

NU_MODES = ("full", "generators", "auto")
FORMATS = ("json", "text")


@dataclass(frozen=True)
class RunConfig:
    max_cosets: int = DEFAULT_MAX_COSETS
    element_cap: int = DEFAULT_ELEMENT_CAP
    nu_mode: str = "auto"
    corpus: str = "standard"
    output: str = "text"
    cache_dir: Path | None = None
    seed: int = 0

    def __post_init__(self):
        if self.max_cosets <= 0 or self.element_cap <= 0:
            raise ValueError("coset and element limits must be positive")
        if self.nu_mode not in NU_MODES:
            raise ValueError(f"nu_mode must be one of {NU_MODES}")
        if self.output not in FORMATS:
            raise ValueError(f"output must be one of {FORMATS}")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.cache_dir is not None and not isinstance(self.cache_dir, Path):
            object.__setattr__(self, "cache_dir", Path(self.cache_dir))

    def with_(self, **kw) -> "RunConfig":
        return replace(self, **kw)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["cache_dir"] = None if self.cache_dir is None else str(self.cache_dir)
        return d

    def computation_key(self) -> str:
        """Hash of the fields that can change a computed result."""
        key = {k: getattr(self, k) for k in ("max_cosets", "element_cap", "nu_mode", "seed")}
        return hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()[:16]
