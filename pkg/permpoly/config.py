"""Module: Search configuration"""

import logging
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from permpoly.constants import DEFAULT_MAX_ORDER, DEFAULT_PREFILTER, jobs_from_env

LOG = logging.getLogger(__name__)

FieldFilter = Tuple[int, int, int]


@dataclass
class SearchConfig:
    """Data Class: knobs of the trace-form and Niho searches"""

    max_order: int = DEFAULT_MAX_ORDER
    jobs: int = field(default_factory=jobs_from_env)
    fields: Optional[List[FieldFilter]] = None
    out: Optional[Path] = None
    csv: Optional[Path] = None
    early_abort: bool = True
    use_cosets: bool = True
    prefilter: int = DEFAULT_PREFILTER

    def __post_init__(self):
        if self.max_order < 2:
            raise ValueError(f"max_order must be at least 2, got {self.max_order}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive, got {self.jobs}")
        if self.prefilter < 0:
            raise ValueError(f"prefilter must be non-negative, got {self.prefilter}")
        if self.fields is not None:
            self.fields = [tuple(int(v) for v in triple) for triple in self.fields]  # type: ignore
            for triple in self.fields:
                if len(triple) != 3:
                    raise ValueError(f"field filter entries are (p, j, n) triples, got {triple}")
        for name in ("out", "csv"):
            value = getattr(self, name)
            if value is not None and not isinstance(value, Path):
                setattr(self, name, Path(value))

    def allows(self, p: int, j: int, n: int) -> bool:
        """Method: is (p, j, n) inside the configured field filter"""

        return self.fields is None or (p, j, n) in self.fields

    def merged(self, overrides: Dict[str, Any]) -> "SearchConfig":
        """Method: copy with every non-None override applied"""

        known = {item.name for item in fields(self)}
        changes = {key: value for key, value in overrides.items() if value is not None and key in known}
        return replace(self, **changes)

    @classmethod
    def from_yaml(cls, path: Path) -> "SearchConfig":
        """Method: load a YAML mapping of SearchConfig fields"""

        with open(path) as file:
            data = yaml.safe_load(file) or {}
        if not isinstance(data, dict):
            raise ValueError(f"{path}: search config must be a mapping")
        known = {item.name for item in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"{path}: unknown search config key(s) {unknown}")
        LOG.debug("Search config from %s: %s", path, data)
        return cls(**data)
