"""
Run reports: what was asked, on which input, what came out, and how long it took
"""

import hashlib
import json
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, List, Optional, Sequence, Union


def input_digest(command: Sequence[str], paths: Sequence[Union[str, Path]] = ()) -> str:
    """sha256 over the command line and the bytes of every input file."""
    h = hashlib.sha256()
    h.update("\0".join(command).encode())
    for path in paths:
        h.update(b"\0")
        h.update(Path(path).read_bytes())
    return h.hexdigest()


@dataclass
class RunReport:
    command: List[str]
    digest: str
    outputs: Any = None
    trace: List[dict] = field(default_factory=list)
    exit_code: int = 0
    started: str = field(default_factory=lambda: datetime.now().isoformat())
    elapsed: float = 0.0
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    @classmethod
    def start(cls, command: Sequence[str], paths: Sequence[Union[str, Path]] = ()) -> "RunReport":
        return cls(list(command), input_digest(command, paths))

    def finish(self, outputs: Any = None, exit_code: int = 0, trace: Optional[List[dict]] = None) -> "RunReport":
        self.outputs = outputs
        self.exit_code = exit_code
        if trace is not None:
            self.trace = trace
        self.elapsed = round(time.perf_counter() - self._t0, 3)
        return self

    def to_dict(self) -> dict:
        data = asdict(self)
        data.pop("_t0")
        return data

    def write(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)
        return path
