from dataclasses import dataclass
from dataclasses import field as dataclass_field


@dataclass
class Report:
    tool_version: str
    command: str
    params: dict = dataclass_field(default_factory=dict)
    results: list = dataclass_field(default_factory=list)
    overall_pass: bool = True
    wallclock_ms: float = 0.0
