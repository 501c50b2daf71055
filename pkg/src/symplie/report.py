from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Defect:
    condition: str
    where: tuple
    value: object = None

    def __str__(self):
        return f"{self.condition} at {self.where}: {_show(self.value)}"


@dataclass(frozen=True)
class Report:
    """Outcome of a predicate: ok iff there are no defects."""

    defects: tuple = field(default_factory=tuple)
    notes: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.defects

    def __bool__(self):
        return self.ok

    def conditions(self) -> list:
        seen = []
        for d in self.defects:
            if d.condition not in seen:
                seen.append(d.condition)
        return seen

    def first(self, condition: str):
        return next((d for d in self.defects if d.condition == condition), None)

    def summary(self) -> str:
        if self.ok:
            return "ok"
        lines = [str(d) for d in self.defects[:20]]
        if len(self.defects) > 20:
            lines.append(f"... {len(self.defects) - 20} more")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "defects": [
                {"condition": d.condition, "where": list(d.where), "value": _jsonable(d.value)}
                for d in self.defects
            ],
            "notes": list(self.notes),
        }


def _show(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(_show(v) for v in value) + ")"
    return str(value)


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)
