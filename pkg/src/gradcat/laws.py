"""Law evaluation machinery shared by every checker.

A checker is a list of :class:`Law` objects.  Each law enumerates its own
bindings (assignments of diagram variables to object/morphism ids) and
evaluates the two legs of its diagram at a binding.  :func:`run` collects
every failure into a :class:`Report`; :func:`replay` re-evaluates a single
witness so callers can confirm that a reported failure is genuine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import IllTyped

Binding = Mapping[str, str]


@dataclass(frozen=True)
class Leg:
    """One side of a diagram: the steps taken and the morphism they compose to."""

    path: tuple[str, ...]
    result: str


@dataclass(frozen=True)
class Witness:
    law_id: str
    binding: dict
    lhs_path: tuple[str, ...]
    rhs_path: tuple[str, ...]
    lhs_result: str
    rhs_result: str

    def to_json(self) -> dict:
        return {
            "law_id": self.law_id,
            "binding": dict(self.binding),
            "lhs_path": list(self.lhs_path),
            "rhs_path": list(self.rhs_path),
            "lhs_result": self.lhs_result,
            "rhs_result": self.rhs_result,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Witness":
        return cls(
            doc["law_id"],
            dict(doc["binding"]),
            tuple(doc["lhs_path"]),
            tuple(doc["rhs_path"]),
            doc["lhs_result"],
            doc["rhs_result"],
        )


@dataclass(frozen=True)
class Law:
    law_id: str
    bindings: Callable[[], Iterable[dict]]
    evaluate: Callable[[Binding], tuple[Leg, Leg]]


@dataclass
class Report:
    """Verdicts for every law of one subject; an empty witness list is a pass."""

    subject: str = ""
    laws: dict[str, list[Witness]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(not ws for ws in self.laws.values())

    @property
    def failed(self) -> list[str]:
        return [lid for lid, ws in self.laws.items() if ws]

    @property
    def witnesses(self) -> list[Witness]:
        return [w for ws in self.laws.values() for w in ws]

    def merge(self, other: "Report") -> "Report":
        for lid, ws in other.laws.items():
            self.laws.setdefault(lid, []).extend(ws)
        return self

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "verdict": "pass" if self.ok else "fail",
            "laws": [
                {
                    "law_id": lid,
                    "status": "fail" if ws else "pass",
                    "witnesses": [w.to_json() for w in ws],
                }
                for lid, ws in self.laws.items()
            ],
        }

    def __str__(self) -> str:
        lines = [f"{self.subject or 'report'}: {'pass' if self.ok else 'FAIL'}"]
        for lid, ws in self.laws.items():
            lines.append(f"  {'ok  ' if not ws else 'FAIL'} {lid} ({len(ws)} witnesses)")
        return "\n".join(lines)


def _safe_eval(law: Law, binding: Binding) -> tuple[Leg, Leg]:
    try:
        return law.evaluate(binding)
    except IllTyped as exc:
        return Leg(("<leg>",), "<defined>"), Leg(("<leg>",), f"<ill-typed: {exc}>")


def run(laws: Sequence[Law], subject: str = "") -> Report:
    report = Report(subject)
    for law in laws:
        found = report.laws.setdefault(law.law_id, [])
        for b in law.bindings():
            lhs, rhs = _safe_eval(law, b)
            if lhs.result != rhs.result:
                found.append(
                    Witness(law.law_id, dict(b), lhs.path, rhs.path, lhs.result, rhs.result)
                )
    return report


def replay(laws: Sequence[Law], witness: Witness) -> bool:
    """True iff re-evaluating the witness binding still shows two different results."""
    for law in laws:
        if law.law_id == witness.law_id:
            lhs, rhs = _safe_eval(law, witness.binding)
            return lhs.result != rhs.result
    raise KeyError(witness.law_id)


def prefixed(prefix: str, laws: Sequence[Law]) -> list[Law]:
    return [Law(f"{prefix}/{law.law_id}", law.bindings, law.evaluate) for law in laws]


def family(key: str, values: Sequence[str], make: Callable[[str], Sequence[Law]]) -> list[Law]:
    """Index a law list by an extra binding variable ``key`` ranging over ``values``.

    Laws with the same id for different values are merged into one law whose
    bindings carry ``key``.
    """
    per = {v: {law.law_id: law for law in make(v)} for v in values}
    ids: list[str] = []
    for table in per.values():
        for lid in table:
            if lid not in ids:
                ids.append(lid)

    def make_law(lid: str) -> Law:
        def bindings() -> Iterator[dict]:
            for v in values:
                law = per[v].get(lid)
                if law is not None:
                    for b in law.bindings():
                        if key in b:
                            raise ValueError(f"family key {key!r} shadows a binding of {lid}")
                        yield {key: v, **b}

        def evaluate(b: Binding) -> tuple[Leg, Leg]:
            inner = {k: x for k, x in b.items() if k != key}
            return per[b[key]][lid].evaluate(inner)

        return Law(lid, bindings, evaluate)

    return [make_law(lid) for lid in ids]


def typing_leg(cat, mor: str, dom: str, cod: str) -> tuple[Leg, Leg]:
    """Legs comparing a morphism's actual boundary against the expected one."""
    actual = f"{cat.dom(mor)}->{cat.cod(mor)}"
    return Leg((f"boundary({mor})",), actual), Leg(("expected",), f"{dom}->{cod}")
