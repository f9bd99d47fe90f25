"""Reports produced by the sampled law checkers.

A report gathers one section per law; a section records a verdict for
every (degree, sample) pair plus the sampler settings, so a failed run can
be replayed exactly.  The text serialization is line oriented: one line
per sample and one summary line per law, in the form

    law=<name> degree=<d> sample=<k> verdict=pass
    law=<name> degree=<d> sample=<k> verdict=fail input="..." output="..."
    law=<name> degrees=<lo>..<hi> samples=<n> seed=<s> violations=<k>
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .modules import FreeModule
from .sampling import Sampler


@dataclass(frozen=True)
class LawRecord:
    law: str
    degree: int
    sample: int
    ok: bool
    input: str | None = None
    output: str | None = None


@dataclass(frozen=True)
class LawSection:
    law: str
    lo: int
    hi: int
    sampler: Sampler
    records: tuple[LawRecord, ...]

    @property
    def violations(self) -> int:
        return sum(1 for r in self.records if not r.ok)

    def counterexamples(self) -> list[LawRecord]:
        return [r for r in self.records if not r.ok]

    def summary(self) -> str:
        return (
            f"law={self.law} degrees={self.lo}..{self.hi} "
            f"samples={self.sampler.samples} seed={self.sampler.seed} "
            f"violations={self.violations}"
        )


@dataclass(frozen=True)
class LawReport:
    sections: tuple[LawSection, ...]

    @property
    def ok(self) -> bool:
        return self.violations == 0

    @property
    def violations(self) -> int:
        return sum(section.violations for section in self.sections)

    def counterexamples(self) -> list[LawRecord]:
        return [r for section in self.sections for r in section.counterexamples()]

    def to_text(self) -> str:
        lines = []
        for section in self.sections:
            for r in section.records:
                line = f"law={r.law} degree={r.degree} sample={r.sample} verdict="
                if r.ok:
                    line += "pass"
                else:
                    line += f'fail input="{r.input}" output="{r.output}"'
                lines.append(line)
            lines.append(section.summary())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "violations": self.violations,
            "laws": [
                {
                    "law": s.law,
                    "degrees": {"lo": s.lo, "hi": s.hi},
                    "samples": s.sampler.samples,
                    "seed": s.sampler.seed,
                    "violations": s.violations,
                    "records": [
                        {
                            "degree": r.degree,
                            "sample": r.sample,
                            "verdict": "pass" if r.ok else "fail",
                            **({} if r.ok else {"input": r.input, "output": r.output}),
                        }
                        for r in s.records
                    ],
                }
                for s in self.sections
            ],
        }

    def merged(self, *others: "LawReport") -> "LawReport":
        sections = list(self.sections)
        for other in others:
            sections.extend(other.sections)
        return LawReport(tuple(sections))


#: ``at_degree(i)`` returns the module to sample at degree ``i`` together
#: with a pointwise check returning ``(ok, None)`` or
#: ``(ok, (input_text, output_text))``.
DegreeLaw = Callable[[int], tuple[FreeModule, Callable]]


def run_law(name: str, degrees, sampler: Sampler, at_degree: DegreeLaw) -> LawSection:
    """Evaluate one law over a degree window, sampling per degree."""
    window = sorted(set(degrees))
    if not window:
        raise ValueError("degree window must be nonempty")
    records = []
    for i in window:
        domain, check = at_degree(i)
        for j, element in enumerate(sampler.elements(domain, f"{name}@{i}")):
            ok, failure = check(element)
            if ok:
                records.append(LawRecord(name, i, j, True))
            else:
                records.append(LawRecord(name, i, j, False, failure[0], failure[1]))
    return LawSection(name, window[0], window[-1], sampler, tuple(records))
