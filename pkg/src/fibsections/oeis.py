"""OEIS-style fixtures and b-file input/output.

Fixture files are line-oriented ``A-number n value`` triples with ``#``
comments; a ``#@ A###### source=...`` directive comment may precede a block
to record where its terms came from. b-files are the OEIS submission format:
one ``n a(n)`` pair per line, indices from 1, no header.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from .convolved import conv_explicit
from .fib import fibonacci, lucas

A_NUMBER_RE = re.compile(r"^A[0-9]{6}$")

#: Fixture provenance: "reference" terms were hand-entered from published
#: listings of the sequence, "computed" terms were generated once by the
#: defining-convolution oracle and committed.
SOURCES = ("reference", "computed")


@dataclass(frozen=True)
class OeisFixture:
    a_number: str
    terms: tuple[int, ...]
    source: str = "computed"

    def __post_init__(self):
        if not A_NUMBER_RE.match(self.a_number):
            raise ValueError(f"bad A-number: {self.a_number!r}")
        if not self.terms:
            raise ValueError(f"{self.a_number}: fixture must have at least one term")
        if self.source not in SOURCES:
            raise ValueError(f"{self.a_number}: unknown source {self.source!r}")


def write_bfile(path: str | Path, terms: Iterable[int]) -> None:
    """Write ``n a(n)`` lines, n starting at 1, newline-terminated, no header."""
    lines = [f"{n} {value}\n" for n, value in enumerate(terms, start=1)]
    Path(path).write_text("".join(lines), encoding="ascii")


def read_bfile(path: str | Path) -> list[int]:
    """Parse a b-file back into its term list, checking the 1-based indexing."""
    terms: list[int] = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="ascii").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'n value', got {raw!r}")
        index, value = int(fields[0]), int(fields[1])
        if index != len(terms) + 1:
            raise ValueError(f"line {lineno}: index {index}, expected {len(terms) + 1}")
        terms.append(value)
    return terms


def parse_fixtures(lines: Iterable[str]) -> list[OeisFixture]:
    """Parse fixture lines into OeisFixture records (order of first appearance)."""
    terms: dict[str, dict[int, int]] = {}
    sources: dict[str, str] = {}
    order: list[str] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = re.match(r"^#@\s+(A[0-9]{6})\s+source=(\S+)", line)
            if match:
                sources[match.group(1)] = match.group(2)
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected 'A-number n value', got {raw!r}")
        a_number, index, value = fields[0], int(fields[1]), int(fields[2])
        if not A_NUMBER_RE.match(a_number):
            raise ValueError(f"line {lineno}: bad A-number {a_number!r}")
        if a_number not in terms:
            terms[a_number] = {}
            order.append(a_number)
        if index in terms[a_number]:
            raise ValueError(f"line {lineno}: duplicate index {index} for {a_number}")
        terms[a_number][index] = value
    fixtures = []
    for a_number in order:
        by_index = terms[a_number]
        if sorted(by_index) != list(range(1, len(by_index) + 1)):
            raise ValueError(f"{a_number}: indices must be 1..{len(by_index)} without gaps")
        fixtures.append(
            OeisFixture(
                a_number=a_number,
                terms=tuple(by_index[i] for i in range(1, len(by_index) + 1)),
                source=sources.get(a_number, "computed"),
            )
        )
    return fixtures


def load_fixture_file(path: str | Path) -> list[OeisFixture]:
    return parse_fixtures(Path(path).read_text(encoding="ascii").splitlines())


def format_fixtures(fixtures: Iterable[OeisFixture]) -> str:
    chunks = []
    for fixture in fixtures:
        chunks.append(f"#@ {fixture.a_number} source={fixture.source}\n")
        for index, value in enumerate(fixture.terms, start=1):
            chunks.append(f"{fixture.a_number} {index} {value}\n")
    return "".join(chunks)


def bundled_fixture_path() -> Path:
    return Path(__file__).parent / "data" / "oeis_fixtures.txt"


def load_bundled_fixtures() -> list[OeisFixture]:
    return load_fixture_file(bundled_fixture_path())


# ---------------------------------------------------------------------------
# A-number -> independent recomputation. Verification deliberately avoids the
# defining-convolution oracle that generated the committed fixture tails, so
# a fixture match is a genuine two-route agreement.
# ---------------------------------------------------------------------------

def _section_terms(k: int) -> Callable[[int], list[int]]:
    def generate(n_max: int) -> list[int]:
        return [conv_explicit(n, k, 0) for n in range(1, n_max + 1)]

    return generate


def _conv_fib_terms(s: int) -> Callable[[int], list[int]]:
    def generate(n_max: int) -> list[int]:
        return [conv_explicit(n, 1, s) for n in range(1, n_max + 1)]

    return generate


def _order_sweep_terms(n: int, k: int) -> Callable[[int], list[int]]:
    # the sequence in s at fixed term index n (s = 1, 2, 3, ...)
    def generate(s_max: int) -> list[int]:
        return [conv_explicit(n, k, s) for s in range(1, s_max + 1)]

    return generate


def fixture_generators() -> dict[str, Callable[[int], list[int]]]:
    """Recomputation routes for every bundled A-number."""
    generators: dict[str, Callable[[int], list[int]]] = {
        "A000045": lambda n_max: [fibonacci(n) for n in range(1, n_max + 1)],
        "A000032": lambda n_max: [lucas(n) for n in range(1, n_max + 1)],
        # odd-indexed Fibonacci numbers; not a k-section, mapped directly
        "A001519": lambda n_max: [fibonacci(2 * n - 1) for n in range(1, n_max + 1)],
        "A001906": _section_terms(2),
        "A001076": _section_terms(3),
        "A004187": _section_terms(4),
        "A049666": _section_terms(5),
        "A049660": _section_terms(6),
        "A049667": _section_terms(7),
        "A049668": _section_terms(8),
        "A049669": _section_terms(9),
        "A001629": _conv_fib_terms(1),
        "A001628": _conv_fib_terms(2),
        "A001872": _conv_fib_terms(3),
        "A001873": _conv_fib_terms(4),
        "A005570": _order_sweep_terms(3, 3),
        "A000027": _order_sweep_terms(2, 1),
        "A000096": _order_sweep_terms(3, 1),
        "A006503": _order_sweep_terms(4, 1),
        "A006504": _order_sweep_terms(5, 1),
    }
    return generators


@dataclass(frozen=True)
class FixtureResult:
    a_number: str
    terms: int
    mismatch_index: int | None = None  # 1-based index of first disagreement
    expected: int | None = None
    recomputed: int | None = None

    @property
    def passed(self) -> bool:
        return self.mismatch_index is None


def verify_fixture(fixture: OeisFixture) -> FixtureResult:
    """Recompute a fixture's terms by an independent route and compare exactly."""
    generators = fixture_generators()
    if fixture.a_number not in generators:
        raise KeyError(f"no generator known for {fixture.a_number}")
    recomputed = generators[fixture.a_number](len(fixture.terms))
    for index, (expected, got) in enumerate(zip(fixture.terms, recomputed), start=1):
        if expected != got:
            return FixtureResult(
                a_number=fixture.a_number,
                terms=len(fixture.terms),
                mismatch_index=index,
                expected=expected,
                recomputed=got,
            )
    return FixtureResult(a_number=fixture.a_number, terms=len(fixture.terms))


def verify_fixtures(fixtures: Iterable[OeisFixture]) -> list[FixtureResult]:
    return [verify_fixture(fixture) for fixture in fixtures]
