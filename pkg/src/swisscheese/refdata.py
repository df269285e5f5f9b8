"""Bundled reference sequences and the check of computed counts against them.

Each table lives in ``data/<family>-<model>-<class>.tsv``: a ``#`` provenance
line followed by ``n<TAB>value`` rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from swisscheese.counting import series
from swisscheese.terms import Family, SizeModel, TermClass

TableKey = tuple[Family, SizeModel, TermClass]


class NoTable(LookupError):
    pass


@dataclass(frozen=True)
class ReferenceTable:
    family: Family
    model: SizeModel
    term_class: TermClass
    values: tuple[int, ...]
    provenance: str

    @property
    def name(self) -> str:
        return f"{self.family.value}/{self.model.value}/{self.term_class.value}"

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def parse_table(text: str) -> tuple[str, tuple[int, ...]]:
    """Split a table file into its provenance line and values indexed by n."""
    provenance = ""
    values: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            provenance = provenance or line.lstrip("#").strip()
            continue
        n, value = line.split("\t")
        if int(n) != len(values):
            raise ValueError(f"line {lineno}: expected n = {len(values)}, found {n}")
        values.append(int(value))
    if not provenance:
        raise ValueError("table has no provenance line")
    return provenance, tuple(values)


@lru_cache(maxsize=None)
def _load_all() -> dict[TableKey, ReferenceTable]:
    tables = {}
    for entry in sorted(resources.files("swisscheese").joinpath("data").iterdir(), key=lambda p: p.name):
        if not entry.name.endswith(".tsv"):
            continue
        family, model, term_class = entry.name[: -len(".tsv")].split("-")
        provenance, values = parse_table(entry.read_text(encoding="utf-8"))
        key = (Family(family), SizeModel(model), TermClass(term_class))
        tables[key] = ReferenceTable(*key, values, provenance)
    return tables


def reference_tables() -> list[ReferenceTable]:
    return list(_load_all().values())


def reference(family: Family, model: SizeModel, term_class: TermClass) -> ReferenceTable:
    key = (Family(family), SizeModel(model), TermClass(term_class))
    try:
        return _load_all()[key]
    except KeyError:
        raise NoTable("no reference data for " + "/".join(k.value for k in key)) from None


@dataclass(frozen=True)
class KeyResult:
    name: str
    compared: int
    first_mismatch: int | None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def line(self) -> str:
        status = "PASS" if self.passed else f"FAIL@{self.first_mismatch}"
        return f"{self.name}\t{status}"


@dataclass
class Report:
    results: list[KeyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


def verify(max_n: int, tables: list[ReferenceTable] | None = None) -> Report:
    """Compare computed series with every reference table up to ``max_n``."""
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    report = Report()
    for table in reference_tables() if tables is None else tables:
        upto = min(max_n, len(table) - 1)
        computed = series(table.family, table.model, table.term_class, upto)
        mismatch = next((n for n, v in enumerate(computed) if v != table[n]), None)
        report.results.append(KeyResult(table.name, upto + 1, mismatch))
    return report
