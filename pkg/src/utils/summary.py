from pathlib import Path

import pandas as pd

COLUMNS = ["id", "calculus", "status", "lines", "seconds", "failing_line", "reason"]


class CorpusSummary:
    """
    Tabulates a corpus run and presents the totals.
    """

    def __init__(self, results: list):
        """
        Args:
            results (list): EntryResult objects, as returned by run_corpus.
        """
        if not results:
            raise ValueError("A corpus run with at least one entry is required.")
        self.results = results
        self.table = pd.DataFrame([r.to_dict() for r in results]).reindex(columns=COLUMNS)
        self.table["family"] = self.table["id"].str.split(".").str[0]

        self.kpis = {}
        self._calculate_kpis()

    def _calculate_kpis(self):
        accepted = self.table["status"] == "accepted"
        self.kpis["entries"] = len(self.table)
        self.kpis["accepted"] = int(accepted.sum())
        self.kpis["rejected"] = int((~accepted).sum())
        self.kpis["total_seconds"] = float(self.table["seconds"].sum())
        self.kpis["total_lines"] = int(self.table["lines"].sum())
        self.kpis["slowest"] = self.table.loc[self.table["seconds"].idxmax(), "id"]
        self.kpis["per_calculus"] = self.table.groupby("calculus")["status"].count().to_dict()
        certified = [r.certified for r in self.results if r.certified is not None]
        self.kpis["certified"] = len(certified)
        self.kpis["certification_failures"] = sum(not all(c.values()) for c in certified)

    @property
    def ok(self) -> bool:
        return self.kpis["rejected"] == 0

    def rejected(self) -> pd.DataFrame:
        return self.table[self.table["status"] != "accepted"]

    def by_family(self) -> pd.DataFrame:
        return (self.table.assign(accepted=self.table["status"] == "accepted")
                .groupby("family")
                .agg(entries=("id", "count"), accepted=("accepted", "sum"), lines=("lines", "sum"))
                .reset_index())

    def to_csv(self, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.table.drop(columns="family").to_csv(path, index=False)
        return path

    def print_summary(self):
        """Prints the run totals, the per-family counts and every rejection."""

        print(f"\n{'='*20} Corpus Summary {'='*20}")

        print("\n[ Totals ]")
        print(f"  Entries: {self.kpis['entries']}")
        print(f"  - Accepted: {self.kpis['accepted']}")
        print(f"  - Rejected: {self.kpis['rejected']}")
        print(f"  Proof lines: {self.kpis['total_lines']}")
        print(f"  Time: {self.kpis['total_seconds']:.2f} s (slowest: {self.kpis['slowest']})")

        print("\n[ Calculi ]")
        for name, count in sorted(self.kpis["per_calculus"].items()):
            print(f"  {name}: {count}")

        print("\n[ Families ]")
        for row in self.by_family().itertuples(index=False):
            print(f"  {row.family:<24} {row.accepted}/{row.entries} accepted, {row.lines} lines")

        if self.kpis["certified"]:
            print("\n[ Semantic Certification ]")
            print(f"  Certified entries: {self.kpis['certified']}")
            print(f"  - Failures: {self.kpis['certification_failures']}")

        if not self.ok:
            print("\n[ Rejections ]")
            for row in self.rejected().itertuples(index=False):
                print(f"  {row.id}: line {int(row.failing_line)}: {row.reason}")

        print(f"\n{'='*56}")
