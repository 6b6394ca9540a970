import csv
import io
from typing import Dict, Iterable, List, Tuple

from bench.exceptions import MalformedReportException
from bench.response import ComparisonRow
from listcore.models import StepRecord


LONG_HEADER = ["file", "n", "list_size", "algo", "cost_model", "total_cost"]


class ReportService:
    @staticmethod
    def write_long_csv(rows: Iterable[ComparisonRow]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(LONG_HEADER)
        for row in rows:
            for algo, cost in row.costs.items():
                writer.writerow(
                    [row.file, row.n, row.list_size, algo, row.cost_model.value, cost]
                )
        return buffer.getvalue()

    @staticmethod
    def _row(key: Tuple, costs: Dict[str, int]) -> ComparisonRow:
        file, n, list_size, cost_model = key
        return ComparisonRow(
            file=file, n=n, list_size=list_size, cost_model=cost_model, costs=costs
        )

    def parse_long_csv(self, text: str) -> List[ComparisonRow]:
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames != LONG_HEADER:
            raise MalformedReportException(f"header {reader.fieldnames}")

        rows: List[ComparisonRow] = []
        try:
            key, costs = None, {}
            for record in reader:
                record_key = (
                    record["file"],
                    int(record["n"]),
                    int(record["list_size"]),
                    record["cost_model"],
                )
                # a repeated algorithm opens the next input, even under the same key
                if record_key != key or record["algo"] in costs:
                    if costs:
                        rows.append(self._row(key, costs))
                    key, costs = record_key, {}
                costs[record["algo"]] = int(record["total_cost"])
            if costs:
                rows.append(self._row(key, costs))
        except (TypeError, ValueError) as e:
            raise MalformedReportException(str(e))
        return rows

    @staticmethod
    def write_wide_csv(rows: List[ComparisonRow]) -> str:
        algos = list(rows[0].costs) if rows else []
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(
            ["File Name", "Size of Req Seq", "Size of List"]
            + [f"Access Cost {algo.upper()}" for algo in algos]
        )
        for row in rows:
            writer.writerow(
                [row.file, row.n, row.list_size]
                + [row.costs.get(algo, "") for algo in algos]
            )
        return buffer.getvalue()

    @staticmethod
    def format_table(rows: List[ComparisonRow]) -> str:
        algos = list(dict.fromkeys(algo for row in rows for algo in row.costs))
        header = ["file", "n", "m"] + algos
        lines = [
            [row.file, str(row.n), str(row.list_size)]
            + [str(row.costs.get(algo, "-")) for algo in algos]
            for row in rows
        ]
        widths = [
            max(len(cell) for cell in column) for column in zip(header, *lines)
        ]
        return "\n".join(
            "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
            for line in [header] + lines
        )

    @staticmethod
    def format_trace(file: str, algo: str, trace: List[StepRecord]) -> str:
        return "\n".join(
            f"{file} {algo} step={number} request={record.request} "
            f"position={record.position_before} cost={record.cost_charged} "
            f"consumed={record.requests_consumed} list={record.list_after}"
            for number, record in enumerate(trace, start=1)
        )


report_service = ReportService()
