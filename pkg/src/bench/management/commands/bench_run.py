from pathlib import Path
from typing import Dict, List

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from pydantic import ValidationError

from algorithms.exceptions import InvariantBreachException
from algorithms.models import VfcPolicy
from bench.request import GeneratorRequest, RunConfig
from bench.service.chart import chart_service
from bench.service.comparison import comparison_service
from bench.service.report import report_service
from corpus.models import ListOrderPolicy, SequenceDistribution
from corpus.service.preprocess import corpus_service
from listcore.exceptions import ListLabException
from listcore.models import CostModel


class Command(BaseCommand):
    help = (
        "Run list accessing algorithms over corpus files, the built-in demo "
        "instance or a generated workload and report total access costs."
    )

    def add_arguments(self, parser):
        defaults: Dict = settings.LISTLAB
        parser.add_argument("paths", nargs="*", help="corpus files, read as raw bytes")
        parser.add_argument(
            "--demo", action="store_true", help="list 123 with requests 122333"
        )
        parser.add_argument(
            "--generate", choices=[d.value for d in SequenceDistribution]
        )
        parser.add_argument("--alphabet-size", type=int, default=8)
        parser.add_argument("--length", type=int, default=1000)
        parser.add_argument(
            "--parameter", type=float, help="zipf exponent or mean run length"
        )
        parser.add_argument("--algos", default="fc,vfc")
        parser.add_argument(
            "--cost-model",
            choices=[m.value for m in CostModel],
            default=defaults["COST_MODEL"],
        )
        parser.add_argument(
            "--vfc-policy",
            choices=[p.value for p in VfcPolicy],
            default=defaults["VFC_POLICY"],
        )
        parser.add_argument(
            "--list-order",
            choices=[p.value for p in ListOrderPolicy],
            default=defaults["LIST_ORDER"],
        )
        parser.add_argument("--limit", type=int, help="serve only the first N requests")
        parser.add_argument(
            "--strip-bytes",
            default=defaults["STRIP_BYTES"],
            help="comma separated hex bytes removed before the run",
        )
        parser.add_argument("--csv", dest="csv_path")
        parser.add_argument("--wide-csv", dest="wide_csv_path")
        parser.add_argument("--chart", dest="chart_path")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--trace", action="store_true")
        parser.add_argument("--jobs", type=int, default=1)

    @staticmethod
    def build_config(options: Dict) -> RunConfig:
        algorithms: List[str] = [
            algo.strip().lower() for algo in options["algos"].split(",") if algo.strip()
        ]
        generator = None
        if options["generate"]:
            generator = GeneratorRequest(
                distribution=options["generate"],
                alphabet_size=options["alphabet_size"],
                length=options["length"],
                parameter=options["parameter"],
            )
        return RunConfig(
            paths=options["paths"],
            demo=options["demo"],
            generator=generator,
            algorithms=algorithms,
            cost_model=options["cost_model"],
            vfc_policy=options["vfc_policy"],
            list_order=options["list_order"],
            limit=options["limit"],
            strip_bytes=sorted(
                corpus_service.parse_strip_bytes(options["strip_bytes"])
            ),
            csv_path=options["csv_path"],
            wide_csv_path=options["wide_csv_path"],
            chart_path=options["chart_path"],
            seed=options["seed"],
            trace=options["trace"],
            jobs=options["jobs"],
        )

    @staticmethod
    def _write(path: str, text: str) -> None:
        try:
            Path(path).write_text(text, encoding="utf-8", newline="\n")
        except OSError as e:
            raise CommandError(f"cannot write {path}: {e}", returncode=1)

    def handle(self, *args, **options):
        try:
            config = self.build_config(options)
        except (ValidationError, ListLabException) as e:
            raise CommandError(f"invalid configuration: {e}", returncode=1)

        try:
            results = comparison_service.run(config)
        except InvariantBreachException as e:
            raise CommandError(f"{e.message}: {e.detail}", returncode=3)
        except ListLabException as e:
            raise CommandError(f"{e.message}: {e.detail or ''}", returncode=1)

        rows = [result.row for result in results]
        if config.csv_path:
            self._write(config.csv_path, report_service.write_long_csv(rows))
        if config.wide_csv_path:
            self._write(config.wide_csv_path, report_service.write_wide_csv(rows))
        if config.chart_path:
            self._write(config.chart_path, chart_service.render(rows))

        self.stdout.write(report_service.format_table(rows))
        if config.trace:
            for result in results:
                for algo, trace in result.traces.items():
                    self.stdout.write(
                        report_service.format_trace(result.row.file, algo, trace)
                    )
