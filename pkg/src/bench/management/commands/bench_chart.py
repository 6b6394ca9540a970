from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from bench.service.chart import chart_service
from bench.service.report import report_service
from listcore.exceptions import ListLabException


class Command(BaseCommand):
    help = "Render a long-form comparison CSV as a grouped bar chart (SVG)."

    def add_arguments(self, parser):
        parser.add_argument("csv_path")
        parser.add_argument("--output", "-o", help="SVG path (default: stdout)")

    def handle(self, *args, **options):
        try:
            text = Path(options["csv_path"]).read_text(encoding="utf-8")
            svg = chart_service.render(report_service.parse_long_csv(text))
            if options["output"]:
                Path(options["output"]).write_text(svg, encoding="utf-8", newline="\n")
            else:
                self.stdout.write(svg, ending="")
        except ListLabException as e:
            raise CommandError(f"{e.message}: {e.detail or ''}", returncode=1)
        except OSError as e:
            raise CommandError(str(e), returncode=1)
