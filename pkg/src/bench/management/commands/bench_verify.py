from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from listcore.models import CostModel
from oracle.exceptions import BoundsExceededException
from oracle.service.suite import verification_service


class Command(BaseCommand):
    help = (
        "Check every engine against the oracle on all small instances "
        "(exit 2 on any property violation)."
    )

    def add_arguments(self, parser):
        parser.add_argument(
            "--m", type=int, default=settings.LISTLAB["VERIFY_MAX_LIST_SIZE"]
        )
        parser.add_argument(
            "--n-max",
            type=int,
            default=settings.LISTLAB["VERIFY_MAX_SEQUENCE_LENGTH"],
        )
        parser.add_argument(
            "--cost-model",
            choices=[m.value for m in CostModel],
            default=settings.LISTLAB["COST_MODEL"],
        )

    def handle(self, *args, **options):
        try:
            summary = verification_service.verify_instances(
                options["m"], options["n_max"], CostModel(options["cost_model"])
            )
        except BoundsExceededException as e:
            raise CommandError(f"{e.message}: {e.detail}", returncode=1)

        if not summary.passed:
            for violation in summary.violations:
                self.stderr.write(
                    f"{violation.property}: {violation.instance} ({violation.detail})"
                )
            raise CommandError(
                f"{len(summary.violations)} property violations in "
                f"{summary.instances_checked} instances",
                returncode=2,
            )

        self.stdout.write(
            self.style.SUCCESS(
                f"PASS: {summary.instances_checked} instances checked "
                f"(m={summary.list_size}, n<={summary.max_sequence_length}, "
                f"{summary.cost_model.value} cost model, {summary.optimum} optimum)"
            )
        )
