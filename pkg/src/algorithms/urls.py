from django.http import HttpRequest
from ninja import Router

from algorithms.exceptions import InvariantBreachException
from algorithms.models import RunReport
from algorithms.request import AlgorithmRunRequestBody
from algorithms.response import RunReportResponse
from algorithms.service.runner import run_service
from config.response import ErrorResponse, ObjectResponse, error_response, response
from listcore.exceptions import ListLabException
from listcore.models import ListState, RequestSequence


router = Router(tags=["Algorithms"])


@router.post(
    "/runs",
    response={
        200: ObjectResponse[RunReportResponse],
        400: ObjectResponse[ErrorResponse],
    },
)
def algorithm_run_handler(request: HttpRequest, body: AlgorithmRunRequestBody):
    frequencies = body.frequencies or [0] * len(body.list)
    if len(frequencies) != len(body.list):
        return 400, error_response(
            msg="Frequencies Must Align With List",
            detail=f"{len(frequencies)} counts for {len(body.list)} symbols",
        )

    try:
        report: RunReport = run_service.run_algorithm(
            body.algorithm,
            ListState.from_symbols(body.list, dict(zip(body.list, frequencies))),
            RequestSequence.of(body.sequence),
            model=body.cost_model,
            policy=body.vfc_policy,
            snapshots=body.snapshots,
        )
    except InvariantBreachException:
        raise
    except ListLabException as e:
        return 400, error_response(msg=e.message, detail=e.detail)

    return 200, response(RunReportResponse.build(report=report))
