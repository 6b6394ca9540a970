from typing import List

from django.conf import settings
from django.http import HttpRequest, HttpResponse
from ninja import Router, Schema

from algorithms.exceptions import InvariantBreachException
from bench.request import ComparisonRequestBody
from bench.response import ComparisonListResponse, ComparisonRow, VerificationResponse
from bench.service.chart import chart_service
from bench.service.comparison import comparison_service
from config.response import ErrorResponse, ObjectResponse, error_response, response
from listcore.exceptions import ListLabException
from listcore.models import CostModel
from oracle.exceptions import BoundsExceededException
from oracle.service.suite import verification_service


router = Router(tags=["Bench"])


class ChartRequestBody(Schema):
    rows: List[ComparisonRow]


@router.post(
    "/comparisons",
    response={
        200: ObjectResponse[ComparisonListResponse],
        400: ObjectResponse[ErrorResponse],
    },
)
def comparison_handler(request: HttpRequest, body: ComparisonRequestBody):
    try:
        results = comparison_service.compare(body)
    except InvariantBreachException:
        raise
    except ListLabException as e:
        return 400, error_response(msg=e.message, detail=e.detail)

    return 200, response(
        ComparisonListResponse(rows=[result.row for result in results])
    )


@router.post("/charts")
def chart_handler(request: HttpRequest, body: ChartRequestBody):
    return HttpResponse(
        chart_service.render(body.rows), content_type="image/svg+xml; charset=utf-8"
    )


@router.get(
    "/verify",
    response={
        200: ObjectResponse[VerificationResponse],
    },
)
def verify_handler(
    request: HttpRequest,
    m: int = settings.LISTLAB["VERIFY_MAX_LIST_SIZE"],
    n_max: int = settings.LISTLAB["VERIFY_MAX_SEQUENCE_LENGTH"],
    cost_model: CostModel = CostModel.FULL,
):
    max_m = settings.LISTLAB["VERIFY_MAX_LIST_SIZE"]
    max_n = settings.LISTLAB["VERIFY_MAX_SEQUENCE_LENGTH"]
    # the command line may go up to the enumeration limits, a request may not
    if m > max_m or n_max > max_n:
        raise BoundsExceededException(
            f"m={m}, n_max={n_max} above the HTTP limits m<={max_m}, n_max<={max_n}"
        )
    summary = verification_service.verify_instances(m, n_max, cost_model)
    return 200, response(VerificationResponse.build(summary=summary))
