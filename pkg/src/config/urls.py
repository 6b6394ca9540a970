from django.urls import path
from ninja import NinjaAPI

from algorithms.exceptions import InvariantBreachException
from algorithms.urls import router as algorithms_router
from bench.exceptions import EmptyReportException
from bench.urls import router as bench_router
from oracle.exceptions import BoundsExceededException

base_api = NinjaAPI(title="Listlab", version="0.1.0")


base_api.add_router("algorithms", algorithms_router)
base_api.add_router("bench", bench_router)


@base_api.get("")
def health_check_handler(request):
    return {"ping": "pong"}


@base_api.exception_handler(BoundsExceededException)
def bounds_exceeded_exception(request, exc):
    return base_api.create_response(
        request,
        {"results": {"message": exc.message, "detail": exc.detail}},
        status=400,
    )


@base_api.exception_handler(EmptyReportException)
def empty_report_exception(request, exc):
    return base_api.create_response(
        request,
        {"results": {"message": exc.message}},
        status=400,
    )


@base_api.exception_handler(InvariantBreachException)
def invariant_breach_exception(request, exc):
    return base_api.create_response(
        request,
        {"results": {"message": exc.message, "detail": exc.detail}},
        status=500,
    )


urlpatterns = [
    path("", base_api.urls),
]
