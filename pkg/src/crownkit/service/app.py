"""FastAPI application wrapping the kernelization service layer."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import (
    ContractViolationError,
    FormatError,
    GuardError,
    InvalidInstanceError,
    PreconditionError,
)
from .handlers import LEMMA_TAGS, handle_kernelize, handle_lemma, handle_verify
from .models import (
    ErrorBody,
    KernelizeRequest,
    KernelizeResponse,
    LemmaRequest,
    LemmaResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="crownkit",
        description="Crown decompositions, expansion lemmas, and "
                    "certificate-checked kernelization as a service.",
        version="0.1.0")

    @app.exception_handler(PreconditionError)
    async def precondition_handler(_request: Request, exc: PreconditionError):
        body = ErrorBody(error="precondition", detail=str(exc), condition=exc.condition)
        return JSONResponse(status_code=409, content=body.model_dump())

    @app.exception_handler(GuardError)
    async def guard_handler(_request: Request, exc: GuardError):
        body = ErrorBody(error="guard", detail=str(exc))
        return JSONResponse(status_code=413, content=body.model_dump())

    @app.exception_handler(InvalidInstanceError)
    async def invalid_handler(_request: Request, exc: InvalidInstanceError):
        body = ErrorBody(error="invalid-instance", detail=str(exc))
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.exception_handler(FormatError)
    async def format_handler(_request: Request, exc: FormatError):
        body = ErrorBody(error="format", detail=str(exc))
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.exception_handler(ValueError)
    async def value_handler(_request: Request, exc: ValueError):
        body = ErrorBody(error="invalid-instance", detail=str(exc))
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.exception_handler(ContractViolationError)
    async def contract_handler(_request: Request, exc: ContractViolationError):
        body = ErrorBody(error="contract-violation", detail=str(exc))
        return JSONResponse(status_code=500, content=body.model_dump())

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/kernelize", response_model=KernelizeResponse)
    def kernelize(request: KernelizeRequest) -> KernelizeResponse:
        return handle_kernelize(request)

    @app.post("/lemma/{tag}", response_model=LemmaResponse)
    def lemma(tag: str, request: LemmaRequest) -> LemmaResponse:
        if tag not in LEMMA_TAGS:
            raise InvalidInstanceError(
                f"unknown lemma tag {tag!r}; expected one of {LEMMA_TAGS}")
        return handle_lemma(tag, request)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(request: VerifyRequest) -> VerifyResponse:
        return handle_verify(request)

    return app


app = create_app()
