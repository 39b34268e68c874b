"""FastAPI application: the three commands as endpoints plus a resident
table registry so repeated evaluations skip re-parsing large files.

Run with `halfsib serve` or `uvicorn halfsib.service.app:app`.
"""

from __future__ import annotations

import threading

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..embeddings import EmbeddingTable
from ..errors import HalfsibError, IoFailure
from .handlers import load_table, run_evaluate, run_postprocess, run_significance
from .schemas import (
    ErrorBody,
    EvaluateRequest,
    EvaluateResponse,
    PostprocessRequest,
    PostprocessResponse,
    SignificanceRequest,
    SignificanceResponse,
    TableInfo,
    TableLoadRequest,
)

app = FastAPI(
    title="halfsib",
    description=(
        "Word-embedding postprocessing (half-sibling ridge regression and a "
        "principal-component removal baseline), evaluation, and paired "
        "significance testing."
    ),
    version="0.1.0",
)

_tables: dict[str, EmbeddingTable] = {}
_tables_lock = threading.Lock()


@app.exception_handler(HalfsibError)
async def _domain_error(_: Request, exc: HalfsibError) -> JSONResponse:
    body = ErrorBody(error=type(exc).__name__, message=str(exc))
    return JSONResponse(status_code=400, content=body.model_dump())


@app.exception_handler(ValueError)
async def _value_error(_: Request, exc: ValueError) -> JSONResponse:
    body = ErrorBody(error="ValueError", message=str(exc))
    return JSONResponse(status_code=400, content=body.model_dump())


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "tables": len(_tables)}


@app.post("/tables", response_model=TableInfo)
def load_table_endpoint(req: TableLoadRequest) -> TableInfo:
    table, _ = load_table(req.path, req.expect_header, req.lowercase)
    with _tables_lock:
        _tables[req.name] = table
    return TableInfo(name=req.name, vocab_size=len(table), dim=table.dim)


@app.get("/tables", response_model=list[TableInfo])
def list_tables() -> list[TableInfo]:
    with _tables_lock:
        return [
            TableInfo(name=name, vocab_size=len(t), dim=t.dim)
            for name, t in sorted(_tables.items())
        ]


@app.delete("/tables/{name}")
def delete_table(name: str) -> JSONResponse:
    with _tables_lock:
        found = _tables.pop(name, None)
    if found is None:
        body = ErrorBody(error="UnknownTable", message=f"no resident table named {name!r}")
        return JSONResponse(status_code=404, content=body.model_dump())
    return JSONResponse(status_code=200, content={"deleted": name})


@app.post("/postprocess", response_model=PostprocessResponse)
def postprocess_endpoint(req: PostprocessRequest) -> PostprocessResponse:
    return run_postprocess(req)


@app.post("/evaluate", response_model=EvaluateResponse)
def evaluate_endpoint(req: EvaluateRequest) -> EvaluateResponse:
    table = None
    if req.table is not None:
        with _tables_lock:
            table = _tables.get(req.table)
        if table is None:
            raise IoFailure(f"no resident table named {req.table!r}")
    return run_evaluate(req, table=table)


@app.post("/significance", response_model=SignificanceResponse)
def significance_endpoint(req: SignificanceRequest) -> SignificanceResponse:
    return run_significance(req)
