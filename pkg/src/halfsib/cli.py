"""Command-line interface.

Subcommands: postprocess, evaluate, significance, serve. Each of the
first three marshals its flags into the service request models and runs
the matching handler in-process; with `--server URL` the same JSON is
posted to a running server instead. Exit codes: 0 success, 1 runtime
failure, 2 usage error.

Evaluate writes machine-readable report lines (`task<TAB>score` with a
`# method:` header) to stdout and a human-readable table to stderr, so
`halfsib evaluate ... > report.tsv` feeds `halfsib significance` directly.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import HalfsibError
from .service.handlers import run_evaluate, run_postprocess, run_significance
from .service.schemas import (
    EvaluateRequest,
    EvaluateResponse,
    PostprocessRequest,
    PostprocessResponse,
    SignificanceRequest,
    SignificanceResponse,
)

_EXIT_OK = 0
_EXIT_RUNTIME = 1
_EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfsib",
        description="Remove shared corpus noise from word embeddings and evaluate the result.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    post = sub.add_parser(
        "postprocess",
        help="rewrite an embedding file with one of the postprocessing methods",
    )
    post.add_argument("--input", required=True, help="embedding text file to read")
    post.add_argument("--output", required=True, help="embedding text file to write")
    post.add_argument("--method", required=True, choices=["hsr-rr", "abtt"])
    post.add_argument("--alpha1", type=float, default=None, help="ridge constant, step 1 (default 50)")
    post.add_argument("--alpha2", type=float, default=None, help="ridge constant, step 2 (default 50)")
    post.add_argument("--top-content", type=int, default=None, help="content-feature cap (default 1000)")
    post.add_argument("--stopwords", default=None, help="stop-word file, one token per line (default: bundled 179-word list)")
    post.add_argument("--freq-ranking", default=None, help="ranked word file, most frequent first (default: bundled list)")
    post.add_argument("--d", type=int, default=None, help="number of leading components to remove (abtt)")
    post.add_argument("--lowercase", action="store_true", help="fold the vocabulary to lowercase at load")
    post.add_argument("--expect-header", choices=["auto", "yes", "no"], default="auto")
    post.add_argument("--write-header", action="store_true", help="write a `V n` count header")
    post.add_argument("--precision", type=int, default=6, help="decimal digits per value (default 6)")
    post.add_argument("--block", type=int, default=4096, help="target column block width (default 4096)")
    post.add_argument("--server", default=None, help="run against this server URL instead of in-process")

    ev = sub.add_parser("evaluate", help="score an embedding file on benchmark task files")
    ev.add_argument("--embeddings", required=True, help="embedding text file")
    ev.add_argument("--task", required=True, choices=["wordsim", "sts", "sentiment"])
    ev.add_argument("--data", required=True, nargs="+", help="one or more dataset files")
    ev.add_argument("--label", default=None, help="method label for the report (default: embeddings file stem)")
    ev.add_argument("--output", default=None, help="also write the report to this file")
    ev.add_argument("--expect-header", choices=["auto", "yes", "no"], default="auto")
    ev.add_argument("--lowercase", action="store_true")
    ev.add_argument("--l2-lambda", type=float, default=1e-4, help="sentiment: L2 penalty (default 1e-4)")
    ev.add_argument("--max-iters", type=int, default=1000, help="sentiment: optimizer cap (default 1000)")
    ev.add_argument("--tol", type=float, default=1e-8, help="sentiment: gradient tolerance (default 1e-8)")
    ev.add_argument("--folds", type=int, default=5, help="sentiment: CV folds (default 5)")
    ev.add_argument("--seed", type=int, default=42, help="sentiment: shuffle seed (default 42)")
    ev.add_argument("--server", default=None)

    sig = sub.add_parser(
        "significance",
        help="paired one-tailed t-test between two reports (treatment > baseline)",
    )
    sig.add_argument("--baseline", required=True, help="report TSV (from evaluate)")
    sig.add_argument("--treatment", required=True, help="report TSV (from evaluate)")
    sig.add_argument("--server", default=None)

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)
    return parser


def _absolute(path: str | None) -> str | None:
    # a remote server resolves relative paths against ITS cwd, so the
    # client pins every local path before shipping the request
    return None if path is None else os.path.abspath(path)


def _post(server: str, endpoint: str, payload: dict) -> dict:
    import httpx

    url = server.rstrip("/") + endpoint
    reply = httpx.post(url, json=payload, timeout=600.0)
    if reply.status_code != 200:
        try:
            body = reply.json()
            detail = f"{body.get('error', 'error')}: {body.get('message', reply.text)}"
        except ValueError:
            detail = reply.text
        raise HalfsibError(f"server returned {reply.status_code}: {detail}")
    return reply.json()


def _cmd_postprocess(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    hsr_flags = {
        "--alpha1": args.alpha1,
        "--alpha2": args.alpha2,
        "--top-content": args.top_content,
        "--stopwords": args.stopwords,
        "--freq-ranking": args.freq_ranking,
    }
    if args.method == "hsr-rr":
        if args.d is not None:
            parser.error("--d applies only to --method abtt")
        if args.alpha1 is not None and args.alpha1 <= 0:
            parser.error("--alpha1 must be positive")
        if args.alpha2 is not None and args.alpha2 <= 0:
            parser.error("--alpha2 must be positive")
        if args.top_content is not None and args.top_content < 1:
            parser.error("--top-content must be >= 1")
    else:
        given = [flag for flag, value in hsr_flags.items() if value is not None]
        if given:
            parser.error(f"{', '.join(given)} apply only to --method hsr-rr")
        if args.d is None:
            parser.error("--method abtt requires --d")
        if args.d < 0:
            parser.error("--d must be >= 0")
    if args.server:
        args.input = _absolute(args.input)
        args.output = _absolute(args.output)
        args.stopwords = _absolute(args.stopwords)
        args.freq_ranking = _absolute(args.freq_ranking)
    req = PostprocessRequest(
        input_path=args.input,
        output_path=args.output,
        method=args.method,
        alpha1=args.alpha1 if args.alpha1 is not None else 50.0,
        alpha2=args.alpha2 if args.alpha2 is not None else 50.0,
        top_content=args.top_content if args.top_content is not None else 1000,
        stopwords_path=args.stopwords,
        freq_ranking_path=args.freq_ranking,
        d=args.d,
        lowercase=args.lowercase,
        expect_header=args.expect_header,
        write_header=args.write_header,
        precision=args.precision,
        block=args.block,
    )
    if args.server:
        resp = PostprocessResponse(**_post(args.server, "/postprocess", req.model_dump()))
    else:
        resp = run_postprocess(req)
    print(f"method     : {resp.method}")
    print(f"vocabulary : {resp.vocab_size} words, dim {resp.dim}")
    if resp.method == "hsr-rr":
        print(f"function   : {resp.function_count}")
        print(f"content    : {resp.content_count}")
        print(f"features   : {resp.feature_count}")
    else:
        print(f"removed    : {resp.components_removed} component(s)")
    print(f"wall time  : {resp.wall_seconds:.3f} s")
    print(f"output     : {resp.output_path}")
    for note in resp.warnings:
        print(f"warning    : {note}", file=sys.stderr)
    return _EXIT_OK


def _render_evaluate(resp: EvaluateResponse, output: str | None) -> int:
    lines = [f"# method: {resp.method}"]
    lines += [f"{row.task}\t{row.score:.10g}" for row in resp.rows]
    machine = "\n".join(lines)
    if resp.rows:
        print(machine)
        if resp.aggregate is not None:
            print(f"# aggregate: {resp.aggregate:.10g}")
    width = max((len(row.task) for row in resp.rows), default=4)
    print(f"task type: {resp.task_type}   method: {resp.method}", file=sys.stderr)
    for row in resp.rows:
        detail = ""
        if row.pairs_used is not None:
            detail = f"  ({row.pairs_used} used, {row.pairs_skipped} skipped)"
        elif row.per_fold is not None:
            folds = ", ".join(f"{v:.4f}" for v in row.per_fold)
            detail = f"  (folds: {folds}; {row.examples_used} used, {row.examples_dropped} dropped)"
        score = f"{row.score:.2f}" if resp.task_type == "sts" else f"{row.score:.4f}"
        print(f"  {row.task:<{width}}  {score}{detail}", file=sys.stderr)
    if resp.aggregate is not None:
        agg = f"{resp.aggregate:.2f}" if resp.task_type == "sts" else f"{resp.aggregate:.4f}"
        print(f"  {'aggregate':<{width}}  {agg}", file=sys.stderr)
    for failure in resp.failures:
        print(f"  FAILED {failure.task}: {failure.error}: {failure.message}", file=sys.stderr)
    if output and resp.rows:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(machine + "\n")
    return _EXIT_RUNTIME if resp.failures or not resp.rows else _EXIT_OK


def _cmd_evaluate(args: argparse.Namespace) -> int:
    if args.server:
        args.embeddings = _absolute(args.embeddings)
        args.data = [_absolute(p) for p in args.data]
    req = EvaluateRequest(
        embeddings_path=args.embeddings,
        task=args.task,
        data_paths=list(args.data),
        label=args.label,
        expect_header=args.expect_header,
        lowercase=args.lowercase,
        l2_lambda=args.l2_lambda,
        max_iters=args.max_iters,
        tol=args.tol,
        folds=args.folds,
        seed=args.seed,
    )
    if args.server:
        resp = EvaluateResponse(**_post(args.server, "/evaluate", req.model_dump()))
    else:
        resp = run_evaluate(req)
    return _render_evaluate(resp, args.output)


def _cmd_significance(args: argparse.Namespace) -> int:
    if args.server:
        args.baseline = _absolute(args.baseline)
        args.treatment = _absolute(args.treatment)
    req = SignificanceRequest(baseline_path=args.baseline, treatment_path=args.treatment)
    if args.server:
        resp = SignificanceResponse(**_post(args.server, "/significance", req.model_dump()))
    else:
        resp = run_significance(req)
    print(resp.text)
    return _EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return _EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "postprocess":
            return _cmd_postprocess(args, parser)
        if args.command == "evaluate":
            return _cmd_evaluate(args)
        if args.command == "significance":
            return _cmd_significance(args)
        if args.command == "serve":
            return _cmd_serve(args)
    except HalfsibError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _EXIT_RUNTIME
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_RUNTIME
    except ValueError as exc:
        # argument semantics rejected by a config type or request model
        print(f"usage error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    parser.error(f"unknown command {args.command!r}")
    return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
