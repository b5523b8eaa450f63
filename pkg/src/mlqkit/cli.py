"""Command-line front end.

The CLI is a thin client over the service handlers: by default it calls them
in-process; with --server it sends the same request models to a running
service over HTTP.  Exit codes: 0 success, 1 verification failure, 2 usage
or parse error.
"""

from __future__ import annotations

import json
import sys

import click

from . import schemas, service
from .errors import MlqkitError, ParseError, UsageError


def _read_json(stream) -> dict:
    text = stream.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        )


def _emit(ctx, model):
    data = model.model_dump(exclude_none=True)
    if ctx.obj["pretty"]:
        click.echo(json.dumps(data, indent=2, sort_keys=True))
    else:
        click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _call(ctx, path: str, handler, request_model, response_cls):
    server = ctx.obj["server"]
    if server is None:
        return handler(request_model)
    import httpx

    resp = httpx.post(f"{server.rstrip('/')}{path}", json=request_model.model_dump())
    if resp.status_code != 200:
        detail = resp.json().get("detail", resp.text)
        raise MlqkitError(f"server error: {detail}")
    return response_cls.model_validate(resp.json())


def _ints(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


@click.group()
@click.option("--server", default=None, help="URL of a running mlqkit service")
@click.option("--pretty", is_flag=True, help="indent JSON output")
@click.pass_context
def main(ctx, server, pretty):
    """Exact combinatorics of multiline queues and their expansions."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server
    ctx.obj["pretty"] = pretty


def _run(ctx, fn):
    try:
        fn()
    except ParseError as exc:
        click.echo(f"ParseError: {exc}", err=True)
        sys.exit(2)
    except UsageError as exc:
        click.echo(f"UsageError: {exc}", err=True)
        sys.exit(2)
    except MlqkitError as exc:
        click.echo(f"{type(exc).__name__}: {exc}", err=True)
        sys.exit(2)
    except IndexError as exc:
        click.echo(f"IndexError: {exc}", err=True)
        sys.exit(2)


@main.command()
@click.argument("ops")
@click.pass_context
def op(ctx, ops):
    """Apply an operator sequence (e.g. "e<2 f>1 f>2") to a JSON queue on stdin."""

    def go():
        req = schemas.OpRequest(mlq=schemas.MLQModel(**_read_json(sys.stdin)), ops=ops)
        _emit(ctx, _call(ctx, "/op", service.handle_op, req, schemas.OpResponse))

    _run(ctx, go)


@main.command()
@click.pass_context
def collapse(ctx):
    """Collapse a JSON queue from stdin; prints nonwrap, record, maj, charge."""

    def go():
        req = schemas.CollapseRequest(mlq=schemas.MLQModel(**_read_json(sys.stdin)))
        _emit(
            ctx,
            _call(ctx, "/collapse", service.handle_collapse, req, schemas.CollapseResponse),
        )

    _run(ctx, go)


@main.command()
@click.pass_context
def uncollapse(ctx):
    """Invert the collapse: stdin JSON {"nonwrap": ..., "record": ...}."""

    def go():
        payload = _read_json(sys.stdin)
        req = schemas.UncollapseRequest(
            nonwrap=schemas.MLQModel(**payload["nonwrap"]),
            record=schemas.TableauModel(**payload["record"]),
        )
        _emit(
            ctx,
            _call(
                ctx, "/uncollapse", service.handle_uncollapse, req, schemas.UncollapseResponse
            ),
        )

    _run(ctx, go)


@main.command()
@click.argument("family", type=click.Choice(["P", "f", "G", "schur", "atom", "qschur"]))
@click.option("--index", required=True, help="comma-separated parts")
@click.option("--cols", type=int, default=None)
@click.pass_context
def genfun(ctx, family, index, cols):
    """Generating function of one family at the given index."""

    def go():
        req = schemas.GenfunRequest(family=family, index=_ints(index), cols=cols)
        _emit(ctx, _call(ctx, "/genfun", service.handle_genfun, req, schemas.PolynomialModel))

    _run(ctx, go)


@main.command()
@click.argument("basis", type=click.Choice(["schur", "atoms", "qschur"]))
@click.option("--index", required=True, help="comma-separated parts")
@click.option("--cols", type=int, default=None)
@click.pass_context
def expand(ctx, basis, index, cols):
    """Positive expansion with both routes cross-checked."""

    def go():
        req = schemas.ExpandRequest(basis=basis, index=_ints(index), cols=cols)
        _emit(ctx, _call(ctx, "/expand", service.handle_expand, req, schemas.ExpansionModel))

    _run(ctx, go)


@main.command()
@click.option("--lam", required=True, help="first partition, comma-separated")
@click.option("--mu", required=True, help="second partition, comma-separated")
@click.pass_context
def kostka(ctx, lam, mu):
    """Kostka–Foulkes polynomial by charge, cross-checked by collapsing."""

    def go():
        req = schemas.KostkaRequest(lam=_ints(lam), mu=_ints(mu))
        _emit(ctx, _call(ctx, "/kostka", service.handle_kostka, req, schemas.KostkaResponse))

    _run(ctx, go)


@main.command()
@click.option("--shape", required=True, help="partition, comma-separated")
@click.option("--cols", required=True, type=int)
@click.option("--filter", "filter_", default="all", help="all | nonwrapping | type=... | strtype=...")
@click.option("--dot-out", type=click.Path(writable=True), default=None)
@click.option("--components", is_flag=True)
@click.pass_context
def graph(ctx, shape, cols, filter_, dot_out, components):
    """Build the crystal graph; optionally export DOT and component data."""

    def go():
        req = schemas.GraphRequest(
            shape=_ints(shape),
            cols=cols,
            filter=filter_,
            dot=dot_out is not None,
            components=components,
        )
        resp = _call(ctx, "/graph", service.handle_graph, req, schemas.GraphResponse)
        if dot_out is not None:
            with open(dot_out, "w") as fh:
                fh.write(resp.dot)
            resp.dot = None
        _emit(ctx, resp)

    _run(ctx, go)


@main.command()
@click.option("--shape", required=True, help="partition, comma-separated")
@click.option("--cols", required=True, type=int)
@click.option("--filter", "filter_", default="all")
@click.option("--limit", type=int, default=None)
@click.pass_context
def enumerate(ctx, shape, cols, filter_, limit):
    """List the queues of a shape, optionally filtered."""

    def go():
        req = schemas.EnumerateRequest(
            shape=_ints(shape), cols=cols, filter=filter_, limit=limit
        )
        _emit(
            ctx,
            _call(ctx, "/enumerate", service.handle_enumerate, req, schemas.EnumerateResponse),
        )

    _run(ctx, go)


@main.command()
@click.argument("ops")
@click.pass_context
def trace(ctx, ops):
    """Replay column operators on a stdin queue, reporting the type at each step."""

    def go():
        req = schemas.TraceRequest(mlq=schemas.MLQModel(**_read_json(sys.stdin)), ops=ops)
        _emit(ctx, _call(ctx, "/trace", service.handle_trace, req, schemas.TraceResponse))

    _run(ctx, go)


@main.command()
@click.argument("suite")
@click.option("--max-size", type=int, default=6)
@click.option("--max-cols", type=int, default=5)
@click.option("--seed", type=int, default=0)
@click.option("--instances", type=int, default=10000)
@click.pass_context
def verify(ctx, suite, max_size, max_cols, seed, instances):
    """Run a verification suite; exit 1 when any instance fails."""

    def go():
        req = schemas.VerifyRequest(
            suite=suite, max_size=max_size, max_cols=max_cols, seed=seed, instances=instances
        )
        resp = _call(ctx, "/verify", service.handle_verify, req, schemas.VerifyResponse)
        _emit(ctx, resp)
        if not resp.ok:
            sys.exit(1)

    _run(ctx, go)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run(service.app, host=host, port=port)


if __name__ == "__main__":
    main()
