"""Command-line front end.

The CLI is a thin client over the service layer: it converts files to
request models, invokes the handlers (in-process by default, or against a
running server via ``--server``), and writes the response models back to
files.  Exit codes: 0 success, 1 verification disagreement, 2 input/usage
error, 3 lemma precondition unmet.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

import click

from .errors import CrownkitError, FormatError, GuardError, InvalidInstanceError, PreconditionError
from .formats import (
    canonical_vertex_map,
    parse_bipartite,
    parse_cnf,
    parse_graph,
    parse_lists,
    parse_vertex_set,
    serialize_cnf,
    serialize_graph,
    serialize_lists,
)
from .generators import random_instance
from .graphs import Graph, ProblemInstance, ProblemTag
from .service.handlers import LEMMA_TAGS, handle_kernelize, handle_lemma, handle_verify
from .service.models import (
    BipartiteGraphModel,
    InstanceModel,
    KernelizeRequest,
    KernelizeResponse,
    LemmaRequest,
    LemmaResponse,
    VerifyRequest,
    VerifyResponse,
)

PROBLEM_TAGS = [tag.value for tag in ProblemTag]


class RemoteError(CrownkitError):
    def __init__(self, status: int, body: dict):
        self.status = status
        self.body = body
        super().__init__(body.get("detail", f"server error {status}"))


def _post(server: str, path: str, payload: dict) -> dict:
    import httpx

    response = httpx.post(server.rstrip("/") + path, json=payload, timeout=300.0)
    if response.status_code != 200:
        try:
            body = response.json()
        except json.JSONDecodeError:
            body = {"detail": response.text}
        raise RemoteError(response.status_code, body)
    return response.json()


def _call_kernelize(request: KernelizeRequest, server: str | None) -> KernelizeResponse:
    if server is None:
        return handle_kernelize(request)
    return KernelizeResponse.model_validate(
        _post(server, "/kernelize", request.model_dump()))


def _call_lemma(tag: str, request: LemmaRequest, server: str | None) -> LemmaResponse:
    if server is None:
        return handle_lemma(tag, request)
    return LemmaResponse.model_validate(
        _post(server, f"/lemma/{tag}", request.model_dump()))


def _call_verify(request: VerifyRequest, server: str | None) -> VerifyResponse:
    if server is None:
        return handle_verify(request)
    return VerifyResponse.model_validate(_post(server, "/verify", request.model_dump()))


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_instance(problem: str, input_path: str, k: int, p: int | None,
                   ell: int | None, modulator_path: str | None,
                   lists_path: str | None) -> ProblemInstance:
    tag = ProblemTag(problem)
    text = Path(input_path).read_text()
    if tag is ProblemTag.MAXSAT:
        return ProblemInstance(tag, parse_cnf(text), k)
    g = parse_graph(text)
    modulator = None
    if modulator_path is not None:
        modulator = parse_vertex_set(Path(modulator_path).read_text())
    lists = None
    if lists_path is not None:
        lists = parse_lists(Path(lists_path).read_text())
    return ProblemInstance(tag, g, k, p=p, ell=ell, modulator=modulator, lists=lists)


def _write_reduced(instance: InstanceModel, output: str, trace_lines: list[str]) -> None:
    """Emit the reduced instance canonically; non-contiguous vertex ids are
    renumbered and the map is appended to the trace."""
    out_path = Path(output)
    inst = instance.to_instance()
    if instance.formula is not None:
        out_path.write_text(serialize_cnf(inst.formula))
        return
    g = inst.graph
    vmap = canonical_vertex_map(g)
    if any(old != new for old, new in vmap.items()):
        token = ",".join(f"{old}-{new}" for old, new in sorted(vmap.items())) or "-"
        trace_lines.append(f"rule=emit.canonical-renumber certificate=map:{token}")
    out_path.write_text(serialize_graph(g))
    if inst.lists is not None:
        renamed = {vmap[v]: colors for v, colors in inst.lists.items()}
        Path(str(out_path) + ".lists").write_text(serialize_lists(renamed))
    if inst.modulator is not None:
        ids = " ".join(str(vmap[v]) for v in sorted(inst.modulator))
        Path(str(out_path) + ".modulator").write_text(ids + "\n")


@click.group()
def main() -> None:
    """Crown decompositions, expansion lemmas, and size-bounded kernels."""


@main.command()
@click.argument("problem", type=click.Choice(PROBLEM_TAGS))
@click.option("--input", "input_path", required=True, type=click.Path(exists=True),
              help="Instance file (DIMACS graph, or DIMACS CNF for maxsat).")
@click.option("--k", required=True, type=int, help="Budget k.")
@click.option("--p", type=int, default=None, help="Component order bound (pcoc).")
@click.option("--ell", type=int, default=None, help="Cycle length (longest-cycle-vc).")
@click.option("--modulator", "modulator_path", type=click.Path(exists=True), default=None,
              help="Vertex cover file (longest-cycle-vc).")
@click.option("--lists", "lists_path", type=click.Path(exists=True), default=None,
              help="Color lists file (nk-list-coloring).")
@click.option("--output", "output_path", type=click.Path(), default=None,
              help="Reduced instance file (default: <input>.reduced).")
@click.option("--trace", "trace_path", type=click.Path(), default=None,
              help="Trace sidecar file (default: <output>.trace).")
@click.option("--report", "report_path", type=click.Path(), default=None,
              help="Write the key=value run report here as well.")
@click.option("--server", default=None, help="Base URL of a running crownkit server.")
def kernelize(problem: str, input_path: str, k: int, p: int | None, ell: int | None,
              modulator_path: str | None, lists_path: str | None,
              output_path: str | None, trace_path: str | None,
              report_path: str | None, server: str | None) -> None:
    """Apply the kernelizer for PROBLEM to an instance file."""
    try:
        if k < 0:
            raise InvalidInstanceError("budget k must be non-negative")
        instance = _read_instance(problem, input_path, k, p, ell,
                                  modulator_path, lists_path)
        request = KernelizeRequest(instance=InstanceModel.from_instance(instance))
        response = _call_kernelize(request, server)
    except RemoteError as exc:
        _fail(str(exc), 2)
    except (CrownkitError, ValueError, OSError) as exc:
        _fail(str(exc), 2)

    output_path = output_path or input_path + ".reduced"
    trace_path = trace_path or output_path + ".trace"
    trace_lines = [app.to_application().to_record() for app in response.trace]
    if response.decided is not None:
        click.echo(f"DECIDED {'YES' if response.decided else 'NO'}")
    else:
        assert response.reduced is not None
        _write_reduced(response.reduced, output_path, trace_lines)
        click.echo(f"reduced instance written to {output_path}")
    Path(trace_path).write_text("".join(line + "\n" for line in trace_lines))
    report = response.report
    for key, value in sorted(report.rules_fired.items()):
        click.echo(f"rule {key}: fired {value}x")
    click.echo(f"input sizes: {report.input_sizes}")
    if report.output_sizes is not None:
        click.echo(f"output sizes: {report.output_sizes}")
    click.echo(f"duration: {report.duration_ms:.1f} ms")
    if report_path is not None:
        Path(report_path).write_text(
            "".join(line + "\n" for line in report.key_value_lines()))


@main.command()
@click.argument("tag", type=click.Choice(LEMMA_TAGS))
@click.option("--input", "input_path", required=True, type=click.Path(exists=True),
              help="Bipartite graph file (graph format plus an 'a ...' side line).")
@click.option("--q", type=int, default=1, help="Expansion parameter q.")
@click.option("--output", "output_path", type=click.Path(), default=None,
              help="Certificate file (default: print to stdout).")
@click.option("--server", default=None, help="Base URL of a running crownkit server.")
def lemma(tag: str, input_path: str, q: int, output_path: str | None,
          server: str | None) -> None:
    """Apply an expansion/crown lemma to a bipartite instance file."""
    try:
        bip, weights = parse_bipartite(Path(input_path).read_text())
        request = LemmaRequest(
            graph=BipartiteGraphModel.from_bipartite(bip, weights), q=q)
    except (CrownkitError, ValueError, OSError) as exc:
        _fail(str(exc), 2)
    try:
        response = _call_lemma(tag, request, server)
    except PreconditionError as exc:
        _fail(f"lemma precondition unmet: {exc.condition}: {exc}", 3)
    except RemoteError as exc:
        if exc.body.get("error") == "precondition":
            _fail(f"lemma precondition unmet: {exc.body.get('condition')}: {exc}", 3)
        _fail(str(exc), 2)
    except (CrownkitError, ValueError) as exc:
        _fail(str(exc), 2)

    cert = response.certificate
    lines = [f"lemma={tag} q={cert.q} kind={cert.kind} "
             f"verified={'true' if response.verified else 'false'} "
             f"certificate={cert.serialized}"]
    text = "".join(line + "\n" for line in lines)
    if output_path is not None:
        Path(output_path).write_text(text)
        click.echo(f"certificate written to {output_path}")
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("problem", type=click.Choice(PROBLEM_TAGS))
@click.option("--input", "input_path", type=click.Path(exists=True), default=None,
              help="Instance file; omit when using --random.")
@click.option("--k", type=int, default=None, help="Budget k.")
@click.option("--p", type=int, default=None)
@click.option("--ell", type=int, default=None)
@click.option("--modulator", "modulator_path", type=click.Path(exists=True), default=None)
@click.option("--lists", "lists_path", type=click.Path(exists=True), default=None)
@click.option("--random", "random_count", type=int, default=None,
              help="Verify this many seeded random instances instead of a file.")
@click.option("--seed", type=int, default=0, help="Seed for --random.")
@click.option("--max-n", type=int, default=10, help="Size cap for --random instances.")
@click.option("--server", default=None, help="Base URL of a running crownkit server.")
def verify(problem: str, input_path: str | None, k: int | None, p: int | None,
           ell: int | None, modulator_path: str | None, lists_path: str | None,
           random_count: int | None, seed: int, max_n: int,
           server: str | None) -> None:
    """Run kernelizer and brute-force oracle; report AGREE or DISAGREE."""
    instances: list[ProblemInstance] = []
    try:
        if random_count is not None:
            rng = random.Random(seed)
            tag = ProblemTag(problem)
            instances = [random_instance(tag, rng, max_n) for _ in range(random_count)]
        else:
            if input_path is None or k is None:
                raise InvalidInstanceError("provide --input and --k, or --random N")
            instances = [_read_instance(problem, input_path, k, p, ell,
                                        modulator_path, lists_path)]
    except (CrownkitError, ValueError, OSError) as exc:
        _fail(str(exc), 2)

    disagreements = 0
    try:
        for index, inst in enumerate(instances):
            request = VerifyRequest(instance=InstanceModel.from_instance(inst))
            response = _call_verify(request, server)
            status = "AGREE" if response.agree else "DISAGREE"
            click.echo(
                f"{status} instance={index} kernel={'yes' if response.kernel_answer else 'no'} "
                f"oracle={'yes' if response.oracle_answer else 'no'} "
                f"decided={'true' if response.decided_by_kernel else 'false'}")
            if not response.agree:
                disagreements += 1
    except GuardError as exc:
        _fail(f"oracle guard exceeded: {exc}", 2)
    except RemoteError as exc:
        _fail(str(exc), 2)
    except (CrownkitError, ValueError) as exc:
        _fail(str(exc), 2)
    click.echo(f"checked={len(instances)} disagreements={disagreements}")
    if disagreements:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host: str, port: int) -> None:
    """Run the kernelization service with uvicorn."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
