"""Command-line entry points: ingest, extract, serve, query, stats."""

from __future__ import annotations

import json
from pathlib import Path

import click

from . import __version__
from .concepts.candidates import DEFAULT_MAX_SPAN_LEN, extract_candidates
from .concepts.labels import default_question_set
from .concepts.bio import resolve_overlaps, to_bio, write_bio_dataset
from .concepts.samples import WeakSample, select_high_confidence, write_weak_samples
from .concepts.scoring import assign_label, score_document
from .concepts.tokens import tag_tokens, tokenize
from .corpus.ingest import merge_by_title, parse_corpus, write_error_report
from .dataflow.executor import execute
from .dataflow.pipeline import parse_pipeline, validate
from .errors import PipelineFormatError, ScholarGraphError
from .kg.build import build_graph
from .kg.linking import DEFAULT_CONFIDENCE, SpotlightClient, normalize_concepts
from .kg.turtle import serialize_turtle
from .service.app import (
    ServiceConfig,
    env_linker_url,
    env_namespace,
    env_port,
    load_graph,
    serve as run_service,
)

_GRAPH_ARG = click.Path(exists=True, dir_okay=False, path_type=Path)


@click.group()
@click.version_option(__version__, prog_name="scholargraph")
def main():
    """Build, query, and serve semantic knowledge graphs of academic corpora."""


@main.command()
@click.argument("corpus", type=_GRAPH_ARG)
@click.argument("output", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--namespace", default=None, help="IRI namespace (default: SCHOLARGRAPH_NAMESPACE).")
@click.option(
    "--merge",
    "merge_path",
    type=_GRAPH_ARG,
    default=None,
    help="Second corpus JSONL merged into the first by normalized title.",
)
@click.option("--merge-source", default="extra", show_default=True, help="Id prefix for merged-only records.")
@click.option("--link/--no-link", default=False, help="Normalize concept mentions via the linking service.")
@click.option("--linker-url", default=None, help="Linker base URL (default: SCHOLARGRAPH_LINKER_URL).")
@click.option("--confidence", type=float, default=DEFAULT_CONFIDENCE, show_default=True)
@click.option(
    "--errors",
    "errors_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the parse-error report (JSON) here.",
)
def ingest(corpus, output, namespace, merge_path, merge_source, link, linker_url, confidence, errors_path):
    """Parse a corpus JSONL file and write the knowledge graph as Turtle."""
    with corpus.open("r", encoding="utf-8") as handle:
        result = parse_corpus(handle)
    if errors_path is not None:
        with errors_path.open("w", encoding="utf-8") as handle:
            write_error_report(result.errors, handle)
    if result.errors:
        click.echo(f"{len(result.errors)} line(s) failed to parse", err=True)
    records = result.records
    if merge_path is not None:
        with merge_path.open("r", encoding="utf-8") as handle:
            extra = parse_corpus(handle)
        if extra.errors:
            click.echo(f"{len(extra.errors)} merge line(s) failed to parse", err=True)
        records = merge_by_title(records, extra.records, source=merge_source)
    if link:
        url = linker_url or env_linker_url()
        if not url:
            raise click.UsageError("--link requires --linker-url or SCHOLARGRAPH_LINKER_URL")
        normalize_concepts(records, SpotlightClient(url), confidence)
    graph, report = build_graph(records, namespace or env_namespace())
    with output.open("w", encoding="utf-8") as handle:
        serialize_turtle(graph, handle)
    stats = graph.stats()
    click.echo(
        f"wrote {stats.total_entities} entities and {stats.total_relations} relations to {output}"
    )
    if report.dropped_citations:
        click.echo(
            f"dropped {report.dropped_citations} citation(s) pointing outside the corpus",
            err=True,
        )


@main.command()
@click.argument("corpus", type=_GRAPH_ARG)
@click.argument("output", type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    "--bio",
    "bio_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write a token-level BIO dataset (CoNLL-style) here.",
)
@click.option("--per-label", type=click.IntRange(min=1), default=200, show_default=True, help="High-confidence samples kept per label.")
@click.option("--max-span-len", type=int, default=DEFAULT_MAX_SPAN_LEN, show_default=True)
def extract(corpus, output, bio_path, per_label, max_span_len):
    """Mine weakly labeled concept mentions from the corpus abstracts."""
    with corpus.open("r", encoding="utf-8") as handle:
        result = parse_corpus(handle)
    questions = default_question_set()
    samples: list[WeakSample] = []
    tokens_by_doc: dict[str, list] = {}
    for record in result.records:
        if not record.abstract:
            continue
        tokens = tag_tokens(tokenize(record.abstract))
        if not tokens:
            continue
        candidates = [
            span
            for span in extract_candidates(tokens, max_len=max_span_len)
            if span.length <= max_span_len
        ]
        if not candidates:
            continue
        tokens_by_doc[record.id] = tokens
        table = score_document(tokens, questions)
        for span in candidates:
            label, probability = assign_label(table, questions, span, max_len=max_span_len)
            samples.append(
                WeakSample(
                    document_id=record.id, span=span, label=label, probability=probability
                )
            )
    selected = select_high_confidence(samples, per_label)
    flat = [sample for group in selected.values() for sample in group]
    with output.open("w", encoding="utf-8") as handle:
        written = write_weak_samples(flat, handle)
    click.echo(f"wrote {written} weak sample(s) to {output}")
    if bio_path is not None:
        by_doc: dict[str, list[WeakSample]] = {}
        for sample in flat:
            by_doc.setdefault(sample.document_id, []).append(sample)
        documents = []
        for doc_id, tokens in tokens_by_doc.items():
            kept = resolve_overlaps(by_doc.get(doc_id, []))
            labels = to_bio(tokens, [(s.span, s.label) for s in kept])
            documents.append((tokens, labels))
        with bio_path.open("w", encoding="utf-8") as handle:
            count = write_bio_dataset(documents, handle)
        click.echo(f"wrote {count} BIO document(s) to {bio_path}")


@main.command()
@click.option("--graph", "graph_path", type=_GRAPH_ARG, required=True, help="Turtle (.ttl) or corpus JSONL file.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=None, help="Default: SCHOLARGRAPH_PORT or 8040.")
@click.option("--namespace", default=None, help="Namespace when building from JSONL.")
def serve(graph_path, host, port, namespace):
    """Serve the HTTP API over a graph file."""
    config = ServiceConfig(
        graph_path=str(graph_path),
        host=host,
        port=port if port is not None else env_port(),
        namespace=namespace or env_namespace(),
    )
    run_service(config)


@main.command()
@click.option("--graph", "graph_path", type=_GRAPH_ARG, required=True)
@click.argument("pipeline", type=_GRAPH_ARG)
@click.option("--indent", type=int, default=2, show_default=True)
def query(graph_path, pipeline, indent):
    """Execute a pipeline document against a graph and print the trace."""
    graph = load_graph(graph_path)
    with Path(pipeline).open("r", encoding="utf-8") as handle:
        document = json.load(handle)
    try:
        parsed = parse_pipeline(document)
    except PipelineFormatError as exc:
        raise click.ClickException(f"malformed pipeline: {exc}") from None
    violations = validate(parsed)
    if violations:
        for violation in violations:
            click.echo(f"violation [{violation.code}]: {violation.message}", err=True)
        raise click.ClickException("pipeline failed validation")
    try:
        trace = execute(parsed, graph)
    except ScholarGraphError as exc:
        raise click.ClickException(str(exc)) from None
    click.echo(json.dumps(trace.to_dict(), indent=indent, sort_keys=True))


@main.command()
@click.option("--graph", "graph_path", type=_GRAPH_ARG, required=True)
def stats(graph_path):
    """Print entity and relation counts for a graph file."""
    graph = load_graph(graph_path)
    click.echo(json.dumps(graph.stats().to_dict(), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
