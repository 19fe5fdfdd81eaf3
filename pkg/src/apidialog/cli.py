"""Command-line interface."""

from __future__ import annotations

import json
import logging
import sys

import click

from .dialogue import dump, open_session
from .errors import ApiDialogError
from .evalharness import (
    compare_strategies,
    evaluate_dataset,
    generate_synthetic_queries,
    read_dataset,
)
from .ingest import build_graph, read_annotations, read_pairs, read_triples
from .kg.store import load_graph, store_graph
from .recommend import Recommendation, recommendation
from .retrieval import RetrievalIndex, read_candidates_file, search_candidates

log = logging.getLogger(__name__)

_STRATEGY_CHOICE = click.Choice(["id3", "c45"])


def _strategy(value: str) -> str:
    return "c4.5" if value == "c45" else value


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool) -> None:
    """Build an API behavior graph and run clarification dialogues on it."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


@main.command("build-kg")
@click.option("--pairs", "pairs_file", required=True, type=click.Path(exists=True))
@click.option("--annotations", "annotations_file", type=click.Path(exists=True))
@click.option("--triples", "triples_file", type=click.Path(exists=True))
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
def build_kg(pairs_file, annotations_file, triples_file, out_dir) -> None:
    """Build the knowledge graph from method descriptions."""
    pairs = read_pairs(pairs_file)
    annotations = read_annotations(annotations_file) if annotations_file else None
    triples = read_triples(triples_file) if triples_file else ()
    graph, stats = build_graph(pairs, external_annotations=annotations, triples=triples)
    store_graph(graph, out_dir)
    click.echo(json.dumps(stats.to_dict(), indent=2))


@main.command("search")
@click.option("--kg", "kg_dir", required=True, type=click.Path(exists=True))
@click.option("--query", required=True)
@click.option("--n", default=10, show_default=True)
@click.option(
    "--candidates-file",
    type=click.Path(exists=True),
    help="Rank this fqn list (one per line) instead of retrieving.",
)
def search(kg_dir, query, n, candidates_file) -> None:
    """Rank APIs against a query."""
    graph = load_graph(kg_dir)
    index = RetrievalIndex(graph)
    scores = index.scores(query)
    if candidates_file:
        candidates = read_candidates_file(candidates_file, graph)
    else:
        candidates = search_candidates(query, n, index)
    for api_id in candidates:
        click.echo(f"{scores.get(api_id, 0.0):.4f}\t{graph.api_fqn(api_id)}")


def _print_recommendation(record: Recommendation) -> None:
    payload = record.to_dict()
    click.echo(f"\nQuery: {payload['query']}  (rounds: {payload['rounds']})")
    click.echo("Results:")
    for i, entry in enumerate(payload["results"], start=1):
        click.echo(f"  {i}. {entry['fqn']}")
        click.echo(f"     {entry['description']}")
        if entry["keywords"]:
            keywords = ", ".join(k["text"] for k in entry["keywords"])
            click.echo(f"     keywords: {keywords}")
    if payload["extensions"]:
        click.echo("Extended:")
        for i, entry in enumerate(payload["extensions"], start=1):
            click.echo(f"  {i}. {entry['fqn']}  [{entry['relation']}]")
            click.echo(f"     {entry['description']}")


@main.command("dialogue")
@click.option("--kg", "kg_dir", required=True, type=click.Path(exists=True))
@click.option("--query", required=True)
@click.option("--strategy", default="id3", show_default=True, type=_STRATEGY_CHOICE)
@click.option("--n", default=10, show_default=True)
@click.option("--show-tree", is_flag=True, help="Print the decision tree as JSON first.")
def dialogue(kg_dir, query, strategy, n, show_tree) -> None:
    """Interactive clarification dialogue; answer with a number or `stop`."""
    graph = load_graph(kg_dir)
    index = RetrievalIndex(graph)
    try:
        session = open_session(graph, index, query, strategy=_strategy(strategy), n=n)
    except ApiDialogError as exc:
        raise click.ClickException(str(exc)) from None
    if show_tree:
        click.echo(json.dumps(dump(session.tree, graph), indent=2))
    while session.state == "active":
        question = session.next_question()
        click.echo(f"\n{question.text}")
        for i, option in enumerate(question.options, start=1):
            click.echo(f"  {i}) {option.label}  ({option.api_count} APIs)")
        answer = click.prompt("answer", prompt_suffix="> ").strip().lower()
        if answer == "stop":
            session.stop()
            break
        try:
            number = int(answer)
            option = question.options[number - 1]
        except (ValueError, IndexError):
            click.echo("pick an option number or `stop`")
            continue
        session.apply_selection(option.id)
    _print_recommendation(recommendation(session))


@main.command("eval")
@click.option("--kg", "kg_dir", required=True, type=click.Path(exists=True))
@click.option("--dataset", required=True, type=click.Path(exists=True))
@click.option("--top", type=int, help="Truncate recommendations to the top K.")
@click.option("--rounds", default=3, show_default=True)
@click.option("--strategy", default="id3", show_default=True, type=_STRATEGY_CHOICE)
@click.option("--n", default=10, show_default=True)
def eval_command(kg_dir, dataset, top, rounds, strategy, n) -> None:
    """Score the simulated dialogue against a ground-truth dataset."""
    graph = load_graph(kg_dir)
    queries = read_dataset(dataset)
    report = evaluate_dataset(
        graph, queries, rounds=rounds, top=top, strategy=_strategy(strategy), n=n
    )
    click.echo(json.dumps(report, indent=2))


@main.command("har-compare")
@click.option("--kg", "kg_dir", required=True, type=click.Path(exists=True))
@click.option("--kinds", default="v-do,v-po,v-do-po", show_default=True)
@click.option("--out", "out_file", type=click.Path(dir_okay=False))
@click.option("--n", default=10, show_default=True)
def har_compare(kg_dir, kinds, out_file, n) -> None:
    """Compare dialogue length between tree strategies on synthetic queries."""
    graph = load_graph(kg_dir)
    queries = []
    for kind in kinds.split(","):
        kind = kind.strip().upper()
        if kind:
            queries.extend(generate_synthetic_queries(graph, kind))
    report = compare_strategies(graph, queries, n=n)
    text = json.dumps(report, indent=2)
    if out_file:
        with open(out_file, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        click.echo(f"wrote {out_file}")
    else:
        click.echo(text)


@main.command("serve")
@click.option("--kg", "kg_dir", required=True, type=click.Path(exists=True))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8080, show_default=True)
@click.option("--ttl", default=1800.0, show_default=True, help="Idle session TTL (s).")
def serve(kg_dir, host, port, ttl) -> None:
    """Run the HTTP session service."""
    try:
        import uvicorn
    except ImportError:
        raise click.ClickException("uvicorn is not installed (pip install uvicorn)")
    from .service import create_app

    uvicorn.run(create_app(graph_dir=kg_dir, ttl_seconds=ttl), host=host, port=port)


if __name__ == "__main__":
    main()
