"""
Management command exposing the benchmark pipeline:
generate, mask, render, eval, score and report.
"""

import json

import numpy as np
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.forge.instance import ROTATION_SUFFIX, PromptStyle, rotate_instance
from apps.forge.masking import apply_mask
from apps.forge.prompts import fewshot_pool, render_prompt
from apps.grids.cells import Difficulty
from apps.grids.codec import parse_grid, render_grid
from apps.harness.aggregate import aggregate, render_table, table_to_json
from apps.harness.cache import CompletionCache
from apps.harness.client import ChatCompletionsClient
from apps.harness.runner import run
from apps.metrics.report import evaluate
from apps.scenarios.builder import build_dataset
from apps.scenarios.enumeration import enumerate_scenarios
from apps.scenarios.records import get_instance, index_dataset, read_dataset, write_dataset
from apps.scenarios.subjects import Subject
from core.errors import BenchmarkError
from core.jsonl import dumps_line, read_jsonl, write_jsonl
from core.runconfig import load_run_config


def _csv(value):
    return [item.strip() for item in value.split(",") if item.strip()] if value else None


def _lookup(instances, instance_id):
    """Resolve an id, rotating the base instance for ids with an -r<k> suffix."""
    suffix = ROTATION_SUFFIX.search(instance_id)
    base_id = ROTATION_SUFFIX.sub("", instance_id)
    if base_id not in instances:
        raise CommandError(f"Unknown instance id '{instance_id}'")
    instance = instances[base_id]
    return rotate_instance(instance, int(suffix.group()[2:])) if suffix else instance


class Command(BaseCommand):
    help = "Generate, render, evaluate, score and report loadpath-bench tasks."

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="subcommand", required=True)

        generate = subparsers.add_parser("generate", help="Optimize scenarios, write the dataset")
        generate.add_argument("--config", help="Run configuration YAML")
        generate.add_argument("--seed", type=int, help="Overrides dataset.seed")
        generate.add_argument("--output", help="Dataset path (default LOADPATH_DATASET_PATH)")
        generate.add_argument("--workers", type=int, help="Overrides dataset.workers")

        mask = subparsers.add_parser("mask", help="Mask a ground-truth grid file")
        mask.add_argument("--grid", required=True, help="Ground-truth grid text file")
        mask.add_argument("--subject", required=True, help="Subject slug, e.g. rows3")
        mask.add_argument("--difficulty", default="easy")
        mask.add_argument("--seed", type=int, default=0)

        render = subparsers.add_parser("render", help="Print the prompt for one instance")
        render.add_argument("--dataset", help="Dataset path (default LOADPATH_DATASET_PATH)")
        render.add_argument("--id", required=True, dest="instance_id")
        render.add_argument("--style", default="base")
        render.add_argument("--shots", type=int, default=0)
        render.add_argument("--rotate", type=int, default=0)
        render.add_argument("--seed", type=int, default=0)

        evaluate_parser = subparsers.add_parser("eval", help="Run the harness against an endpoint")
        evaluate_parser.add_argument("--config", help="Run configuration YAML")
        evaluate_parser.add_argument("--dataset", help="Overrides harness.dataset_path")
        evaluate_parser.add_argument("--endpoint", help="Overrides harness.endpoint")
        evaluate_parser.add_argument("--subjects", help="Comma-separated subject slugs")
        evaluate_parser.add_argument("--difficulty", help="Comma-separated difficulties")
        evaluate_parser.add_argument("--rotate", type=int, help="Overrides harness.rotation_k")
        evaluate_parser.add_argument("--shots", type=int, help="Overrides harness.shots")
        evaluate_parser.add_argument("--style", help="Overrides harness.style")
        evaluate_parser.add_argument("--seed", type=int, help="Overrides harness.seed")
        evaluate_parser.add_argument("--output", required=True, help="RunRecord JSONL path")
        evaluate_parser.add_argument(
            "--no-cache", action="store_true", help="Skip the completion cache"
        )

        score = subparsers.add_parser("score", help="Score stored completions offline")
        score.add_argument("--dataset", required=True)
        score.add_argument("--completions", required=True)
        score.add_argument("--output", required=True)
        score.add_argument("--config", help="Run configuration YAML")

        report = subparsers.add_parser("report", help="Aggregate reports into a table")
        report.add_argument("--reports", required=True, help="Flat reports or RunRecords JSONL")
        report.add_argument("--format", choices=["table", "json", "records"], default="table")

    def handle(self, *args, **options):
        handler = getattr(self, f"handle_{options['subcommand']}")
        try:
            handler(options)
        except BenchmarkError as e:
            raise CommandError(str(e)) from e
        except (OSError, ValueError) as e:
            raise CommandError(str(e)) from e

    def handle_generate(self, options):
        config = load_run_config(
            options["config"],
            {"dataset": {"seed": options["seed"], "workers": options["workers"]}},
        )
        ds = config.dataset
        scenarios = enumerate_scenarios(ds.rows, ds.cols, ds.widths, ds.stride)
        instances = build_dataset(scenarios, config.solver, seed=ds.seed, workers=ds.workers)
        output = options["output"] or settings.LOADPATH_DATASET_PATH
        count = write_dataset(output, instances)
        self.stdout.write(
            self.style.SUCCESS(
                f"Wrote {count} instances from {len(scenarios)} scenarios to {output}"
            )
        )

    def handle_mask(self, options):
        difficulty = Difficulty.parse(options["difficulty"])
        with open(options["grid"], encoding="utf-8") as handle:
            gt = parse_grid(handle.read(), difficulty)
        rng = np.random.default_rng(options["seed"])
        masked, mask = apply_mask(gt, Subject.parse(options["subject"]), rng)
        self.stdout.write(render_grid(masked, difficulty))
        self.stdout.write(json.dumps(sorted([i, j] for i, j in mask)))

    def handle_render(self, options):
        dataset = read_dataset(options["dataset"] or settings.LOADPATH_DATASET_PATH)
        instance = get_instance(dataset, options["instance_id"])
        style = PromptStyle.build(options["style"], options["shots"])
        k = options["rotate"]
        pool = []
        if style.shots:
            pool = [rotate_instance(c, k) for c in fewshot_pool(dataset, instance)]
        prompt = render_prompt(rotate_instance(instance, k), style, pool, seed=options["seed"])
        self.stdout.write(prompt)

    def handle_eval(self, options):
        config = load_run_config(
            options["config"],
            {
                "harness": {
                    "dataset_path": options["dataset"],
                    "endpoint": options["endpoint"],
                    "subjects": _csv(options["subjects"]),
                    "difficulties": _csv(options["difficulty"]),
                    "rotation_k": options["rotate"],
                    "shots": options["shots"],
                    "style": options["style"],
                    "seed": options["seed"],
                }
            },
        )
        spec = config.harness
        if not spec.dataset_path:
            raise CommandError("No dataset given: pass --dataset or set harness.dataset_path")
        endpoint = config.endpoint()
        records = run(
            spec,
            ChatCompletionsClient(endpoint),
            endpoint=endpoint,
            cache=None if options["no_cache"] else CompletionCache(),
            metrics=config.metrics,
            output=options["output"],
        )
        failed = sum(1 for record in records if record.error)
        self.stdout.write(
            self.style.SUCCESS(f"Wrote {len(records)} run records to {options['output']}")
        )
        if failed:
            self.stdout.write(self.style.WARNING(f"{failed} completion call(s) failed"))

    def handle_score(self, options):
        config = load_run_config(options["config"])
        instances = index_dataset(read_dataset(options["dataset"]))
        reports = {}
        for number, record in enumerate(read_jsonl(options["completions"]), start=1):
            instance_id = record.get("id", record.get("instance_id"))
            if instance_id is None:
                raise CommandError(f"{options['completions']}:{number}: record has no id")
            instance = _lookup(instances, instance_id)
            completion = record.get("completion", record.get("raw_completion")) or ""
            reports[instance_id] = evaluate(instance, completion, config.metrics)

        count = write_jsonl(
            options["output"], (reports[key].to_record() for key in sorted(reports))
        )
        self.stdout.write(self.style.SUCCESS(f"Scored {count} completions"))

    def handle_report(self, options):
        records = read_jsonl(options["reports"])
        table = aggregate(records)
        if options["format"] == "json":
            self.stdout.write(json.dumps(table_to_json(table), indent=2))
        elif options["format"] == "records":
            self.stdout.write("\n".join(dumps_line(row.to_dict()) for row in table))
        else:
            self.stdout.write(render_table(table))
