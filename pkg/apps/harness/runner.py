"""
Benchmark runs: sample, render, complete, parse, evaluate, persist.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from django.utils import timezone

from apps.forge.completions import ParseFailure, parse_completion
from apps.forge.instance import PromptStyle, rotate_instance
from apps.forge.prompts import fewshot_pool, render_prompt
from apps.grids.cells import Difficulty, Grid
from apps.grids.codec import render_grid
from apps.metrics.config import MetricConfig
from apps.metrics.report import evaluate
from apps.scenarios.records import read_dataset
from apps.scenarios.subjects import SUBJECTS, Subject
from core.jsonl import write_jsonl

from .exceptions import HarnessError
from .sampling import sample_instances

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunSpec:
    dataset_path: str = ""
    subjects: tuple = SUBJECTS
    difficulties: tuple = tuple(Difficulty)
    sample_count: int = 100
    seed: int = 0
    style: str = "base"
    shots: int = 0
    rotation_k: int = 0
    endpoint: str = "default"
    concurrency: int = 4

    def __post_init__(self):
        object.__setattr__(
            self,
            "subjects",
            tuple(s if isinstance(s, Subject) else Subject.parse(s) for s in self.subjects),
        )
        object.__setattr__(
            self, "difficulties", tuple(Difficulty.parse(d) for d in self.difficulties)
        )
        if self.sample_count < 1:
            raise HarnessError("sample_count must be >= 1")
        if self.concurrency < 1:
            raise HarnessError("concurrency must be >= 1")
        if self.rotation_k not in (0, 1, 2, 3):
            raise HarnessError("rotation_k must be 0, 1, 2 or 3")
        PromptStyle.build(self.style, self.shots)

    @property
    def prompt_style(self):
        return PromptStyle.build(self.style, self.shots)

    def to_dict(self):
        data = asdict(self)
        data["subjects"] = [subject.slug for subject in self.subjects]
        data["difficulties"] = [difficulty.value for difficulty in self.difficulties]
        return data


@dataclass
class RunRecord:
    instance_id: str
    prompt: str
    raw_completion: str | None = None
    parsed_grid: str | None = None
    parse_error: str | None = None
    error: str | None = None
    cached: bool = False
    report: dict = field(default_factory=dict)
    endpoint: dict = field(default_factory=dict)
    started_at: str = ""
    finished_at: str = ""

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**{key: data[key] for key in cls.__dataclass_fields__ if key in data})


class BenchmarkRunner:
    """
    Runs one RunSpec against a completion backend.

    The backend is any object with `complete(prompt) -> str`. Completions are
    looked up in `cache` first, keyed by `endpoint` and the prompt.
    """

    def __init__(self, spec: RunSpec, backend, endpoint=None, cache=None, metrics=None):
        self.spec = spec
        self.backend = backend
        self.endpoint = endpoint or getattr(backend, "endpoint", None)
        self.cache = cache
        self.metrics = metrics or MetricConfig()
        if self.cache is not None and self.endpoint is None:
            raise HarnessError("A completion cache needs an endpoint to key on")

    def prepare(self, dataset):
        """Sampled, rotated instances paired with their prompts."""
        style = self.spec.prompt_style
        k = self.spec.rotation_k
        jobs = []
        for instance in sample_instances(dataset, self.spec):
            pool = []
            if style.shots:
                pool = [rotate_instance(c, k) for c in fewshot_pool(dataset, instance)]
            query = rotate_instance(instance, k)
            jobs.append((query, render_prompt(query, style, pool, seed=self.spec.seed)))
        return jobs

    def complete(self, prompt):
        """(completion, served from cache)"""
        if self.cache is not None:
            cached = self.cache.get(self.endpoint, prompt)
            if cached is not None:
                return cached, True
        completion = self.backend.complete(prompt)
        if self.cache is not None:
            self.cache.set(self.endpoint, prompt, completion)
        return completion, False

    def _execute(self, job):
        instance, prompt = job
        record = RunRecord(
            instance_id=instance.id,
            prompt=prompt,
            endpoint=self.endpoint.identifiers() if self.endpoint is not None else {},
            started_at=timezone.now().isoformat(),
        )
        try:
            record.raw_completion, record.cached = self.complete(prompt)
        except Exception as e:
            logger.error("Completion failed for %s: %s", instance.id, str(e))
            record.error = f"{e.__class__.__name__}: {e}"

        if record.raw_completion is None:
            parsed = ParseFailure("no completion", raw="")
        else:
            parsed = parse_completion(record.raw_completion, instance)
        if isinstance(parsed, Grid):
            record.parsed_grid = render_grid(parsed, instance.difficulty)
        else:
            record.parse_error = parsed.reason

        report = evaluate(instance, parsed, self.metrics)
        if record.error:
            report.flags.append("call_failed")
        record.report = report.to_record()
        record.finished_at = timezone.now().isoformat()
        return record

    def run(self, dataset):
        jobs = self.prepare(dataset)
        logger.info(
            "Starting run: %d instances, style=%s, shots=%d, rotation=%d",
            len(jobs),
            self.spec.style,
            self.spec.shots,
            self.spec.rotation_k,
        )
        with ThreadPoolExecutor(max_workers=self.spec.concurrency) as pool:
            records = list(pool.map(self._execute, jobs))
        records.sort(key=lambda record: record.instance_id)
        failed = sum(1 for record in records if record.error)
        logger.info("Run finished: %d records, %d failed calls", len(records), failed)
        return records


def run(spec: RunSpec, backend, endpoint=None, cache=None, metrics=None, dataset=None, output=None):
    """
    Execute a run and optionally persist its records.

    Args:
        spec: What to sample and how to prompt.
        backend: Object with `complete(prompt) -> str`.
        endpoint: ModelEndpoint used for cache keys and record identifiers.
        cache: Optional CompletionCache.
        metrics: MetricConfig for scoring.
        dataset: Preloaded instances; read from spec.dataset_path otherwise.
        output: Path for line-delimited RunRecords.

    Returns:
        list[RunRecord] sorted by instance id.
    """
    if dataset is None:
        dataset = read_dataset(spec.dataset_path)
    records = BenchmarkRunner(spec, backend, endpoint, cache, metrics).run(dataset)
    if output:
        write_jsonl(output, (record.to_dict() for record in records))
    return records
