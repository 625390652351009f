"""
Background benchmark runs.
"""

import logging
from dataclasses import replace
from pathlib import Path

from celery import shared_task
from django.conf import settings

from core.runconfig import load_run_config

from .cache import CompletionCache
from .client import ChatCompletionsClient
from .runner import run

logger = logging.getLogger(__name__)


def resolve_run(spec_payload):
    """RunConfig with the payload merged over the configured harness section."""
    config = load_run_config(settings.LOADPATH_RUN_CONFIG or None, {"harness": spec_payload})
    if not config.harness.dataset_path:
        config = replace(
            config, harness=replace(config.harness, dataset_path=settings.LOADPATH_DATASET_PATH)
        )
    return config, config.endpoint()


@shared_task(bind=True, max_retries=0)
def execute_run_task(self, spec_payload):
    """
    Run the harness for a validated harness section and write RunRecords.

    Returns:
        dict: record count and output path.
    """
    config, endpoint = resolve_run(spec_payload)
    output = Path(settings.LOADPATH_RUNS_DIR) / f"{self.request.id or 'eager'}.jsonl"
    logger.info("Run task %s started for endpoint %s", self.request.id, endpoint.name)
    records = run(
        config.harness,
        ChatCompletionsClient(endpoint),
        endpoint=endpoint,
        cache=CompletionCache(),
        metrics=config.metrics,
        output=output,
    )
    return {"records": len(records), "output": str(output)}
