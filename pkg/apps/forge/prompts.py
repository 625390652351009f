"""
Prompt rendering for task instances.
Templates live in templates/prompts/, one per style, all extending layout.txt.
"""

import hashlib
import logging

import numpy as np
from django.template.loader import render_to_string

from apps.grids.cells import Difficulty
from apps.grids.codec import render_grid

from .exceptions import EmptyPool
from .instance import PromptStyle, TaskInstance

logger = logging.getLogger(__name__)

DIFFICULTY_CLAUSES = {
    Difficulty.EASY: "either '1' (solid) or '0' (empty)",
    Difficulty.HARD: (
        "a floating point number between 0 and 1, with one decimal place "
        "(e.g., 0.0, 0.1, 0.2, ..., 1.0)"
    ),
}

EXAMPLE_BLOCK = (
    "Example input grid with masked regions:\n\n{input}\n\n"
    "Corresponding completed output grid:\n\n{output}\n\n"
)


def fewshot_pool(dataset, instance: TaskInstance):
    """Same subject and difficulty, query excluded, in dataset order."""
    return [
        candidate
        for candidate in dataset
        if candidate.subject == instance.subject
        and candidate.difficulty == instance.difficulty
        and candidate.base_id != instance.base_id
    ]


def shot_rng(seed, instance_id):
    digest = hashlib.sha256(instance_id.encode("utf-8")).digest()
    key = int.from_bytes(digest[:8], "big")
    return np.random.default_rng(np.random.SeedSequence([int(seed), key]))


def select_examples(instance: TaskInstance, pool, shots, seed=0):
    """
    Draw `shots` examples uniformly without replacement, kept in pool order.

    Raises:
        EmptyPool: shots > 0 and no candidate other than the query exists.
    """
    if shots == 0:
        return []
    candidates = [c for c in pool if c.base_id != instance.base_id]
    if not candidates:
        raise EmptyPool(f"No few-shot candidates for {instance.id}", instance_id=instance.id)
    if len(candidates) < shots:
        logger.warning(
            "Only %d few-shot candidates for %s, %d requested", len(candidates), instance.id, shots
        )
        return candidates
    picks = shot_rng(seed, instance.base_id).choice(len(candidates), size=shots, replace=False)
    return [candidates[index] for index in sorted(picks)]


def render_examples(examples, difficulty):
    return "".join(
        EXAMPLE_BLOCK.format(
            input=render_grid(example.input, difficulty),
            output=render_grid(example.ground_truth, difficulty),
        )
        for example in examples
    )


def render_prompt(
    instance: TaskInstance, style: PromptStyle | None = None, fewshot_pool=(), seed=0
):
    """
    Render the full prompt text for an instance.

    Args:
        instance: The query instance.
        style: Template style and shot count.
        fewshot_pool: Candidate examples, usually from `fewshot_pool(dataset, instance)`.
        seed: Shot seed; with the instance id it fixes which examples are drawn.

    Returns:
        str: The prompt, without trailing whitespace.
    """
    style = style or PromptStyle()
    examples = select_examples(instance, fewshot_pool, style.shots, seed)
    context = {
        "difficulty_clause": DIFFICULTY_CLAUSES[instance.difficulty],
        "examples": render_examples(examples, instance.difficulty),
        "grid": render_grid(instance.input, instance.difficulty),
    }
    return render_to_string(f"prompts/{style.style.value}.txt", context).strip()
