import pytest

from apps.forge.exceptions import EmptyPool, ForgeError
from apps.forge.instance import PromptStyle, TaskInstance, rotate_instance
from apps.forge.prompts import fewshot_pool, render_prompt, select_examples
from apps.grids.cells import Difficulty, GravityVector
from apps.grids.codec import render_grid

EXAMPLE_HEADER = "Example input grid with masked regions:"


@pytest.fixture
def hard_instance(small_dataset):
    return next(
        i for i in small_dataset if i.subject.slug == "rows1" and i.difficulty is Difficulty.HARD
    )


def test_base_prompt(easy_cells_instance):
    prompt = render_prompt(easy_cells_instance)

    assert "The goal is to predict the correct material distribution" in prompt
    assert "either '1' (solid) or '0' (empty)" in prompt
    assert "'L' indicates applied load." in prompt
    assert prompt.endswith("Return only the completed grid without any additional explanation.")
    assert render_grid(easy_cells_instance.input, Difficulty.EASY) in prompt
    assert EXAMPLE_HEADER not in prompt
    assert "&#x27;" not in prompt


def test_hard_prompt_asks_for_one_decimal(hard_instance):
    prompt = render_prompt(hard_instance)

    assert "with one decimal place" in prompt
    assert render_grid(hard_instance.input, Difficulty.HARD) in prompt


def test_physics_enhanced_prompt(easy_cells_instance):
    prompt = render_prompt(easy_cells_instance, PromptStyle.build("physics_enhanced"))

    assert "Stress follows the shortest stiff path" in prompt
    assert "The goal is to predict the correct material distribution" in prompt


def test_physics_neutral_prompt_hides_the_physics(easy_cells_instance):
    prompt = render_prompt(easy_cells_instance, PromptStyle.build("physics_neutral"))

    assert "'L' indicates a special marker." in prompt
    assert "'S' indicates a fixed marker." in prompt
    assert "applied load" not in prompt
    assert "Return only the completed grid without any additional explanation." in prompt


@pytest.mark.parametrize("shots", [1, 3])
def test_fewshot_blocks(easy_cells_instance, small_dataset, shots):
    pool = fewshot_pool(small_dataset, easy_cells_instance)
    prompt = render_prompt(easy_cells_instance, PromptStyle.build("base", shots), pool)

    assert prompt.count(EXAMPLE_HEADER) == shots
    assert prompt.count("Corresponding completed output grid:") == shots
    assert prompt.index(EXAMPLE_HEADER) < prompt.index("Below is the input grid")


def test_fewshot_pool_matches_subject_and_difficulty(easy_cells_instance, small_dataset):
    pool = fewshot_pool(small_dataset, easy_cells_instance)

    assert pool
    assert all(c.subject == easy_cells_instance.subject for c in pool)
    assert all(c.difficulty is Difficulty.EASY for c in pool)
    assert easy_cells_instance.base_id not in {c.base_id for c in pool}


def test_example_selection_is_seeded(easy_cells_instance, small_dataset):
    pool = fewshot_pool(small_dataset, easy_cells_instance)

    first = select_examples(easy_cells_instance, pool, 3, seed=0)
    again = select_examples(easy_cells_instance, pool, 3, seed=0)

    assert [e.id for e in first] == [e.id for e in again]
    assert len({e.id for e in first}) == 3
    assert [e.id for e in first] == [c.id for c in pool if c in first]


def test_rotated_query_draws_the_same_examples(easy_cells_instance, small_dataset):
    pool = fewshot_pool(small_dataset, easy_cells_instance)
    rotated = rotate_instance(easy_cells_instance, 1)

    assert select_examples(rotated, pool, 3) == select_examples(easy_cells_instance, pool, 3)


def test_small_pool_returns_every_candidate(easy_cells_instance, small_dataset):
    pool = fewshot_pool(small_dataset, easy_cells_instance)[:2]

    assert select_examples(easy_cells_instance, pool, 3) == pool


def test_empty_pool(easy_cells_instance):
    with pytest.raises(EmptyPool):
        render_prompt(easy_cells_instance, PromptStyle.build("base", 1), [easy_cells_instance])
    assert select_examples(easy_cells_instance, [], 0) == []


@pytest.mark.parametrize("style, shots", [("base", 2), ("chatty", 0)])
def test_invalid_prompt_style(style, shots):
    with pytest.raises(ForgeError):
        PromptStyle.build(style, shots)


def test_rotation_moves_loads_and_gravity(easy_cells_instance):
    rotated = rotate_instance(easy_cells_instance, 3)

    assert rotated.id == f"{easy_cells_instance.id}-r3"
    assert rotated.base_id == easy_cells_instance.id
    assert rotated.gravity == GravityVector(0, 1)
    assert all(j == 0 for _, j in rotated.input.loads())
    assert set(rotated.input.voids()) == rotated.mask
    assert rotate_instance(rotated, 1) == easy_cells_instance


def test_instance_rejects_mask_that_disagrees_with_input(easy_cells_instance):
    with pytest.raises(ForgeError):
        TaskInstance(
            id="bad",
            subject=easy_cells_instance.subject,
            difficulty=easy_cells_instance.difficulty,
            input=easy_cells_instance.input,
            ground_truth=easy_cells_instance.ground_truth,
            mask=frozenset(list(easy_cells_instance.mask)[:1]),
        )
