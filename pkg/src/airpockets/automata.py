"""Step-level path models with independent counting oracles and a sampler.

Four automata are modeled.  Each walks on nonnegative levels and records,
as its *layer*, the kind of the step that led to the current point:

* ``DAP_LR``  - unit up-steps, giant down-steps of any size, downs never
  adjacent (the air-pocket condition).
* ``DAP_RL``  - the step-reversed reading: up-steps of any size, unit
  down-steps, ups never adjacent.
* ``SKEW_FIG`` - the skew extension where a red step moves down one level
  and may only follow a down-step or another red step.
* ``SKEW_SOLVED`` - identical except the red step moves *up* one level.

The two skew variants exist because the two plausible readings of the skew
model genuinely disagree from five steps on; the verification harness
reports which one the closed forms count rather than assuming.

Counting is done twice, by construction independently:

* :func:`count_dfs` / :func:`census_dfs` exhaustively walk the transition
  graph (oracle #1);
* :func:`count_dp` fills layer-count tables from the per-model level
  recursions, never touching :func:`transitions` (oracle #2).

:func:`sample_uniform` draws words uniformly at random over an endpoint
class via exact integer proportional choice on a completion-count table.
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator, Mapping, Optional


class ModelId(Enum):
    """The four path automata."""

    DAP_LR = "dap-lr"
    DAP_RL = "dap-rl"
    SKEW_FIG = "skew-fig"
    SKEW_SOLVED = "skew-solved"


class Layer(Enum):
    """Kind of the last step taken (the empty word sits in its model's
    start layer by convention)."""

    AFTER_UP = "after-up"
    AFTER_DOWN = "after-down"
    AFTER_RED = "after-red"


class StepKind(Enum):
    # enumeration order is the deterministic transition order
    UP = "U"
    GIANT_DOWN = "D"
    RED = "R"


MODEL_LAYERS: Mapping[ModelId, tuple[Layer, ...]] = {
    ModelId.DAP_LR: (Layer.AFTER_UP, Layer.AFTER_DOWN),
    ModelId.DAP_RL: (Layer.AFTER_UP, Layer.AFTER_DOWN),
    ModelId.SKEW_FIG: (Layer.AFTER_UP, Layer.AFTER_DOWN, Layer.AFTER_RED),
    ModelId.SKEW_SOLVED: (Layer.AFTER_UP, Layer.AFTER_DOWN, Layer.AFTER_RED),
}

# Layer housing the empty word, chosen so the level-0 base cases of the
# closed forms are literal table entries.
START_LAYER: Mapping[ModelId, Layer] = {
    ModelId.DAP_LR: Layer.AFTER_UP,
    ModelId.DAP_RL: Layer.AFTER_DOWN,
    ModelId.SKEW_FIG: Layer.AFTER_UP,
    ModelId.SKEW_SOLVED: Layer.AFTER_UP,
}


class LayerError(ValueError):
    """A layer was used with a model that does not have it."""


class EmptySupportError(ValueError):
    """Sampling was requested from an endpoint class containing no words."""


@dataclass(frozen=True)
class Step:
    """One lattice step: an up-step of some rise, a giant down-step of some
    drop, or a red step (whose direction is model-dependent)."""

    kind: StepKind
    size: int = 1

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"step size must be >= 1, got {self.size}")
        if self.kind is StepKind.RED and self.size != 1:
            raise ValueError("red steps have no size")

    def token(self) -> str:
        if self.kind is StepKind.UP:
            return "U" if self.size == 1 else f"U{self.size}"
        if self.kind is StepKind.GIANT_DOWN:
            return f"D{self.size}"
        return "R"


def up(rise: int = 1) -> Step:
    return Step(StepKind.UP, rise)


def down(drop: int) -> Step:
    return Step(StepKind.GIANT_DOWN, drop)


def red() -> Step:
    return Step(StepKind.RED)


def step_delta(model: ModelId, step: Step) -> int:
    """Signed level change of ``step`` inside ``model``."""
    if step.kind is StepKind.UP:
        return step.size
    if step.kind is StepKind.GIANT_DOWN:
        return -step.size
    return 1 if model is ModelId.SKEW_SOLVED else -1


_LAYER_OF_KIND = {
    StepKind.UP: Layer.AFTER_UP,
    StepKind.GIANT_DOWN: Layer.AFTER_DOWN,
    StepKind.RED: Layer.AFTER_RED,
}

# step kinds a model admits at all, with the allowed rise/drop flexibility
_UNIT_UP_MODELS = (ModelId.DAP_LR, ModelId.SKEW_FIG, ModelId.SKEW_SOLVED)


@dataclass(frozen=True)
class PathWord:
    """A concrete step sequence of one model."""

    model: ModelId
    steps: tuple[Step, ...]

    def levels(self) -> list[int]:
        """Prefix levels, starting from 0 (length = len(steps) + 1)."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + step_delta(self.model, s))
        return out

    @property
    def end_level(self) -> int:
        return self.levels()[-1]

    @property
    def end_layer(self) -> Layer:
        if not self.steps:
            return START_LAYER[self.model]
        return _LAYER_OF_KIND[self.steps[-1].kind]

    def word(self) -> str:
        return "".join(s.token() for s in self.steps)

    def is_valid(self) -> bool:
        """Re-validate from scratch: step kinds and sizes admissible for the
        model, all prefix levels nonnegative, adjacency restrictions obeyed.

        Deliberately independent of :func:`transitions`.
        """
        model = self.model
        level = 0
        prev: Optional[StepKind] = None
        for s in self.steps:
            k = s.kind
            if k is StepKind.RED and model in (ModelId.DAP_LR, ModelId.DAP_RL):
                return False
            if k is StepKind.UP and model in _UNIT_UP_MODELS and s.size != 1:
                return False
            if k is StepKind.GIANT_DOWN and model is ModelId.DAP_RL and s.size != 1:
                return False
            # adjacency restrictions
            if model is ModelId.DAP_LR:
                if k is StepKind.GIANT_DOWN and prev is StepKind.GIANT_DOWN:
                    return False
            elif model is ModelId.DAP_RL:
                if k is StepKind.UP and prev is StepKind.UP:
                    return False
            else:
                if k is StepKind.UP and prev is StepKind.RED:
                    return False
                if k is StepKind.GIANT_DOWN and prev is StepKind.GIANT_DOWN:
                    return False
                if k is StepKind.RED and prev not in (
                    StepKind.GIANT_DOWN,
                    StepKind.RED,
                ):
                    return False
            level += step_delta(model, s)
            if level < 0:
                return False
            prev = k
        return True


@lru_cache(maxsize=65536)
def transitions(
    model: ModelId, level: int, layer: Layer, level_cap: int
) -> tuple[tuple[Step, int, Layer], ...]:
    """Complete outgoing edge set from ``(level, layer)``.

    Up rises are enumerated up to ``level_cap`` and giant-down drops down to
    level 0.  The order is deterministic: ups by ascending rise, then giant
    downs by ascending drop, then red.  Results are memoized; treat them as
    immutable.
    """
    if layer not in MODEL_LAYERS[model]:
        raise LayerError(f"model {model.value} has no layer {layer.value}")
    if level < 0 or level > level_cap:
        raise ValueError(
            f"level {level} outside [0, level_cap={level_cap}]"
        )
    out: list[tuple[Step, int, Layer]] = []

    def add_ups(max_rise: int):
        for j in range(1, max_rise + 1):
            out.append((up(j), level + j, Layer.AFTER_UP))

    def add_unit_up():
        if level + 1 <= level_cap:
            out.append((up(1), level + 1, Layer.AFTER_UP))

    def add_downs():
        for j in range(1, level + 1):
            out.append((down(j), level - j, Layer.AFTER_DOWN))

    if model is ModelId.DAP_LR:
        if layer is Layer.AFTER_UP:
            add_unit_up()
            add_downs()
        else:  # AFTER_DOWN: only an up-step may follow a down-step
            add_unit_up()
    elif model is ModelId.DAP_RL:
        if layer is Layer.AFTER_DOWN:
            add_ups(level_cap - level)
            if level >= 1:
                out.append((down(1), level - 1, Layer.AFTER_DOWN))
        else:  # AFTER_UP: ups never adjacent
            if level >= 1:
                out.append((down(1), level - 1, Layer.AFTER_DOWN))
    else:
        red_to = level + 1 if model is ModelId.SKEW_SOLVED else level - 1
        red_ok = red_to >= 0 and red_to <= level_cap
        if layer is Layer.AFTER_UP:
            add_unit_up()
            add_downs()
        elif layer is Layer.AFTER_DOWN:
            add_unit_up()
            if red_ok:
                out.append((red(), red_to, Layer.AFTER_RED))
        else:  # AFTER_RED
            add_downs()
            if red_ok:
                out.append((red(), red_to, Layer.AFTER_RED))
    return tuple(out)


def iter_words(model: ModelId, n: int, level_cap: int) -> Iterator[PathWord]:
    """All valid n-step words with every level <= level_cap, in the
    deterministic lexicographic order of transition choices."""
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")

    prefix: list[Step] = []

    def rec(level: int, layer: Layer, taken: int) -> Iterator[PathWord]:
        if taken == n:
            yield PathWord(model, tuple(prefix))
            return
        for step, lv2, ly2 in transitions(model, level, layer, level_cap):
            prefix.append(step)
            yield from rec(lv2, ly2, taken + 1)
            prefix.pop()

    yield from rec(0, START_LAYER[model], 0)


def enumerate_words(model: ModelId, n: int, level_cap: int) -> list[PathWord]:
    """Materialized :func:`iter_words`; for n = 0 the single empty word."""
    return list(iter_words(model, n, level_cap))


def count_dfs(
    model: ModelId,
    n: int,
    end_level: int,
    layer: Optional[Layer] = None,
) -> int:
    """Exhaustive-walk count of n-step words ending at ``end_level`` (and in
    ``layer``, when given).

    For ``DAP_RL`` the walk bounds intermediate levels by
    ``end_level + steps remaining`` (its descents are all unit); the other
    models never rise above n.
    """
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")
    if end_level < 0:
        raise ValueError(f"end level must be nonnegative, got {end_level}")
    if layer is not None and layer not in MODEL_LAYERS[model]:
        raise LayerError(f"model {model.value} has no layer {layer.value}")
    adaptive = model is ModelId.DAP_RL

    def walk(level: int, lyr: Layer, remaining: int) -> int:
        if remaining == 0:
            return int(level == end_level and (layer is None or lyr is layer))
        if adaptive:
            if level - remaining > end_level:
                return 0
            cap = max(level, end_level + remaining - 1)
        else:
            if level + remaining < end_level:
                return 0
            cap = n
        total = 0
        for _, lv2, ly2 in transitions(model, level, lyr, cap):
            total += walk(lv2, ly2, remaining - 1)
        return total

    return walk(0, START_LAYER[model], n)


def census_dfs(
    model: ModelId, n: int, level_cap: int
) -> dict[tuple[int, Layer], int]:
    """Counts of all n-step words under ``level_cap``, bucketed by
    (end level, end layer) in one exhaustive walk."""
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")
    buckets: dict[tuple[int, Layer], int] = {}

    def walk(level: int, lyr: Layer, remaining: int):
        if remaining == 0:
            key = (level, lyr)
            buckets[key] = buckets.get(key, 0) + 1
            return
        for _, lv2, ly2 in transitions(model, level, lyr, level_cap):
            walk(lv2, ly2, remaining - 1)

    walk(0, START_LAYER[model], n)
    return buckets


@dataclass(frozen=True)
class CountTable:
    """Exact counts per (steps, end level, end layer) for one model.

    Zero cells are omitted from storage; ``count`` answers any cell with
    n <= n_max and level <= n_max.
    """

    model: ModelId
    n_max: int
    cells: Mapping[tuple[int, int, Layer], int] = field(repr=False)

    def count(self, n: int, level: int, layer: Optional[Layer] = None) -> int:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n={n} outside table range 0..{self.n_max}")
        if not 0 <= level <= self.n_max:
            raise ValueError(f"level={level} outside table range 0..{self.n_max}")
        if layer is not None:
            if layer not in MODEL_LAYERS[self.model]:
                raise LayerError(
                    f"model {self.model.value} has no layer {layer.value}"
                )
            return self.cells.get((n, level, layer), 0)
        return sum(
            self.cells.get((n, level, ly), 0) for ly in MODEL_LAYERS[self.model]
        )


def count_dp(model: ModelId, n_max: int) -> CountTable:
    """Fill the model's count table from its level recursions, read degree
    by degree.  Independent of :func:`transitions` by construction."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if model is ModelId.DAP_LR:
        cells = _dp_dap_lr(n_max)
    elif model is ModelId.DAP_RL:
        cells = _dp_dap_rl(n_max)
    else:
        cells = _dp_skew(model, n_max)
    return CountTable(model=model, n_max=n_max, cells=cells)


def _dp_dap_lr(n_max: int) -> dict[tuple[int, int, Layer], int]:
    # up-layer u, down-layer d; an up-step lands at level k from either layer
    # at k-1; a giant down lands at level k from the up layer at any j > k.
    w = n_max + 1
    u = [[0] * w for _ in range(n_max + 1)]
    d = [[0] * w for _ in range(n_max + 1)]
    u[0][0] = 1  # empty word
    for n in range(1, n_max + 1):
        for k in range(1, w):
            u[n][k] = u[n - 1][k - 1] + d[n - 1][k - 1]
        for k in range(w):
            d[n][k] = sum(u[n - 1][j] for j in range(k + 1, w))
    return _cells_from_rows(
        n_max, {Layer.AFTER_UP: u, Layer.AFTER_DOWN: d}
    )


def _dp_dap_rl(n_max: int) -> dict[tuple[int, int, Layer], int]:
    # a[n][k]: words ending with a down-step (plus the empty word at (0,0));
    # b[n][k]: all nonempty words.  A word at level k ending with a down came
    # from any word at k+1; an up-step of any size may extend anything that
    # does not end with an up, i.e. the a-class, from any lower level.
    # Intermediate levels can exceed n_max (one giant rise, unit descents),
    # so rows are computed to width 2*n_max and reported to n_max.
    w = 2 * n_max + 1
    a = [[0] * (w + 1) for _ in range(n_max + 1)]  # +1: sentinel column
    b = [[0] * (w + 1) for _ in range(n_max + 1)]
    a[0][0] = 1
    for n in range(1, n_max + 1):
        prefix = 0  # running sum of a[n-1][j] for j < k
        for k in range(w):
            a[n][k] = b[n - 1][k + 1]
            b[n][k] = b[n - 1][k + 1] + prefix
            prefix += a[n - 1][k]
    cells: dict[tuple[int, int, Layer], int] = {}
    for n in range(n_max + 1):
        for k in range(n_max + 1):
            after_down = a[n][k]
            after_up = b[n][k] - a[n][k]
            if n == 0 and k == 0:
                after_up = 0  # a[0][0] is the empty word, already after-down
            if after_down:
                cells[(n, k, Layer.AFTER_DOWN)] = after_down
            if after_up:
                cells[(n, k, Layer.AFTER_UP)] = after_up
    return cells


def _dp_skew(model: ModelId, n_max: int) -> dict[tuple[int, int, Layer], int]:
    # a: after an up-step; b: after a giant down; c: after a red step.
    # The red step lowers the level in the figure-faithful variant and
    # raises it in the solved-system variant; everything else is shared.
    red_up = model is ModelId.SKEW_SOLVED
    w = n_max + 2  # sentinel column for the k+1 reads
    a = [[0] * w for _ in range(n_max + 1)]
    b = [[0] * w for _ in range(n_max + 1)]
    c = [[0] * w for _ in range(n_max + 1)]
    a[0][0] = 1
    for n in range(1, n_max + 1):
        for k in range(1, w):
            a[n][k] = a[n - 1][k - 1] + b[n - 1][k - 1]
        for k in range(w):
            b[n][k] = sum(a[n - 1][j] + c[n - 1][j] for j in range(k + 1, w))
        if red_up:
            for k in range(1, w):
                c[n][k] = b[n - 1][k - 1] + c[n - 1][k - 1]
        else:
            for k in range(w - 1):
                c[n][k] = b[n - 1][k + 1] + c[n - 1][k + 1]
    return _cells_from_rows(
        n_max,
        {Layer.AFTER_UP: a, Layer.AFTER_DOWN: b, Layer.AFTER_RED: c},
    )


def _cells_from_rows(
    n_max: int, rows: Mapping[Layer, list[list[int]]]
) -> dict[tuple[int, int, Layer], int]:
    cells: dict[tuple[int, int, Layer], int] = {}
    for layer, table in rows.items():
        for n in range(n_max + 1):
            for k in range(n_max + 1):
                v = table[n][k] if k < len(table[n]) else 0
                if v:
                    cells[(n, k, layer)] = v
    return cells


def _completion_counts(
    model: ModelId, n: int, end_level: int
) -> tuple[list[dict[tuple[int, Layer], int]], int]:
    """remaining-steps -> (level, layer) -> number of completions reaching
    end_level (any layer) in exactly that many further steps."""
    cap = end_level + n if model is ModelId.DAP_RL else max(n, end_level)
    table: list[dict[tuple[int, Layer], int]] = [
        {(end_level, ly): 1 for ly in MODEL_LAYERS[model]}
    ]
    for r in range(1, n + 1):
        prev = table[r - 1]
        cur: dict[tuple[int, Layer], int] = {}
        for level in range(cap + 1):
            for layer in MODEL_LAYERS[model]:
                total = 0
                for _, lv2, ly2 in transitions(model, level, layer, cap):
                    total += prev.get((lv2, ly2), 0)
                if total:
                    cur[(level, layer)] = total
        table.append(cur)
    return table, cap


def sample_many(
    model: ModelId, n: int, end_level: int, count: int, seed: int
) -> list[PathWord]:
    """``count`` uniform draws over n-step words ending at ``end_level``,
    deterministic under ``seed``."""
    if n < 0 or end_level < 0:
        raise ValueError("n and end_level must be nonnegative")
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    table, cap = _completion_counts(model, n, end_level)
    start = (0, START_LAYER[model])
    if table[n].get(start, 0) == 0:
        raise EmptySupportError(
            f"no {model.value} words of {n} steps end at level {end_level}"
        )
    rng = random.Random(seed)
    words = []
    for _ in range(count):
        steps: list[Step] = []
        level, layer = start
        for r in range(n, 0, -1):
            x = rng.randrange(table[r][(level, layer)])
            for step, lv2, ly2 in transitions(model, level, layer, cap):
                weight = table[r - 1].get((lv2, ly2), 0)
                if x < weight:
                    steps.append(step)
                    level, layer = lv2, ly2
                    break
                x -= weight
            else:  # pragma: no cover - table and transitions disagree
                raise AssertionError("completion table inconsistent")
        words.append(PathWord(model, tuple(steps)))
    return words


def sample_uniform(model: ModelId, n: int, end_level: int, seed: int) -> PathWord:
    """One uniform draw; see :func:`sample_many`."""
    return sample_many(model, n, end_level, 1, seed)[0]
