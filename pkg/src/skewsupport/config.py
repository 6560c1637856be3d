"""Runtime limits and environment overrides."""

import os

DEFAULT_MAX_SIZE = 14

ENV_MAX_SIZE = "SKEWSUPPORT_MAX_SIZE"
ENV_JOBS = "SKEWSUPPORT_JOBS"
ENV_PURE = "SKEWSUPPORT_PURE"


def max_size() -> int:
    raw = os.environ.get(ENV_MAX_SIZE)
    if raw is None:
        return DEFAULT_MAX_SIZE
    value = int(raw)
    if value < 1:
        raise ValueError(f"{ENV_MAX_SIZE} must be >= 1, got {raw}")
    return value


def effective_max_size(override=None) -> int:
    return max_size() if override is None else int(override)


def default_jobs() -> int:
    raw = os.environ.get(ENV_JOBS)
    if raw is None:
        return 1
    return max(1, int(raw))
