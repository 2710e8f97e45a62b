"""Runtime bounds shared by the search-heavy entry points."""

import os

ENV_MAX_ORDER = "QUANDLE_MAX_ORDER"
HARD_MAX_ORDER = 8


def resolve_bound(default: int) -> int:
    """Effective order/degree bound: QUANDLE_MAX_ORDER if set, else `default`.

    Values outside 1..HARD_MAX_ORDER are refused outright; the exhaustive
    representations used throughout the package stop being workable there.
    """
    raw = os.environ.get(ENV_MAX_ORDER)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_ORDER} must be an integer, got {raw!r}") from None
    if not 1 <= value <= HARD_MAX_ORDER:
        raise ValueError(
            f"{ENV_MAX_ORDER}={value} refused; supported range is 1..{HARD_MAX_ORDER}"
        )
    return value
