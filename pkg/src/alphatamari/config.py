import os

from .errors import SizeCapExceeded

DEFAULT_MAX_N = 12
CAP_ENV_VAR = "ALPHATAMARI_MAX_N"


def enumeration_cap() -> int:
    """Largest n accepted by factorial-size enumerations.

    Read from ``ALPHATAMARI_MAX_N`` on every call so tests and the CLI can
    override it without touching module state.
    """
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


def require_within_cap(n: int, cap: int | None = None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise SizeCapExceeded(
            f"n={n} exceeds the enumeration cap of {limit} (set {CAP_ENV_VAR} to raise it)"
        )
