from datetime import datetime, timezone
from typing import Any, Dict, TextIO
import json
import sys

from app.core.config import get_settings


def _now() -> str:
    try:
        return datetime.now(get_settings().zone).isoformat()
    except Exception:
        return datetime.now(timezone.utc).isoformat()


def log(
    event: str,
    layer: str,
    model: str | None = None,
    correlation_id: str | None = None,
    sequence_number: int | None = None,
    stream: TextIO | None = None,
    **payload: Any,
) -> None:
    """
    Structured event logger.

    Guarantees:
    - Never raises exceptions
    - Emits one JSON object per line to stderr (stdout is reserved for
      CSV / summary output)
    - ISO-8601 timestamps in the configured zone
    - No interpretation, no mutation

    Records facts about training, dynamics and sweeps; decisions stay in
    the calling layer.
    """

    try:
        settings = get_settings()
        if not settings.log_enabled:
            return
    except Exception:
        # a broken environment must not silence the failure that follows
        pass

    out = stream if stream is not None else sys.stderr

    try:
        event_record: Dict[str, Any] = {
            "timestamp": _now(),
            "event": event,
            "layer": layer,
        }

        if model is not None:
            event_record["model"] = model

        if correlation_id is not None:
            event_record["correlation_id"] = correlation_id

        if sequence_number is not None:
            event_record["sequence_number"] = sequence_number

        if payload:
            event_record["payload"] = payload

        out.write(json.dumps(event_record, ensure_ascii=False, default=str) + "\n")
        out.flush()

    except Exception:
        # Logger must NEVER break the run
        try:
            out.write(
                json.dumps({
                    "timestamp": _now(),
                    "event": "LOGGER_FAILURE",
                    "layer": "logger",
                    "original_event": str(event),
                }) + "\n"
            )
            out.flush()
        except Exception:
            pass
