import logging
import os
from pathlib import Path

from pydantic import ValidationError

from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.search_dto import CheckpointState

_log = logging.getLogger(__name__)


class CheckpointRepository:
    """
    Checkpoint Repository class

    Persists the state of a near-miss scan as one JSON document. Writes go to a sibling temporary
    file that replaces the checkpoint in one step, so a reader sees the old or the new state.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def exists(self) -> bool:
        return self.path.is_file()

    def load(self, config_hash: str) -> CheckpointState | None:
        """Read the checkpoint; None if absent, CHECKPOINT_MISMATCH if it belongs to another config."""
        if not self.exists():
            _log.debug(f"CheckpointRepository no checkpoint at {self.path}")
            return None
        try:
            state = CheckpointState.model_validate_json(self.path.read_text(encoding="utf-8"))
        except ValidationError as e:
            raise BusinessException(ErrorCodes.CHECKPOINT_MISMATCH, f"unreadable checkpoint {self.path}: {e}") from e
        if state.config_hash != config_hash:
            _log.error(f"CheckpointRepository hash {state.config_hash[:12]} != {config_hash[:12]}")
            raise BusinessException(ErrorCodes.CHECKPOINT_MISMATCH,
                                    f"checkpoint {self.path} was written for a different search config")
        _log.info(f"CheckpointRepository resuming {len(state.completed_shards)} shards from {self.path}")
        return state

    def save(self, state: CheckpointState):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_name(self.path.name + ".tmp")
        tmp.write_text(state.model_dump_json(), encoding="utf-8")
        os.replace(tmp, self.path)
        _log.debug(f"CheckpointRepository saved {len(state.completed_shards)} shards to {self.path}")

    def delete(self):
        if self.exists():
            self.path.unlink()
