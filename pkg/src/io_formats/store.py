"""Run artifact storage, committed at the end of a run."""
import os
import tempfile
from pathlib import Path
from typing import Dict, List

from loguru import logger

from config import OUTPUT_DIR


class ArtifactStore:
    def __init__(self, base_path: str = str(OUTPUT_DIR)):
        self.base_path = Path(base_path)
        self._pending: Dict[str, str] = {}

    def add(self, name: str, text: str):
        """Queue an artifact; nothing touches the disk before commit()."""
        self._pending[name] = text

    def names(self) -> List[str]:
        return list(self._pending)

    def commit(self) -> List[Path]:
        """Write every queued artifact via temp file + atomic rename."""
        self.base_path.mkdir(parents=True, exist_ok=True)
        written = []
        for name, text in self._pending.items():
            path = self.base_path / name
            fd, tmp = tempfile.mkstemp(dir=self.base_path, prefix=f".{name}.", suffix=".tmp")
            with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
            os.replace(tmp, path)
            written.append(path)
            logger.info(f"Saved artifact {name} -> {path}")
        self._pending.clear()
        return written
