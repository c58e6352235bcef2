"""Shared file helpers: phrase-list files, checksums, output metadata headers.

Phrase-list files (stop phrases and lexicons alike) are UTF-8 text, one
phrase per line; blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .errors import DataError

TOOL_NAME = "satira"


def tool_version() -> str:
    from . import __version__

    return __version__


def read_phrase_file(path) -> list[str]:
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise DataError(f"{path}: not valid UTF-8: {exc}") from exc
    except OSError as exc:
        raise DataError(f"{path}: {exc}") from exc
    phrases = []
    for line in raw.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        phrases.append(stripped)
    return phrases


def file_checksum(path) -> str:
    """Short sha256 of a file, recorded in output headers for reproducibility."""
    digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
    return digest[:16]


def config_hash(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True, ensure_ascii=False, default=str)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


def metadata_header(config: dict, lexicon_checksums: dict[str, str] | None = None) -> str:
    """Comment block placed at the top of every CLI output file."""
    lines = [f"# {TOOL_NAME} {tool_version()}", f"# config-hash {config_hash(config)}"]
    for name, checksum in sorted((lexicon_checksums or {}).items()):
        lines.append(f"# lexicon {name} sha256:{checksum}")
    return "".join(line + "\n" for line in lines)


def split_comment_block(text: str, format_tag: str) -> tuple[dict, list[str]]:
    """Validate the leading comment block and return (meta, body lines).

    The format tag must be the first line; key=value pairs may appear on
    any later comment line (the CLI splices tool/config metadata between
    the tag and the body).
    """
    lines = text.splitlines()
    if not lines or lines[0] != f"# {format_tag}":
        raise DataError(f"unsupported file (expected header '# {format_tag}')")
    meta: dict[str, str] = {}
    body_start = len(lines)
    for i, line in enumerate(lines):
        if not line.startswith("#"):
            body_start = i
            break
        for part in line.lstrip("# ").split(" "):
            if "=" in part:
                key, value = part.split("=", 1)
                meta[key] = value
    return meta, lines[body_start:]


def insert_metadata(path, header: str) -> None:
    """Splice CLI metadata lines after a serialized file's format tag."""
    path = Path(path)
    first, _, rest = path.read_text(encoding="utf-8").partition("\n")
    path.write_text(first + "\n" + header + rest, encoding="utf-8")


def load_json(path) -> dict:
    """Read a JSON file, skipping the leading ``#`` metadata lines."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    body = "\n".join(l for l in lines if not l.startswith("#"))
    return json.loads(body)
