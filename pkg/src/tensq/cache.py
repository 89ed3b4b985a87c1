"""Result cache: one self-describing file per canonical input digest.

Keys hash the canonical JSON of the inputs (generators or presentation
text, mode, limits) together with the tool version, so a version bump
is a cache miss.  Writes are atomic (write-then-rename); a corrupt
entry is ignored with a warning and recomputed.  There is no global
index, so the cache is crash-safe by construction.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
import warnings

from .report import canonical_json

ENV_VAR = "TENSQ_CACHE_DIR"
_HEADER = "tensq-cache 1"


def cache_dir():
    override = os.environ.get(ENV_VAR)
    if override:
        return override
    return os.path.join(os.path.expanduser("~"), ".cache", "tensq")


def cache_key(payload, version):
    body = canonical_json({"payload": payload, "version": version})
    return hashlib.sha256(body.encode("utf-8")).hexdigest()


def _path_for(key):
    return os.path.join(cache_dir(), key + ".json")


def cache_store(key, report_json):
    d = cache_dir()
    os.makedirs(d, exist_ok=True)
    blob = f"{_HEADER} {key}\n" + report_json
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(blob)
        os.replace(tmp, _path_for(key))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cache_load(key):
    """Cached report JSON for ``key``, or None (cold or corrupt)."""
    path = _path_for(key)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            blob = fh.read()
    except OSError:
        return None
    header, _, body = blob.partition("\n")
    if header.strip() != f"{_HEADER} {key}":
        warnings.warn(f"ignoring corrupt cache entry {path}")
        return None
    return body
