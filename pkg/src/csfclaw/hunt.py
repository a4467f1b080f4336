"""Exhaustive scan of connected graphs for claw-contractible-free graphs that
are not e-positive (or any other combination of the three predicates).

Records are appended to a JSONL sink in corpus order. A checkpoint
``{corpus_hash, last_index, tallies, sink_offset}`` is rewritten atomically
every ``checkpoint_interval`` records so an interrupted scan can resume and
finish with the same tallies and the same sink contents.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .chromatic import DEFAULT_EDGE_CAP, csf_elementary
from .clawtest import is_ccf_bv, is_claw_free
from .errors import CapacityError, CsfError, Graph6Error
from .graph import enumerate_connected, from_graph6, is_connected, read_graph6_lines, to_graph6
from .symfunc import coefficient_of, is_e_positive

log = logging.getLogger(__name__)

DEFAULT_CHECKPOINT_INTERVAL = 10_000

PREDICATES = ("ccf", "claw-free", "epos")
# cost-ascending evaluation order
DEFAULT_ORDER = ("ccf", "claw-free", "epos")
TALLY_KEYS = ("scanned", "disconnected", "ccf", "claw_free", "e_evaluated", "hits", "skipped", "malformed")


class HuntError(CsfError):
    pass


@dataclass(frozen=True)
class SearchRecord:
    graph6: str
    n: int
    m: int
    claw_free: bool
    ccf: bool
    e_positive: bool
    witness_partition: tuple[int, ...] | None
    witness_coefficient: Fraction | None

    def to_json(self) -> dict:
        d = asdict(self)
        d["status"] = "hit"
        d["witness_partition"] = list(self.witness_partition) if self.witness_partition else None
        c = self.witness_coefficient
        d["witness_coefficient"] = None if c is None else {"num": c.numerator, "den": c.denominator}
        return d

    @classmethod
    def from_json(cls, d: dict) -> "SearchRecord":
        c = d.get("witness_coefficient")
        return cls(
            d["graph6"], d["n"], d["m"], d["claw_free"], d["ccf"], d["e_positive"],
            tuple(d["witness_partition"]) if d.get("witness_partition") else None,
            None if c is None else Fraction(c["num"], c["den"]),
        )


def parse_filters(spec: str | Iterable[str]) -> dict[str, bool]:
    """``"ccf,not-epos"`` -> ``{"ccf": True, "epos": False}``."""
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    filters: dict[str, bool] = {}
    for raw in items:
        item = raw.strip()
        if not item:
            continue
        want = not item.startswith("not-")
        name = item[4:] if not want else item
        if name in ("claw_free", "clawfree"):
            name = "claw-free"
        if name == "e-positive":
            name = "epos"
        if name not in PREDICATES:
            raise HuntError(f"unknown filter {item!r}; use ccf, claw-free, epos with optional not- prefix")
        if filters.get(name, want) != want:
            raise HuntError(f"contradictory filters for {name}")
        filters[name] = want
    return filters


def _e_status(g, cap):
    e = csf_elementary(g, cap=cap)
    positive, witness = is_e_positive(e)
    coeff = coefficient_of(e, witness) if witness else None
    return positive, witness, coeff


def make_record(g6: str, cap: int = DEFAULT_EDGE_CAP) -> SearchRecord:
    """All predicates for one graph, recomputed from its graph6 string alone."""
    g = from_graph6(g6)
    positive, witness, coeff = _e_status(g, cap)
    return SearchRecord(
        to_graph6(g), g.n, g.m, is_claw_free(g)[0], is_ccf_bv(g)[0], positive, witness, coeff
    )


def classify(g6: str, filters: dict[str, bool], order=DEFAULT_ORDER, cap: int = DEFAULT_EDGE_CAP) -> dict:
    """Outcome for one record: status plus predicate values used for tallies."""
    try:
        g = from_graph6(g6)
    except Graph6Error as exc:
        return {"status": "malformed", "reason": str(exc)}
    if not is_connected(g):
        return {"status": "disconnected"}
    values: dict[str, object] = {}
    evaluators = {
        "ccf": lambda: is_ccf_bv(g)[0],
        "claw-free": lambda: is_claw_free(g)[0],
    }
    status = "hit"
    try:
        for name in order:
            if name not in filters:
                continue
            if name == "epos":
                values["epos"] = _e_status(g, cap)
                got = values["epos"][0]
            else:
                got = values[name] = evaluators[name]()
            if got != filters[name]:
                status = "miss"
                break
        if status == "hit" and "epos" not in values:
            values["epos"] = _e_status(g, cap)
    except CapacityError as exc:
        return {"status": "skipped", "reason": str(exc), "ccf": is_ccf_bv(g)[0], "claw_free": is_claw_free(g)[0]}
    out = {
        "status": status,
        "ccf": values["ccf"] if "ccf" in values else evaluators["ccf"](),
        "claw_free": values["claw-free"] if "claw-free" in values else evaluators["claw-free"](),
        "e_evaluated": "epos" in values,
    }
    if status == "hit":
        positive, witness, coeff = values["epos"]
        out["record"] = SearchRecord(to_graph6(g), g.n, g.m, out["claw_free"], out["ccf"], positive, witness, coeff)
    return out


def _classify_job(args):
    return classify(*args)


# -- corpus ------------------------------------------------------------------

@dataclass(frozen=True)
class Corpus:
    identifier: str
    corpus_hash: str
    records: list[tuple[int, str]]  # (line number, graph6)


def builtin_corpus(n: int) -> Corpus:
    lines = [to_graph6(g) for g in enumerate_connected(n)]
    digest = hashlib.sha256(("\n".join(lines) + "\n").encode()).hexdigest()
    return Corpus(f"builtin:{n}", digest, [(i + 1, s) for i, s in enumerate(lines)])


def file_corpus(path: str | os.PathLike) -> Corpus:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise HuntError(f"cannot read corpus {path}: {exc}") from exc
    text = data.decode("ascii", errors="replace")
    return Corpus(str(path), hashlib.sha256(data).hexdigest(), list(read_graph6_lines(text.splitlines())))


# -- checkpointing -----------------------------------------------------------

def write_checkpoint(path: str | os.PathLike, state: dict) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(state, fh, sort_keys=True)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def read_checkpoint(path: str | os.PathLike) -> dict:
    with open(path) as fh:
        return json.load(fh)


def hunt(
    corpus: Corpus,
    filters: dict[str, bool],
    sink: str | os.PathLike | None = None,
    *,
    order=DEFAULT_ORDER,
    cap: int = DEFAULT_EDGE_CAP,
    workers: int = 1,
    checkpoint: str | os.PathLike | None = None,
    checkpoint_interval: int = DEFAULT_CHECKPOINT_INTERVAL,
    resume: bool = False,
    stop_after: int | None = None,
    strict: bool = False,
) -> dict:
    """Scan ``corpus`` and append every record passing all ``filters`` to ``sink``.

    ``stop_after`` processes at most that many records in this call (used to
    emulate an interruption); ``strict`` aborts on the first malformed line.
    Returns the summary, whose ``hits`` list holds the hit records.
    """
    tallies = dict.fromkeys(TALLY_KEYS, 0)
    start = 0
    sink_offset = 0
    if resume:
        if checkpoint is None or not Path(checkpoint).exists():
            raise HuntError("resume requested but no checkpoint file exists")
        state = read_checkpoint(checkpoint)
        if state["corpus_hash"] != corpus.corpus_hash:
            raise HuntError(
                f"checkpoint corpus hash {state['corpus_hash']} does not match "
                f"corpus {corpus.identifier} hash {corpus.corpus_hash}"
            )
        tallies.update(state["tallies"])
        start = state["last_index"] + 1
        sink_offset = state.get("sink_offset", 0)

    sink_fh = None
    if sink is not None:
        sink_path = Path(sink)
        if resume and sink_path.exists():
            with open(sink_path, "r+b") as fh:
                fh.truncate(sink_offset)
        elif not resume:
            sink_path.write_bytes(b"")
        sink_fh = open(sink_path, "ab")

    pending = corpus.records[start:]
    if stop_after is not None:
        pending = pending[:stop_after]
    jobs = [(g6, filters, tuple(order), cap) for _, g6 in pending]

    hits: list[SearchRecord] = []
    problems: list[dict] = []
    last_index = start - 1

    def save():
        if checkpoint is not None:
            if sink_fh is not None:
                sink_fh.flush()
            state = {
                "corpus": corpus.identifier,
                "corpus_hash": corpus.corpus_hash,
                "last_index": last_index,
                "tallies": tallies,
                "sink_offset": sink_fh.tell() if sink_fh is not None else 0,
            }
            write_checkpoint(checkpoint, state)

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 and len(jobs) > 1 else None
    try:
        results = pool.map(_classify_job, jobs, chunksize=max(1, len(jobs) // (workers * 8))) if pool else map(_classify_job, jobs)
        for k, ((lineno, g6), res) in enumerate(zip(pending, results)):
            index = start + k
            status = res["status"]
            line = None
            if status == "malformed":
                tallies["malformed"] += 1
                problem = {"status": "malformed", "index": index, "line": lineno, "graph6": g6, "reason": res["reason"]}
                log.warning("line %d: %s", lineno, res["reason"])
                if strict:
                    raise HuntError(f"line {lineno}: {res['reason']}")
                problems.append(problem)
                line = problem
            elif status == "disconnected":
                tallies["disconnected"] += 1
            else:
                tallies["scanned"] += 1
                tallies["ccf"] += bool(res["ccf"])
                tallies["claw_free"] += bool(res["claw_free"])
                if status == "skipped":
                    tallies["skipped"] += 1
                    line = {"status": "skipped", "index": index, "line": lineno, "graph6": g6, "reason": res["reason"]}
                    problems.append(line)
                else:
                    tallies["e_evaluated"] += bool(res["e_evaluated"])
                    if status == "hit":
                        tallies["hits"] += 1
                        hits.append(res["record"])
                        line = res["record"].to_json()
            if line is not None and sink_fh is not None:
                sink_fh.write((json.dumps(line, sort_keys=True) + "\n").encode())
            last_index = index
            if checkpoint is not None and (k + 1) % checkpoint_interval == 0:
                save()
        save()
    finally:
        if pool is not None:
            pool.shutdown()
        if sink_fh is not None:
            sink_fh.close()

    return {
        "corpus": corpus.identifier,
        "corpus_hash": corpus.corpus_hash,
        "last_index": last_index,
        "complete": last_index == len(corpus.records) - 1,
        "tallies": tallies,
        "hits": hits,
        "problems": problems,
    }


def load_hits(sink: str | os.PathLike) -> list[SearchRecord]:
    out = []
    with open(sink) as fh:
        for line in fh:
            d = json.loads(line)
            if d.get("status") == "hit":
                out.append(SearchRecord.from_json(d))
    return out
