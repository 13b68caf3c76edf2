import csv
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, TextIO

import structlog

from src.core.exceptions import InvalidInputError
from src.core.validation import parse_int, validate_positive
from src.schemas import CorpusRow, Mode, Tern, VerdictKind
from src.services import terns
from src.services.criteria import check_af
from src.services.ntkernel import factor

logger = structlog.get_logger(__name__)

FIELDNAMES = ["a", "b", "c", "verdict", "citation"]


def _smooth_values(bound: int, radical: Optional[int]) -> List[int]:
    """1..bound, or only the values whose prime factors divide radical."""
    if radical is None:
        return list(range(1, bound + 1))
    primes = sorted(factor(radical))
    values = [1]
    for p in primes:
        extended = []
        for v in values:
            while v <= bound:
                extended.append(v)
                v *= p
        values = extended
    return sorted(set(values))


def _check_row(args) -> CorpusRow:
    coefficients, mode = args
    start = time.perf_counter()
    verdict = check_af(Tern.of(coefficients), mode)
    elapsed_ms = (time.perf_counter() - start) * 1000
    return CorpusRow(tern=coefficients, kind=verdict.kind, citation=verdict.firing_citation, elapsed_ms=elapsed_ms)


class CorpusService:
    def __init__(self, mode: Mode = Mode.STRICT, workers: int = 1):
        self.mode = mode
        self.workers = workers

    @staticmethod
    def iter_range(bound: int, radical: Optional[int] = None) -> Iterator[Tern]:
        """Primitive (F)-triples 1 <= a <= b <= c <= bound, optionally with rad(abc) | radical.

        Verdicts do not depend on signs or on the order of the coefficients,
        so one representative per class is enough.
        """
        validate_positive(bound, "bound")
        if radical is not None:
            validate_positive(radical, "radical")
        values = _smooth_values(bound, radical)
        for a, b, c in combinations_with_replacement(values, 3):
            t = Tern(a=a, b=b, c=c)
            if terns.is_primitive(t) and terns.condition_F(t):
                yield t

    @staticmethod
    def read_file(path: Path) -> List[Tern]:
        """Triples from a text file, three integers per line, '#' starts a comment.

        Raises:
            InvalidInputError: If a line does not hold exactly three nonzero integers
        """
        result = []
        with open(path, encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                content = line.split("#", 1)[0].split()
                if not content:
                    continue
                if len(content) != 3:
                    raise InvalidInputError(f"line {number}: expected three integers", field="file")
                a, b, c = (parse_int(v, f"line {number}") for v in content)
                if a * b * c == 0:
                    raise InvalidInputError(f"line {number}: coefficients must be nonzero", field="file")
                result.append(Tern(a=a, b=b, c=c))
        return result

    def run(self, triples: Iterable[Tern]) -> List[CorpusRow]:
        """Check every triple; rows come back in input order."""
        jobs = [(t.coefficients, self.mode) for t in triples]
        start = time.perf_counter()
        if self.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                rows = list(executor.map(_check_row, jobs, chunksize=max(1, len(jobs) // (4 * self.workers))))
        else:
            rows = [_check_row(job) for job in jobs]
        logger.info(
            "corpus_run",
            triples=len(rows),
            mode=self.mode.value,
            workers=self.workers,
            duration_ms=round((time.perf_counter() - start) * 1000, 3),
        )
        return rows

    @staticmethod
    def histogram(rows: Iterable[CorpusRow]) -> Dict[str, int]:
        """Count of each verdict kind, every kind listed."""
        counts = Counter(row.kind for row in rows)
        return {kind.value: counts.get(kind, 0) for kind in VerdictKind}

    @staticmethod
    def write_table(rows: Iterable[CorpusRow], out: TextIO, timing: bool = False) -> None:
        fieldnames = FIELDNAMES + (["elapsed_ms"] if timing else [])
        writer = csv.DictWriter(out, fieldnames=fieldnames, delimiter="\t", lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row.to_dict(timing))
