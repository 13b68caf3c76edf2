import io

from sympy import factorint

from src.schemas import Mode, Tern, VerdictKind
from src.services.corpus_service import CorpusService


def test_iter_range_yields_primitive_F_triples():
    triples = list(CorpusService.iter_range(4))
    assert Tern(a=1, b=1, c=2) in triples
    assert Tern(a=1, b=2, c=4) not in triples  # fails condition (F)
    assert Tern(a=2, b=2, c=4) not in triples
    assert all(t.a <= t.b <= t.c for t in triples)


def test_iter_range_with_radical():
    triples = list(CorpusService.iter_range(200, radical=91 * 16))
    assert triples
    for t in triples:
        for v in t.coefficients:
            assert set(factorint(v)) <= {2, 7, 13}
            assert v <= 200


def test_read_file(tmp_path):
    path = tmp_path / "triples.txt"
    path.write_text("# coefficients\n7 13 16\n\n1 1 2  # Ribet control\n")
    assert CorpusService.read_file(path) == [Tern(a=7, b=13, c=16), Tern(a=1, b=1, c=2)]


def test_run_histogram_and_table():
    service = CorpusService(mode=Mode.STRICT)
    rows = service.run([Tern(a=7, b=13, c=16), Tern(a=1, b=1, c=2), Tern(a=1, b=3, c=9)])
    assert [r.kind for r in rows] == [VerdictKind.FINITE, VerdictKind.UNKNOWN, VerdictKind.FINITE_DESCENT]
    histogram = service.histogram(rows)
    assert histogram["Finite"] == 1
    assert histogram["Invalid"] == 0

    out = io.StringIO()
    service.write_table(rows, out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "a\tb\tc\tverdict\tcitation"
    assert lines[1].startswith("7\t13\t16\tFinite\t")


def test_table_is_reproducible():
    service = CorpusService()
    triples = list(service.iter_range(6))
    first, second = io.StringIO(), io.StringIO()
    service.write_table(service.run(triples), first)
    service.write_table(service.run(triples), second)
    assert first.getvalue() == second.getvalue()


def test_parallel_run_keeps_order():
    triples = list(CorpusService.iter_range(5))
    serial = CorpusService(workers=1).run(triples)
    parallel = CorpusService(workers=2).run(triples)
    assert [(r.tern, r.kind, r.citation) for r in serial] == [(r.tern, r.kind, r.citation) for r in parallel]


def test_timing_column():
    service = CorpusService()
    out = io.StringIO()
    service.write_table(service.run([Tern(a=1, b=1, c=1)]), out, timing=True)
    assert out.getvalue().splitlines()[0].endswith("elapsed_ms")


def test_empty_run():
    service = CorpusService()
    out = io.StringIO()
    service.write_table(service.run([]), out)
    assert out.getvalue() == "a\tb\tc\tverdict\tcitation\n"
    assert set(service.histogram([]).values()) == {0}
