import json

import pytest
from hypothesis import given, strategies as st

from algoname.report import (
    AlgorithmNameRecord, EvalReport, MissingLabelsError, Provenance, build_frequency_table, evaluate,
    export_provenance, make_excerpt, read_oracle, short_name, table_to_csv, table_to_json, table_to_markdown,
)
from algoname.rules import Verdict


def rec(term, lang="C", freq=2, valid=True, n_prov=0):
    prov = [Provenance(f"{lang}/f{i}", i, f"**{term}**") for i in range(n_prov)]
    v = Verdict("valid", "only_noun") if valid else Verdict("invalid", "det")
    return AlgorithmNameRecord(tuple(term.split()), ("NOUN",) * len(term.split()), v, freq, lang, prov)


def test_table_order():
    rows = build_frequency_table([rec("compression algorithm", freq=2592), rec("hash algorithm", freq=3193)])
    assert [(r.rank, r.term) for r in rows] == [(1, "hash algorithm"), (2, "compression algorithm")]


def test_table_empty_and_ties():
    assert build_frequency_table([]) == []
    rows = build_frequency_table([rec("zlib algorithm"), rec("aes algorithm"), rec("md5 algorithm")])
    assert [r.term for r in rows] == ["aes algorithm", "md5 algorithm", "zlib algorithm"]


def test_table_filters_invalid_top_k_and_denylist():
    records = [rec(f"t{i} algorithm", freq=10 - i) for i in range(5)] + [rec("the algorithm", freq=99, valid=False)]
    rows = build_frequency_table(records, top_k=2, denylist=["t0 algorithm"])
    assert [r.term for r in rows] == ["t1 algorithm", "t2 algorithm"]


def test_table_language_columns_and_pooling():
    records = [rec("md5 algorithm", "Cpp", 3), rec("md5 algorithm", "C", 2), rec("rc4 algorithm", "Java", 5)]
    rows = build_frequency_table(records)
    assert [r.language for r in rows] == ["Java", "C", "Cpp"]
    pooled = build_frequency_table(records, by_language=False)
    assert [(r.term, r.frequency) for r in pooled] == [("md5 algorithm", 5), ("rc4 algorithm", 5)]


@given(st.lists(st.tuples(st.sampled_from(["a", "b", "c", "d"]), st.sampled_from(["C", "Java"]),
                          st.integers(2, 50), st.booleans()), max_size=15))
def test_table_sums(items):
    records = [rec(f"{t} algorithm", lang, f, ok) for t, lang, f, ok in items]
    rows = build_frequency_table(records, top_k=None)
    for lang in ("C", "Java"):
        assert sum(r.frequency for r in rows if r.language == lang) == sum(
            r.frequency for r in records if r.language == lang and r.verdict.valid)
    assert rows == build_frequency_table(list(reversed(records)), top_k=None)


def test_formats():
    rows = build_frequency_table([rec("ray casting algorithm", "JavaScript", 1234)])
    assert table_to_csv(rows) == "rank,language,term,frequency\n1,JavaScript,ray casting algorithm,1234\n"
    assert json.loads(table_to_json(rows)) == [
        {"rank": 1, "language": "JavaScript", "term": "ray casting algorithm", "frequency": 1234}]
    md = table_to_markdown(rows)
    assert md.splitlines()[0] == "| Rank | JavaScript |"
    assert "| 1 | Ray casting<br>1,234 |" in md
    assert short_name("md5 algorithm") == "Md5"


def test_export_provenance():
    r = rec("rc4 algorithm", "PHP", 5, n_prov=5)
    assert len(export_provenance([r], limit=2)) == 2
    assert len(export_provenance([r])) == 5
    assert export_provenance([]) == []
    row = export_provenance([r], 1)[0]
    assert row == {"language": "PHP", "term": "rc4 algorithm", "source_path": "PHP/f0", "comment_id": 0,
                   "excerpt": "**rc4 algorithm**"}


def test_excerpt():
    text = "Data is encrypted using RC4 algorithm"
    assert make_excerpt(text, 4, 6) == "Data is encrypted using **RC4 algorithm**"
    long = " ".join(f"w{i}" for i in range(60)) + " md5 algorithm " + " ".join(f"v{i}" for i in range(60))
    ex = make_excerpt(long, 60, 62)
    assert ex.startswith("... ") and ex.endswith(" ...") and "**md5 algorithm**" in ex
    # the 80-character window excludes the ** and ... markers
    assert len(ex.replace("**", "").removeprefix("... ").removesuffix(" ...")) <= 80


def test_record_json_round_trip():
    r = rec("md5 algorithm", n_prov=2)
    again = AlgorithmNameRecord.from_json(json.loads(json.dumps(r.to_json())))
    assert again == r and again.provenance == r.provenance


def test_eval_examples():
    rep = EvalReport(7, 3, 3, 5)
    assert rep.precision == pytest.approx(0.7, abs=1e-12)
    assert rep.recall == pytest.approx(0.7, abs=1e-12)
    assert rep.f_measure == pytest.approx(0.7, abs=1e-12)
    perfect = EvalReport(4, 0, 0, 6)
    assert perfect.precision == perfect.recall == perfect.f_measure == 1.0


def test_eval_undefined_is_na():
    rep = EvalReport(0, 0, 3, 2)
    assert rep.precision is None and rep.recall == 0.0 and rep.f_measure is None
    assert rep.to_json()["precision"] == "n/a" and rep.to_json()["f_measure"] == "n/a"
    assert "precision=n/a" in rep.summary()


@given(st.lists(st.tuples(st.booleans(), st.booleans()), max_size=40))
def test_evaluate_counts(pairs):
    preds = [rec(f"t{i} algorithm", valid=p) for i, (p, _) in enumerate(pairs)]
    oracle = {f"t{i} algorithm": "valid" if g else "invalid" for i, (_, g) in enumerate(pairs)}
    rep = evaluate(preds, oracle)
    assert rep.tp + rep.fp + rep.fn + rep.tn == len(pairs)
    assert rep.tp == sum(1 for p, g in pairs if p and g)
    assert rep.fp == sum(1 for p, g in pairs if p and not g)


def test_evaluate_missing_labels():
    with pytest.raises(MissingLabelsError) as exc:
        evaluate([rec("a algorithm"), rec("b algorithm")], {"a algorithm": "valid"})
    assert exc.value.terms == ["b algorithm"]


def test_read_oracle(tmp_path):
    p = tmp_path / "o.csv"
    p.write_text("term,label\nMD5  Algorithm,valid\nthe algorithm,INVALID\n")
    assert read_oracle(p) == {"md5 algorithm": "valid", "the algorithm": "invalid"}
    p.write_text("term,label\nx algorithm,maybe\n")
    with pytest.raises(ValueError):
        read_oracle(p)
    p.write_text("term,label\nx algorithm,valid\nx algorithm,invalid\n")
    with pytest.raises(ValueError, match="conflicting"):
        read_oracle(p)
