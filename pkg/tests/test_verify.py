import json

from swapcrit.instances import read_instance
from swapcrit.verify import Instance, parse_checks, random_corpus, run_campaign

from conftest import make


def test_parse_checks():
    assert parse_checks("all")[0] == "oracle"
    assert parse_checks("theorem,lemma") == ("lemma", "theorem")


def test_violation_writes_reproduction(tmp_path, monkeypatch):
    import swapcrit.verify as verify

    g, t = make(4, [(0, 1), (1, 2), (2, 3), (0, 3)], [(0, 1), (1, 2), (2, 3)])

    def broken(cut, tr):
        return 7

    monkeypatch.setattr(verify, "min_critical_set_size", broken)
    rep = run_campaign([Instance("c4", g, t)], ["theorem"], out_dir=tmp_path)
    assert not rep["ok"]
    assert rep["results"]["theorem"]["fail"] == 3
    files = rep["counterexample_files"]
    assert len(files) == 1 and all(v["file"] == files[0] for v in rep["violations"])
    g2, t2 = read_instance(open(files[0], "rb").read())
    assert set(g2.edges) == set(g.edges) and set(t2.edges) == set(t.edges)


def test_random_corpus_bounds():
    for inst in random_corpus(20, n="8-12", chords="2-n", seed=1):
        n = inst.graph.n
        assert 8 <= n <= 12
        assert 2 <= inst.graph.m - n <= n


def test_report_is_json_serializable():
    insts = list(random_corpus(2, n="8", chords="3", seed=0))
    rep = run_campaign(insts)
    json.dumps(rep)
    assert rep["ok"]
