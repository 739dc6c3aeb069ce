import json

import pytest

from nonabh2 import catalog as C
from nonabh2 import cohomology as coh
from nonabh2 import extensions as X_
from nonabh2 import fixtures as F
from nonabh2 import homogeneous as Hm
from nonabh2 import io
from nonabh2 import kernels as K
from nonabh2.cli import main
from nonabh2.fixtures import CORPUS_DIR
from nonabh2.groups import FiniteGroup


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


def records(out):
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines[0]["format"] == "nonabh2-report" and lines[0]["version"] == 1
    return lines[1:]


def run(capsys, *argv):
    code = main(list(argv) + ["--format", "structured"])
    return code, records(capsys.readouterr().out)


def first(recs, kind):
    return next(r for r in recs if r["record"] == kind)


# ---------------------------------------------------------------- loading

@pytest.mark.parametrize("sub, cls", [("kernels", K.Kernel), ("extensions", X_.Extension),
                                       ("gspaces", Hm.GSpace), ("complexes", coh.ComplexTwoTerm),
                                       ("groups", FiniteGroup)])
def test_corpus_files_load(sub, cls):
    files = sorted((CORPUS_DIR / sub).glob("*.json"))
    assert files
    for p in files:
        assert isinstance(io.load(p), cls)


def test_cocycle_files_load():
    for p in sorted((CORPUS_DIR / "cocycles").glob("*.json")):
        L, c = io.load(p)
        assert K.is_cocycle(c, L)


def test_round_trip_documents(tmp_path):
    L = F.d5_outer_kernel()
    io.dump(io.kernel_doc(L), tmp_path / "k.json")
    L2 = io.load(tmp_path / "k.json")
    assert L2.kappa == L.kappa and L2.G.mt == L.G.mt


def test_json_error_has_position(tmp_path):
    p = write(tmp_path, "bad.json", '{"kind": "group",\n  "table": [[0]')
    with pytest.raises(io.InputError, match=r"bad\.json:2:\d+"):
        io.load(p)


def test_unknown_kind_and_named(tmp_path):
    with pytest.raises(io.InputError, match="unknown kind"):
        io.load(write(tmp_path, "a.json", {"kind": "ring"}))
    with pytest.raises(io.InputError, match="unknown named group"):
        io.load(write(tmp_path, "b.json", {"named": "M24"}))
    assert io.load(write(tmp_path, "c.json", {"named": "Q8"})).order == 8


def test_invalid_table_rejected(tmp_path):
    with pytest.raises(io.InputError):
        io.load(write(tmp_path, "g.json", {"table": [[0, 1], [0, 1]]}))


# ---------------------------------------------------------------- commands

def test_group_info_trivial_and_d5(tmp_path, capsys):
    code, recs = run(capsys, "group-info", write(tmp_path, "t.json", {"named": "1"}))
    assert code == 0 and first(recs, "group")["order"] == 1
    code, recs = run(capsys, "group-info", write(tmp_path, "d.json", {"named": "D5"}))
    a = first(recs, "automorphisms")
    assert (a["aut"], a["inn"], a["out"]) == (20, 10, 2)
    assert first(recs, "involutions")["count"] == 5


def test_group_info_f20(tmp_path, capsys):
    code, recs = run(capsys, "group-info", write(tmp_path, "f.json", {"named": "F20"}))
    assert first(recs, "group")["order"] == 20
    assert first(recs, "involutions")["count"] == 5
    X = F.f20_extension()
    assert set(first(recs, "involutions")["elements"]) <= set(range(20))
    assert X.involution_census() == (5, 5)


@pytest.mark.parametrize("name, size, neutral", [("trivial", 1, [True]),
                                                 ("z2-on-z4-inversion", 2, [True, False]),
                                                 ("z2-on-d5-remark", 1, [False]),
                                                 ("z2-on-d8-obstructed", 0, [])])
def test_h2_command(capsys, name, size, neutral):
    code, recs = run(capsys, "h2", str(CORPUS_DIR / "kernels" / ("%s.json" % name)))
    assert code == 0
    assert first(recs, "h2")["size"] == size
    assert [r["neutral"] for r in recs if r["record"] == "class"] == neutral
    assert first(recs, "obstruction")["zero"] == (size > 0)


def test_obstruction_command(capsys):
    code, recs = run(capsys, "obstruction", str(CORPUS_DIR / "kernels" / "v4-on-d8.json"),
                     "--seed", "4")
    r = first(recs, "obstruction")
    assert code == 0 and r["zero"] and r["independent_of_choices"]


def test_local_global_command(capsys):
    code, recs = run(capsys, "local-global", str(CORPUS_DIR / "kernels" / "z2-on-d5-remark.json"))
    assert code == 0
    assert [r["locally_neutral"] for r in recs if r["record"] == "local"] == [False]
    g = first(recs, "global")
    assert not g["neutral"] and g["verdict"]


def test_homogeneous_command(capsys):
    path = sorted((CORPUS_DIR / "gspaces").glob("*.json"))[0]
    code, recs = run(capsys, "homogeneous", str(path))
    assert code == 0 and first(recs, "verify51")["agree"]


def test_cohomology_and_hyper_commands(tmp_path, capsys):
    m = coh.QModule.trivial(C.cyclic(2), C.cyclic(2))
    p = tmp_path / "m.json"
    io.dump(io.module_doc(m), p)
    for method in ("linear", "enumerate"):
        code, recs = run(capsys, "cohomology", str(p), "--degree", "3", "--method", method)
        assert code == 0 and first(recs, "cohomology")["order"] == 2
    path = CORPUS_DIR / "complexes" / "z2-z2-identity.json"
    code, recs = run(capsys, "hyper", str(path), "--degree", "1")
    assert code == 0 and first(recs, "hypercohomology")["order"] == 1
    assert first(recs, "les")["exact"]


def test_text_format_and_out_file(tmp_path, capsys):
    out = tmp_path / "r.txt"
    assert main(["h2", str(CORPUS_DIR / "kernels" / "trivial.json"), "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("# h2 (seed 0)") and "neutral=true" in text
    assert capsys.readouterr().out == ""


# ---------------------------------------------------------------- exit codes

def test_input_errors_exit_2(tmp_path, capsys):
    assert main(["h2", str(tmp_path / "missing.json")]) == 2
    assert main(["h2", write(tmp_path, "g.json", {"named": "Z2"})]) == 2
    assert main(["corpus", str(tmp_path / "nowhere")]) == 2
    assert main(["corpus", str(CORPUS_DIR), "--checks", "bogus"]) == 2
    assert "error:" in capsys.readouterr().err


def test_size_limit_exit_3(capsys):
    path = str(CORPUS_DIR / "kernels" / "v4-on-q8.json")
    code, recs = run(capsys, "h2", path, "--max-nodes", "1")
    assert code == 3
    r = first(recs, "abort")
    assert r["reason"] == "size-limit" and r["partial"] and r["what"] == "neutrality search"
    code, recs = run(capsys, "h2", path, "--max-order", "2")
    assert code == 3 and first(recs, "abort")["size"] == 8


def test_nonpositive_caps_rejected():
    with pytest.raises(SystemExit):
        main(["h2", "x.json", "--max-nodes", "0"])


def test_corpus_shipped_passes(capsys):
    code, recs = run(capsys, "corpus", str(CORPUS_DIR), "--checks", "cocycle,strategies")
    s = first(recs, "summary")
    assert code == 0 and s["failed"] == 0 and s["checks"] > 0


def test_corpus_with_corrupted_cocycle(tmp_path, capsys):
    F.write_corpus(tmp_path, include_invalid=True)
    code, recs = run(capsys, "corpus", str(tmp_path), "--checks", "cocycle")
    assert code == 1
    bad = [r for r in recs if r["record"] == "check" and not r["ok"]]
    assert [r["file"] for r in bad] == ["cocycles/z2-on-z4-inversion-corrupted.json"]
    assert bad[0]["detail"]["where"] == [1, 1, 1]


def test_corpus_empty_dir(tmp_path, capsys):
    code, recs = run(capsys, "corpus", str(tmp_path))
    assert code == 0 and first(recs, "summary")["files"] == 0


def test_corpus_input_error_counts(tmp_path, capsys):
    write(tmp_path, "broken.json", "{")
    code, recs = run(capsys, "corpus", str(tmp_path))
    assert code == 1 and first(recs, "summary")["input_errors"] == 1
