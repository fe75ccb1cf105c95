"""Tests para el corpus, el pipeline de verificacion, el reporte y la CLI."""

import json

import pytest

import main
from src.pipelines.corpus import build_corpus, load_corpus
from src.pipelines.verification_pipeline import VerificationPipeline
from src.reports.result_writer import dumps, summarize, write_check_report
from src.utils.checks import failed, passed
from src.utils.config_schemas import RunConfig
from src.utils.errors import CapExceeded, ParseError

SPAN_DOC = {
    "objects": ["a", "b", "c"],
    "morphisms": [{"id": "f", "src": "b", "tgt": "a"}, {"id": "g", "src": "b", "tgt": "c"}],
}

MIXED_DOC = {
    "values": {"a": "point", "b": "S0", "c": "point"},
    "action": {"f": {"0": "0", "1": "0"}, "g": {"0": "0", "1": "0"}},
}

SMALL_CORPUS = {
    "categories": {"span": SPAN_DOC},
    "pairs": {"span-ac": {"category": "span", "subcat": ["a", "c"]}},
    "diagrams": {"span": {"point": {"constant": "point"}, "mixed": MIXED_DOC}},
    "suites": {
        "theta": {"pairs": ["span-ac"]},
        "lcolim-hocolim": {"categories": ["span"], "diagrams": ["mixed"]},
    },
}


@pytest.fixture
def config(tmp_path):
    return RunConfig(dim_cap=6, search_budget=200_000, up_to=2, output_path=str(tmp_path / "out"))


@pytest.fixture
def small_corpus():
    return build_corpus(SMALL_CORPUS)


class TestCorpus:

    def test_load_corpus(self):
        corpus = load_corpus()
        assert corpus.pairs["span-ac"].D_objs == ("a", "c")
        assert corpus.category_of_pair("span-ac") == "span"
        assert corpus.diagram("span", "mixed").value["b"].count(0) == 2

    def test_suites_cover_corpus(self):
        corpus = load_corpus()
        diagram_names = {name for per_cat in corpus.diagrams.values() for name in per_cat}
        for suite in ("theta", "lambda", "bar", "adjunction"):
            assert set(corpus.suite(suite)["pairs"]) == set(corpus.pairs), suite
        for suite in ("lcolim-hocolim", "nat-variant", "oracle"):
            assert set(corpus.suite(suite)["categories"]) == set(corpus.categories), suite
        for suite in ("lambda", "bar", "lcolim-hocolim", "nat-variant"):
            assert set(corpus.suite(suite)["diagrams"]) == diagram_names, suite
        assert {"square-full", "span-full"} <= set(corpus.pairs)

    def test_unknown_diagram(self, small_corpus):
        with pytest.raises(ParseError):
            small_corpus.diagram("span", "toro")

    def test_pair_over_unknown_category(self):
        with pytest.raises(ParseError):
            build_corpus({"pairs": {"x": {"category": "nada", "subcat": []}}})

    def test_pair_diagrams_restrict(self, small_corpus):
        [(X, res)] = small_corpus.pair_diagrams("span-ac", ["mixed"])
        assert X.index.objects == ("a", "b", "c")
        assert res.index.objects == ("a", "c")


class TestVerificationPipeline:

    def test_skeleton_suite(self, config):
        results = VerificationPipeline(config).run("skeleton")
        ids = [c.check_id for c in results]
        assert "skeleton[circle]" in ids
        assert "skeleton[B(square)]" in ids
        assert all(c.passed for c in results)

    def test_theta_suite(self, config, small_corpus):
        results = VerificationPipeline(config, small_corpus).run("theta")
        assert len(results) == 7
        assert all(c.passed for c in results)
        assert results == sorted(results, key=lambda c: c.check_id)

    def test_alias(self, config, small_corpus):
        [check] = VerificationPipeline(config, small_corpus).run("thm62")
        assert check.check_id == "lcolim-hocolim[span; mixed]"
        assert check.passed

    def test_unknown_suite(self, config, small_corpus):
        with pytest.raises(ValueError):
            VerificationPipeline(config, small_corpus).run("todo")

    def test_limit_becomes_failed_check(self):
        def boom():
            raise CapExceeded("demasiado grande", required=9)
        check = VerificationPipeline._guarded("x", boom)
        assert not check.passed
        assert check.witness == {"limit": "CapExceeded", "required": 9}


class TestResultWriter:

    def test_write_check_report(self, tmp_path):
        checks = [failed("b", "fallo", where="a"), passed("a", "ok")]
        paths = write_check_report(checks, tmp_path, "demo")
        assert set(paths) == {"json", "csv", "summary"}
        data = json.loads(paths["json"].read_text(encoding="utf-8"))
        assert [c["check_id"] for c in data["checks"]] == ["a", "b"]
        assert data["passed"] is False
        assert "Fallidos: 1" in paths["summary"].read_text(encoding="utf-8")

    def test_without_csv(self, tmp_path):
        paths = write_check_report([passed("a")], tmp_path, "demo", write_csv=False)
        assert "csv" not in paths

    def test_dumps_is_deterministic(self):
        assert dumps({"b": 1, "a": [2]}) == dumps({"a": [2], "b": 1})

    def test_summary_empty(self):
        assert "Chequeos: 0" in summarize([])


class TestCli:

    @pytest.fixture
    def workdir(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        return tmp_path

    def _write(self, path, data):
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    def test_validate_ok(self, workdir):
        path = self._write(workdir / "span.json", SPAN_DOC)
        assert main.main(["--out", str(workdir / "out"), "validate", path]) == main.EXIT_OK
        assert (workdir / "out" / "validate.json").exists()

    def test_validate_axiom_failure(self, workdir):
        doc = {
            "objects": ["a", "b", "c"],
            "morphisms": [{"id": "f", "src": "a", "tgt": "b"}, {"id": "g", "src": "b", "tgt": "c"}],
        }
        path = self._write(workdir / "chain.json", doc)
        assert main.main(["--out", str(workdir / "out"), "validate", path]) == main.EXIT_CHECK_FAILED

    def test_validate_syntax_error(self, workdir):
        path = workdir / "bad.json"
        path.write_text('{"objects": [a, ', encoding="utf-8")
        assert main.main(["--out", str(workdir / "out"), "validate", str(path)]) == main.EXIT_INPUT_ERROR

    def test_hocolim(self, workdir):
        path = self._write(workdir / "mixed.json", dict(MIXED_DOC, category=SPAN_DOC))
        out = workdir / "out"
        assert main.main(["--out", str(out), "hocolim", "--diagram", path]) == main.EXIT_OK
        data = json.loads((out / "mixed_hocolim_homology.json").read_text(encoding="utf-8"))
        assert data["betti"] == [1, 1, 0, 0]

    def test_hocolim_compare(self, workdir):
        path = self._write(workdir / "mixed.json", dict(MIXED_DOC, category=SPAN_DOC))
        out = workdir / "out"
        code = main.main(["--out", str(out), "hocolim", "--diagram", path, "--lcolim", "--thm62"])
        assert code == main.EXIT_OK
        assert (out / "mixed_lcolim.json").exists()
        assert json.loads((out / "mixed_lcolim_hocolim.json").read_text(encoding="utf-8"))["passed"]

    def test_approx(self, workdir):
        path = self._write(workdir / "mixed.json", dict(MIXED_DOC, category=SPAN_DOC))
        out = workdir / "out"
        assert main.main(["--out", str(out), "approx", "--diagram", path, "--subcat", "a,c"]) == main.EXIT_OK
        assert (out / "mixed_qbar.json").exists()

    def test_approx_unknown_object(self, workdir):
        path = self._write(workdir / "mixed.json", dict(MIXED_DOC, category=SPAN_DOC))
        code = main.main(["--out", str(workdir / "out"), "approx", "--diagram", path, "--subcat", "z"])
        assert code == main.EXIT_INPUT_ERROR

    def test_homology(self, workdir, capsys):
        path = self._write(workdir / "circle.json", {"nd": {"0": ["v"], "1": ["e"]}, "faces": {"e": ["v", "v"]}})
        assert main.main(["--out", str(workdir / "out"), "homology", "--sset", path]) == main.EXIT_OK
        assert "H_1 = Z^1" in capsys.readouterr().out

    def test_verify_skeleton(self, workdir):
        out = workdir / "out"
        assert main.main(["--out", str(out), "verify", "skeleton"]) == main.EXIT_OK
        assert (out / "verify_skeleton.json").exists()
