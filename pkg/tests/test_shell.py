import json

import pytest

from tensq import (catalog, get_group, get_presentation, resolve_group,
                   tc_enumerate)
from tensq.cache import cache_key, cache_load, cache_store
from tensq.cli import main
from tensq.report import Report, canonical_json


class TestCatalog:
    def test_at_least_twelve_entries(self):
        assert len(catalog()) >= 12

    def test_orders_match_groups(self):
        for name, entry in catalog().items():
            assert get_group(name).order() == entry.order, name

    def test_presentations_match_generators(self):
        # the permutation generators satisfy every relator, in order
        for name in catalog():
            pres = get_presentation(name)
            if pres is None:
                continue
            g = get_group(name)
            assert pres.ngens == len(g.generators), name
            for rel in pres.relators:
                img = rel.evaluate(list(g.generators), identity=g.identity)
                assert img.is_identity(), (name, rel)

    def test_presentations_enumerate_to_group_order(self):
        for name, entry in catalog().items():
            pres = get_presentation(name)
            if pres is None:
                continue
            assert tc_enumerate(pres, ()).coset_count == entry.order, name

    def test_names_resolve(self):
        g, pres, desc = resolve_group("D4")
        assert g.order() == 8 and pres is not None
        assert desc == {"kind": "catalog", "name": "D4"}

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            resolve_group("Nope")


class TestFileInputs:
    def test_perm_file(self, tmp_path):
        path = tmp_path / "klein.perm"
        path.write_text("degree 4\n(0 1)\n(2 3)\n")
        g, pres, desc = resolve_group(f"@{path}")
        assert g.order() == 4 and pres is None
        assert desc["kind"] == "perm-file"

    def test_pres_file(self, tmp_path):
        path = tmp_path / "sym3.pres"
        path.write_text("gens: a b\nrels: a^2, b^2, (a b)^3\n")
        g, pres, desc = resolve_group(f"@{path}")
        assert g.order() == 6 and pres is not None

    def test_bad_extension(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("degree 2\n(0 1)\n")
        with pytest.raises(ValueError):
            resolve_group(f"@{path}")


class TestCache:
    def test_roundtrip(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TENSQ_CACHE_DIR", str(tmp_path))
        key = cache_key({"x": 1}, "0.1.0")
        assert cache_load(key) is None          # cold
        cache_store(key, '{"a": 1}\n')
        assert cache_load(key) == '{"a": 1}\n'

    def test_version_bump_changes_key(self):
        assert cache_key({"x": 1}, "0.1.0") != cache_key({"x": 1}, "0.2.0")

    def test_corrupt_entry_ignored(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TENSQ_CACHE_DIR", str(tmp_path))
        key = cache_key({"x": 2}, "0.1.0")
        cache_store(key, '{"a": 1}\n')
        victim = tmp_path / (key + ".json")
        victim.write_text("garbage\n")
        with pytest.warns(UserWarning):
            assert cache_load(key) is None


class TestReports:
    def test_canonical_json_is_sorted(self):
        r = Report(command="x", input={"b": 1, "a": 2}, results={},
                   version="0.1.0")
        text = r.to_json()
        assert text.index('"a"') < text.index('"b"')

    def test_timing_excluded_on_request(self):
        r = Report(command="x", input={}, results={}, version="0.1.0",
                   timing={"seconds": 1.23})
        with_t = json.loads(r.to_json())
        without_t = json.loads(r.to_json(include_timing=False))
        assert "timing" in with_t and "timing" not in without_t


class TestCli:
    def run(self, *argv):
        return main(list(argv))

    def test_catalog_list(self, capsys):
        assert self.run("catalog", "list") == 0
        out = capsys.readouterr().out
        assert "D4" in out and "Heis3" in out

    def test_tensor_c2(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("TENSQ_CACHE_DIR", str(tmp_path / "cache"))
        report_path = tmp_path / "r.json"
        assert self.run("tensor", "C2", "--json", str(report_path)) == 0
        data = json.loads(report_path.read_text())
        assert data["schema"] == 1
        assert data["results"]["tensor_order"] == 2
        assert data["results"]["nu_order"] == 8
        # second run hits the cache
        capsys.readouterr()
        assert self.run("tensor", "C2") == 0
        assert "(cached)" in capsys.readouterr().out

    def test_nu_runs_route_check(self, tmp_path):
        report_path = tmp_path / "nu.json"
        assert self.run("nu", "C2", "--no-cache", "--json",
                        str(report_path)) == 0
        data = json.loads(report_path.read_text())
        assert data["results"]["route_independence"]["passed"] is True

    def test_nu_explicit_mode(self):
        assert self.run("nu", "C2", "--mode", "all", "--no-cache") == 0

    def test_verify_s3(self):
        assert self.run("verify", "S3", "--lemmas", "i..v,closed,decomp,rho",
                        "--no-cache") == 0

    def test_verify_lemma_subset(self):
        assert self.run("verify", "C2", "--lemmas", "ii..iv",
                        "--no-cache") == 0

    def test_verify_bad_lemma_token(self):
        assert self.run("verify", "C2", "--lemmas", "vi", "--no-cache") == 2

    def test_engel(self):
        assert self.run("engel", "C2", "-p", "2", "-m", "1", "-n", "1",
                        "--no-cache") == 0

    def test_lie(self, tmp_path):
        report_path = tmp_path / "lie.json"
        assert self.run("lie", "D4", "-p", "2", "--no-cache", "--json",
                        str(report_path)) == 0
        data = json.loads(report_path.read_text())
        assert data["results"]["graded_dimensions"] == [2, 1]
        assert data["results"]["series_matches_recursion"] is True

    def test_lie_rejects_wrong_prime(self):
        assert self.run("lie", "D4", "-p", "3", "--no-cache") == 2

    def test_identity_f(self):
        assert self.run("identity-f", "S3", "-n", "2", "-p", "2",
                        "-m", "1") == 0

    def test_failed_check_exit_1(self, tmp_path):
        # S4's stacked word genuinely fails at these parameters
        report_path = tmp_path / "f.json"
        assert self.run("identity-f", "S4", "-n", "1", "-p", "2", "-m", "1",
                        "--json", str(report_path)) == 1
        assert json.loads(report_path.read_text())["results"]["holds"] \
            is False

    def test_unsatisfied_scan_exit_1(self):
        # at depth 1 (centrality), 2-power powers of order-divisible-
        # by-3 tensors in nu(S3) never work
        assert self.run("engel", "S3", "-p", "2", "-m", "1", "-n", "1",
                        "--no-cache") == 1

    def test_unknown_group_exit_2(self):
        assert self.run("tensor", "Nope", "--no-cache") == 2

    def test_limit_error_exit_2(self):
        assert self.run("nu", "S4", "--no-cache") == 2   # over the cap

    def test_golden_examples_current(self, tmp_path):
        # docs/examples/ must match what the CLI produces now, up to timing
        import pathlib
        docs = pathlib.Path(__file__).resolve().parent.parent / "docs" / \
            "examples"
        for args, golden in [
            (["tensor", "C2", "--no-cache"], "tensor.json"),
            (["catalog", "list"], "catalog.json"),
            (["identity-f", "C2", "-n", "1", "-p", "2", "-m", "1"],
             "identity-f.json"),
        ]:
            out = tmp_path / golden
            assert self.run(*args, "--json", str(out)) == 0
            got = json.loads(out.read_text())
            want = json.loads((docs / golden).read_text())
            got.pop("timing", None), want.pop("timing", None)
            assert canonical_json(got) == canonical_json(want), golden

    def test_determinism_modulo_timing(self, tmp_path):
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        for p in (p1, p2):
            assert self.run("verify", "C3xC3", "--lemmas", "i..v", "--seed",
                            "11", "--samples", "200", "--no-cache",
                            "--json", str(p)) == 0
        d1 = json.loads(p1.read_text())
        d2 = json.loads(p2.read_text())
        d1.pop("timing"), d2.pop("timing")
        assert canonical_json(d1) == canonical_json(d2)

    def test_gens_mode_without_presentation_exit_2(self, tmp_path):
        path = tmp_path / "klein.perm"
        path.write_text("degree 4\n(0 1)\n(2 3)\n")
        assert self.run("nu", f"@{path}", "--mode", "gens",
                        "--no-cache") == 2
