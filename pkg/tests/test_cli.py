"""End-to-end CLI tests: ingest, train, stats, serve."""

import json
import socket
import threading
import urllib.request

import numpy as np
import pytest

from wordsig import load_plane, load_vectors
from wordsig.cli import main, read_config
from wordsig.server import create_server

from corpusgen import planted_corpus


@pytest.fixture
def corpus_tsv(tmp_path):
    corpus = planted_corpus(seed=21, n_docs=60, doc_len=40, n_fillers=50,
                            blocks=[("magnet", 12, ("spin", "up", "down", "flip"))],
                            scatters=[("noise", 12)])
    path = tmp_path / "corpus.tsv"
    with path.open("w", encoding="utf-8") as fh:
        for i, doc in enumerate(corpus):
            fh.write("doc%03d\t%s\n" % (i, " ".join(doc)))
    return path


def run_pipeline(tmp_path, corpus_tsv, train_flags=(), stats_flags=()):
    work = tmp_path / "work"
    assert main(["ingest", str(corpus_tsv), "-o", str(work)]) == 0
    vectors = work / "vectors.txt"
    args = ["train", str(work / "tokens.txt"), "-o", str(vectors),
            "--size", "12", "--window", "3", "--iter", "2", "--seed", "7",
            "--threads", "1"]
    assert main(args + list(train_flags)) == 0
    out = work / "stats"
    args = ["stats", str(vectors), "--vocab", str(work / "vocab.tsv"),
            "-o", str(out), "--pairs", "5000", "--no-figures"]
    assert main(args + list(stats_flags)) == 0
    return work, vectors, out


class TestIngest:
    def test_writes_artifacts(self, tmp_path, corpus_tsv):
        out = tmp_path / "out"
        assert main(["ingest", str(corpus_tsv), "-o", str(out)]) == 0
        tokens = (out / "tokens.txt").read_text("utf-8").splitlines()
        assert len(tokens) == 60
        vocab_lines = (out / "vocab.tsv").read_text("utf-8").splitlines()
        counts = [int(line.split("\t")[1]) for line in vocab_lines]
        assert counts == sorted(counts, reverse=True)
        assert sum(counts) == 60 * 40

    def test_empty_directory_fails(self, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert main(["ingest", str(empty), "-o", str(tmp_path / "out")]) == 1

    def test_single_one_line_file(self, tmp_path):
        docs = tmp_path / "docs"
        docs.mkdir()
        (docs / "only.txt").write_text("One single document.", encoding="utf-8")
        out = tmp_path / "out"
        assert main(["ingest", str(docs), "-o", str(out)]) == 0
        lines = (out / "tokens.txt").read_text("utf-8").splitlines()
        assert lines == ["one single document ."]


class TestTrain:
    def test_deterministic_output_bytes(self, tmp_path, corpus_tsv):
        work = tmp_path / "w"
        assert main(["ingest", str(corpus_tsv), "-o", str(work)]) == 0
        args = ["train", str(work / "tokens.txt"), "--size", "10", "--iter", "2",
                "--threads", "1", "--seed", "7"]
        assert main(args + ["-o", str(work / "v1.txt")]) == 0
        assert main(args + ["-o", str(work / "v2.txt")]) == 0
        assert (work / "v1.txt").read_bytes() == (work / "v2.txt").read_bytes()

    def test_size_zero_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as err:
            main(["train", "whatever", "-o", "out", "--size", "0"])
        assert err.value.code != 0

    def test_header_reflects_flags(self, tmp_path, corpus_tsv):
        work, vectors, _ = run_pipeline(tmp_path, corpus_tsv)
        header = vectors.read_text("utf-8").splitlines()[0]
        assert header.endswith(" 12")
        model = load_vectors(vectors)
        assert model.dim == 12

    def test_config_file_defaults_and_flag_override(self, tmp_path, corpus_tsv):
        work = tmp_path / "w"
        assert main(["ingest", str(corpus_tsv), "-o", str(work)]) == 0
        config = tmp_path / "run.conf"
        config.write_text("size=9\niter=1\n# comment\nseed=5\n", encoding="utf-8")
        v1 = work / "from_config.txt"
        assert main(["train", str(work / "tokens.txt"), "-o", str(v1),
                     "--config", str(config)]) == 0
        assert load_vectors(v1).dim == 9
        v2 = work / "flag_wins.txt"
        assert main(["train", str(work / "tokens.txt"), "-o", str(v2),
                     "--config", str(config), "--size", "7"]) == 0
        assert load_vectors(v2).dim == 7

    def test_read_config_rejects_garbage(self, tmp_path):
        bad = tmp_path / "bad.conf"
        bad.write_text("just words\n", encoding="utf-8")
        with pytest.raises(Exception, match="line 1"):
            read_config(bad)


class TestStats:
    def test_emits_all_reports(self, tmp_path, corpus_tsv):
        work, vectors, out = run_pipeline(tmp_path, corpus_tsv)
        for name in ("frequency.tsv", "similarity_histogram.csv", "bins.tsv", "plane.json"):
            assert (out / name).is_file(), name

        payload = load_plane(out / "plane.json")
        vocab_lines = (work / "vocab.tsv").read_text("utf-8").splitlines()
        assert len(payload["words"]) == len(vocab_lines)
        assert payload["meta"]["dim"] == 12

        header = (out / "similarity_histogram.csv").read_text("utf-8").splitlines()[0]
        assert header.startswith("# mean=")

    def test_figures_rendered(self, tmp_path, corpus_tsv):
        work = tmp_path / "w"
        assert main(["ingest", str(corpus_tsv), "-o", str(work)]) == 0
        vectors = work / "vectors.txt"
        assert main(["train", str(work / "tokens.txt"), "-o", str(vectors),
                     "--size", "8", "--iter", "1", "--seed", "1"]) == 0
        out = work / "stats"
        assert main(["stats", str(vectors), "--vocab", str(work / "vocab.tsv"),
                     "-o", str(out), "--pairs", "2000"]) == 0
        assert (out / "similarity_histogram.png").is_file()
        assert (out / "length_vs_frequency.png").is_file()

    def test_pos_tags_flow_into_plane(self, tmp_path, corpus_tsv):
        tags = tmp_path / "tags.tsv"
        tags.write_text("magnet\tNN\nmagnet\tNN\nspin\tVB\nthe\tDT\n", encoding="utf-8")
        work, vectors, out = run_pipeline(tmp_path, corpus_tsv,
                                          stats_flags=["--tags", str(tags)])
        payload = load_plane(out / "plane.json")
        by_term = {w["t"]: w for w in payload["words"]}
        assert by_term["magnet"]["pos"] == "NN"
        assert by_term["spin"]["pos"] == "VB"
        assert by_term["f000"]["pos"] is None

    def test_vocabulary_mismatch_names_term(self, tmp_path, corpus_tsv, caplog):
        work = tmp_path / "w"
        assert main(["ingest", str(corpus_tsv), "-o", str(work)]) == 0
        vectors = work / "vectors.txt"
        assert main(["train", str(work / "tokens.txt"), "-o", str(vectors),
                     "--size", "8", "--iter", "1"]) == 0
        bad_vocab = work / "bad_vocab.tsv"
        lines = (work / "vocab.tsv").read_text("utf-8").splitlines()
        missing_term = lines[0].split("\t")[0]
        bad_vocab.write_text("\n".join(lines[1:]) + "\n", encoding="utf-8")
        code = main(["stats", str(vectors), "--vocab", str(bad_vocab),
                     "-o", str(work / "s"), "--no-figures"])
        assert code == 1
        assert any(missing_term in rec.message for rec in caplog.records)


class TestServe:
    def _free_port(self):
        with socket.socket() as sock:
            sock.bind(("127.0.0.1", 0))
            return sock.getsockname()[1]

    def test_data_served_byte_identically(self, tmp_path, corpus_tsv):
        _, _, out = run_pipeline(tmp_path, corpus_tsv)
        data = out / "plane.json"
        httpd = create_server(data, 0)
        thread = threading.Thread(target=httpd.serve_forever, daemon=True)
        thread.start()
        try:
            port = httpd.server_port
            with urllib.request.urlopen("http://127.0.0.1:%d/data" % port) as resp:
                body = resp.read()
                assert resp.headers["Content-Type"].startswith("application/json")
            assert body == data.read_bytes()
            with urllib.request.urlopen("http://127.0.0.1:%d/" % port) as resp:
                assert resp.status == 200
            with pytest.raises(urllib.error.HTTPError):
                urllib.request.urlopen("http://127.0.0.1:%d/missing" % port)
        finally:
            httpd.shutdown()
            httpd.server_close()

    def test_assets_directory(self, tmp_path, corpus_tsv):
        _, _, out = run_pipeline(tmp_path, corpus_tsv)
        assets = tmp_path / "assets"
        assets.mkdir()
        (assets / "index.html").write_text("<html>explorer</html>", encoding="utf-8")
        (assets / "app.js").write_text("console.log(1)", encoding="utf-8")
        httpd = create_server(out / "plane.json", 0, assets_dir=assets)
        thread = threading.Thread(target=httpd.serve_forever, daemon=True)
        thread.start()
        try:
            port = httpd.server_port
            with urllib.request.urlopen("http://127.0.0.1:%d/" % port) as resp:
                assert b"explorer" in resp.read()
            with urllib.request.urlopen("http://127.0.0.1:%d/assets/app.js" % port) as resp:
                assert b"console" in resp.read()
            with pytest.raises(urllib.error.HTTPError):
                urllib.request.urlopen("http://127.0.0.1:%d/assets/../secret" % port)
        finally:
            httpd.shutdown()
            httpd.server_close()

    def test_occupied_port_fails(self, tmp_path, corpus_tsv):
        _, _, out = run_pipeline(tmp_path, corpus_tsv)
        with socket.socket() as sock:
            sock.bind(("127.0.0.1", 0))
            port = sock.getsockname()[1]
            code = main(["serve", str(out / "plane.json"), "--port", str(port)])
            assert code == 1

    def test_truncated_data_file_refused(self, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text('{"meta": {"corpus_name": ', encoding="utf-8")
        code = main(["serve", str(broken), "--port", str(self._free_port())])
        assert code == 1

    def test_not_a_plane_file_refused(self, tmp_path):
        other = tmp_path / "other.json"
        other.write_text(json.dumps([1, 2, 3]), encoding="utf-8")
        code = main(["serve", str(other), "--port", str(self._free_port())])
        assert code == 1
