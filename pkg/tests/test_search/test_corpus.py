"""Tests for corpora and their files."""
import numpy as np
import pytest

from quasiplus.exceptions import CorpusFormatError
from quasiplus.search.corpus import Corpus, Provenance


@pytest.fixture(scope="module")
def order_3_corpus():
    """Every quasigroup of order 3, uncached."""
    return Corpus.exhaustive(3, cache_path=None)


class TestProvenance:
    """Tests for the provenance string."""

    def test_str(self):
        """Header forms."""
        assert str(Provenance()) == "exhaustive"
        assert str(Provenance("random", 7, 100)) == "random(seed=7,count=100)"

    @pytest.mark.parametrize(
        "provenance",
        [Provenance(), Provenance("random", 1, 5), Provenance("random", -2, 1)],
    )
    def test_parse(self, provenance):
        """parse reverses str."""
        assert Provenance.parse(str(provenance)) == provenance

    def test_bad(self):
        """Unknown provenance is a format error."""
        with pytest.raises(CorpusFormatError):
            Provenance.parse("guessed")


class TestCorpus:
    """Tests for building corpora."""

    def test_exhaustive(self, order_3_corpus, order_3_tables):
        """The exhaustive corpus holds every square."""
        assert len(order_3_corpus) == 12
        assert np.array_equal(order_3_corpus.tables, order_3_tables)
        assert order_3_corpus.provenance.kind == "exhaustive"

    def test_read_only(self, order_3_corpus):
        """Corpus tables cannot be modified."""
        with pytest.raises(ValueError):
            order_3_corpus.tables[0, 0, 0] = 1

    def test_iso(self):
        """dedup="iso" keeps one model per class."""
        corpus = Corpus.exhaustive(4, dedup="iso", cache_path=None)
        assert len(corpus) == 35
        assert corpus.dedup == "iso"

    def test_random(self):
        """Random corpora record their seed."""
        corpus = Corpus.random(6, 5, seed=3)
        assert len(corpus) == 5
        assert str(corpus.provenance) == "random(seed=3,count=5)"

    def test_models(self, order_3_corpus):
        """Iterating yields quasigroups."""
        models = list(order_3_corpus)
        assert models[0] == order_3_corpus.quasigroup(0)
        assert len(order_3_corpus.stack) == 12


class TestCorpusFiles:
    """Tests for the corpus file format."""

    def test_header(self, order_3_corpus):
        """The first line identifies the corpus."""
        header = order_3_corpus.to_text().splitlines()[0]
        assert header == "qcorpus v1 order=3 dedup=raw provenance=exhaustive"

    def test_round_trip(self, order_3_corpus, tmp_path):
        """Files read back to the same tables and metadata."""
        path = order_3_corpus.write(tmp_path / "c.qcorpus")
        corpus = Corpus.read(path)
        assert np.array_equal(corpus.tables, order_3_corpus.tables)
        assert corpus.header == order_3_corpus.header

    def test_random_round_trip(self):
        """Random provenance survives the file format."""
        corpus = Corpus.random(5, 3, seed=9)
        assert Corpus.from_text(corpus.to_text()).provenance == corpus.provenance

    @pytest.mark.parametrize(
        "text",
        [
            "not a corpus\n",
            "qcorpus v2 order=2 dedup=raw provenance=exhaustive\n",
            "qcorpus v1 order=2 dedup=raw provenance=exhaustive\n2\n0 1\n0 1\n",
            "qcorpus v1 order=2 dedup=raw provenance=exhaustive\n2\n0 1\n",
            "qcorpus v1 order=2 dedup=raw provenance=exhaustive\n2\n0 a\n1 0\n",
        ],
    )
    def test_bad_files(self, text):
        """Malformed files raise CorpusFormatError."""
        with pytest.raises(CorpusFormatError):
            Corpus.from_text(text)

    def test_cache(self, tmp_path):
        """The first exhaustive build writes the cache; later ones read it."""
        corpus = Corpus.exhaustive(3, cache_path=tmp_path)
        path = tmp_path / "order3-raw.qcorpus"
        assert path.exists()
        cached = Corpus.exhaustive(3, cache_path=tmp_path)
        assert np.array_equal(cached.tables, corpus.tables)
