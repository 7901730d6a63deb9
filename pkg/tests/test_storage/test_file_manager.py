import json
from pathlib import Path

import pytest

from src.circulant.graph import make_circulant
from src.classify.report import classify_graph
from src.classify.witnesses import recheck_witness
from src.complexes.independence import independence_complex
from src.complexes.simplicial import SimplicialComplex
from src.exceptions import WitnessError
from src.models.report import Witness, WitnessKind
from src.storage.file_manager import FileManager
from src.theorems.structure import decompose_cubic, recheck_certificate

S2_WITNESS = Witness(kind=WitnessKind.DISCONNECTED_LINK_FACE, property="s2", face=[])


class TestFileManagerPaths:
    def test_slug(self):
        """Test filesystem-safe names for subjects and properties."""
        assert FileManager.slug("C_8(1,4)") == "C_8-1-4"
        assert FileManager.slug("cohen_macaulay[2]") == "cohen_macaulay-2"

    def test_get_witness_path(self):
        """Test witness file path generation."""
        path = FileManager.get_witness_path("C_6(1,3)", 0, S2_WITNESS)
        assert path == Path("witnesses/C_6-1-3/00-DisconnectedLinkFace-s2.json")

    def test_get_witness_path_with_base(self):
        """Test witness path under a custom base."""
        path = FileManager.get_witness_path("C_6(1,3)", 12, S2_WITNESS, "out")
        assert path == Path("out/C_6-1-3/12-DisconnectedLinkFace-s2.json")

    def test_get_certificate_path(self):
        """Test certificate file path generation."""
        assert FileManager.get_certificate_path("davis-domke", 3) == Path("witnesses/certificates/davis-domke/003.json")


class TestFileManagerUtilities:
    def test_ensure_local_directory(self, tmp_path):
        """Test local directory creation."""
        path = FileManager.ensure_local_directory(tmp_path / "a" / "b" / "file.json")
        assert path.parent.exists()
        assert path.name == "file.json"


class TestWitnessFiles:
    def test_write_and_read_witnesses(self, tmp_path):
        """Test that written witnesses re-check against the complex they carry."""
        graph = make_circulant(6, [1, 3])
        report = classify_graph(graph)
        ind = independence_complex(graph)
        paths = FileManager.write_witnesses(report.subject, ind, report.witnesses, report.graph, tmp_path)
        assert len(paths) == len(report.witnesses)
        for path in paths:
            record = FileManager.read_witness(path)
            assert record.graph == {"n": 6, "gens": [1, 3]}
            assert recheck_witness(SimplicialComplex.from_dict(record.complex), record.witness)

    def test_witness_file_is_plain_json(self, tmp_path):
        """Test the on-disk layout."""
        ind = independence_complex(make_circulant(6, [1, 3]))
        (path,) = FileManager.write_witnesses("C_6(1,3)", ind, [S2_WITNESS], base_path=tmp_path)
        data = json.loads(path.read_text())
        assert data["complex"] == {"n": 6, "facets": [[0, 2, 4], [1, 3, 5]]}
        assert data["witness"]["kind"] == "DisconnectedLinkFace"

    def test_read_missing_witness(self, tmp_path):
        """Test that a missing file raises WitnessError."""
        with pytest.raises(WitnessError):
            FileManager.read_witness(tmp_path / "missing.json")

    def test_read_malformed_witness(self, tmp_path):
        """Test that malformed JSON raises WitnessError."""
        path = tmp_path / "bad.json"
        path.write_text('{"subject": "x"}')
        with pytest.raises(WitnessError):
            FileManager.read_witness(path)


class TestCertificateFiles:
    def test_write_and_read_certificates(self, tmp_path):
        """Test that stored certificates re-check after reading."""
        certificates = list(decompose_cubic(12, 2, 6, [1, 3]).certificates)
        paths = FileManager.write_certificates("davis-domke", certificates, tmp_path)
        assert [p.name for p in paths] == ["000.json", "001.json"]
        assert all(recheck_certificate(FileManager.read_certificate(p)) for p in paths)

    def test_read_malformed_certificate(self, tmp_path):
        """Test that a malformed certificate raises WitnessError."""
        path = tmp_path / "bad.json"
        path.write_text("not json")
        with pytest.raises(WitnessError):
            FileManager.read_certificate(path)
